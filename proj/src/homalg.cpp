#include "bw/homalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "scratch.hpp"

namespace bw {

CoverData projective_cover(RepPtr M) {
  AlgPtr A = M->alg;
  const Quiver& Q = A->quiver();
  Subspace rad = radical_subspace(*M);

  /* Unit vectors at the non-pivot coordinates of JM complete it to a basis,
   * so their classes form a basis of the top. */
  std::vector<std::pair<int, int>> tops;  /* (vertex, coordinate) */
  for (int v = 0; v < Q.n_vertices(); ++v) {
    std::vector<bool> piv(M->dims[v], false);
    for (int c : coordinate_pivots(rad.cols[v])) piv[c] = true;
    for (int i = 0; i < M->dims[v]; ++i)
      if (!piv[i]) tops.emplace_back(v, i);
  }

  CoverData out;
  if (tops.empty()) {
    require(M->total_dim() == 0, Errc::internal, "nonzero module with empty top");
    out.P = zero_rep(A);
    out.onto = zero_map(out.P, M);
    return out;
  }

  std::vector<RepPtr> parts;
  for (const auto& [v, i] : tops) {
    parts.push_back(projective_rep(A, v));
    out.top_types.push_back(v);
  }
  RepPtr P = direct_sum(parts);

  /* Summand t sends its generator to the lifted top element, so basis class
   * `path` goes to path . (unit vector). */
  ModuleMap f = zero_map(P, M);
  std::vector<int> off(Q.n_vertices(), 0);
  for (std::size_t t = 0; t < tops.size(); ++t) {
    auto [v, unit] = tops[t];
    for (const auto& e : projective_basis_layout(*A, v)) {
      Matrix act = path_action(*M, e.path);
      for (int r = 0; r < act.rows(); ++r)
        f.blocks[e.vertex].at(r, off[e.vertex] + e.local) = act.at(r, unit);
    }
    for (int w = 0; w < Q.n_vertices(); ++w) off[w] += parts[t]->dims[w];
  }
  require(f.well_defined(), Errc::internal, "projective cover map is not a module map");
  require(f.is_surjective(), Errc::internal, "projective cover map is not surjective");
  /* Minimality: the kernel must sit inside rad P. */
  Subspace radP = radical_subspace(*P);
  for (int v = 0; v < Q.n_vertices(); ++v)
    require(cols_contained_in(nullspace(f.blocks[v]), radP.cols[v]), Errc::internal,
            "projective cover is not minimal");
  out.P = P;
  out.onto = f;
  return out;
}

std::pair<RepPtr, ModuleMap> syzygy_once(RepPtr M) {
  CoverData cover = projective_cover(M);
  auto [K, incl] = kernel_of(cover.onto);
  return {renamed(K, "Omega(" + M->name + ")"), incl};
}

RepPtr syzygy(RepPtr M, int k) {
  require(k >= 0, Errc::usage, "negative syzygy index");
  RepPtr cur = M;
  for (int i = 0; i < k; ++i) cur = syzygy_once(cur).first;
  return cur;
}

PdimResult PdimResult::exact(int n) {
  PdimResult r;
  r.kind = Kind::exact;
  r.n = n;
  return r;
}

PdimResult PdimResult::infinite(std::string key, int first, int period) {
  PdimResult r;
  r.kind = Kind::infinite;
  r.cycle_key = std::move(key);
  r.first_index = first;
  r.period = period;
  return r;
}

PdimResult PdimResult::at_least(int cutoff) {
  PdimResult r;
  r.kind = Kind::at_least;
  r.n = cutoff;
  return r;
}

std::string PdimResult::to_string() const {
  switch (kind) {
    case Kind::exact:
      return "Exact(" + std::to_string(n) + ")";
    case Kind::infinite:
      return "Infinite(key=" + cycle_key + ", first=" + std::to_string(first_index) +
             ", period=" + std::to_string(period) + ")";
    default:
      return "AtLeast(" + std::to_string(n) + ")";
  }
}

namespace {

/* Intermediate verdicts inside the word recursion.  A `cycle` marker refers
 * to a word still open further up the stack; it hardens into a definitive
 * infinite certificate when the recursion unwinds back to that word. */
struct WordVerdict {
  enum class Kind { exact, infinite, cycle, at_least } kind;
  int n = 0;
  std::string key;
  int entry_depth = 0;
  int period = 0;
};

struct WordCtx {
  AlgPtr A;
  int cutoff;
  std::map<std::string, int> open;  /* word -> depth */
};

WordVerdict pdim_word_rec(WordCtx& ctx, const StringWord& w, int depth);

WordVerdict combine_children(WordCtx& ctx, const std::vector<RepPtr>& pieces, int depth) {
  /* Dominance: infinite > open cycle (earliest entry wins, any real cycle
   * certifies infinity) > at_least > exact max. */
  bool have_cycle = false, have_atleast = false;
  WordVerdict cyc{}, acc{WordVerdict::Kind::exact, 0, "", 0, 0};
  for (const RepPtr& piece : pieces) {
    WordVerdict v;
    if (piece->prov_kind == "projective") {
      v = {WordVerdict::Kind::exact, 0, "", 0, 0};
    } else {
      require(piece->prov_kind == "string", Errc::unsupported,
              "syzygy summand '" + piece->name + "' is not a string module");
      v = pdim_word_rec(ctx, parse_word(ctx.A->quiver(), piece->prov), depth + 1);
    }
    switch (v.kind) {
      case WordVerdict::Kind::infinite:
        return v;
      case WordVerdict::Kind::cycle:
        if (!have_cycle || v.entry_depth < cyc.entry_depth) cyc = v;
        have_cycle = true;
        break;
      case WordVerdict::Kind::at_least:
        have_atleast = true;
        break;
      default:
        acc.n = std::max(acc.n, v.n);
    }
  }
  if (have_cycle) return cyc;
  if (have_atleast) return {WordVerdict::Kind::at_least, ctx.cutoff, "", 0, 0};
  return acc;
}

WordVerdict pdim_word_rec(WordCtx& ctx, const StringWord& w, int depth) {
  const Quiver& Q = ctx.A->quiver();
  std::string key = canonical_word(w).to_string(Q);
  {
    std::lock_guard<std::mutex> lock(ctx.A->scratch->mu);
    auto it = ctx.A->scratch->pdim_memo.find(key);
    if (it != ctx.A->scratch->pdim_memo.end()) {
      const PdimResult& r = it->second;
      if (r.kind == PdimResult::Kind::exact) return {WordVerdict::Kind::exact, r.n, "", 0, 0};
      return {WordVerdict::Kind::infinite, 0, r.cycle_key, r.first_index, r.period};
    }
  }
  auto open_it = ctx.open.find(key);
  if (open_it != ctx.open.end())
    return {WordVerdict::Kind::cycle, 0, key, open_it->second, depth - open_it->second};
  if (depth > ctx.cutoff) return {WordVerdict::Kind::at_least, ctx.cutoff, "", 0, 0};

  ctx.open[key] = depth;
  RepPtr M = string_rep(ctx.A, w);
  auto [K, incl] = syzygy_once(M);
  WordVerdict res;
  if (K->total_dim() == 0) {
    res = {WordVerdict::Kind::exact, 0, "", 0, 0};
  } else {
    std::vector<RepPtr> pieces;
    for (const auto& s : decompose(K)) pieces.push_back(s.piece);
    res = combine_children(ctx, pieces, depth);
    if (res.kind == WordVerdict::Kind::exact) res.n += 1;
  }
  ctx.open.erase(key);

  if (res.kind == WordVerdict::Kind::cycle && res.key == key) {
    /* The cycle closes here: this word is its own iterated syzygy summand. */
    res = {WordVerdict::Kind::infinite, 0, "word:" + key, res.entry_depth, res.period};
  }
  if (res.kind == WordVerdict::Kind::exact || res.kind == WordVerdict::Kind::infinite) {
    PdimResult store = res.kind == WordVerdict::Kind::exact
                           ? PdimResult::exact(res.n)
                           : PdimResult::infinite(res.key, res.entry_depth, res.period);
    std::lock_guard<std::mutex> lock(ctx.A->scratch->mu);
    ctx.A->scratch->pdim_memo.emplace(key, store);
  }
  return res;
}

PdimResult verdict_to_result(const WordVerdict& v) {
  switch (v.kind) {
    case WordVerdict::Kind::exact:
      return PdimResult::exact(v.n);
    case WordVerdict::Kind::infinite:
      return PdimResult::infinite(v.key, v.entry_depth, v.period);
    case WordVerdict::Kind::at_least:
      return PdimResult::at_least(v.n);
    default:
      fail(Errc::internal, "unresolved cycle escaped the word recursion");
  }
}

std::string dims_key(const Representation& M) {
  std::string k = "dims:";
  for (std::size_t v = 0; v < M.dims.size(); ++v) {
    if (v) k += ',';
    k += std::to_string(M.dims[v]);
  }
  return k;
}

/* Iterate syzygies; a repeated dimension vector plus an explicit isomorphism
 * certifies an infinite tail. */
PdimResult pdim_linear(RepPtr M, const PdimOptions& opt) {
  std::vector<RepPtr> chain{M};
  std::map<std::string, std::vector<int>> seen;
  seen[dims_key(*M)].push_back(0);
  for (int k = 1; k <= opt.cutoff + 1; ++k) {
    RepPtr next = syzygy_once(chain.back()).first;
    if (next->total_dim() == 0) return PdimResult::exact(k - 1);
    std::string key = dims_key(*next);
    for (int j : seen[key])
      if (is_isomorphic(chain[j], next))
        return PdimResult::infinite(key, j, k - j);
    chain.push_back(next);
    seen[key].push_back(k);
  }
  return PdimResult::at_least(opt.cutoff);
}

}  // namespace

PdimResult pdim_word(AlgPtr A, const StringWord& w, const PdimOptions& opt) {
  WordCtx ctx{A, opt.cutoff, {}};
  return verdict_to_result(pdim_word_rec(ctx, w, 0));
}

PdimResult pdim(RepPtr M, const PdimOptions& opt) {
  if (M->total_dim() == 0) return PdimResult::exact(-1);
  AlgPtr A = M->alg;
  if (A->cls.special_biserial) {
    /* Peel into strings and projectives and take the max over pieces; any
     * uncertified step falls back to the direct syzygy iteration. */
    try {
      WordCtx ctx{A, opt.cutoff, {}};
      WordVerdict acc{WordVerdict::Kind::exact, 0, "", 0, 0};
      bool atleast = false;
      for (const auto& s : decompose(M)) {
        WordVerdict v;
        if (s.piece->prov_kind == "projective") {
          v = {WordVerdict::Kind::exact, 0, "", 0, 0};
        } else {
          require(s.piece->prov_kind == "string", Errc::unsupported,
                  "summand '" + s.piece->name + "' is not a string module");
          v = pdim_word_rec(ctx, parse_word(A->quiver(), s.piece->prov), 0);
        }
        if (v.kind == WordVerdict::Kind::infinite) return verdict_to_result(v);
        require(v.kind != WordVerdict::Kind::cycle, Errc::internal,
                "unresolved cycle at the top of the word recursion");
        if (v.kind == WordVerdict::Kind::at_least)
          atleast = true;
        else
          acc.n = std::max(acc.n, v.n);
      }
      return atleast ? PdimResult::at_least(opt.cutoff) : PdimResult::exact(acc.n);
    } catch (const Error& e) {
      if (e.code != Errc::unsupported) throw;
    }
  }
  return pdim_linear(M, opt);
}

bool verify_infinite_certificate(RepPtr M, const PdimResult& r) {
  if (r.kind != PdimResult::Kind::infinite) return false;
  if (r.cycle_key.rfind("word:", 0) == 0) {
    AlgPtr A = M->alg;
    RepPtr target = string_rep(A, parse_word(A->quiver(), r.cycle_key.substr(5)));
    auto has_summand = [&](RepPtr X) {
      return find_split_pair(target, X).has_value();
    };
    RepPtr at_first = syzygy(M, r.first_index);
    if (!has_summand(at_first)) return false;
    return has_summand(syzygy(at_first, r.period));
  }
  RepPtr at_first = syzygy(M, r.first_index);
  if (dims_key(*at_first) != r.cycle_key) return false;
  return is_isomorphic(at_first, syzygy(at_first, r.period));
}

FindimReport findim_probe(AlgPtr A, int max_len, const PdimOptions& opt) {
  FindimReport rep;
  rep.max_len = max_len;
  rep.cutoff = opt.cutoff;
  std::set<int> finite;
  for (const auto& w : enumerate_strings(A, max_len)) {
    FindimEntry e;
    e.word = w;
    e.dim = string_rep(A, w)->total_dim();
    e.pd = pdim_word(A, w, opt);
    if (e.pd.kind == PdimResult::Kind::exact) {
      rep.max_finite = std::max(rep.max_finite, e.pd.n);
      finite.insert(e.pd.n);
    } else if (e.pd.kind == PdimResult::Kind::infinite) {
      rep.saw_infinite = true;
    } else {
      rep.saw_at_least = true;
    }
    rep.entries.push_back(std::move(e));
  }
  rep.finite_values.assign(finite.begin(), finite.end());
  return rep;
}

}  // namespace bw
