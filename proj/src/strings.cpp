#include "bw/strings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "scratch.hpp"

namespace bw {

namespace {

int letter_prev(const Quiver& Q, const Letter& l) {
  return l.inv ? Q.arrows[l.arrow].tgt : Q.arrows[l.arrow].src;
}
int letter_next(const Quiver& Q, const Letter& l) {
  return l.inv ? Q.arrows[l.arrow].src : Q.arrows[l.arrow].tgt;
}

}  // namespace

std::vector<int> StringWord::nodes(const Quiver& Q) const {
  if (trivial()) return {trivial_vertex};
  std::vector<int> out{letter_prev(Q, letters[0])};
  for (const auto& l : letters) out.push_back(letter_next(Q, l));
  return out;
}

std::string StringWord::to_string(const Quiver& Q) const {
  if (trivial()) return "e_" + Q.vertices[trivial_vertex];
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += Q.arrows[l.arrow].label;
    if (l.inv) out += "^-";
  }
  return out;
}

StringWord parse_word(const Quiver& Q, const std::string& text) {
  StringWord w;
  std::vector<std::string> toks = split_ws(text);
  require(!toks.empty(), Errc::invalid_input, "empty string word");
  if (toks.size() == 1 && toks[0].rfind("e_", 0) == 0) {
    w.trivial_vertex = Q.require_vertex(toks[0].substr(2));
    return w;
  }
  w.trivial_vertex = -1;
  for (const auto& t : toks) {
    Letter l{};
    std::string body = t;
    if (body.size() > 2 && body.substr(body.size() - 2) == "^-") {
      l.inv = true;
      body.resize(body.size() - 2);
    }
    l.arrow = Q.require_arrow(body);
    w.letters.push_back(l);
  }
  return w;
}

StringWord reverse_word(const StringWord& w) {
  StringWord r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  for (auto& l : r.letters) l.inv = !l.inv;
  return r;
}

StringWord canonical_word(const StringWord& w) {
  StringWord r = reverse_word(w);
  return std::min(w, r);
}

namespace {

/* Arrow sequences (application order) of the maximal same-direction runs.
 * Inverse runs are read back-to-front so both come out as honest paths. */
std::vector<std::vector<int>> direct_runs(const StringWord& w) {
  std::vector<std::vector<int>> runs;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j + 1 < w.letters.size() && w.letters[j + 1].inv == w.letters[i].inv) ++j;
    std::vector<int> run;
    if (w.letters[i].inv)
      for (std::size_t k = j + 1; k-- > i;) run.push_back(w.letters[k].arrow);
    else
      for (std::size_t k = i; k <= j; ++k) run.push_back(w.letters[k].arrow);
    runs.push_back(std::move(run));
    i = j + 1;
  }
  return runs;
}

bool run_contains_forbidden(const std::vector<int>& run, const std::vector<Path>& forb) {
  for (const auto& f : forb) {
    std::size_t L = f.arrows.size();
    if (L > run.size()) continue;
    for (std::size_t off = 0; off + L <= run.size(); ++off) {
      bool hit = true;
      for (std::size_t i = 0; i < L; ++i)
        if (run[off + i] != f.arrows[i]) {
          hit = false;
          break;
        }
      if (hit) return true;
    }
  }
  return false;
}

}  // namespace

WordCheck check_string(const Algebra& A, const StringWord& w) {
  const Quiver& Q = A.quiver();
  if (w.trivial()) {
    if (w.trivial_vertex < 0 || w.trivial_vertex >= Q.n_vertices())
      return {false, "trivial word at unknown vertex"};
    return {true, ""};
  }
  for (std::size_t k = 0; k + 1 < w.letters.size(); ++k) {
    if (letter_next(Q, w.letters[k]) != letter_prev(Q, w.letters[k + 1]))
      return {false, "walk breaks between letters " + std::to_string(k + 1) + " and " +
                         std::to_string(k + 2)};
    /* Same arrow across a direction change covers both backtracking and the
     * peak/valley distinctness requirements. */
    if (w.letters[k].arrow == w.letters[k + 1].arrow && w.letters[k].inv != w.letters[k + 1].inv)
      return {false, "repeated arrow across a direction change at position " +
                         std::to_string(k + 1)};
  }
  for (const auto& run : direct_runs(w))
    if (run_contains_forbidden(run, A.string_forbidden))
      return {false, "a maximal run contains a forbidden subword"};
  return {true, ""};
}

bool is_valid_string(const Algebra& A, const StringWord& w) { return check_string(A, w).ok; }

RepPtr string_rep(AlgPtr A, const StringWord& w) {
  WordCheck chk = check_string(*A, w);
  require(chk.ok, Errc::invalid_input, "invalid string word: " + chk.reason);
  const Quiver& Q = A->quiver();
  const Field& F = A->field();
  std::vector<int> nodes = w.nodes(Q);
  std::vector<int> dims(Q.n_vertices(), 0), pos(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) pos[k] = dims[nodes[k]]++;
  std::vector<Matrix> mats;
  for (const auto& ar : Q.arrows) mats.emplace_back(F, dims[ar.tgt], dims[ar.src]);
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const Letter& l = w.letters[k];
    if (l.inv)
      mats[l.arrow].at(pos[k], pos[k + 1]) = F.one();
    else
      mats[l.arrow].at(pos[k + 1], pos[k]) = F.one();
  }
  std::string canon = canonical_word(w).to_string(Q);
  return make_rep(A, std::move(dims), std::move(mats), "str(" + canon + ")", "string", canon);
}

namespace {

std::vector<Letter> all_letters(const Quiver& Q) {
  std::vector<Letter> out;
  for (int a = 0; a < Q.n_arrows(); ++a) {
    out.push_back({a, false});
    out.push_back({a, true});
  }
  return out;
}

std::vector<StringWord> enumerate_strings_uncached(const Algebra& A, int max_len) {
  require(A.cls.special_biserial, Errc::invalid_input,
          "string enumeration requires a special biserial algebra");
  const Quiver& Q = A.quiver();
  std::vector<Letter> letters = all_letters(Q);
  std::set<StringWord> seen;
  std::vector<StringWord> frontier;
  for (int v = 0; v < Q.n_vertices(); ++v) {
    StringWord w;
    w.trivial_vertex = v;
    seen.insert(w);
    frontier.push_back(w);
  }
  for (int len = 1; len <= max_len; ++len) {
    std::vector<StringWord> next;
    for (const auto& w : frontier) {
      std::vector<int> nd = w.nodes(Q);
      for (const auto& l : letters) {
        /* Extend on the right... */
        if (letter_prev(Q, l) == nd.back()) {
          StringWord c = w;
          c.trivial_vertex = -1;
          c.letters.push_back(l);
          if (is_valid_string(A, c)) {
            StringWord canon = canonical_word(c);
            if (seen.insert(canon).second) next.push_back(canon);
          }
        }
        /* ...and on the left. */
        if (letter_next(Q, l) == nd.front()) {
          StringWord c;
          c.trivial_vertex = -1;
          c.letters.push_back(l);
          c.letters.insert(c.letters.end(), w.letters.begin(), w.letters.end());
          if (is_valid_string(A, c)) {
            StringWord canon = canonical_word(c);
            if (seen.insert(canon).second) next.push_back(canon);
          }
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::vector<StringWord> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const StringWord& a, const StringWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<StringWord> enumerate_strings(AlgPtr A, int max_len) {
  {
    std::lock_guard<std::mutex> lock(A->scratch->mu);
    auto it = A->scratch->strings_by_len.find(max_len);
    if (it != A->scratch->strings_by_len.end()) return it->second;
  }
  std::vector<StringWord> out = enumerate_strings_uncached(*A, max_len);
  std::lock_guard<std::mutex> lock(A->scratch->mu);
  A->scratch->strings_by_len[max_len] = out;
  return out;
}

std::vector<StringWord> enumerate_strings_bounded(AlgPtr A, const std::vector<int>& dim_bound) {
  const Quiver& Q = A->quiver();
  int total = 0;
  for (int d : dim_bound) total += d;
  auto fits = [&](const StringWord& w) {
    std::vector<int> counts(Q.n_vertices(), 0);
    for (int v : w.nodes(Q))
      if (++counts[v] > dim_bound[v]) return false;
    return true;
  };
  std::vector<StringWord> all = enumerate_strings(A, std::max(0, total - 1));
  std::vector<StringWord> out;
  for (const auto& w : all)
    if (fits(w)) out.push_back(w);
  return out;
}

std::string BandWord::to_string(const Quiver& Q) const {
  StringWord w;
  w.trivial_vertex = -1;
  w.letters = letters;
  return w.to_string(Q);
}

WordCheck check_band(const Algebra& A, const BandWord& b) {
  const Quiver& Q = A.quiver();
  if (b.letters.empty()) return {false, "empty band"};
  StringWord lin;
  lin.trivial_vertex = -1;
  lin.letters = b.letters;
  std::vector<int> nd = lin.nodes(Q);
  for (std::size_t k = 0; k + 1 < b.letters.size(); ++k)
    if (letter_next(Q, b.letters[k]) != letter_prev(Q, b.letters[k + 1]))
      return {false, "walk breaks inside the cycle"};
  if (nd.front() != nd.back()) return {false, "walk does not close up"};
  StringWord sq;
  sq.trivial_vertex = -1;
  sq.letters = b.letters;
  sq.letters.insert(sq.letters.end(), b.letters.begin(), b.letters.end());
  WordCheck c = check_string(A, sq);
  if (!c.ok) return {false, "squared word is not a valid string: " + c.reason};
  bool has_dir = false, has_inv = false;
  for (const auto& l : b.letters) (l.inv ? has_inv : has_dir) = true;
  if (!has_dir || !has_inv) return {false, "band must mix direct and inverse letters"};
  for (std::size_t p = 1; p < b.letters.size(); ++p) {
    if (b.letters.size() % p) continue;
    bool power = true;
    for (std::size_t i = p; i < b.letters.size() && power; ++i)
      power = b.letters[i] == b.letters[i % p];
    if (power) return {false, "band is a proper power"};
  }
  return {true, ""};
}

namespace {

BandWord canonical_band(const BandWord& b) {
  BandWord best = b;
  auto consider = [&](const std::vector<Letter>& ls) {
    for (std::size_t r = 0; r < ls.size(); ++r) {
      BandWord rot;
      rot.letters.insert(rot.letters.end(), ls.begin() + r, ls.end());
      rot.letters.insert(rot.letters.end(), ls.begin(), ls.begin() + r);
      if (rot < best) best = rot;
    }
  };
  consider(b.letters);
  StringWord lin;
  lin.trivial_vertex = -1;
  lin.letters = b.letters;
  consider(reverse_word(lin).letters);
  return best;
}

}  // namespace

std::vector<BandWord> enumerate_bands(AlgPtr A, int max_len) {
  const Quiver& Q = A->quiver();
  std::vector<Letter> letters = all_letters(Q);
  std::set<BandWord> found;
  /* Plain valid words, not canonicalized, so every rotation is reachable. */
  std::vector<StringWord> frontier;
  for (const auto& l : letters) {
    StringWord w;
    w.trivial_vertex = -1;
    w.letters = {l};
    if (is_valid_string(*A, w)) frontier.push_back(w);
  }
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    for (const auto& w : frontier) {
      BandWord b{w.letters};
      if (check_band(*A, b).ok) found.insert(canonical_band(b));
    }
    std::vector<StringWord> next;
    for (const auto& w : frontier) {
      int tail = w.nodes(Q).back();
      for (const auto& l : letters) {
        if (letter_prev(Q, l) != tail) continue;
        StringWord c = w;
        c.letters.push_back(l);
        if (is_valid_string(*A, c)) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

RepPtr band_rep(AlgPtr A, const BandWord& b, const Value& lambda) {
  WordCheck chk = check_band(*A, b);
  require(chk.ok, Errc::invalid_input, "invalid band word: " + chk.reason);
  const Field& F = A->field();
  require(!F.is_zero(lambda), Errc::invalid_input, "band parameter must be nonzero");
  const Quiver& Q = A->quiver();
  StringWord lin;
  lin.trivial_vertex = -1;
  lin.letters = b.letters;
  std::vector<int> nd = lin.nodes(Q);
  int m = static_cast<int>(b.letters.size());
  std::vector<int> dims(Q.n_vertices(), 0), pos(m);
  for (int k = 0; k < m; ++k) pos[k] = dims[nd[k]]++;
  std::vector<Matrix> mats;
  for (const auto& ar : Q.arrows) mats.emplace_back(F, dims[ar.tgt], dims[ar.src]);
  for (int k = 0; k < m; ++k) {
    const Letter& l = b.letters[k];
    int from = pos[k], to = pos[(k + 1) % m];
    Value c = (k == 0) ? lambda : F.one();
    if (l.inv)
      mats[l.arrow].at(from, to) = c;
    else
      mats[l.arrow].at(to, from) = c;
  }
  std::string label = "band(" + b.to_string(Q) + "; " + F.to_string(lambda) + ")";
  return make_rep(A, std::move(dims), std::move(mats), label, "band",
                  b.to_string(Q) + "@" + F.to_string(lambda));
}

Matrix GraphModule::element(const std::string& top, const std::string& path) const {
  const Quiver& Q = alg->quiver();
  int t = -1;
  for (std::size_t i = 0; i < spec.tops.size(); ++i)
    if (spec.tops[i].name == top) t = static_cast<int>(i);
  require(t >= 0, Errc::invalid_input, "unknown top '" + top + "'");
  Path p = path.rfind("e_", 0) == 0 ? trivial_path(Q.require_vertex(path.substr(2)))
                                    : parse_path(Q, path);
  require(p.src == top_vertex[t], Errc::invalid_input,
          "path '" + path + "' does not start at the vertex of top '" + top + "'");
  int w = p.target(Q);
  const Field& F = alg->field();
  Matrix vec(F, cover->dims[w], 1);
  int off = 0;
  for (int i = 0; i < t; ++i) {
    std::vector<ProjBasisEntry> lay = projective_basis_layout(*alg, top_vertex[i]);
    for (const auto& e : lay)
      if (e.vertex == w) ++off;
  }
  std::vector<ProjBasisEntry> lay = projective_basis_layout(*alg, top_vertex[t]);
  auto red = alg->basis.reduce_path(p);
  for (const auto& [posn, c] : red) vec.at(off + lay[posn].local, 0) = c;
  return proj.blocks[w].mul(vec);
}

Matrix GraphModule::top_vector(const std::string& top) const {
  int t = -1;
  for (std::size_t i = 0; i < spec.tops.size(); ++i)
    if (spec.tops[i].name == top) t = static_cast<int>(i);
  require(t >= 0, Errc::invalid_input, "unknown top '" + top + "'");
  return element(top, "e_" + alg->quiver().vertices[top_vertex[t]]);
}

GraphModule build_graph_module(AlgPtr A, const GraphSpec& spec, const std::string& name) {
  const Quiver& Q = A->quiver();
  const Field& F = A->field();
  require(!spec.tops.empty(), Errc::invalid_input, "graph spec has no tops");

  GraphModule G;
  G.alg = A;
  G.spec = spec;
  std::map<std::string, int> top_index;
  std::vector<RepPtr> parts;
  for (const auto& t : spec.tops) {
    require(!top_index.count(t.name), Errc::invalid_input, "duplicate top '" + t.name + "'");
    top_index[t.name] = static_cast<int>(parts.size());
    int v = Q.require_vertex(t.vertex);
    G.top_vertex.push_back(v);
    parts.push_back(projective_rep(A, v));
  }
  RepPtr P = direct_sum(parts);

  /* Slot table: parsed paths grouped by slot id, with agreeing targets. */
  struct SlotData {
    int vertex = -1;
    std::vector<std::pair<int, Path>> members;  /* (top, path) */
  };
  std::map<std::string, SlotData> slots;
  std::vector<std::vector<Path>> declared(parts.size());
  for (const auto& e : spec.edges) {
    auto it = top_index.find(e.top);
    require(it != top_index.end(), Errc::invalid_input, "edge references unknown top '" + e.top + "'");
    int t = it->second;
    Path p = parse_path(Q, e.path);
    require(p.src == G.top_vertex[t], Errc::invalid_input,
            "edge path '" + e.path + "' does not start at the vertex of top '" + e.top + "'");
    require(p.length() >= 1, Errc::invalid_input, "edge paths must have length >= 1");
    require(!A->basis.is_zero_class(p), Errc::invalid_input,
            "edge path '" + e.path + "' is zero in the algebra");
    SlotData& s = slots[e.slot];
    if (s.vertex < 0)
      s.vertex = p.target(Q);
    else
      require(s.vertex == p.target(Q), Errc::invalid_input,
              "slot '" + e.slot + "' mixes different target vertices");
    s.members.emplace_back(t, p);
    declared[t].push_back(p);
  }
  for (const auto& grp : spec.deps) {
    require(grp.size() >= 2, Errc::invalid_input, "dependency group needs at least two slots");
    int v = -1;
    for (const auto& sid : grp) {
      auto it = slots.find(sid);
      require(it != slots.end(), Errc::invalid_input, "dependency references unknown slot '" + sid + "'");
      if (v < 0)
        v = it->second.vertex;
      else
        require(v == it->second.vertex, Errc::invalid_input,
                "dependency group mixes slots over different vertices");
    }
  }

  /* Element of the cover P named by (top, path-class). */
  std::vector<std::vector<ProjBasisEntry>> layouts;
  std::vector<std::vector<int>> offs(parts.size(), std::vector<int>(Q.n_vertices(), 0));
  for (std::size_t t = 0; t < parts.size(); ++t) {
    layouts.push_back(projective_basis_layout(*A, G.top_vertex[t]));
    if (t + 1 < parts.size())
      for (int v = 0; v < Q.n_vertices(); ++v)
        offs[t + 1][v] = offs[t][v] + parts[t]->dims[v];
  }
  auto elem_in_cover = [&](int t, const Path& p) {
    int w = p.target(Q);
    Matrix vec(F, P->dims[w], 1);
    for (const auto& [posn, c] : A->basis.reduce_path(p))
      vec.at(offs[t][w] + layouts[t][posn].local, 0) = c;
    return vec;
  };

  /* Kill everything that is not a right-subpath of a declared path. */
  Subspace gens;
  for (int v = 0; v < Q.n_vertices(); ++v) gens.cols.emplace_back(F, P->dims[v], 0);
  auto is_right_subpath = [](const Path& q, const Path& p) {
    if (q.arrows.size() > p.arrows.size() || q.src != p.src) return false;
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
      if (q.arrows[i] != p.arrows[i]) return false;
    return true;
  };
  for (std::size_t t = 0; t < parts.size(); ++t) {
    const VertexBlock& blk = A->basis.blocks[G.top_vertex[t]];
    for (int coord : blk.basis_coords) {
      const Path& q = blk.paths[coord];
      if (q.trivial()) continue;
      bool keep = false;
      for (const auto& p : declared[t])
        if (is_right_subpath(q, p)) {
          keep = true;
          break;
        }
      if (keep) continue;
      int w = q.target(Q);
      gens.cols[w] = gens.cols[w].hstack(elem_in_cover(static_cast<int>(t), q));
    }
  }
  /* Identify the members of each slot... */
  for (const auto& [sid, s] : slots) {
    for (std::size_t j = 1; j < s.members.size(); ++j) {
      Matrix d = elem_in_cover(s.members[0].first, s.members[0].second)
                     .sub(elem_in_cover(s.members[j].first, s.members[j].second));
      gens.cols[s.vertex] = gens.cols[s.vertex].hstack(d);
    }
  }
  /* ...and impose s_1 - s_2 - ... - s_m = 0 per dependency group. */
  for (const auto& grp : spec.deps) {
    const SlotData& s0 = slots.at(grp[0]);
    Matrix acc = elem_in_cover(s0.members[0].first, s0.members[0].second);
    for (std::size_t j = 1; j < grp.size(); ++j) {
      const SlotData& sj = slots.at(grp[j]);
      acc = acc.sub(elem_in_cover(sj.members[0].first, sj.members[0].second));
    }
    gens.cols[s0.vertex] = gens.cols[s0.vertex].hstack(acc);
  }

  Subspace U = submodule_closure(*P, gens);
  auto [M, pr] = quotient_by(P, U, name);
  G.rep = M;
  G.cover = P;
  G.proj = pr;

  /* Post-validation: tops survive and generate, slots survive, dependency
   * groups collapse by exactly one dimension. */
  Subspace top_images;
  for (int v = 0; v < Q.n_vertices(); ++v) top_images.cols.emplace_back(F, M->dims[v], 0);
  for (std::size_t t = 0; t < parts.size(); ++t) {
    Matrix tv = G.top_vector(spec.tops[t].name);
    require(!tv.is_zero(), Errc::invalid_input,
            "top '" + spec.tops[t].name + "' dies in the constructed module");
    int v = G.top_vertex[t];
    top_images.cols[v] = top_images.cols[v].hstack(tv);
  }
  Subspace full = submodule_closure(*M, top_images);
  require(full.total_dim() == M->total_dim(), Errc::internal,
          "tops fail to generate the constructed module");
  for (const auto& [sid, s] : slots) {
    Matrix sv = G.element(spec.tops[s.members[0].first].name,
                          s.members[0].second.to_string(Q));
    require(!sv.is_zero(), Errc::invalid_input, "slot '" + sid + "' dies in the constructed module");
  }
  for (const auto& grp : spec.deps) {
    const SlotData& s0 = slots.at(grp[0]);
    Matrix span(F, M->dims[s0.vertex], 0);
    for (const auto& sid : grp) {
      const SlotData& s = slots.at(sid);
      span = span.hstack(
          G.element(spec.tops[s.members[0].first].name, s.members[0].second.to_string(Q)));
    }
    require(rank_of(span) == static_cast<int>(grp.size()) - 1, Errc::invalid_input,
            "dependency group does not collapse by exactly one dimension");
  }
  return G;
}

namespace {

std::vector<RepPtr> summand_candidates(const Representation& X) {
  AlgPtr A = X.alg;
  std::vector<RepPtr> out;
  for (int v = 0; v < A->quiver().n_vertices(); ++v) {
    RepPtr P = projective_rep(A, v);
    bool fits = true;
    for (std::size_t i = 0; i < X.dims.size(); ++i)
      if (P->dims[i] > X.dims[i]) fits = false;
    if (fits) out.push_back(P);
  }
  if (A->cls.special_biserial)
    for (const auto& w : enumerate_strings_bounded(A, X.dims)) out.push_back(string_rep(A, w));
  std::stable_sort(out.begin(), out.end(), [](const RepPtr& a, const RepPtr& b) {
    if (a->total_dim() != b->total_dim()) return a->total_dim() > b->total_dim();
    return a->name < b->name;
  });
  return out;
}

}  // namespace

std::vector<Summand> decompose(RepPtr M, const DecompOptions& opt) {
  return decompose_with_candidates(
      M, [](const Representation& X) { return summand_candidates(X); }, opt);
}

}  // namespace bw
