#include "bw/finiteness.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bw {

namespace {

std::string path_label(const Quiver& Q, const Path& p) { return p.to_string(Q); }

/* One tall column per map: blocks stacked vertex by vertex, row-major. */
Matrix vec_map(const ModuleMap& f) {
  const Field& F = f.src->alg->field();
  int total = 0;
  for (const auto& b : f.blocks) total += b.rows() * b.cols();
  Matrix out(F, total, 1);
  int at = 0;
  for (const auto& b : f.blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out.at(at++, 0) = b.at(i, j);
  return out;
}

Matrix vec_maps(const std::vector<ModuleMap>& fs, const Field& F) {
  if (fs.empty()) return Matrix(F, 0, 0);
  Matrix first = vec_map(fs[0]);
  Matrix out(F, first.rows(), static_cast<int>(fs.size()));
  for (std::size_t j = 0; j < fs.size(); ++j) {
    Matrix c = vec_map(fs[j]);
    for (int i = 0; i < c.rows(); ++i) out.at(i, static_cast<int>(j)) = c.at(i, 0);
  }
  return out;
}

ModuleMap combine_basis(const std::vector<ModuleMap>& basis, const Matrix& coeff, int col) {
  ModuleMap acc = zero_map(basis[0].src, basis[0].tgt);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Value& c = coeff.at(static_cast<int>(j), col);
    if (!coeff.field().is_zero(c)) acc = acc.add(basis[j].scaled(c));
  }
  return acc;
}

bool tops_independent(const GraphModule& gm) {
  Subspace rad = radical_subspace(*gm.rep);
  std::map<int, std::vector<int>> byv;
  for (std::size_t t = 0; t < gm.spec.tops.size(); ++t)
    byv[gm.top_vertex[t]].push_back(static_cast<int>(t));
  for (const auto& [v, tops] : byv) {
    Matrix T(gm.alg->field(), gm.rep->dims[v], 0);
    for (int t : tops) T = T.hstack(gm.top_vector(gm.spec.tops[t].name));
    int base = rank_of(rad.cols[v]);
    if (rank_of(rad.cols[v].hstack(T)) != base + T.cols()) return false;
  }
  return true;
}

std::vector<Value> parse_lambdas(const Field& F, const std::vector<std::string>& texts) {
  std::vector<Value> out;
  for (const auto& t : texts) {
    Value v = F.parse_scalar(t);
    if (F.is_zero(v)) continue;
    bool dup = false;
    for (const auto& w : out) dup = dup || F.eq(v, w);
    if (!dup) out.push_back(v);
  }
  return out;
}

}  // namespace

Criterion3Input make_criterion_input(const Algebra& A, const std::vector<std::string>& p_words,
                                     const std::vector<std::string>& q_words) {
  require(!p_words.empty(), Errc::invalid_input, "criterion input needs r >= 1 paths");
  require(p_words.size() == q_words.size(), Errc::invalid_input,
          "criterion input needs equally many p and q paths");
  Criterion3Input inp;
  inp.r = static_cast<int>(p_words.size());
  const Quiver& Q = A.quiver();
  for (const auto& w : p_words) inp.p.push_back(parse_path(Q, w));
  for (const auto& w : q_words) inp.q.push_back(parse_path(Q, w));
  for (const auto& p : inp.p) inp.e.push_back(p.target(Q));
  return inp;
}

void ValidationReport::add(std::string label, bool good, std::string detail) {
  ok = ok && good;
  items.push_back({std::move(label), good, std::move(detail)});
}

ValidationReport validate_criterion_input(const Algebra& A, const Criterion3Input& inp) {
  const Quiver& Q = A.quiver();
  ValidationReport rep;
  bool sized = inp.r >= 1 && static_cast<int>(inp.p.size()) == inp.r &&
               static_cast<int>(inp.q.size()) == inp.r && static_cast<int>(inp.e.size()) == inp.r;
  rep.add("sizes", sized, "r = " + std::to_string(inp.r));
  if (!sized) return rep;
  for (int i = 0; i < inp.r; ++i) {
    const Path &p = inp.p[i], &q = inp.q[i];
    std::string tag = "[" + std::to_string(i + 1) + "]";
    rep.add("positive length p" + tag, p.length() >= 1, path_label(Q, p));
    rep.add("positive length q" + tag, q.length() >= 1, path_label(Q, q));
    rep.add("p" + tag + " nonzero in algebra", !A.basis.is_zero_class(p), path_label(Q, p));
    rep.add("q" + tag + " nonzero in algebra", !A.basis.is_zero_class(q), path_label(Q, q));
    rep.add("shared source" + tag, p.src == q.src,
            path_label(Q, p) + " vs " + path_label(Q, q));
    rep.add("e" + tag + " = target(p)", inp.e[i] == p.target(Q), Q.vertices[inp.e[i]]);
    const Path& pnext = inp.p[inp.s(i + 1)];
    rep.add("chain target q" + tag, q.target(Q) == pnext.target(Q),
            path_label(Q, q) + " must end at target(" + path_label(Q, pnext) + ")");
  }
  std::vector<const Path*> all;
  std::vector<std::string> names;
  for (int i = 0; i < inp.r; ++i) {
    all.push_back(&inp.p[i]);
    names.push_back("p" + std::to_string(i + 1));
    all.push_back(&inp.q[i]);
    names.push_back("q" + std::to_string(i + 1));
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (a == b) continue;
      if (is_subpath(*all[a], *all[b]))
        rep.add("subpath violation", false,
                names[a] + " = " + path_label(Q, *all[a]) + " inside " + names[b] + " = " +
                    path_label(Q, *all[b]));
    }
  rep.add("no mutual subpaths", rep.ok, std::to_string(2 * inp.r) + " paths compared");
  return rep;
}

GraphModule build_Mn(AlgPtr A, const Criterion3Input& inp, int n) {
  require(n >= 1, Errc::invalid_input, "M_n needs n >= 1");
  const Quiver& Q = A->quiver();
  GraphSpec spec;
  int nr = n * inp.r;
  for (int t = 0; t < nr; ++t) {
    std::string name = "x" + std::to_string(t + 1);
    spec.tops.push_back({name, Q.vertices[inp.p[inp.s(t)].src]});
    spec.edges.push_back({name, path_label(Q, inp.p[inp.s(t)]), "v" + std::to_string(t)});
    if (t + 1 < nr)
      spec.edges.push_back({name, path_label(Q, inp.q[inp.s(t)]), "v" + std::to_string(t + 1)});
  }
  return build_graph_module(A, spec, "M" + std::to_string(n));
}

ModuleMap mn_socle_embedding(const GraphModule& Mn, const Criterion3Input& inp) {
  AlgPtr A = Mn.alg;
  const Quiver& Q = A->quiver();
  RepPtr S = simple_rep(A, inp.e[0]);
  ModuleMap g = zero_map(S, Mn.rep);
  g.blocks[inp.e[0]] = Mn.element("x1", path_label(Q, inp.p[0]));
  require(!g.is_zero(), Errc::invalid_input, "p_1 x_1 vanishes in M_n");
  require(g.well_defined(), Errc::invalid_input, "p_1 x_1 is not a socle element of M_n");
  return g;
}

bool Condition2Result::all() const {
  bool good = i;
  for (bool b : ii) good = good && b;
  for (bool b : iii) good = good && b;
  return good;
}

std::string Condition2Result::to_string() const {
  auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
  std::ostringstream os;
  os << "i:" << pf(i) << " ii:[";
  for (std::size_t k = 0; k < ii.size(); ++k) os << (k ? "," : "") << pf(ii[k]);
  os << "] iii:[";
  for (std::size_t k = 0; k < iii.size(); ++k) os << (k ? "," : "") << pf(iii[k]);
  os << "]";
  return os.str();
}

Condition2Result condition2_check(const Criterion3Input& inp, const Representation& A) {
  const Quiver& Q = A.alg->quiver();
  Subspace soc = socle_subspace(A);
  Condition2Result out;
  Matrix p1 = col_space(path_action(A, inp.p[0]));
  out.i = cols_contained_in(soc.cols[inp.e[0]], p1);
  for (int i = 0; i < inp.r; ++i) {
    int tq = inp.q[i].target(Q);
    Matrix qi = col_space(path_action(A, inp.q[i]));
    Matrix meet = intersect_col_spaces(qi, soc.cols[tq]);
    Matrix pnext = col_space(path_action(A, inp.p[inp.s(i + 1)]));
    out.ii.push_back(cols_contained_in(meet, pnext));

    Matrix V = preimage_cols(path_action(A, inp.p[i]), soc.cols[inp.e[i]]);
    Matrix qV = path_action(A, inp.q[i]).mul(V);
    out.iii.push_back(cols_contained_in(qV, soc.cols[tq]));
  }
  return out;
}

std::vector<bool> band_socle_containment(const Criterion3Input& inp, const Representation& B) {
  Subspace soc = socle_subspace(B);
  std::vector<bool> out;
  for (int i = 0; i < inp.r; ++i) {
    Matrix pi = col_space(path_action(B, inp.p[i]));
    Matrix qprev = col_space(path_action(B, inp.q[inp.s(i - 1)]));
    out.push_back(cols_contained_in(soc.cols[inp.e[i]], intersect_col_spaces(pi, qprev)));
  }
  return out;
}

BandFactReport band_socle_fact_check(const Algebra& A, int vertex) {
  const Quiver& Q = A.quiver();
  BandFactReport rep;
  rep.vertex = vertex;
  bool all_arrows = true;
  for (int u = 0; u < Q.n_vertices(); ++u)
    for (const Path& p : A.basis.blocks[u].paths) {
      if (p.length() < 1 || p.target(Q) != vertex) continue;
      if (A.basis.is_zero_class(p)) continue;
      rep.paths.push_back(path_label(Q, p));
      all_arrows = all_arrows && p.length() == 1;
    }
  std::sort(rep.paths.begin(), rep.paths.end());
  rep.two_arrow_property = all_arrows && rep.paths.size() <= 2;
  return rep;
}

std::vector<CorpusEntry> pinf_corpus_sb(AlgPtr A, int max_len, int band_len,
                                        const std::vector<Value>& lambdas, const PdimOptions& opt,
                                        bool keep_at_least) {
  std::vector<CorpusEntry> out;
  for (int v = 0; v < A->quiver().n_vertices(); ++v)
    out.push_back({projective_rep(A, v), PdimResult::exact(0)});
  for (const StringWord& w : enumerate_strings(A, max_len)) {
    PdimResult pd = pdim_word(A, w, opt);
    if (pd.kind == PdimResult::Kind::infinite) continue;
    if (pd.kind == PdimResult::Kind::at_least && !keep_at_least) continue;
    RepPtr M = string_rep(A, w);
    /* Projectives are seeded above; drop string copies of them. */
    bool dup = false;
    for (int v = 0; v < A->quiver().n_vertices() && !dup; ++v)
      if (M->dims == out[v].rep->dims) dup = is_isomorphic(M, out[v].rep);
    if (!dup) out.push_back({M, pd});
  }
  for (const BandWord& b : enumerate_bands(A, band_len))
    for (const Value& lam : lambdas) {
      RepPtr B = band_rep(A, b, lam);
      PdimResult pd = pdim(B, opt);
      if (pd.kind == PdimResult::Kind::infinite) continue;
      if (pd.kind == PdimResult::Kind::at_least && !keep_at_least) continue;
      out.push_back({B, pd});
    }
  return out;
}

std::vector<CorpusEntry> pinf_corpus_closure(AlgPtr A, const std::vector<RepPtr>& seeds,
                                             int dim_bound, const PdimOptions& opt) {
  std::vector<CorpusEntry> kept;
  std::vector<RepPtr> seen;
  std::vector<RepPtr> work;
  for (int v = 0; v < A->quiver().n_vertices(); ++v) work.push_back(projective_rep(A, v));
  for (const auto& s : seeds) work.push_back(s);
  while (!work.empty()) {
    RepPtr M = work.back();
    work.pop_back();
    if (M->total_dim() == 0 || M->total_dim() > dim_bound) continue;
    for (const Summand& s : decompose(M)) {
      RepPtr piece = s.piece;
      if (piece->total_dim() > dim_bound) continue;
      bool known = false;
      for (const auto& old : seen)
        if (old->dims == piece->dims && is_isomorphic(old, piece)) {
          known = true;
          break;
        }
      if (known) continue;
      seen.push_back(piece);
      PdimResult pd = pdim(piece, opt);
      if (pd.kind != PdimResult::Kind::exact) continue;
      kept.push_back({piece, pd});
      if (pd.n > 0) work.push_back(syzygy_once(piece).first);
    }
  }
  std::sort(kept.begin(), kept.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    if (a.rep->total_dim() != b.rep->total_dim())
      return a.rep->total_dim() > b.rep->total_dim();
    return a.rep->name < b.rep->name;
  });
  return kept;
}

std::string Criterion3Report::bounds_summary() const {
  std::ostringstream os;
  os << "strings of length <= " << bounds.max_len << ", bands of length <= " << bounds.band_len
     << " at " << lambdas_used.size() << " scalar(s), pdim cutoff " << bounds.pd.cutoff
     << ", M_n for n <= " << bounds.n_max;
  return os.str();
}

Criterion3Report scan_condition2(AlgPtr A, const Criterion3Input& inp, const ScanOptions& opt) {
  require(A->cls.special_biserial, Errc::unsupported,
          "condition-2 scan enumerates strings; the algebra is not special biserial");
  const Field& F = A->field();
  Criterion3Report rep;
  rep.bounds = opt;
  std::vector<Value> lams = parse_lambdas(F, opt.lambdas);
  for (const Value& v : lams) rep.lambdas_used.push_back(F.to_string(v));

  for (int v = 0; v < A->quiver().n_vertices(); ++v) {
    RepPtr P = projective_rep(A, v);
    Cond2Row row;
    row.name = P->name;
    row.dim = P->total_dim();
    row.pd = PdimResult::exact(0);
    row.counted = true;
    row.res = condition2_check(inp, *P);
    rep.strings.push_back(std::move(row));
  }
  std::vector<StringWord> words = enumerate_strings(A, opt.max_len);
  std::vector<Cond2Row> rows = parallel_map<Cond2Row>(words.size(), [&](std::size_t k) {
    Cond2Row row;
    PdimResult pd = pdim_word(A, words[k], opt.pd);
    row.pd = pd;
    if (pd.kind == PdimResult::Kind::infinite) return row;
    RepPtr M = string_rep(A, words[k]);
    row.name = M->name;
    row.dim = M->total_dim();
    row.counted = pd.kind == PdimResult::Kind::exact;
    row.at_least = pd.kind == PdimResult::Kind::at_least;
    row.res = condition2_check(inp, *M);
    return row;
  });
  for (auto& row : rows)
    if (!row.name.empty()) rep.strings.push_back(std::move(row));

  for (const BandWord& b : enumerate_bands(A, opt.band_len))
    for (const Value& lam : lams) {
      RepPtr B = band_rep(A, b, lam);
      BandSampleRow row;
      row.name = B->name;
      row.pd = pdim(B, opt.pd);
      if (row.pd.kind == PdimResult::Kind::infinite) continue;
      row.counted = row.pd.kind == PdimResult::Kind::exact;
      row.res = condition2_check(inp, *B);
      row.socle_in_pq = band_socle_containment(inp, *B);
      rep.bands.push_back(std::move(row));
    }

  for (int i = 0; i < inp.r; ++i) rep.band_facts.push_back(band_socle_fact_check(*A, inp.e[i]));

  bool any = false, good = true;
  for (const auto& row : rep.strings)
    if (row.counted) {
      any = true;
      good = good && row.res.all();
    }
  for (const auto& row : rep.bands)
    if (row.counted) {
      any = true;
      good = good && row.res.all();
    }
  rep.vacuous = !any;
  rep.ok = good;
  return rep;
}

Criterion3Report run_criterion3(AlgPtr A, const Criterion3Input& inp, const ScanOptions& opt) {
  ValidationReport val = validate_criterion_input(*A, inp);
  require(val.ok, Errc::invalid_input, "criterion input failed validation");
  Criterion3Report rep = scan_condition2(A, inp, opt);
  rep.validation = std::move(val);
  for (int n = 1; n <= opt.n_max; ++n) {
    GraphModule gm = build_Mn(A, inp, n);
    MnResult r;
    r.n = n;
    r.dim = gm.rep->total_dim();
    r.pd = pdim(gm.rep, opt.pd);
    r.tops_independent = tops_independent(gm);
    mn_socle_embedding(gm, inp); /* throws if the embedding degenerates */
    rep.ok = rep.ok && r.pd.finite() && r.tops_independent;
    rep.mn.push_back(std::move(r));
  }
  rep.ok = rep.ok && rep.validation.ok;
  return rep;
}

namespace {

ApproxReport approx_run(const ModuleMap& f, const std::vector<CorpusEntry>& corpus,
                        const std::string& corpus_desc, bool right) {
  RepPtr A = right ? f.src : f.tgt;
  RepPtr M = right ? f.tgt : f.src;
  const Field& F = A->alg->field();
  ApproxReport rep;
  rep.direction = right ? "right" : "left";
  rep.map_desc = f.src->name + " -> " + f.tgt->name;
  rep.corpus_desc = corpus_desc;
  for (const auto& entry : corpus) {
    RepPtr B = entry.rep;
    /* right: post-compose Hom(B,A) -> Hom(B,M); left: pre-compose
     * Hom(A,B) -> Hom(M,B). */
    std::vector<ModuleMap> through = right ? hom_basis(B, A) : hom_basis(A, B);
    std::vector<ModuleMap> want = right ? hom_basis(B, M) : hom_basis(M, B);
    ApproxTest t;
    t.name = B->name;
    t.dim = B->total_dim();
    t.pd = entry.pd.to_string();
    t.hom_to_target = static_cast<int>(want.size());
    t.ok = true;
    if (!want.empty()) {
      std::vector<ModuleMap> composed;
      composed.reserve(through.size());
      for (const auto& h : through) composed.push_back(right ? f.compose(h) : h.compose(f));
      Matrix C = vec_maps(composed, F);
      Matrix G = vec_maps(want, F);
      if (C.rows() == 0) C = Matrix(F, G.rows(), 0);
      /* Column by column so `factored` counts exactly the homs that do
       * factor even when the test as a whole fails. */
      for (std::size_t i = 0; i < want.size(); ++i) {
        auto X = solve(C, G.col(static_cast<int>(i)));
        if (!X) {
          t.ok = false;
          continue;
        }
        ModuleMap h = combine_basis(through, *X, 0);
        ModuleMap back = right ? f.compose(h) : h.compose(f);
        require(back.equals(want[i]), Errc::internal, "factorization witness failed recheck");
        ++t.factored;
      }
    }
    rep.ok = rep.ok && t.ok;
    rep.tests.push_back(std::move(t));
  }
  return rep;
}

}  // namespace

ApproxReport is_right_approximation(const ModuleMap& f, const std::vector<CorpusEntry>& corpus,
                                    const std::string& corpus_desc) {
  return approx_run(f, corpus, corpus_desc, true);
}

ApproxReport is_left_approximation(const ModuleMap& f, const std::vector<CorpusEntry>& corpus,
                                   const std::string& corpus_desc) {
  return approx_run(f, corpus, corpus_desc, false);
}

bool minimality_check(const ModuleMap& f, const std::vector<CorpusEntry>& corpus,
                      ApproxReport* base) {
  std::vector<Summand> pieces = decompose(f.src);
  bool minimal = true;
  std::vector<std::string> deletable;
  for (std::size_t drop = 0; drop < pieces.size(); ++drop) {
    std::vector<RepPtr> parts;
    std::vector<ModuleMap> monos;
    for (std::size_t k = 0; k < pieces.size(); ++k)
      if (k != drop) {
        parts.push_back(pieces[k].piece);
        monos.push_back(pieces[k].mono);
      }
    RepPtr sub = parts.empty() ? zero_rep(f.src->alg) : direct_sum(parts);
    ModuleMap incl = parts.empty() ? zero_map(sub, f.src) : hstack_maps(sub, monos);
    ApproxReport r = approx_run(f.compose(incl), corpus, "", true);
    if (r.ok) {
      minimal = false;
      deletable.push_back(pieces[drop].piece->name);
    }
  }
  if (base) {
    base->minimal_checked = true;
    base->minimal = minimal;
    base->deletable = deletable;
  }
  return minimal;
}

RefuteReport refute_left_bounded(AlgPtr A, const Criterion3Input& inp, const RefuteOptions& opt) {
  const Field& F = A->field();
  require(F.kind() == Field::Kind::prime, Errc::unsupported,
          "refutation enumerates Hom(S, A); run it over a finite field");
  ValidationReport val = validate_criterion_input(*A, inp);
  require(val.ok, Errc::invalid_input, "criterion input failed validation");

  RefuteReport rep;
  rep.field = F.to_string();
  rep.dim_bound = opt.dim_bound;
  rep.n_max = opt.n_max;
  if (opt.dim_bound <= 0 || opt.n_max < 1) {
    rep.degenerate = true;
    return rep;
  }

  std::vector<Value> lams;
  for (std::uint32_t u = 1; u < F.characteristic(); ++u) lams.push_back(F.from_long(u));
  std::vector<CorpusEntry> corpus = pinf_corpus_sb(A, opt.dim_bound - 1, opt.dim_bound, lams,
                                                   opt.pd, /*keep_at_least=*/true);

  struct MnData {
    GraphModule gm;
    Matrix target; /* p_1 x_1 at vertex e(1) */
    bool eligible;
  };
  std::vector<MnData> mns;
  const Quiver& Q = A->quiver();
  for (int n = 1; n <= opt.n_max; ++n) {
    GraphModule gm = build_Mn(A, inp, n);
    MnResult r;
    r.n = n;
    r.dim = gm.rep->total_dim();
    r.pd = pdim(gm.rep, opt.pd);
    r.tops_independent = tops_independent(gm);
    bool ok = r.pd.finite() && r.tops_independent;
    Matrix tgt = gm.element("x1", path_label(Q, inp.p[0]));
    mns.push_back({std::move(gm), std::move(tgt), ok});
    rep.mn.push_back(std::move(r));
  }

  int e1 = inp.e[0];
  std::uint32_t p = F.characteristic();
  bool any_eligible = false;
  for (const auto& m : mns) any_eligible = any_eligible || m.eligible;

  for (const auto& entry : corpus) {
    if (entry.rep->total_dim() > opt.dim_bound) continue;
    ++rep.corpus_size;
    Matrix soc = socle_subspace(*entry.rep).cols[e1];
    int k = soc.cols();
    /* Lazy per-n hom bases from this module into M_n. */
    std::vector<std::vector<ModuleMap>> homs(mns.size());
    std::vector<bool> have(mns.size(), false);

    std::uint64_t combos = 1;
    for (int j = 0; j < k; ++j) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      Matrix fvec(F, entry.rep->dims[e1], 1);
      std::uint64_t rem = code;
      std::string desc;
      for (int j = 0; j < k; ++j) {
        std::uint32_t c = static_cast<std::uint32_t>(rem % p);
        rem /= p;
        desc += (j ? "," : "(") + std::to_string(c);
        if (c)
          for (int i = 0; i < fvec.rows(); ++i)
            F.addmul_in(fvec.at(i, 0), F.from_long(c), soc.at(i, j));
      }
      desc += k ? ")" : "(0)";
      RefuteCase rc;
      rc.module = entry.rep->name;
      rc.dim = entry.rep->total_dim();
      rc.pd = entry.pd.to_string();
      rc.f_desc = desc;
      for (std::size_t ni = 0; ni < mns.size() && rc.witness_n < 0; ++ni) {
        if (!mns[ni].eligible) continue;
        if (!have[ni]) {
          homs[ni] = hom_basis(entry.rep, mns[ni].gm.rep);
          have[ni] = true;
        }
        Matrix W(F, mns[ni].target.rows(), static_cast<int>(homs[ni].size()));
        for (std::size_t j = 0; j < homs[ni].size(); ++j) {
          Matrix img = homs[ni][j].blocks[e1].mul(fvec);
          for (int i = 0; i < img.rows(); ++i) W.at(i, static_cast<int>(j)) = img.at(i, 0);
        }
        if (!solve(W, mns[ni].target).has_value()) rc.witness_n = static_cast<int>(ni) + 1;
      }
      if (rc.witness_n < 0)
        rep.survivors.push_back(rc.module + " with f = " + rc.f_desc);
      rep.cases.push_back(std::move(rc));
    }
  }
  rep.degenerate = rep.cases.empty() || !any_eligible;
  rep.refuted = !rep.degenerate && rep.survivors.empty();
  return rep;
}

Criterion3Input ex6_criterion_input(const Algebra& A) {
  return make_criterion_input(A, {"beta", "chi"}, {"alpha", "psi"});
}

Criterion3Input ex2_criterion_input(const Algebra& A) {
  return make_criterion_input(A, {"beta"}, {"alpha"});
}

}  // namespace bw
