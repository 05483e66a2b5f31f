#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "bw/extend.hpp"
#include "bw/finiteness.hpp"
#include "bw/homalg.hpp"

using namespace bw;

namespace {

struct Crit {
  bool ok = true;
  std::string why;
  void req(bool c, const std::string& msg) {
    if (ok && !c) {
      ok = false;
      why = msg;
    }
  }
};

int g_fails = 0;

void run(int n, const std::string& desc, const std::function<void(Crit&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Crit c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.req(false, std::string("exception: ") + e.what());
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (c.ok) {
    std::printf("[PASS] criterion %d: %s (%lld ms)\n", n, desc.c_str(),
                static_cast<long long>(ms));
  } else {
    std::printf("[FAIL] criterion %d: %s -- %s (%lld ms)\n", n, desc.c_str(), c.why.c_str(),
                static_cast<long long>(ms));
    ++g_fails;
  }
  std::fflush(stdout);
}

bool relations_hold(const Representation& M) {
  for (const auto& rel : M.alg->pres.relations) {
    std::vector<std::pair<Value, Path>> terms;
    for (const auto& t : rel.terms) terms.emplace_back(t.coeff, t.path);
    if (!combo_action(M, terms).is_zero()) return false;
  }
  return true;
}

int count_iso(const std::vector<Summand>& parts, RepPtr ref) {
  int k = 0;
  for (const auto& s : parts)
    if (is_isomorphic(s.piece, ref)) ++k;
  return k;
}

/* Cumulative canonical-word pool for membership checks. */
struct WordPool {
  AlgPtr A;
  int len = -1;
  std::set<std::string> words;
  bool contains(const StringWord& w) {
    int l = static_cast<int>(w.letters.size());
    if (l > len) {
      len = l;
      words.clear();
      for (const StringWord& u : enumerate_strings(A, len))
        words.insert(canonical_word(u).to_string(A->quiver()));
    }
    return words.count(canonical_word(w).to_string(A->quiver())) > 0;
  }
};

void criterion1(Crit& c) {
  AlgPtr A = builtin_algebra("ex2");
  c.req(A->dim() == 6, "algebra dimension");
  c.req(A->basis.dim_from(0) == 4 && A->basis.dim_from(1) == 2, "projective dimensions 4 and 2");
  c.req(A->cls.special_biserial, "special biserial classification");
  FindimReport f = findim_probe(A, 12, PdimOptions{12});
  c.req(f.max_finite == 1, "largest finite pdim is 1");
  c.req(!f.saw_at_least, "every pdim resolved under the cutoff");
  c.req(f.saw_infinite, "some string has infinite pdim");
  for (const auto& e : f.entries) {
    c.req(e.pd.kind != PdimResult::Kind::at_least, "entry resolved: " + e.word.to_string(A->quiver()));
    if (e.pd.kind == PdimResult::Kind::exact)
      c.req(e.pd.n == 0 || e.pd.n == 1, "finite values are 0 or 1");
  }
}

void criterion2(Crit& c) {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  Criterion3Input inp = ex6_criterion_input(*A);
  RepPtr tau = string_rep(A, parse_word(Q, "tau"));
  RepPtr eps = string_rep(A, parse_word(Q, "epsilon"));
  for (int n = 1; n <= 4; ++n) {
    GraphModule G = build_Mn(A, inp, n);
    PdimResult pd = pdim(G.rep, PdimOptions{12});
    c.req(pd.kind == PdimResult::Kind::exact && pd.n == 2,
          "pdim M_" + std::to_string(n) + " = 2");
    std::vector<Summand> parts = decompose(syzygy(G.rep, 2));
    c.req(static_cast<int>(parts.size()) == 2 * n, "second syzygy splits into 2n strings");
    c.req(count_iso(parts, tau) == n, "n copies of str(tau)");
    c.req(count_iso(parts, eps) == n, "n copies of str(epsilon)");
  }
  for (const char* v : {"3", "4"}) {
    RepPtr S = simple_rep(A, Q.require_vertex(v));
    PdimResult pd = pdim(S, PdimOptions{12});
    c.req(pd.kind == PdimResult::Kind::infinite, std::string("pdim S_") + v + " infinite");
    c.req(verify_infinite_certificate(S, pd), std::string("certificate for S_") + v + " verifies");
  }
}

void criterion3(Crit& c) {
  AlgPtr A = builtin_algebra("ex6");
  Criterion3Input inp = ex6_criterion_input(*A);
  c.req(validate_criterion_input(*A, inp).ok, "path data validates");
  ScanOptions opt;
  opt.n_max = 4;
  opt.max_len = 12;
  opt.band_len = 8;
  opt.pd.cutoff = 12;
  Criterion3Report rep = run_criterion3(A, inp, opt);
  c.req(rep.ok && !rep.vacuous, "scan passes and is not vacuous");
  int counted = 0;
  for (const auto& row : rep.strings)
    if (row.counted) {
      ++counted;
      c.req(row.res.all(), "string row passes: " + row.name);
    }
  c.req(counted > 0, "some string modules were counted");
  c.req(rep.band_facts.size() == 2, "two socle vertices checked");
  for (const auto& f : rep.band_facts)
    c.req(f.two_arrow_property && f.paths.size() == 2,
          "exactly two arrows end at vertex " + std::to_string(f.vertex));
  c.req(!rep.bands.empty(), "band samples were taken");
  c.req(rep.lambdas_used.size() == 3, "three band parameters");
  for (const auto& row : rep.bands) {
    c.req(!row.socle_in_pq.empty(), "band socle data present: " + row.name);
    for (bool okb : row.socle_in_pq) c.req(okb, "band socle containment: " + row.name);
  }
}

void criterion4(Crit& c) {
  AlgPtr A = builtin_algebra("ex6", Field::Fp(2));
  RefuteOptions opt;
  opt.dim_bound = 8;
  opt.n_max = 9;
  opt.pd.cutoff = 12;
  RefuteReport r = refute_left_bounded(A, ex6_criterion_input(*A), opt);
  c.req(!r.degenerate, "search not degenerate");
  c.req(r.corpus_size > 0, "corpus is populated");
  c.req(r.survivors.empty(), "no candidate factors through every embedding");
  c.req(r.refuted, "bounded refutation succeeds");
}

void criterion5(Crit& c) {
  AlgPtr A = builtin_algebra("ex7-lambda");
  RepPtr P2 = projective_rep(A, A->quiver().require_vertex("2"));
  for (int n = 1; n <= 4; ++n) {
    RepPtr H = build_Hn(A, n);
    c.req(H->total_dim() == 3 * n + 2, "dim H_" + std::to_string(n) + " = 3n+2");
    std::vector<RepPtr> copies(n, P2);
    c.req(is_isomorphic(syzygy(H, 1), direct_sum(copies)),
          "first syzygy of H_" + std::to_string(n) + " is n copies of P(2)");
  }
}

void criterion6(Crit& c) {
  AlgPtr L = builtin_algebra("ex7-lambda");
  ExtendResult r1 = one_point_extend(
      L, parse_extension_spec("vertex 9; arrow chi1: 9 -> 5; arrow chi2: 9 -> 6;"
                              " rel: beta1.chi1 - beta2.chi2"));
  c.req(r1.old_blocks_unchanged, "first extension keeps old blocks");
  c.req(r1.ext->canonical_text == builtin_algebra("ex7-lambda1")->canonical_text,
        "first extension matches the bundled presentation");
  ExtendResult r2 = one_point_extend(
      r1.ext, parse_extension_spec("vertex 10; arrow psi1: 10 -> 7; arrow psi2: 10 -> 8;"
                                   " rel: gamma1.psi1 - gamma2.psi2"));
  c.req(r2.old_blocks_unchanged, "second extension keeps old blocks");
  c.req(r2.ext->canonical_text == builtin_algebra("ex7-delta")->canonical_text,
        "second extension matches the bundled presentation");
  AlgPtr D = r2.ext;
  const Quiver& QD = D->quiver();
  c.req(projective_rep(D, QD.require_vertex("9"))->total_dim() == 5, "dim P(9) = 5");
  c.req(projective_rep(D, QD.require_vertex("10"))->total_dim() == 5, "dim P(10) = 5");
  for (int v = 0; v < L->quiver().n_vertices(); ++v)
    c.req(is_isomorphic(restrict_to_base(L, projective_rep(D, v)), projective_rep(L, v)),
          "P(" + L->quiver().vertices[v] + ") restricts to the base projective");
}

void criterion7(Crit& c) {
  AlgPtr D = builtin_algebra("ex7-delta");
  std::vector<CorpusEntry> corpus =
      pinf_corpus_closure(D, ex7_corpus_seeds(D), 12, PdimOptions{12});
  c.req(!corpus.empty(), "closure corpus is populated");
  for (const auto& e : corpus) c.req(e.pd.finite(), "corpus member has finite pdim");
  std::vector<NamedApprox> apx = ex7_approximations(D);
  c.req(apx.size() == 10, "ten bundled approximations");
  for (const auto& a : apx) {
    ApproxReport rep = is_right_approximation(a.f, corpus, "closure corpus");
    c.req(rep.ok, "right approximation of S_" + D->quiver().vertices[a.vertex]);
  }
  ApproxReport base = is_right_approximation(apx[0].f, corpus, "closure corpus");
  c.req(minimality_check(apx[0].f, corpus, &base), "approximation of S_1 is minimal");
  c.req(is_isomorphic(syzygy(apx[0].f.src, 1),
                      projective_rep(D, D->quiver().require_vertex("2"))),
        "first syzygy of the S_1 source is P(2)");
}

void criterion8(Crit& c) {
  for (const std::string& name : builtin_names()) {
    AlgPtr A = builtin_algebra(name);
    const Quiver& Q = A->quiver();
    int nv = Q.n_vertices();

    std::vector<RepPtr> projs;
    std::vector<CorpusEntry> proj_corpus;
    for (int v = 0; v < nv; ++v) {
      RepPtr P = projective_rep(A, v);
      projs.push_back(P);
      proj_corpus.push_back({P, PdimResult::exact(0)});
      c.req(relations_hold(*P), name + ": relations vanish on P(" + Q.vertices[v] + ")");
      c.req(syzygy(P, 1)->total_dim() == 0, name + ": projectives have zero syzygy");
      PdimResult pd = pdim(P, PdimOptions{4});
      c.req(pd.kind == PdimResult::Kind::exact && pd.n == 0, name + ": pdim of a projective");
    }
    for (int v = 0; v < nv; ++v)
      for (int w = 0; w < nv; ++w)
        c.req(hom_dim(projs[v], projs[w]) == projs[w]->dims[v],
              name + ": hom from P(" + Q.vertices[v] + ") counts dimensions");
    for (int v = 0; v < nv; ++v) {
      RepPtr S = simple_rep(A, v);
      CoverData cd = projective_cover(S);
      c.req(cd.top_types == std::vector<int>{v}, name + ": cover of a simple is P(top)");
      c.req(syzygy(S, 1)->total_dim() == projs[v]->total_dim() - 1,
            name + ": dim of the simple's syzygy");
    }
    RepPtr Sa = simple_rep(A, 0);
    RepPtr Sb = simple_rep(A, nv - 1);
    c.req(is_isomorphic(syzygy(direct_sum({Sa, Sb}), 1),
                        direct_sum({syzygy(Sa, 1), syzygy(Sb, 1)})),
          name + ": syzygy is additive on simples");
    ApproxReport idr = is_right_approximation(identity_map(projs[0]), proj_corpus, "projectives");
    c.req(idr.ok, name + ": identity is a right approximation");
    for (const auto& t : idr.tests)
      c.req(t.factored == t.hom_to_target, name + ": every hom factors through the identity");

    if (!A->cls.special_biserial) continue;

    WordPool pool;
    pool.A = A;
    std::vector<StringWord> words = enumerate_strings(A, 8);
    int idx = 0;
    for (const StringWord& w : words) {
      RepPtr M = string_rep(A, w);
      std::string wt = w.to_string(Q);
      c.req(M->total_dim() == static_cast<int>(w.letters.size()) + 1,
            name + ": dim = length + 1 for " + wt);
      c.req(relations_hold(*M), name + ": relations vanish on str(" + wt + ")");
      c.req(is_isomorphic(M, string_rep(A, reverse_word(w))),
            name + ": reverse word gives an isomorphic module");
      CoverData cd = projective_cover(M);
      RepPtr K = syzygy(M, 1);
      c.req(K->total_dim() == cd.P->total_dim() - M->total_dim(),
            name + ": syzygy dimension matches the cover");
      if (K->total_dim() > 0) {
        for (const auto& part : decompose(K)) {
          const RepPtr& p = part.piece;
          if (p->prov_kind == "projective") continue;
          c.req(p->prov_kind == "string",
                name + ": syzygy summand of str(" + wt + ") is a string");
          if (p->prov_kind != "string") continue;
          StringWord u = parse_word(Q, p->prov);
          c.req(check_string(*A, u).ok, name + ": summand word is a valid string");
          c.req(is_isomorphic(p, string_rep(A, u)), name + ": summand matches its word");
          c.req(pool.contains(u), name + ": summand appears in the enumeration");
        }
      }
      if (idx % 7 == 0) {
        for (int v = 0; v < nv; ++v)
          c.req(hom_dim(projs[v], M) == M->dims[v],
                name + ": hom from projectives counts dimensions of str(" + wt + ")");
      }
      if (idx % 11 == 0 && idx + 1 < static_cast<int>(words.size())) {
        RepPtr N = string_rep(A, words[idx + 1]);
        c.req(is_isomorphic(syzygy(direct_sum({M, N}), 1),
                            direct_sum({syzygy(M, 1), syzygy(N, 1)})),
              name + ": syzygy additive on a string pair");
      }
      ++idx;
    }
  }
}

}  // namespace

int main() {
  run(1, "two-vertex example: basis, projectives, finitistic dimension probe", criterion1);
  run(2, "eight-vertex example: test modules have pdim 2, simples at the sinks do not",
      criterion2);
  run(3, "condition (2) scan over strings and bands with socle facts", criterion3);
  run(4, "bounded refutation of a left approximation over F_2", criterion4);
  run(5, "H_n family: dimensions and syzygies", criterion5);
  run(6, "one-point extensions rebuild the bundled algebras", criterion6);
  run(7, "ten right approximations verified over the closure corpus", criterion7);
  run(8, "property sweep over every bundled algebra", criterion8);
  std::printf("acceptance: %d/8 passed\n", 8 - g_fails);
  return g_fails == 0 ? 0 : 1;
}
