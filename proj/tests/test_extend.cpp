#include "bw/extend.hpp"

#include "bw/homalg.hpp"
#include "doctest.h"

using namespace bw;

static const char* kChiSpec =
    "extend: vertex 9; arrow chi1: 9 -> 5; arrow chi2: 9 -> 6;"
    " rel: beta1.chi1 - beta2.chi2";
static const char* kPsiSpec =
    "extend: vertex 10; arrow psi1: 10 -> 7; arrow psi2: 10 -> 8;"
    " rel: gamma1.psi1 - gamma2.psi2";

TEST_CASE("extension spec parsing") {
  ExtensionSpec s = parse_extension_spec(kChiSpec);
  CHECK(s.vertex == "9");
  REQUIRE(s.arrows.size() == 2);
  CHECK(s.arrows[0].label == "chi1");
  CHECK(s.arrows[1].target == "6");
  REQUIRE(s.relations.size() == 1);

  /* Newlines and comments work as separators too. */
  ExtensionSpec t = parse_extension_spec(
      "# adds one vertex\nvertex 9\narrow chi1: 9 -> 5\narrow chi2: 9 -> 6\n"
      "rel: beta1.chi1 - beta2.chi2\n");
  CHECK(t.vertex == s.vertex);
  CHECK(t.relations == s.relations);

  CHECK_THROWS_AS((void)parse_extension_spec("arrow chi1: 9 -> 5"), Error);
  CHECK_THROWS_AS((void)parse_extension_spec("vertex 9; frob: nonsense"), Error);
}

TEST_CASE("one point extensions reproduce the bundled algebras") {
  AlgPtr L = builtin_algebra("ex7-lambda");
  CHECK(L->dim() == 21);

  ExtendResult r1 = one_point_extend(L, parse_extension_spec(kChiSpec));
  CHECK(r1.old_blocks_unchanged);
  CHECK(r1.ext->dim() == 26);
  CHECK(r1.ext->canonical_text == builtin_algebra("ex7-lambda1")->canonical_text);

  ExtendResult r2 = one_point_extend(r1.ext, parse_extension_spec(kPsiSpec));
  CHECK(r2.old_blocks_unchanged);
  CHECK(r2.ext->dim() == 31);
  CHECK(r2.ext->canonical_text == builtin_algebra("ex7-delta")->canonical_text);
  std::vector<int> base_blocks;
  for (int v = 0; v < r1.ext->quiver().n_vertices(); ++v)
    base_blocks.push_back(r1.ext->basis.dim_from(v));
  CHECK(r2.old_dims == base_blocks);

  /* An arrow into the new vertex is rejected. */
  CHECK_THROWS_AS(
      (void)one_point_extend(L, parse_extension_spec("vertex 9; arrow chi1: 5 -> 9")), Error);
  /* So is a relation that does not start with a new arrow. */
  CHECK_THROWS_AS((void)one_point_extend(
                      L, parse_extension_spec("vertex 9; arrow chi1: 9 -> 5; rel: delta.alpha")),
                  Error);
  /* And a clashing vertex name. */
  CHECK_THROWS_AS((void)one_point_extend(L, parse_extension_spec("vertex 5; arrow z: 5 -> 2")),
                  Error);
}

TEST_CASE("restriction to the base algebra") {
  AlgPtr L = builtin_algebra("ex7-lambda");
  AlgPtr D = builtin_algebra("ex7-lambda1");
  const Quiver& QD = D->quiver();
  for (int v = 0; v < L->quiver().n_vertices(); ++v) {
    RepPtr res = restrict_to_base(L, projective_rep(D, v));
    CHECK(is_isomorphic(res, projective_rep(L, v)));
  }
  RepPtr P9 = projective_rep(D, QD.require_vertex("9"));
  CHECK(P9->total_dim() == 5);
  /* P9 does not vanish at vertex 9, so it cannot restrict... */
  CHECK_THROWS_AS((void)restrict_to_base(L, P9), Error);
  /* ...but its radical does. */
  RepPtr rad = subrep_from_subspace(P9, radical_subspace(*P9), "radP9").first;
  CHECK(restrict_to_base(L, rad)->total_dim() == 4);
}

TEST_CASE("H_n family") {
  AlgPtr L = builtin_algebra("ex7-lambda");
  const Quiver& Q = L->quiver();
  RepPtr Le2 = projective_rep(L, Q.require_vertex("2"));
  for (int n = 1; n <= 3; ++n) {
    RepPtr H = build_Hn(L, n);
    CHECK(H->total_dim() == 3 * n + 2);
    CHECK(is_isomorphic(H, build_Hn_graph(L, n).rep));
    std::vector<RepPtr> copies(n, Le2);
    CHECK(is_isomorphic(syzygy(H, 1), direct_sum(copies)));
  }
  RepPtr H1 = build_Hn(L, 1);
  CHECK(H1->dims[Q.require_vertex("1")] == 1);
  CHECK(H1->dims[Q.require_vertex("2")] == 2);
  CHECK(H1->dims[Q.require_vertex("5")] == 1);
  CHECK(H1->dims[Q.require_vertex("7")] == 1);
}

TEST_CASE("amalgam modules over the double extension") {
  AlgPtr D = builtin_algebra("ex7-delta");
  const Quiver& Q = D->quiver();
  auto vtx = [&](const char* s) { return Q.require_vertex(s); };
  PdimOptions pd{8};

  GraphModule G57 = ex7_pair(D, 5, 7);
  CHECK(G57.rep->total_dim() == 3);
  CHECK(is_isomorphic(G57.rep, ex7_pair(D, 7, 5).rep));
  CHECK(is_isomorphic(syzygy(G57.rep, 1), projective_rep(D, vtx("2"))));
  PdimResult pd57 = pdim(G57.rep, pd);
  CHECK(pd57.kind == PdimResult::Kind::exact);
  CHECK(pd57.n == 1);

  GraphModule U95 = ex7_u(D, 9, 5);
  CHECK(U95.rep->total_dim() == 2);
  PdimResult pd95 = pdim(U95.rep, pd);
  CHECK(pd95.kind == PdimResult::Kind::exact);
  CHECK(pd95.n == 1);
  GraphModule U52 = ex7_u(D, 5, 2);
  CHECK(pdim(U52.rep, pd).kind == PdimResult::Kind::infinite);

  GraphModule D9 = ex7_diamond(D, 9);
  CHECK(D9.rep->total_dim() == 4);
  CHECK(is_isomorphic(syzygy(D9.rep, 1), simple_rep(D, vtx("3"))));
  CHECK(pdim(D9.rep, pd).kind == PdimResult::Kind::infinite);
  /* A cutoff of 0 is too shallow to see the S_3 cycle. */
  CHECK(pdim(D9.rep, PdimOptions{0}).kind == PdimResult::Kind::at_least);

  GraphModule A1 = ex7_A1(D);
  CHECK(A1.rep->total_dim() == 9);
  CHECK(hom_dim(A1.rep, A1.rep) == 1);
  CHECK(hom_dim(A1.rep, projective_rep(D, vtx("1"))) == 0);
  CHECK(is_isomorphic(syzygy(A1.rep, 1), projective_rep(D, vtx("2"))));
}

TEST_CASE("bundled approximations are well defined epis") {
  AlgPtr D = builtin_algebra("ex7-delta");
  std::vector<NamedApprox> apx = ex7_approximations(D);
  REQUIRE(apx.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(apx[i].vertex == i);
    CHECK(apx[i].f.well_defined());
    CHECK(apx[i].f.is_surjective());
    CHECK(is_isomorphic(apx[i].f.tgt, simple_rep(D, i)));
  }
  CHECK(!ex7_corpus_seeds(D).empty());
}
