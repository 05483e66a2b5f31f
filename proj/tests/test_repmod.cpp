#include "bw/rep.hpp"
#include "doctest.h"

using namespace bw;

namespace {

bool relations_vanish(const Representation& M) {
  for (const auto& rel : M.alg->pres.relations) {
    std::vector<std::pair<Value, Path>> terms;
    for (const auto& t : rel.terms) terms.emplace_back(t.coeff, t.path);
    if (!combo_action(M, terms).is_zero()) return false;
  }
  return true;
}

Subspace unit_at(const Representation& M, int v, int local) {
  const Field& F = M.alg->field();
  Subspace U;
  for (int w = 0; w < M.alg->quiver().n_vertices(); ++w) U.cols.push_back(Matrix(F, M.dims[w], 0));
  Matrix col(F, M.dims[v], 1);
  col.at(local, 0) = F.one();
  U.cols[v] = col;
  return U;
}

}  // namespace

TEST_CASE("projectives realize the path-class blocks") {
  for (const std::string& name : builtin_names()) {
    AlgPtr A = builtin_algebra(name);
    CAPTURE(name);
    for (int v = 0; v < A->quiver().n_vertices(); ++v) {
      RepPtr P = projective_rep(A, v);
      CHECK(P->total_dim() == A->basis.dim_from(v));
      CHECK(relations_vanish(*P));
      auto layout = projective_basis_layout(*A, v);
      CHECK(static_cast<int>(layout.size()) == P->total_dim());
      CHECK(layout[0].path.trivial());
    }
  }
}

TEST_CASE("make_rep rejects relation violations") {
  AlgPtr A = builtin_algebra("ex2");
  const Field& F = A->field();
  std::vector<Matrix> mats;
  for (int a = 0; a < A->quiver().n_arrows(); ++a) {
    Matrix m(F, 1, 1);
    m.at(0, 0) = F.one();
    mats.push_back(m);
  }
  CHECK_THROWS_AS((void)make_rep(A, {1, 1}, mats, "bad"), Error);
  CHECK_THROWS_AS((void)make_rep(A, {1}, {}, "short"), Error);
}

TEST_CASE("radical and socle of small projectives") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  RepPtr P4 = projective_rep(A, Q.require_vertex("4"));
  CHECK(P4->total_dim() == 2);
  CHECK(radical_subspace(*P4).total_dim() == 1);
  CHECK(socle_subspace(*P4).total_dim() == 1);

  RepPtr P2 = projective_rep(A, Q.require_vertex("2"));
  CHECK(P2->total_dim() == 4);
  CHECK(radical_subspace(*P2).total_dim() == 3);
  CHECK(socle_subspace(*P2).total_dim() == 2); /* gamma and tau.rho */

  /* The top generates the whole projective. */
  Subspace gen = unit_at(*P2, Q.require_vertex("2"), 0);
  CHECK(submodule_closure(*P2, gen).total_dim() == 4);
}

TEST_CASE("hom spaces count vertex dimensions from projectives") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  RepPtr B = direct_sum({projective_rep(A, Q.require_vertex("2")),
                         simple_rep(A, Q.require_vertex("3"))});
  for (int v = 0; v < Q.n_vertices(); ++v)
    CHECK(hom_dim(projective_rep(A, v), B) == B->dims[v]);
  for (const ModuleMap& f : hom_basis(projective_rep(A, Q.require_vertex("2")), B))
    CHECK(f.well_defined());
}

TEST_CASE("epi onto a simple and its kernel") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  int v2 = Q.require_vertex("2");
  RepPtr P2 = projective_rep(A, v2);
  ModuleMap f = epi_onto_simple(P2, v2);
  CHECK(f.well_defined());
  CHECK(f.is_surjective());
  auto [K, inc] = kernel_of(f);
  CHECK(K->total_dim() == 3);
  CHECK(inc.is_injective());
  CHECK(image_subspace(f).total_dim() == 1);
  CHECK_THROWS_AS((void)epi_onto_simple(simple_rep(A, Q.require_vertex("3")), v2), Error);
}

TEST_CASE("quotients and subrepresentations add up") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  RepPtr P2 = projective_rep(A, Q.require_vertex("2"));
  Subspace rad = radical_subspace(*P2);
  auto [R, inc] = subrep_from_subspace(P2, rad, "rad");
  CHECK(R->total_dim() == 3);
  CHECK(relations_vanish(*R));
  auto [T, pr] = quotient_by(P2, rad, "top");
  CHECK(T->total_dim() == 1);
  CHECK(is_isomorphic(T, simple_rep(A, Q.require_vertex("2"))));
  CHECK(pr.compose(inc).is_zero());
}

TEST_CASE("isomorphism testing and decomposition certificates") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  RepPtr P2 = projective_rep(A, Q.require_vertex("2"));
  RepPtr S3 = simple_rep(A, Q.require_vertex("3"));
  CHECK(is_isomorphic(P2, P2));
  CHECK(!is_isomorphic(P2, projective_rep(A, Q.require_vertex("3"))));
  CHECK(certified_indecomposable(P2));

  RepPtr M = direct_sum({P2, S3});
  auto split = find_split_pair(S3, M);
  REQUIRE(split.has_value());
  CHECK(split->second.compose(split->first).equals(identity_map(S3)));

  std::vector<Summand> parts = decompose(M);
  REQUIRE(parts.size() == 2);
  for (const auto& s : parts) {
    CHECK(s.retraction.compose(s.mono).equals(identity_map(s.piece)));
    CHECK((is_isomorphic(s.piece, P2) || is_isomorphic(s.piece, S3)));
  }
  CHECK(is_isomorphic(direct_sum({parts[0].piece, parts[1].piece}), M));
}
