#include "bw/matrix.hpp"
#include "doctest.h"

using namespace bw;

namespace {

Matrix mk(const Field& F, int m, int n, const std::vector<std::string>& ent) {
  Matrix A(F, m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) A.at(i, j) = F.parse_scalar(ent[std::size_t(i) * n + j]);
  return A;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Field F = Field::Q();
  Value a = F.parse_scalar("1/3");
  Value b = F.parse_scalar("1/6");
  CHECK(F.eq(F.add(a, b), F.parse_scalar("1/2")));
  CHECK(F.to_string(F.div(F.one(), F.from_long(-7))) == "-1/7");
  CHECK_THROWS_AS((void)F.parse_scalar("1/0"), Error);
}

TEST_CASE("prime fields validate and invert") {
  Field F5 = Field::parse("F5");
  CHECK(F5.to_string(F5.inv(F5.from_long(2))) == "3");
  CHECK(F5.eq(F5.from_long(7), F5.from_long(2)));
  CHECK_THROWS_AS((void)Field::parse("F4"), Error);
  CHECK_THROWS_AS((void)Field::parse("R"), Error);
}

TEST_CASE("rref, rank and nullspace") {
  Field F = Field::Q();
  Matrix A = mk(F, 3, 3, {"1", "2", "3", "2", "4", "6", "1", "0", "1"});
  CHECK(rank_of(A) == 2);
  Matrix N = nullspace(A);
  CHECK(N.cols() == 1);
  CHECK(A.mul(N).is_zero());

  Matrix B = mk(F, 2, 2, {"1", "1", "0", "1"});
  RrefResult rr = rref_in_place(B);
  CHECK(rr.rank == 2);
  CHECK(B.equals(Matrix::identity(F, 2)));
}

TEST_CASE("solve and inverse") {
  Field F = Field::Q();
  Matrix A = mk(F, 2, 2, {"2", "1", "1", "1"});
  Matrix b = mk(F, 2, 1, {"3", "2"});
  auto x = solve(A, b);
  REQUIRE(x.has_value());
  CHECK(A.mul(*x).equals(b));

  auto inv = inverse(A);
  REQUIRE(inv.has_value());
  CHECK(A.mul(*inv).equals(Matrix::identity(F, 2)));

  Matrix S = mk(F, 2, 2, {"1", "2", "2", "4"});
  CHECK(!is_invertible(S));
  CHECK(!solve(S, mk(F, 2, 1, {"1", "0"})).has_value());
}

TEST_CASE("column space lattice") {
  Field F = Field::Q();
  /* Two planes in Q^3 meeting in the line through (1,1,1). */
  Matrix P1 = mk(F, 3, 2, {"1", "1", "1", "0", "1", "0"});
  Matrix P2 = mk(F, 3, 2, {"1", "0", "1", "1", "1", "0"});
  Matrix L = intersect_col_spaces(P1, P2);
  CHECK(L.cols() == 1);
  CHECK(cols_contained_in(L, P1));
  CHECK(cols_contained_in(L, P2));
  CHECK(!cols_contained_in(P1, P2));
  CHECK(same_col_space(P1, P1.cols_subset({1, 0})));

  Matrix pre = preimage_cols(P1, L);
  CHECK(pre.cols() >= 1);
  CHECK(cols_contained_in(P1.mul(pre), L));
}

TEST_CASE("coordinate pivots over F2") {
  Field F = Field::parse("F2");
  Matrix U = mk(F, 3, 2, {"1", "0", "1", "1", "0", "1"});
  std::vector<int> piv = coordinate_pivots(U);
  CHECK(piv == std::vector<int>{0, 1});
  Matrix A = mk(F, 2, 2, {"1", "1", "1", "0"});
  auto inv = inverse(A);
  REQUIRE(inv.has_value());
  CHECK(A.mul(*inv).equals(Matrix::identity(F, 2)));
}
