#include "bw/algebra.hpp"
#include "doctest.h"

using namespace bw;

TEST_CASE("path parsing and composition order") {
  Presentation P = parse_presentation("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
  const Quiver& Q = P.quiver;
  Path p = parse_path(Q, "b.a"); /* a applied first */
  CHECK(p.src == Q.require_vertex("1"));
  CHECK(p.target(Q) == Q.require_vertex("3"));
  CHECK(p.arrows == std::vector<int>{Q.require_arrow("a"), Q.require_arrow("b")});
  CHECK(p.to_string(Q) == "b.a");
  CHECK_THROWS_AS((void)parse_path(Q, "a.b"), Error); /* not composable */
  CHECK(is_subpath(parse_path(Q, "a"), p));
  CHECK(!is_subpath(p, parse_path(Q, "a")));
}

TEST_CASE("presentation DSL errors carry positions") {
  CHECK_THROWS_AS((void)parse_presentation("vertices: 1 1\n"), Error);
  CHECK_THROWS_WITH_AS((void)parse_presentation("vertices: 1\nvertices: 2\n"),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_AS((void)parse_presentation("arrow a: 1 -> 2\nvertices: 1 2\n"), Error);
  CHECK_THROWS_AS((void)parse_presentation("vertices: 1 2\narrow a: 1 -> 2\nrel: a\n"), Error);
  /* Non-parallel terms are rejected. */
  CHECK_THROWS_AS((void)parse_presentation("vertices: 1 2 3\n"
                                           "arrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 2\n"
                                           "rel: b.a - c.c\n"),
                  Error);
}

TEST_CASE("canonical text ignores comments and spacing") {
  std::string one = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrel: b.a\n";
  std::string two = "# a comment\nvertices:   1 2\n\narrow a: 1->2\narrow b: 2 -> 1\nrel: b.a\n";
  CHECK(parse_presentation(one).canonical_text() == parse_presentation(two).canonical_text());
  CHECK(parse_presentation(one).hash_hex() == parse_presentation(two).hash_hex());
}

TEST_CASE("relation expression parser merges and validates") {
  Presentation P = parse_presentation(
      "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 3\n");
  const Quiver& Q = P.quiver;
  Relation r = parse_relation_expr(Q, P.field, "2*b.a - c.a + b.a");
  REQUIRE(r.terms.size() == 2);
  CHECK(r.src(Q) == Q.require_vertex("1"));
  CHECK(r.tgt(Q) == Q.require_vertex("3"));
  /* Full cancellation and short paths are errors. */
  CHECK_THROWS_AS((void)parse_relation_expr(Q, P.field, "b.a - b.a"), Error);
  CHECK_THROWS_AS((void)parse_relation_expr(Q, P.field, "a"), Error);
  Field F2 = Field::parse("F2");
  CHECK_THROWS_AS((void)parse_relation_expr(Q, F2, "2*b.a"), Error);
}

TEST_CASE("builtins match their projective graphs") {
  AlgPtr ex2 = builtin_algebra("ex2");
  CHECK(ex2->dim() == 6);
  CHECK(ex2->basis.dim_from(0) == 4);
  CHECK(ex2->basis.dim_from(1) == 2);
  CHECK(ex2->cls.special_biserial);

  AlgPtr ex6 = builtin_algebra("ex6");
  CHECK(ex6->dim() == 24);
  std::vector<int> blocks;
  for (int v = 0; v < 8; ++v) blocks.push_back(ex6->basis.dim_from(v));
  CHECK(blocks == std::vector<int>{4, 4, 4, 2, 4, 2, 2, 2});
  CHECK(ex6->cls.special_biserial);
  CHECK(!ex6->cls.monomial); /* two commutativity relations */

  AlgPtr lam = builtin_algebra("ex7-lambda");
  CHECK(lam->dim() == 21);
  CHECK(lam->cls.monomial);
  CHECK(!lam->cls.special_biserial); /* five arrows into the hub */

  CHECK(builtin_algebra("ex7-lambda1")->dim() == 26);
  AlgPtr delta = builtin_algebra("ex7-delta");
  CHECK(delta->dim() == 31);
  CHECK(delta->basis.loewy_length == 4);
  CHECK(!delta->cls.monomial);
}

TEST_CASE("path-class reduction sees binomial identifications") {
  AlgPtr delta = builtin_algebra("ex7-delta");
  const Quiver& Q = delta->quiver();
  auto r1 = delta->basis.reduce_path(parse_path(Q, "beta1.chi1"));
  auto r2 = delta->basis.reduce_path(parse_path(Q, "beta2.chi2"));
  REQUIRE(r1.size() == 1);
  REQUIRE(r2.size() == 1);
  CHECK(r1[0].first == r2[0].first);
  CHECK(delta->basis.is_zero_class(parse_path(Q, "epsilon.beta1.chi1")));
}

TEST_CASE("field override and non-admissible input") {
  AlgPtr m = builtin_algebra("ex6", Field::Fp(2));
  CHECK(m->field().to_string() == "F2");
  CHECK(m->dim() == 24); /* monomial-free basis is characteristic independent here */

  /* A loop with no relations is infinite-dimensional: the cap must fire. */
  CHECK_THROWS_AS((void)make_algebra(parse_presentation("vertices: 1\narrow l: 1 -> 1\n"), 8),
                  Error);
  CHECK_THROWS_AS((void)load_algebra("no-such-builtin"), Error);
}
