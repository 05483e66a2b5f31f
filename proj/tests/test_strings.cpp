#include "bw/strings.hpp"
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

}  // namespace

TEST_CASE("word parsing, reversal and canonical form") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  StringWord w = parse_word(Q, "gamma^- rho tau");
  CHECK(w.length() == 3);
  CHECK(w.to_string(Q) == "gamma^- rho tau");
  CHECK(reverse_word(reverse_word(w)) == w);
  CHECK(canonical_word(w) == canonical_word(reverse_word(w)));
  StringWord t = parse_word(Q, "e_3");
  CHECK(t.trivial());
  CHECK(t.trivial_vertex == Q.require_vertex("3"));
  CHECK_THROWS_AS((void)parse_word(Q, "nope"), Error);
}

TEST_CASE("string validity rejects bad walks") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  CHECK(check_string(*A, parse_word(Q, "gamma^- rho tau")).ok);
  /* Not composable. */
  CHECK(!check_string(*A, parse_word(Q, "tau tau")).ok);
  /* Immediate backtracking. */
  CHECK(!check_string(*A, parse_word(Q, "tau tau^-")).ok);
  /* Valley needs two distinct arrows. */
  CHECK(!check_string(*A, parse_word(Q, "tau^- tau")).ok);
  /* Direct run hits the relation taup.tau. */
  CHECK(!check_string(*A, parse_word(Q, "tau taup")).ok);
}

TEST_CASE("string modules realize their walks") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  RepPtr M = string_rep(A, parse_word(Q, "gamma^- rho tau"));
  CHECK(M->total_dim() == 4);
  CHECK(relations_vanish(*M));
  CHECK(is_isomorphic(M, projective_rep(A, Q.require_vertex("2"))));
  CHECK(is_isomorphic(string_rep(A, parse_word(Q, "e_3")),
                      simple_rep(A, Q.require_vertex("3"))));
  /* Reading direction is irrelevant up to isomorphism. */
  for (const StringWord& w : enumerate_strings(A, 4)) {
    RepPtr a = string_rep(A, w);
    CHECK(a->total_dim() == w.length() + 1);
    CHECK(is_isomorphic(a, string_rep(A, reverse_word(w))));
  }
}

TEST_CASE("string enumeration is exact at length one") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  std::vector<StringWord> words = enumerate_strings(A, 1);
  /* 8 trivial words plus one class per arrow. */
  CHECK(words.size() == 20);
  int trivial = 0;
  bool saw_tau = false;
  for (const auto& w : words) {
    trivial += w.trivial();
    saw_tau = saw_tau || w.to_string(Q) == "tau";
    CHECK(check_string(*A, w).ok);
  }
  CHECK(trivial == 8);
  CHECK(saw_tau);
  CHECK_THROWS_AS((void)enumerate_strings(builtin_algebra("ex7-lambda"), 2), Error);
}

TEST_CASE("bands over the commuting square") {
  AlgPtr A = builtin_algebra("ex6");
  std::vector<BandWord> bands = enumerate_bands(A, 4);
  REQUIRE(!bands.empty());
  const Field& F = A->field();
  for (const auto& b : bands) {
    CHECK(check_band(*A, b).ok);
    RepPtr B = band_rep(A, b, F.from_long(1));
    CHECK(B->total_dim() == static_cast<int>(b.letters.size()));
    CHECK(relations_vanish(*B));
    RepPtr B2 = band_rep(A, b, F.from_long(2));
    CHECK(relations_vanish(*B2));
    CHECK(!is_isomorphic(B, B2)); /* distinct twists, distinct modules */
  }
  CHECK_THROWS_AS((void)band_rep(A, bands[0], F.zero()), Error);
}

TEST_CASE("graph modules amalgamate projectives") {
  AlgPtr A = builtin_algebra("ex6");

  GraphSpec zig;
  zig.tops = {{"x", "1"}};
  zig.edges = {{"x", "beta", "s0"}, {"x", "alpha", "s1"}};
  GraphModule G = build_graph_module(A, zig, "zig");
  CHECK(G.rep->total_dim() == 3);
  CHECK(relations_vanish(*G.rep));
  CHECK(G.proj.is_surjective());
  CHECK(!G.element("x", "beta").is_zero());

  /* Identification through a shared slot. */
  GraphSpec shared = zig;
  shared.tops = {{"x", "1"}, {"y", "5"}};
  shared.edges = {{"x", "alpha", "s"}, {"y", "chi", "s"}};
  CHECK(build_graph_module(A, shared, "m").rep->total_dim() == 3);

  /* Dependency group over a common vertex. */
  GraphSpec dep = shared;
  dep.edges = {{"x", "alpha", "sa"}, {"y", "chi", "sb"}};
  dep.deps = {{"sa", "sb"}};
  GraphModule D = build_graph_module(A, dep, "d");
  CHECK(D.rep->total_dim() == 3);
  CHECK(relations_vanish(*D.rep));
}

TEST_CASE("graph specs are validated") {
  AlgPtr A = builtin_algebra("ex6");
  GraphSpec s;
  s.tops = {{"x", "1"}};

  s.edges = {{"ghost", "beta", "s0"}};
  CHECK_THROWS_AS((void)build_graph_module(A, s, "m"), Error);

  s.edges = {{"x", "tau", "s0"}}; /* tau does not start at 1 */
  CHECK_THROWS_AS((void)build_graph_module(A, s, "m"), Error);

  s.edges = {{"x", "rho.alpha", "s0"}}; /* zero class */
  CHECK_THROWS_AS((void)build_graph_module(A, s, "m"), Error);

  /* Dep group spanning different vertices. */
  s.edges = {{"x", "alpha", "sa"}, {"x", "beta", "sb"}};
  s.deps = {{"sa", "sb"}};
  CHECK_THROWS_AS((void)build_graph_module(A, s, "m"), Error);

  /* Singleton dep kills its slot. */
  s.edges = {{"x", "alpha", "sa"}};
  s.deps = {{"sa"}};
  CHECK_THROWS_AS((void)build_graph_module(A, s, "m"), Error);
}
