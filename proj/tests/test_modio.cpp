#include "bw/modio.hpp"

#include <cstdio>
#include <fstream>

#include "bw/extend.hpp"
#include "doctest.h"

using namespace bw;

TEST_CASE("matrix json round trip") {
  Field F = Field::Q();
  Matrix m(F, 2, 3);
  m.at(0, 0) = F.parse_scalar("1/3");
  m.at(1, 2) = F.parse_scalar("-7");
  Matrix back = matrix_from_json(F, matrix_to_json(m));
  CHECK(back.equals(m));

  Field F5 = Field::Fp(5);
  Matrix p(F5, 1, 2);
  p.at(0, 1) = F5.from_long(9);
  CHECK(matrix_from_json(F5, matrix_to_json(p)).equals(p));
  CHECK_THROWS_AS((void)matrix_from_json(F, json::parse("{\"rows\":1}")), Error);
}

TEST_CASE("module json round trip and hash guard") {
  AlgPtr A = builtin_algebra("ex6");
  RepPtr M = string_rep(A, parse_word(A->quiver(), "gamma^- rho tau"));
  json j = module_to_json(*M);
  RepPtr back = module_from_json(A, j);
  CHECK(back->dims == M->dims);
  CHECK(is_isomorphic(back, M));

  AlgPtr B = builtin_algebra("ex2");
  CHECK_THROWS_WITH_AS((void)module_from_json(B, j),
                       doctest::Contains("different algebra"), Error);

  /* Omitted vertices default to zero. */
  json sparse = j;
  sparse["dims"] = json::object();
  sparse["mats"] = json::object();
  RepPtr Z = module_from_json(A, sparse);
  CHECK(Z->total_dim() == 0);
}

TEST_CASE("map json rejects non commuting data") {
  AlgPtr A = builtin_algebra("ex6");
  const Quiver& Q = A->quiver();
  RepPtr P2 = projective_rep(A, Q.require_vertex("2"));
  RepPtr S2 = simple_rep(A, Q.require_vertex("2"));
  ModuleMap f = epi_onto_simple(P2, Q.require_vertex("2"));
  json j = map_to_json(f);
  ModuleMap back = map_from_json(P2, S2, j);
  CHECK(back.equals(f));

  RepPtr S4 = simple_rep(A, Q.require_vertex("4"));
  ModuleMap g = zero_map(P2, S4);
  json bad = map_to_json(g);
  /* Force a nonzero block where no module map can have one. */
  bad["blocks"]["4"] = matrix_to_json(Matrix::identity(A->field(), 1));
  CHECK_THROWS_WITH_AS((void)map_from_json(P2, S4, bad),
                       doctest::Contains("does not commute"), Error);
}

TEST_CASE("graph spec and criterion input json") {
  GraphSpec s;
  s.tops = {{"x", "1"}, {"y", "5"}};
  s.edges = {{"x", "alpha", "s"}, {"y", "chi", "s"}};
  s.deps = {{"s"}};
  json j = graphspec_to_json(s);
  GraphSpec t = graphspec_from_json(j);
  CHECK(t.tops.size() == 2);
  CHECK(t.tops[1].vertex == "5");
  CHECK(t.edges[0].path == "alpha");
  CHECK(t.deps == s.deps);

  AlgPtr A = builtin_algebra("ex6");
  Criterion3Input inp = ex6_criterion_input(*A);
  Criterion3Input back = criterion_input_from_json(*A, criterion_input_to_json(*A, inp));
  CHECK(back.r == inp.r);
  CHECK(back.e == inp.e);
  CHECK(back.p[1].to_string(A->quiver()) == "chi");
}

TEST_CASE("run report envelope") {
  RunReport r;
  r.command = "module pdim";
  r.parameters["cutoff"] = 24;
  r.algebra_hash = "deadbeef";
  r.results["kind"] = "infinite";
  r.wall_ms = 1.5;
  json j = r.to_json();
  RunReport back = RunReport::from_json(j);
  CHECK(back.command == r.command);
  CHECK(back.to_json() == j);
  CHECK_THROWS_AS((void)RunReport::from_json(json::parse("{\"command\":3}")), Error);
}

TEST_CASE("json files") {
  const char* path = "bw_modio_test.json";
  save_json_file(path, json{{"a", 1}});
  CHECK(load_json_file(path)["a"] == 1);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_WITH_AS((void)load_json_file(path), doctest::Contains("malformed JSON"), Error);
  std::remove(path);
  CHECK_THROWS_AS((void)load_json_file(path), Error);
}

TEST_CASE("dot rendering") {
  AlgPtr A = builtin_algebra("ex6");
  StringWord w = parse_word(A->quiver(), "gamma^- rho tau");
  std::string d = dot_of_word(A, w, "M");
  CHECK(d.find("digraph") != std::string::npos);
  CHECK(d.find("rank=min") != std::string::npos);
  CHECK(d.find("rho") != std::string::npos);

  Criterion3Input inp = ex6_criterion_input(*A);
  GraphModule M2 = build_Mn(A, inp, 2);
  std::string g = dot_of_graph(M2);
  CHECK(g.find("digraph") != std::string::npos);
  CHECK(g.find("x1") != std::string::npos);

  AlgPtr D = builtin_algebra("ex7-delta");
  std::string a1 = dot_of_graph(ex7_A1(D));
  CHECK(a1.find("cluster_dep0") != std::string::npos);

  CHECK(dot_of_module(string_rep(A, w)).find("rho") != std::string::npos);
  /* Non-string modules fall back to a one-node summary. */
  RepPtr P2 = projective_rep(A, A->quiver().require_vertex("2"));
  std::string fb = dot_of_module(P2);
  CHECK(fb.find("digraph") != std::string::npos);
  CHECK(fb.find("dims:") != std::string::npos);
}
