#include "bw/extend.hpp"

#include <sstream>

namespace bw {

ExtensionSpec parse_extension_spec(const std::string& text) {
  std::vector<std::string> stmts;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::size_t h = line.find('#');
      if (h != std::string::npos) line.resize(h);
      std::size_t start = 0;
      while (start <= line.size()) {
        std::size_t semi = line.find(';', start);
        std::size_t len = (semi == std::string::npos) ? std::string::npos : semi - start;
        std::string piece = trim(line.substr(start, len));
        if (!piece.empty()) stmts.push_back(piece);
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
    }
  }
  require(!stmts.empty(), Errc::invalid_input, "empty extension spec");
  if (stmts[0].rfind("extend:", 0) == 0) {
    stmts[0] = trim(stmts[0].substr(7));
    if (stmts[0].empty()) stmts.erase(stmts.begin());
  }

  ExtensionSpec spec;
  for (const std::string& st : stmts) {
    if (st.rfind("rel:", 0) == 0) {
      std::string body = trim(st.substr(4));
      require(!body.empty(), Errc::invalid_input, "empty relation in extension spec");
      spec.relations.push_back(body);
      continue;
    }
    std::vector<std::string> tok = split_ws(st);
    require(!tok.empty(), Errc::invalid_input, "empty extension statement");
    if (tok[0] == "vertex") {
      require(tok.size() == 2, Errc::invalid_input, "malformed vertex statement: '" + st + "'");
      require(spec.vertex.empty(), Errc::invalid_input, "extension declares a second vertex");
      spec.vertex = tok[1];
      continue;
    }
    if (tok[0] == "arrow") {
      std::size_t colon = st.find(':');
      require(colon != std::string::npos && colon > 5, Errc::invalid_input,
              "malformed arrow statement: '" + st + "'");
      std::string label = trim(st.substr(5, colon - 5));
      std::string rest = st.substr(colon + 1);
      std::size_t arr = rest.find("->");
      require(arr != std::string::npos, Errc::invalid_input,
              "malformed arrow statement: '" + st + "'");
      std::string s = trim(rest.substr(0, arr));
      std::string t = trim(rest.substr(arr + 2));
      require(!label.empty() && label.find(' ') == std::string::npos && !s.empty() && !t.empty(),
              Errc::invalid_input, "malformed arrow statement: '" + st + "'");
      require(!spec.vertex.empty(), Errc::invalid_input,
              "arrow '" + label + "' declared before the vertex");
      require(s == spec.vertex, Errc::invalid_input,
              "arrow '" + label + "' does not leave the new vertex");
      spec.arrows.push_back({label, t});
      continue;
    }
    fail(Errc::invalid_input, "unrecognized extension statement: '" + st + "'");
  }
  require(!spec.vertex.empty(), Errc::invalid_input, "extension spec declares no vertex");
  return spec;
}

Presentation extend_presentation(const Presentation& base, const ExtensionSpec& spec) {
  require(!spec.vertex.empty(), Errc::invalid_input, "extension spec declares no vertex");
  Presentation ext = base;
  ext.quiver.add_vertex(spec.vertex);
  int nv = ext.quiver.require_vertex(spec.vertex);
  for (const auto& a : spec.arrows) {
    require(a.target != spec.vertex, Errc::invalid_input,
            "arrow '" + a.label + "' targets the new vertex; it must stay a source");
    require(base.quiver.vertex_id.count(a.target) > 0, Errc::invalid_input,
            "arrow '" + a.label + "' targets unknown vertex '" + a.target + "'");
    ext.quiver.add_arrow(a.label, nv, ext.quiver.require_vertex(a.target));
  }
  for (const auto& rtext : spec.relations) {
    Relation r = parse_relation_expr(ext.quiver, ext.field, rtext);
    for (const auto& term : r.terms)
      require(term.path.src == nv, Errc::invalid_input,
              "relation term '" + term.path.to_string(ext.quiver) +
                  "' does not start with a new arrow");
    ext.relations.push_back(r);
  }
  return ext;
}

ExtendResult one_point_extend(AlgPtr A, const ExtensionSpec& spec) {
  ExtendResult res;
  res.ext = make_algebra(extend_presentation(A->pres, spec));
  res.old_blocks_unchanged = true;
  for (int v = 0; v < A->quiver().n_vertices(); ++v) {
    int d = A->basis.dim_from(v);
    res.old_dims.push_back(d);
    if (res.ext->basis.dim_from(v) != d) res.old_blocks_unchanged = false;
  }
  return res;
}

RepPtr restrict_to_base(AlgPtr base, RepPtr M) {
  const Quiver& bq = base->quiver();
  const Quiver& eq = M->alg->quiver();
  require(base->field().to_string() == M->alg->field().to_string(), Errc::invalid_input,
          "field mismatch between base and extension");
  require(bq.n_vertices() <= eq.n_vertices() && bq.n_arrows() <= eq.n_arrows(),
          Errc::invalid_input, "module algebra is smaller than the base");
  for (int v = 0; v < bq.n_vertices(); ++v)
    require(bq.vertices[v] == eq.vertices[v], Errc::invalid_input,
            "base vertices are not a prefix of the module's quiver");
  for (int a = 0; a < bq.n_arrows(); ++a)
    require(bq.arrows[a].label == eq.arrows[a].label && bq.arrows[a].src == eq.arrows[a].src &&
                bq.arrows[a].tgt == eq.arrows[a].tgt,
            Errc::invalid_input, "base arrows are not a prefix of the module's quiver");
  for (int a = bq.n_arrows(); a < eq.n_arrows(); ++a)
    require(eq.arrows[a].src >= bq.n_vertices(), Errc::invalid_input,
            "added arrow '" + eq.arrows[a].label + "' does not leave an added vertex");
  for (int v = bq.n_vertices(); v < eq.n_vertices(); ++v)
    require(M->dims[v] == 0, Errc::invalid_input,
            "module does not vanish at added vertex '" + eq.vertices[v] + "'");
  std::vector<int> dims(M->dims.begin(), M->dims.begin() + bq.n_vertices());
  std::vector<Matrix> mats(M->mats.begin(), M->mats.begin() + bq.n_arrows());
  return make_rep(base, std::move(dims), std::move(mats), M->name, M->prov_kind, M->prov);
}

namespace {

std::string vname(int v) { return std::to_string(v); }

int unique_arrow_out(const Quiver& Q, int v) {
  int found = -1;
  for (int a = 0; a < Q.n_arrows(); ++a) {
    if (Q.arrows[a].src != v) continue;
    require(found < 0, Errc::invalid_input,
            "vertex '" + Q.vertices[v] + "' has more than one outgoing arrow");
    found = a;
  }
  require(found >= 0, Errc::invalid_input,
          "vertex '" + Q.vertices[v] + "' has no outgoing arrow");
  return found;
}

int arrow_from_to(const Quiver& Q, int v, int w) {
  int found = -1;
  for (int a = 0; a < Q.n_arrows(); ++a) {
    if (Q.arrows[a].src != v || Q.arrows[a].tgt != w) continue;
    require(found < 0, Errc::invalid_input,
            "more than one arrow from '" + Q.vertices[v] + "' to '" + Q.vertices[w] + "'");
    found = a;
  }
  require(found >= 0, Errc::invalid_input,
          "no arrow from '" + Q.vertices[v] + "' to '" + Q.vertices[w] + "'");
  return found;
}

/* The two length-two continuations out of a two-arrow source, as dotted
 * words (last-applied arrow first). */
std::vector<std::string> two_step_paths(const Quiver& Q, int v) {
  std::vector<std::string> out;
  for (int a = 0; a < Q.n_arrows(); ++a) {
    if (Q.arrows[a].src != v) continue;
    int cont = unique_arrow_out(Q, Q.arrows[a].tgt);
    out.push_back(Q.arrows[cont].label + "." + Q.arrows[a].label);
  }
  require(out.size() == 2, Errc::invalid_input,
          "vertex '" + Q.vertices[v] + "' does not have exactly two outgoing arrows");
  return out;
}

}  // namespace

RepPtr build_Hn(AlgPtr A, int n) {
  require(n >= 1, Errc::invalid_input, "H_n needs n >= 1");
  const Quiver& Q = A->quiver();
  const Field& F = A->field();
  int alpha = Q.require_arrow("alpha");
  int beta[2] = {Q.require_arrow("beta1"), Q.require_arrow("beta2")};
  int gamma[2] = {Q.require_arrow("gamma1"), Q.require_arrow("gamma2")};
  auto btld = [&](int i) { return beta[(i + 1) % 2]; };
  auto gtld = [&](int i) { return gamma[(i + 1) % 2]; };
  int hub = Q.arrows[alpha].tgt;
  for (int a : {beta[0], beta[1], gamma[0], gamma[1]})
    require(Q.arrows[a].tgt == hub, Errc::invalid_input,
            "the alpha/beta/gamma arrows do not share a target");

  /* Covering projectives in generator order z, x_1..x_n, y_1..y_n. */
  std::vector<RepPtr> parts;
  std::vector<int> topv;
  auto add_part = [&](int v) {
    topv.push_back(v);
    parts.push_back(projective_rep(A, v));
  };
  add_part(Q.arrows[alpha].src);
  for (int i = 1; i <= n; ++i) add_part(Q.arrows[btld(i)].src);
  for (int i = 1; i <= n; ++i) add_part(Q.arrows[gtld(i)].src);
  RepPtr P = direct_sum(parts);

  std::vector<std::vector<ProjBasisEntry>> layouts;
  std::vector<std::vector<int>> offs(parts.size(), std::vector<int>(Q.n_vertices(), 0));
  for (std::size_t t = 0; t < parts.size(); ++t) {
    layouts.push_back(projective_basis_layout(*A, topv[t]));
    if (t + 1 < parts.size())
      for (int v = 0; v < Q.n_vertices(); ++v) offs[t + 1][v] = offs[t][v] + parts[t]->dims[v];
  }
  auto elem = [&](int t, int arrow) {
    Path p = arrow_path(Q, arrow);
    Matrix vec(F, P->dims[hub], 1);
    for (const auto& [posn, c] : A->basis.reduce_path(p))
      vec.at(offs[t][hub] + layouts[t][posn].local, 0) = c;
    require(!vec.is_zero(), Errc::invalid_input,
            "arrow '" + Q.arrows[arrow].label + "' is zero in the algebra");
    return vec;
  };

  int xi = 0, yi = n;  /* part index = xi + i resp. yi + i */
  Subspace gens;
  for (int v = 0; v < Q.n_vertices(); ++v) gens.cols.emplace_back(F, P->dims[v], 0);
  gens.cols[hub] =
      gens.cols[hub].hstack(elem(0, alpha).sub(elem(xi + 1, btld(1))).sub(elem(yi + 1, gtld(1))));
  for (int i = 1; i < n; ++i)
    gens.cols[hub] = gens.cols[hub].hstack(elem(yi + i, gtld(i))
                                               .sub(elem(xi + i + 1, btld(i + 1)))
                                               .sub(elem(yi + i + 1, gtld(i + 1))));

  Subspace U = submodule_closure(*P, gens);
  require(U.total_dim() == 3 * n, Errc::internal, "unexpected relation submodule dimension");
  auto [M, pr] = quotient_by(P, U, "H" + std::to_string(n));
  return M;
}

GraphSpec hn_graphspec(int n) {
  require(n >= 1, Errc::invalid_input, "H_n needs n >= 1");
  GraphSpec s;
  auto num = [](const std::string& base, int i) { return base + std::to_string(i); };
  s.tops.push_back({"z", "1"});
  for (int i = 1; i <= n; ++i) s.tops.push_back({num("x", i), i % 2 ? "5" : "6"});
  for (int i = 1; i <= n; ++i) s.tops.push_back({num("y", i), i % 2 ? "7" : "8"});
  s.edges.push_back({"z", "alpha", "s0"});
  for (int i = 1; i <= n; ++i)
    s.edges.push_back({num("x", i), i % 2 ? "beta1" : "beta2", num("sx", i)});
  for (int i = 1; i <= n; ++i)
    s.edges.push_back({num("y", i), i % 2 ? "gamma1" : "gamma2", num("sy", i)});
  s.deps.push_back({"s0", "sx1", "sy1"});
  for (int i = 1; i < n; ++i)
    s.deps.push_back({num("sy", i), num("sx", i + 1), num("sy", i + 1)});
  return s;
}

GraphModule build_Hn_graph(AlgPtr A, int n) {
  return build_graph_module(A, hn_graphspec(n), "H" + std::to_string(n));
}

GraphModule ex7_pair(AlgPtr A, int a, int b) {
  const Quiver& Q = A->quiver();
  int aa = unique_arrow_out(Q, Q.require_vertex(vname(a)));
  int ab = unique_arrow_out(Q, Q.require_vertex(vname(b)));
  GraphSpec spec;
  spec.tops = {{"t1", vname(a)}, {"t2", vname(b)}};
  spec.edges = {{"t1", Q.arrows[aa].label, "s"}, {"t2", Q.arrows[ab].label, "s"}};
  return build_graph_module(A, spec, "G(" + vname(a) + "," + vname(b) + ")");
}

GraphModule ex7_u(AlgPtr A, int top, int mid) {
  const Quiver& Q = A->quiver();
  int ar = arrow_from_to(Q, Q.require_vertex(vname(top)), Q.require_vertex(vname(mid)));
  GraphSpec spec;
  spec.tops = {{"t", vname(top)}};
  spec.edges = {{"t", Q.arrows[ar].label, "s"}};
  return build_graph_module(A, spec, "U(" + vname(top) + "," + vname(mid) + ")");
}

GraphModule ex7_diamond(AlgPtr A, int v) {
  const Quiver& Q = A->quiver();
  std::vector<std::string> paths = two_step_paths(Q, Q.require_vertex(vname(v)));
  GraphSpec spec;
  spec.tops = {{"t", vname(v)}};
  spec.edges = {{"t", paths[0], "s"}, {"t", paths[1], "s"}};
  return build_graph_module(A, spec, "D(" + vname(v) + ")");
}

GraphModule ex7_A1(AlgPtr delta) {
  const Quiver& Q = delta->quiver();
  int alpha = unique_arrow_out(Q, Q.require_vertex("1"));
  std::vector<std::string> px = two_step_paths(Q, Q.require_vertex("9"));
  std::vector<std::string> py = two_step_paths(Q, Q.require_vertex("10"));
  GraphSpec spec;
  spec.tops = {{"z", "1"}, {"x", "9"}, {"y", "10"}};
  spec.edges = {{"z", Q.arrows[alpha].label, "s1"},
                {"x", px[0], "s2"},
                {"x", px[1], "s2"},
                {"y", py[0], "s3"},
                {"y", py[1], "s3"}};
  spec.deps = {{"s1", "s2", "s3"}};
  return build_graph_module(delta, spec, "A1");
}

GraphModule ex7_bridge(AlgPtr delta, int v) {
  const Quiver& Q = delta->quiver();
  int tv = Q.require_vertex(vname(v));
  int av = unique_arrow_out(Q, tv);
  /* Partner column: the new vertex with no arrow into v.  The other choice
   * leaves a simple behind in the kernel and the syzygy is no longer one
   * full P(2). */
  int partner = -1;
  for (const std::string& cand : {std::string("9"), std::string("10")}) {
    int c = Q.require_vertex(cand);
    bool hits = false;
    for (const auto& a : Q.arrows) hits = hits || (a.src == c && a.tgt == tv);
    if (!hits) {
      partner = c;
      break;
    }
  }
  require(partner >= 0, Errc::invalid_input,
          "every extension vertex has an arrow into '" + vname(v) + "'");
  std::vector<std::string> pp = two_step_paths(Q, partner);
  GraphSpec spec;
  spec.tops = {{"t", vname(v)}, {"u", Q.vertices[partner]}};
  spec.edges = {{"t", Q.arrows[av].label, "s"}, {"u", pp[0], "s"}, {"u", pp[1], "s"}};
  return build_graph_module(delta, spec, "B(" + vname(v) + ")");
}

std::vector<NamedApprox> ex7_approximations(AlgPtr delta) {
  const Quiver& Q = delta->quiver();
  auto vx = [&](int v) { return Q.require_vertex(vname(v)); };
  std::vector<NamedApprox> out;
  auto push = [&](int v, RepPtr src) { out.push_back({vx(v), epi_onto_simple(src, vx(v))}); };
  push(1, ex7_A1(delta).rep);
  push(2, projective_rep(delta, vx(2)));
  push(3, projective_rep(delta, vx(3)));
  push(4, projective_rep(delta, vx(4)));
  push(5, direct_sum({ex7_pair(delta, 5, 7).rep, ex7_pair(delta, 5, 8).rep}));
  push(6, direct_sum({ex7_pair(delta, 6, 7).rep, ex7_pair(delta, 6, 8).rep}));
  push(7, direct_sum({ex7_pair(delta, 7, 5).rep, ex7_pair(delta, 7, 6).rep}));
  push(8, direct_sum({ex7_pair(delta, 8, 5).rep, ex7_pair(delta, 8, 6).rep}));
  push(9, direct_sum({ex7_u(delta, 9, 5).rep, ex7_u(delta, 9, 6).rep}));
  push(10, direct_sum({ex7_u(delta, 10, 7).rep, ex7_u(delta, 10, 8).rep}));
  return out;
}

std::vector<RepPtr> ex7_corpus_seeds(AlgPtr delta) {
  std::vector<RepPtr> seeds;
  seeds.push_back(ex7_A1(delta).rep);
  for (int n = 1; n <= 4; ++n) seeds.push_back(build_Hn(delta, n));
  for (int a : {5, 6})
    for (int b : {7, 8}) seeds.push_back(ex7_pair(delta, a, b).rep);
  seeds.push_back(ex7_u(delta, 9, 5).rep);
  seeds.push_back(ex7_u(delta, 9, 6).rep);
  seeds.push_back(ex7_u(delta, 10, 7).rep);
  seeds.push_back(ex7_u(delta, 10, 8).rep);
  for (int v : {5, 6, 7, 8}) seeds.push_back(ex7_bridge(delta, v).rep);
  /* Cut-off verticals and the two diamonds have infinite projective
   * dimension; the corpus filter must drop them. */
  for (int v : {5, 6, 7, 8}) seeds.push_back(ex7_u(delta, v, 2).rep);
  seeds.push_back(ex7_diamond(delta, 9).rep);
  seeds.push_back(ex7_diamond(delta, 10).rep);
  return seeds;
}

}  // namespace bw
