#include "bw/modio.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace bw {

namespace {

const json& need(const json& j, const char* key) {
  require(j.is_object(), Errc::invalid_input, "expected a JSON object");
  require(j.contains(key), Errc::invalid_input, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string need_str(const json& j, const char* key) {
  const json& v = need(j, key);
  require(v.is_string(), Errc::invalid_input, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  require(v.is_number_integer(), Errc::invalid_input,
          std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(Errc::invalid_input, "matrix entries must be strings or integers");
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dq(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

json cond2_to_json(const Condition2Result& c) {
  return json{{"i", c.i}, {"ii", c.ii}, {"iii", c.iii}, {"all", c.all()}};
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(m.field().to_string(m.at(i, j)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const Field& F, const json& j) {
  int rows = need_int(j, "rows");
  int cols = need_int(j, "cols");
  require(rows >= 0 && cols >= 0, Errc::invalid_input, "negative matrix shape");
  const json& entries = need(j, "entries");
  require(entries.is_array() && static_cast<int>(entries.size()) == rows * cols,
          Errc::invalid_input, "matrix entry count does not match its shape");
  Matrix m(F, rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = F.parse_scalar(scalar_text(entries[k++]));
  return m;
}

json module_to_json(const Representation& M) {
  const Quiver& Q = M.alg->quiver();
  json dims = json::object();
  for (int v = 0; v < Q.n_vertices(); ++v) dims[Q.vertices[v]] = M.dims[v];
  json mats = json::object();
  for (int a = 0; a < Q.n_arrows(); ++a) mats[Q.arrows[a].label] = matrix_to_json(M.mats[a]);
  return json{{"algebra", M.alg->hash}, {"name", M.name}, {"dims", dims}, {"mats", mats}};
}

RepPtr module_from_json(AlgPtr A, const json& j) {
  require(need_str(j, "algebra") == A->hash, Errc::invalid_input,
          "module was saved over a different algebra");
  const Quiver& Q = A->quiver();
  const Field& F = A->field();
  std::vector<int> dims(Q.n_vertices(), 0);
  for (const auto& [key, val] : need(j, "dims").items()) {
    require(val.is_number_integer() && val.get<int>() >= 0, Errc::invalid_input,
            "dimension at vertex '" + key + "' must be a nonnegative integer");
    dims[Q.require_vertex(key)] = val.get<int>();
  }
  std::vector<Matrix> mats;
  for (int a = 0; a < Q.n_arrows(); ++a)
    mats.emplace_back(F, dims[Q.arrows[a].tgt], dims[Q.arrows[a].src]);
  if (j.contains("mats"))
    for (const auto& [key, val] : j.at("mats").items())
      mats[Q.require_arrow(key)] = matrix_from_json(F, val);
  std::string name = j.value("name", std::string("module"));
  return make_rep(A, std::move(dims), std::move(mats), name);
}

json map_to_json(const ModuleMap& f) {
  const Quiver& Q = f.src->alg->quiver();
  json blocks = json::object();
  for (int v = 0; v < Q.n_vertices(); ++v) blocks[Q.vertices[v]] = matrix_to_json(f.blocks[v]);
  json src_dims = json::object(), tgt_dims = json::object();
  for (int v = 0; v < Q.n_vertices(); ++v) {
    src_dims[Q.vertices[v]] = f.src->dims[v];
    tgt_dims[Q.vertices[v]] = f.tgt->dims[v];
  }
  return json{{"algebra", f.src->alg->hash},
              {"src_dims", src_dims},
              {"tgt_dims", tgt_dims},
              {"blocks", blocks}};
}

ModuleMap map_from_json(RepPtr src, RepPtr tgt, const json& j) {
  require(src->alg->hash == tgt->alg->hash, Errc::invalid_input,
          "map endpoints live over different algebras");
  require(need_str(j, "algebra") == src->alg->hash, Errc::invalid_input,
          "map was saved over a different algebra");
  const Quiver& Q = src->alg->quiver();
  const Field& F = src->alg->field();
  ModuleMap f;
  f.src = src;
  f.tgt = tgt;
  for (int v = 0; v < Q.n_vertices(); ++v) f.blocks.emplace_back(F, tgt->dims[v], src->dims[v]);
  for (const auto& [key, val] : need(j, "blocks").items()) {
    int v = Q.require_vertex(key);
    Matrix m = matrix_from_json(F, val);
    require(m.rows() == tgt->dims[v] && m.cols() == src->dims[v], Errc::invalid_input,
            "block at vertex '" + key + "' has the wrong shape");
    f.blocks[v] = m;
  }
  require(f.well_defined(), Errc::invalid_input, "map does not commute with the arrows");
  return f;
}

json graphspec_to_json(const GraphSpec& s) {
  json tops = json::array(), edges = json::array(), deps = json::array();
  for (const auto& t : s.tops) tops.push_back(json{{"name", t.name}, {"vertex", t.vertex}});
  for (const auto& e : s.edges)
    edges.push_back(json{{"top", e.top}, {"path", e.path}, {"slot", e.slot}});
  for (const auto& grp : s.deps) deps.push_back(grp);
  return json{{"tops", tops}, {"edges", edges}, {"deps", deps}};
}

GraphSpec graphspec_from_json(const json& j) {
  GraphSpec s;
  const json& tops = need(j, "tops");
  require(tops.is_array(), Errc::invalid_input, "field 'tops' must be an array");
  for (const auto& t : tops) s.tops.push_back({need_str(t, "name"), need_str(t, "vertex")});
  const json& edges = need(j, "edges");
  require(edges.is_array(), Errc::invalid_input, "field 'edges' must be an array");
  for (const auto& e : edges)
    s.edges.push_back({need_str(e, "top"), need_str(e, "path"), need_str(e, "slot")});
  if (j.contains("deps")) {
    const json& deps = j.at("deps");
    require(deps.is_array(), Errc::invalid_input, "field 'deps' must be an array");
    for (const auto& grp : deps) {
      require(grp.is_array(), Errc::invalid_input, "each dependency group must be an array");
      std::vector<std::string> g;
      for (const auto& sid : grp) {
        require(sid.is_string(), Errc::invalid_input, "dependency entries must be slot names");
        g.push_back(sid.get<std::string>());
      }
      s.deps.push_back(std::move(g));
    }
  }
  return s;
}

json criterion_input_to_json(const Algebra& A, const Criterion3Input& inp) {
  const Quiver& Q = A.quiver();
  json p = json::array(), q = json::array(), e = json::array();
  for (const auto& path : inp.p) p.push_back(path.to_string(Q));
  for (const auto& path : inp.q) q.push_back(path.to_string(Q));
  for (int v : inp.e) e.push_back(Q.vertices[v]);
  return json{{"p", p}, {"q", q}, {"e", e}};
}

Criterion3Input criterion_input_from_json(const Algebra& A, const json& j) {
  auto words = [&](const char* key) {
    const json& arr = need(j, key);
    require(arr.is_array(), Errc::invalid_input, std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& w : arr) {
      require(w.is_string(), Errc::invalid_input, std::string(key) + " entries must be path words");
      out.push_back(w.get<std::string>());
    }
    return out;
  };
  Criterion3Input inp = make_criterion_input(A, words("p"), words("q"));
  if (j.contains("e")) {
    const json& e = j.at("e");
    require(e.is_array() && e.size() == inp.e.size(), Errc::invalid_input,
            "field 'e' does not match the paths");
    for (std::size_t i = 0; i < inp.e.size(); ++i)
      require(e[i].is_string() && e[i].get<std::string>() == A.quiver().vertices[inp.e[i]],
              Errc::invalid_input, "field 'e' disagrees with the path targets");
  }
  return inp;
}

json pdim_to_json(const PdimResult& r) {
  json j{{"text", r.to_string()}};
  switch (r.kind) {
    case PdimResult::Kind::exact:
      j["kind"] = "exact";
      j["n"] = r.n;
      break;
    case PdimResult::Kind::infinite:
      j["kind"] = "infinite";
      j["cycle_key"] = r.cycle_key;
      j["first_index"] = r.first_index;
      j["period"] = r.period;
      break;
    case PdimResult::Kind::at_least:
      j["kind"] = "at_least";
      j["cutoff"] = r.n;
      break;
  }
  return j;
}

json findim_to_json(const Algebra& A, const FindimReport& r) {
  const Quiver& Q = A.quiver();
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back(
        json{{"word", e.word.to_string(Q)}, {"dim", e.dim}, {"pdim", pdim_to_json(e.pd)}});
  return json{{"max_len", r.max_len},       {"cutoff", r.cutoff},
              {"entries", entries},         {"max_finite", r.max_finite},
              {"finite_values", r.finite_values}, {"saw_infinite", r.saw_infinite},
              {"saw_at_least", r.saw_at_least}};
}

json validation_to_json(const ValidationReport& r) {
  json items = json::array();
  for (const auto& it : r.items)
    items.push_back(json{{"label", it.label}, {"ok", it.ok}, {"detail", it.detail}});
  return json{{"ok", r.ok}, {"items", items}};
}

json criterion3_to_json(const Algebra& A, const Criterion3Report& r) {
  const Quiver& Q = A.quiver();
  json mn = json::array();
  for (const auto& m : r.mn)
    mn.push_back(json{{"n", m.n},
                      {"dim", m.dim},
                      {"pdim", pdim_to_json(m.pd)},
                      {"tops_independent", m.tops_independent}});
  json strings = json::array();
  for (const auto& s : r.strings)
    strings.push_back(json{{"name", s.name},
                           {"dim", s.dim},
                           {"pdim", pdim_to_json(s.pd)},
                           {"counted", s.counted},
                           {"at_least", s.at_least},
                           {"cond2", cond2_to_json(s.res)}});
  json bands = json::array();
  for (const auto& b : r.bands)
    bands.push_back(json{{"name", b.name},
                         {"pdim", pdim_to_json(b.pd)},
                         {"counted", b.counted},
                         {"cond2", cond2_to_json(b.res)},
                         {"socle_in_pq", b.socle_in_pq}});
  json facts = json::array();
  for (const auto& f : r.band_facts)
    facts.push_back(json{{"vertex", Q.vertices[f.vertex]},
                         {"paths", f.paths},
                         {"two_arrow_property", f.two_arrow_property}});
  json bounds{{"n_max", r.bounds.n_max},
              {"max_len", r.bounds.max_len},
              {"band_len", r.bounds.band_len},
              {"lambdas", r.bounds.lambdas},
              {"cutoff", r.bounds.pd.cutoff}};
  return json{{"validation", validation_to_json(r.validation)},
              {"mn", mn},
              {"strings", strings},
              {"bands", bands},
              {"band_facts", facts},
              {"bounds", bounds},
              {"lambdas_used", r.lambdas_used},
              {"vacuous", r.vacuous},
              {"ok", r.ok},
              {"summary", r.bounds_summary()}};
}

json approx_to_json(const ApproxReport& r) {
  json tests = json::array();
  for (const auto& t : r.tests)
    tests.push_back(json{{"name", t.name},
                         {"dim", t.dim},
                         {"pdim", t.pd},
                         {"hom_to_target", t.hom_to_target},
                         {"factored", t.factored},
                         {"ok", t.ok}});
  json j{{"direction", r.direction},
         {"map", r.map_desc},
         {"corpus", r.corpus_desc},
         {"tests", tests},
         {"ok", r.ok}};
  if (r.minimal_checked) {
    j["minimal"] = r.minimal;
    j["deletable"] = r.deletable;
  }
  return j;
}

json refute_to_json(const RefuteReport& r) {
  json mn = json::array();
  for (const auto& m : r.mn)
    mn.push_back(json{{"n", m.n},
                      {"dim", m.dim},
                      {"pdim", pdim_to_json(m.pd)},
                      {"tops_independent", m.tops_independent}});
  json cases = json::array();
  for (const auto& c : r.cases)
    cases.push_back(json{{"module", c.module},
                         {"dim", c.dim},
                         {"pdim", c.pd},
                         {"f", c.f_desc},
                         {"witness_n", c.witness_n}});
  return json{{"refuted", r.refuted},
              {"degenerate", r.degenerate},
              {"field", r.field},
              {"dim_bound", r.dim_bound},
              {"n_max", r.n_max},
              {"corpus_size", r.corpus_size},
              {"mn", mn},
              {"cases", cases},
              {"survivors", r.survivors}};
}

json RunReport::to_json() const {
  return json{{"command", command},
              {"parameters", parameters},
              {"algebra", algebra_hash},
              {"results", results},
              {"wall_ms", wall_ms}};
}

RunReport RunReport::from_json(const json& j) {
  RunReport r;
  r.command = need_str(j, "command");
  r.parameters = need(j, "parameters");
  r.algebra_hash = need_str(j, "algebra");
  r.results = need(j, "results");
  const json& w = need(j, "wall_ms");
  require(w.is_number(), Errc::invalid_input, "field 'wall_ms' must be a number");
  r.wall_ms = w.get<double>();
  return r;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::invalid_input, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::invalid_input, "malformed JSON in '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  require(out.good(), Errc::invalid_input, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string dot_of_word(AlgPtr A, const StringWord& w, const std::string& name) {
  const Quiver& Q = A->quiver();
  std::vector<int> nodes = w.nodes(Q);
  std::ostringstream out;
  out << "digraph " << dq(name) << " {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  for (std::size_t k = 0; k < nodes.size(); ++k)
    out << "  n" << k << " [label=" << dq(Q.vertices[nodes[k]]) << "];\n";
  std::vector<bool> has_in(nodes.size(), false);
  std::ostringstream edges;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const Letter& l = w.letters[k];
    std::size_t from = l.inv ? k + 1 : k;
    std::size_t to = l.inv ? k : k + 1;
    has_in[to] = true;
    edges << "  n" << from << " -> n" << to << " [label=" << dq(Q.arrows[l.arrow].label)
          << "];\n";
  }
  out << "  { rank=min;";
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (!has_in[k]) out << " n" << k << ";";
  out << " }\n" << edges.str() << "}\n";
  return out.str();
}

std::string dot_of_graph(const GraphModule& G) {
  const Quiver& Q = G.alg->quiver();
  std::ostringstream out;
  out << "digraph " << dq(G.rep->name) << " {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  for (std::size_t t = 0; t < G.spec.tops.size(); ++t)
    out << "  " << dq("t:" + G.spec.tops[t].name)
        << " [label=" << dq(G.spec.tops[t].name + " : " + Q.vertices[G.top_vertex[t]]) << "];\n";
  out << "  { rank=min;";
  for (const auto& t : G.spec.tops) out << " " << dq("t:" + t.name) << ";";
  out << " }\n";
  std::map<std::string, int> slotv;
  for (const auto& e : G.spec.edges) slotv.emplace(e.slot, parse_path(Q, e.path).target(Q));
  for (const auto& [sid, v] : slotv)
    out << "  " << dq("s:" + sid) << " [label=" << dq(sid + " : " + Q.vertices[v]) << "];\n";
  for (const auto& e : G.spec.edges)
    out << "  " << dq("t:" + e.top) << " -> " << dq("s:" + e.slot) << " [label=" << dq(e.path)
        << "];\n";
  int k = 0;
  for (const auto& grp : G.spec.deps) {
    out << "  subgraph cluster_dep" << k++ << " {\n    style=dotted;\n    label=\"\";\n";
    for (const auto& sid : grp) out << "    " << dq("s:" + sid) << ";\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_of_module(RepPtr M) {
  if (M->prov_kind == "string")
    return dot_of_word(M->alg, parse_word(M->alg->quiver(), M->prov), M->name);
  std::ostringstream out;
  out << "digraph " << dq(M->name) << " {\n  m [shape=box, label=\"" << dot_escape(M->name)
      << "\\ndims: " << dot_escape(M->dims_string()) << "\"];\n}\n";
  return out.str();
}

}  // namespace bw
