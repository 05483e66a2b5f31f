#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bw/extend.hpp"
#include "bw/modio.hpp"

using namespace bw;

namespace {

std::optional<Field> field_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Field::parse(s);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

/* Collects the run into a RunReport, prints it as text or JSON, and checks
 * that the report round-trips. */
struct Runner {
  std::string command;
  bool as_json = false;
  json parameters = json::object();
  std::string algebra_hash;
  json results = json::object();
  std::ostringstream text;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  int finish(int code) {
    RunReport rep;
    rep.command = command;
    rep.parameters = parameters;
    rep.algebra_hash = algebra_hash;
    rep.results = results;
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    json j = rep.to_json();
    require(RunReport::from_json(j).to_json() == j, Errc::internal,
            "run report does not round-trip");
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text.str();
    return code;
  }
};

struct Common {
  std::string algebra;
  std::string field;
  bool json = false;
  std::uint64_t seed = 20260815;
};

void add_common(CLI::App* sub, Common& c, bool with_algebra = true) {
  if (with_algebra)
    sub->add_option("algebra", c.algebra, "builtin name or presentation file")->required();
  sub->add_option("--field", c.field, "ground field override: Q or F<p>");
  sub->add_flag("--json", c.json, "emit the run report as JSON");
  sub->add_option("--seed", c.seed, "seed for randomized decomposition heuristics");
}

Runner start(const std::string& command, const Common& c) {
  Runner r;
  r.command = command;
  r.as_json = c.json;
  r.parameters["algebra"] = c.algebra;
  if (!c.field.empty()) r.parameters["field"] = c.field;
  r.parameters["seed"] = c.seed;
  return r;
}

AlgPtr load_common(const Common& c) { return load_algebra(c.algebra, field_opt(c.field)); }

/* Exactly one of file / word / simple-vertex selects the module. */
RepPtr module_arg(AlgPtr A, const std::string& file, const std::string& word,
                  const std::string& simple) {
  int given = (!file.empty()) + (!word.empty()) + (!simple.empty());
  require(given == 1, Errc::usage, "select a module with exactly one of --module, --word, --simple");
  if (!file.empty()) return module_from_json(A, load_json_file(file));
  if (!word.empty()) {
    StringWord w = parse_word(A->quiver(), word);
    WordCheck chk = check_string(*A, w);
    require(chk.ok, Errc::invalid_input, "invalid string word: " + chk.reason);
    return string_rep(A, w);
  }
  return simple_rep(A, A->quiver().require_vertex(simple));
}

Criterion3Input criterion_arg(const Algebra& A, const std::string& input_file) {
  if (!input_file.empty()) return criterion_input_from_json(A, load_json_file(input_file));
  try {
    return ex6_criterion_input(A);
  } catch (const Error&) {
  }
  try {
    return ex2_criterion_input(A);
  } catch (const Error&) {
  }
  fail(Errc::usage, "no --input given and the algebra carries no bundled criterion data");
}

std::vector<Value> parse_lambda_list(const Field& F, const std::string& csv) {
  std::vector<Value> out;
  for (const std::string& tok : split_csv(csv)) {
    Value v = F.parse_scalar(tok);
    if (F.is_zero(v)) continue;
    bool dup = false;
    for (const auto& u : out) dup = dup || F.eq(u, v);
    if (!dup) out.push_back(v);
  }
  return out;
}

std::string summand_names(const std::vector<Summand>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += " + ";
    out += s.piece->name;
  }
  return out.empty() ? "0" : out;
}

int count_iso(const std::vector<Summand>& parts, RepPtr target) {
  int c = 0;
  for (const auto& s : parts)
    if (is_isomorphic(s.piece, target)) ++c;
  return c;
}

/* ---- algebra / projectives ---- */

struct AlgebraOpts : Common {
  std::string mode;
};

int run_algebra(const AlgebraOpts& o) {
  Runner r = start("algebra " + o.mode, o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  const Quiver& Q = A->quiver();
  r.results["hash"] = A->hash;
  r.results["field"] = A->field().to_string();
  r.results["vertices"] = Q.n_vertices();
  r.results["arrows"] = Q.n_arrows();
  r.results["relations"] = static_cast<int>(A->pres.relations.size());
  r.results["dim"] = A->dim();
  r.results["loewy_length"] = A->basis.loewy_length;
  r.results["classification"] = json{{"monomial", A->cls.monomial},
                                     {"special_biserial", A->cls.special_biserial},
                                     {"notes", A->cls.notes}};
  r.text << A->field().to_string() << "-algebra on " << Q.n_vertices() << " vertices, "
         << Q.n_arrows() << " arrows, " << A->pres.relations.size() << " relations\n"
         << "dim " << A->dim() << ", Loewy length " << A->basis.loewy_length << ", hash "
         << A->hash << "\n";
  if (o.mode == "classify" || o.mode == "validate") {
    r.text << "monomial: " << (A->cls.monomial ? "yes" : "no")
           << ", special biserial: " << (A->cls.special_biserial ? "yes" : "no") << "\n";
    for (const auto& n : A->cls.notes) r.text << "  note: " << n << "\n";
  }
  if (o.mode == "basis") {
    json blocks = json::array();
    for (int v = 0; v < Q.n_vertices(); ++v) {
      const VertexBlock& blk = A->basis.blocks[v];
      json paths = json::array();
      r.text << "e_" << Q.vertices[v] << " (dim " << A->basis.dim_from(v) << "):";
      for (int coord : blk.basis_coords) {
        paths.push_back(blk.paths[coord].to_string(Q));
        r.text << " " << blk.paths[coord].to_string(Q);
      }
      r.text << "\n";
      blocks.push_back(json{{"vertex", Q.vertices[v]}, {"dim", A->basis.dim_from(v)}, {"paths", paths}});
    }
    r.results["blocks"] = blocks;
  }
  return r.finish(0);
}

int run_projectives(const Common& o) {
  Runner r = start("projectives", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  const Quiver& Q = A->quiver();
  json rows = json::array();
  for (int v = 0; v < Q.n_vertices(); ++v) {
    RepPtr P = projective_rep(A, v);
    rows.push_back(json{{"vertex", Q.vertices[v]},
                        {"dim", P->total_dim()},
                        {"dims", P->dims},
                        {"pdim", pdim_to_json(PdimResult::exact(0))}});
    r.text << P->name << ": dim " << P->total_dim() << ", dims " << P->dims_string() << "\n";
  }
  r.results["projectives"] = rows;
  return r.finish(0);
}

/* ---- module graph | syzygy | pdim ---- */

struct ModuleOpts : Common {
  std::string spec, word, module, simple, name = "module", save;
  bool dot = false;
  int k = 1;
  int cutoff = 24;
};

int run_module_graph(const ModuleOpts& o) {
  Runner r = start("module graph", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  require(o.spec.empty() != o.word.empty(), Errc::usage,
          "select the graph with exactly one of --spec, --word");
  RepPtr M;
  std::string dot;
  if (!o.word.empty()) {
    StringWord w = parse_word(A->quiver(), o.word);
    WordCheck chk = check_string(*A, w);
    require(chk.ok, Errc::invalid_input, "invalid string word: " + chk.reason);
    M = string_rep(A, w);
    dot = dot_of_word(A, w, M->name);
  } else {
    GraphSpec spec = graphspec_from_json(load_json_file(o.spec));
    GraphModule G = build_graph_module(A, spec, o.name);
    M = G.rep;
    dot = dot_of_graph(G);
  }
  r.results["name"] = M->name;
  r.results["dims"] = M->dims;
  r.results["dim"] = M->total_dim();
  if (o.dot) r.results["dot"] = dot;
  r.text << M->name << ": dim " << M->total_dim() << ", dims " << M->dims_string() << "\n";
  if (o.dot) r.text << dot;
  if (!o.save.empty()) save_json_file(o.save, module_to_json(*M));
  return r.finish(0);
}

int run_module_syzygy(const ModuleOpts& o) {
  Runner r = start("module syzygy", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  require(o.k >= 0, Errc::usage, "--k must be nonnegative");
  RepPtr M = module_arg(A, o.module, o.word, o.simple);
  RepPtr O = syzygy(M, o.k);
  r.parameters["k"] = o.k;
  r.results["module"] = M->name;
  r.results["dims"] = O->dims;
  r.results["dim"] = O->total_dim();
  r.text << "Omega^" << o.k << "(" << M->name << "): dim " << O->total_dim() << ", dims "
         << O->dims_string() << "\n";
  try {
    std::vector<Summand> parts = decompose(O, DecompOptions{o.seed, 64});
    r.results["summands"] = json::array();
    for (const auto& s : parts) r.results["summands"].push_back(s.piece->name);
    r.text << "summands: " << summand_names(parts) << "\n";
  } catch (const Error& e) {
    if (e.code != Errc::unsupported) throw;
    r.results["summands"] = nullptr;
    r.text << "summands: not certified (" << e.what() << ")\n";
  }
  if (!o.save.empty()) save_json_file(o.save, module_to_json(*O));
  return r.finish(0);
}

int run_module_pdim(const ModuleOpts& o) {
  Runner r = start("module pdim", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  RepPtr M = module_arg(A, o.module, o.word, o.simple);
  PdimResult pd = pdim(M, PdimOptions{o.cutoff});
  r.parameters["cutoff"] = o.cutoff;
  r.results["module"] = M->name;
  r.results["dim"] = M->total_dim();
  r.results["pdim"] = pdim_to_json(pd);
  if (pd.kind == PdimResult::Kind::infinite)
    r.results["certificate_verified"] = verify_infinite_certificate(M, pd);
  r.text << "pdim " << M->name << " = " << pd.to_string() << "\n";
  return r.finish(0);
}

/* ---- strings enumerate ---- */

struct StringsOpts : Common {
  int max_len = 8;
};

int run_strings(const StringsOpts& o) {
  Runner r = start("strings enumerate", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  r.parameters["max_len"] = o.max_len;
  std::vector<StringWord> words = enumerate_strings(A, o.max_len);
  json arr = json::array();
  for (const auto& w : words) {
    arr.push_back(w.to_string(A->quiver()));
    r.text << w.to_string(A->quiver()) << "  (dim " << w.length() + 1 << ")\n";
  }
  r.results["count"] = static_cast<int>(words.size());
  r.results["words"] = arr;
  r.text << words.size() << " strings of length <= " << o.max_len << "\n";
  return r.finish(0);
}

/* ---- criterion3 ---- */

struct Crit3Opts : Common {
  std::string input;
  int max_len = 12, band_len = 8, n_max = 4, cutoff = 24, dim_bound = 8, refute_n_max = 9;
  std::string lambdas = "1,-1,2";
};

int run_crit3_validate(const Crit3Opts& o) {
  Runner r = start("criterion3 validate", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  Criterion3Input inp = criterion_arg(*A, o.input);
  ValidationReport vr = validate_criterion_input(*A, inp);
  r.results["input"] = criterion_input_to_json(*A, inp);
  r.results["validation"] = validation_to_json(vr);
  for (const auto& it : vr.items)
    r.text << (it.ok ? "[ok]   " : "[FAIL] ") << it.label
           << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
  r.text << (vr.ok ? "input is a valid criterion instance\n" : "input rejected\n");
  return r.finish(vr.ok ? 0 : 1);
}

int run_crit3_scan(const Crit3Opts& o) {
  Runner r = start("criterion3 scan", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  Criterion3Input inp = criterion_arg(*A, o.input);
  ScanOptions opt;
  opt.n_max = o.n_max;
  opt.max_len = o.max_len;
  opt.band_len = o.band_len;
  opt.lambdas = split_csv(o.lambdas);
  opt.pd.cutoff = o.cutoff;
  r.parameters["bounds"] = json{{"max_len", o.max_len},
                                {"band_len", o.band_len},
                                {"n_max", o.n_max},
                                {"cutoff", o.cutoff},
                                {"lambdas", opt.lambdas}};
  Criterion3Report rep = run_criterion3(A, inp, opt);
  r.results["input"] = criterion_input_to_json(*A, inp);
  r.results["report"] = criterion3_to_json(*A, rep);
  for (const auto& m : rep.mn)
    r.text << "M_" << m.n << ": dim " << m.dim << ", pdim " << m.pd.to_string()
           << (m.tops_independent ? ", tops independent" : ", TOPS DEPENDENT") << "\n";
  int counted = 0, failures = 0, undetermined = 0;
  for (const auto& row : rep.strings) {
    counted += row.counted;
    undetermined += row.at_least;
    if (row.counted && !row.res.all()) {
      ++failures;
      r.text << "[FAIL] " << row.name << ": " << row.res.to_string() << "\n";
    }
  }
  r.text << "strings: " << rep.strings.size() << " scanned, " << counted << " in P^inf, "
         << failures << " condition failures, " << undetermined << " undetermined\n";
  int bcounted = 0, bfail = 0;
  for (const auto& row : rep.bands) {
    bcounted += row.counted;
    bool soc = true;
    for (bool b : row.socle_in_pq) soc = soc && b;
    if (row.counted && (!row.res.all() || !soc)) {
      ++bfail;
      r.text << "[FAIL] band " << row.name << "\n";
    }
  }
  r.text << "bands: " << rep.bands.size() << " sampled, " << bcounted << " in P^inf, " << bfail
         << " failures\n";
  for (const auto& f : rep.band_facts)
    r.text << "paths into e_" << A->quiver().vertices[f.vertex] << ": "
           << (f.two_arrow_property ? "exactly the expected two arrows" : "NOT two arrows")
           << "\n";
  r.text << rep.bounds_summary() << "\n"
         << (rep.ok ? "conditions hold up to the stated bounds\n" : "conditions FAILED\n");
  return r.finish(rep.ok ? 0 : 1);
}

int run_crit3_refute(const Crit3Opts& o) {
  Runner r = start("criterion3 refute", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  Criterion3Input inp = criterion_arg(*A, o.input);
  RefuteOptions opt;
  opt.dim_bound = o.dim_bound;
  opt.n_max = o.refute_n_max;
  opt.pd.cutoff = o.cutoff;
  r.parameters["bounds"] =
      json{{"dim_bound", o.dim_bound}, {"n_max", o.refute_n_max}, {"cutoff", o.cutoff}};
  RefuteReport rep = refute_left_bounded(A, inp, opt);
  r.results["report"] = refute_to_json(rep);
  r.text << "field " << rep.field << ", corpus of " << rep.corpus_size << " modules, "
         << rep.cases.size() << " candidate maps\n";
  for (const auto& s : rep.survivors) r.text << "survivor: " << s << "\n";
  if (rep.degenerate) r.text << "bounds too small to test anything\n";
  r.text << (rep.refuted ? "refuted: every candidate left approximation fails a canonical embedding\n"
                         : "NOT refuted within the bounds\n");
  return r.finish(rep.refuted ? 0 : 1);
}

/* ---- approx ---- */

struct ApproxOpts : Common {
  std::string mode, source, target, simple, map;
  std::vector<std::string> corpus_modules;
  int max_len = 12, band_len = 8, dim_bound = 12, cutoff = 24;
  std::string lambdas = "1,-1,2";
};

std::vector<CorpusEntry> approx_corpus(AlgPtr A, const ApproxOpts& o,
                                       const std::vector<RepPtr>& seeds, std::string* desc) {
  PdimOptions pd{o.cutoff};
  if (A->cls.special_biserial) {
    *desc = "strings of length <= " + std::to_string(o.max_len) + ", bands of length <= " +
            std::to_string(o.band_len) + ", projectives";
    return pinf_corpus_sb(A, o.max_len, o.band_len, parse_lambda_list(A->field(), o.lambdas), pd);
  }
  *desc = "syzygy closure of seeds and projectives, dim <= " + std::to_string(o.dim_bound);
  return pinf_corpus_closure(A, seeds, o.dim_bound, pd);
}

int run_approx(const ApproxOpts& o) {
  Runner r = start("approx " + o.mode, o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  require(!o.source.empty(), Errc::usage, "--source module file is required");
  RepPtr src = module_from_json(A, load_json_file(o.source));
  ModuleMap f;
  if (!o.map.empty()) {
    require(!o.target.empty() || !o.simple.empty(), Errc::usage,
            "--map needs --target or --simple for the codomain");
    RepPtr tgt = o.target.empty()
                     ? simple_rep(A, A->quiver().require_vertex(o.simple))
                     : module_from_json(A, load_json_file(o.target));
    f = map_from_json(src, tgt, load_json_file(o.map));
  } else {
    require(o.mode != "left", Errc::usage, "approx left needs an explicit --map");
    require(!o.simple.empty(), Errc::usage, "give --simple <vertex> or an explicit --map");
    f = epi_onto_simple(src, A->quiver().require_vertex(o.simple));
  }
  std::vector<RepPtr> seeds{src, f.tgt};
  for (const auto& file : o.corpus_modules)
    seeds.push_back(module_from_json(A, load_json_file(file)));
  std::string desc;
  std::vector<CorpusEntry> corpus = approx_corpus(A, o, seeds, &desc);
  ApproxReport rep = o.mode == "left" ? is_left_approximation(f, corpus, desc)
                                      : is_right_approximation(f, corpus, desc);
  bool ok = rep.ok;
  if (o.mode == "minimal" && rep.ok) {
    minimality_check(f, corpus, &rep);
    ok = rep.minimal;
  }
  r.results["report"] = approx_to_json(rep);
  r.text << rep.direction << " approximation test of " << rep.map_desc << "\n"
         << "corpus: " << desc << " (" << corpus.size() << " modules)\n";
  for (const auto& t : rep.tests)
    if (!t.ok) r.text << "[FAIL] " << t.name << ": " << t.factored << "/" << t.hom_to_target
                      << " maps factor\n";
  r.text << (rep.ok ? "all hom spaces factor through the map\n" : "approximation FAILED\n");
  if (o.mode == "minimal" && rep.minimal_checked) {
    r.text << (rep.minimal ? "minimal: no source summand can be dropped\n" : "NOT minimal\n");
    for (const auto& d : rep.deletable) r.text << "deletable: " << d << "\n";
  }
  return r.finish(ok ? 0 : 1);
}

/* ---- extend ---- */

struct ExtendOpts : Common {
  std::string spec, spec_file, save;
};

int run_extend(const ExtendOpts& o) {
  Runner r = start("extend", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  require(o.spec.empty() != o.spec_file.empty(), Errc::usage,
          "give the extension with exactly one of --spec, --spec-file");
  std::string text = o.spec;
  if (!o.spec_file.empty()) {
    std::ifstream in(o.spec_file);
    require(in.good(), Errc::invalid_input, "cannot open '" + o.spec_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  ExtensionSpec spec = parse_extension_spec(text);
  ExtendResult res = one_point_extend(A, spec);
  json arrows = json::array();
  for (const auto& a : spec.arrows) arrows.push_back(a.label + ": " + spec.vertex + " -> " + a.target);
  r.results["vertex"] = spec.vertex;
  r.results["arrows"] = arrows;
  r.results["relations"] = spec.relations;
  r.results["hash"] = res.ext->hash;
  r.results["dim"] = res.ext->dim();
  r.results["new_block_dim"] =
      res.ext->basis.dim_from(res.ext->quiver().require_vertex(spec.vertex));
  r.results["old_blocks_unchanged"] = res.old_blocks_unchanged;
  r.results["old_dims"] = res.old_dims;
  r.text << "extended algebra: dim " << res.ext->dim() << ", hash " << res.ext->hash << "\n"
         << "new projective at " << spec.vertex << ": dim "
         << res.ext->basis.dim_from(res.ext->quiver().require_vertex(spec.vertex)) << "\n"
         << (res.old_blocks_unchanged ? "old path-class blocks unchanged (ideal certificate)\n"
                                      : "old path-class blocks CHANGED\n");
  if (!o.save.empty()) {
    std::ofstream out(o.save);
    require(out.good(), Errc::invalid_input, "cannot write '" + o.save + "'");
    out << res.ext->canonical_text;
  }
  return r.finish(res.old_blocks_unchanged ? 0 : 1);
}

/* ---- findim probe ---- */

struct FindimOpts : Common {
  int max_len = 12, cutoff = 24;
};

int run_findim(const FindimOpts& o) {
  Runner r = start("findim probe", o);
  AlgPtr A = load_common(o);
  r.algebra_hash = A->hash;
  r.parameters["max_len"] = o.max_len;
  r.parameters["cutoff"] = o.cutoff;
  FindimReport rep = findim_probe(A, o.max_len, PdimOptions{o.cutoff});
  r.results["report"] = findim_to_json(*A, rep);
  r.text << "strings scanned: " << rep.entries.size() << " (length <= " << o.max_len
         << ", cutoff " << o.cutoff << ")\n";
  r.text << "finite pdim values:";
  for (int v : rep.finite_values) r.text << " " << v;
  r.text << "\nmax finite pdim: " << rep.max_finite << "\n"
         << "infinite pdim seen: " << (rep.saw_infinite ? "yes" : "no") << "\n"
         << "undetermined at cutoff: " << (rep.saw_at_least ? "yes" : "no") << "\n";
  return r.finish(0);
}

/* ---- reproduce ---- */

struct ReproOpts : Common {
  std::string which;
  int max_len = 12, cutoff = 12, dim_bound = 12, refute_bound = 8, n_max = 9;
};

struct CheckList {
  Runner& r;
  bool all = true;

  void add(const std::string& label, bool ok, const std::string& detail = "") {
    all = all && ok;
    r.results["checks"].push_back(json{{"label", label}, {"ok", ok}, {"detail", detail}});
    r.text << (ok ? "[ok]   " : "[FAIL] ") << label << (detail.empty() ? "" : ": " + detail)
           << "\n";
  }
};

int reproduce_example2(Runner& r, const ReproOpts& o) {
  CheckList c{r};
  AlgPtr A = builtin_algebra("ex2");
  r.algebra_hash = A->hash;
  const Quiver& Q = A->quiver();
  int p1 = A->basis.dim_from(Q.require_vertex("1"));
  int p2 = A->basis.dim_from(Q.require_vertex("2"));
  c.add("projective dims match the graphs", p1 == 4 && p2 == 2,
        "dim P(1) = " + std::to_string(p1) + ", dim P(2) = " + std::to_string(p2));

  FindimReport fr = findim_probe(A, o.max_len, PdimOptions{o.cutoff});
  bool cls = !fr.saw_at_least && fr.max_finite == 1;
  for (int v : fr.finite_values) cls = cls && (v == 0 || v == 1);
  c.add("finitistic dimension probe gives 1", cls,
        "max finite pdim " + std::to_string(fr.max_finite) + " over " +
            std::to_string(fr.entries.size()) + " strings");

  Criterion3Input inp = ex2_criterion_input(*A);
  ScanOptions sopt;
  sopt.max_len = o.max_len;
  sopt.pd.cutoff = o.cutoff;
  Criterion3Report rep = run_criterion3(A, inp, sopt);
  c.add("criterion input validates", rep.validation.ok);
  bool iii_fails = false;
  for (const auto& row : rep.strings)
    if (row.counted && !row.res.iii.empty() && !row.res.iii[0]) iii_fails = true;
  c.add("condition (2)(iii) fails on a finite-pdim string", iii_fails && !rep.ok,
        "the criterion does not apply here");

  AlgPtr A2 = builtin_algebra("ex2", Field::Fp(2));
  Criterion3Input inp2 = ex2_criterion_input(*A2);
  RefuteOptions ropt;
  ropt.dim_bound = o.refute_bound;
  ropt.n_max = o.n_max;
  ropt.pd.cutoff = std::max(o.cutoff, 12);
  RefuteReport rr = refute_left_bounded(A2, inp2, ropt);
  c.add("bounded refutation over F2 does not go through", !rr.refuted && !rr.degenerate,
        std::to_string(rr.survivors.size()) + " candidate maps survive every embedding");
  r.results["refute"] = refute_to_json(rr);
  return c.all ? 0 : 1;
}

int reproduce_example6(Runner& r, const ReproOpts& o) {
  CheckList c{r};
  AlgPtr A = builtin_algebra("ex6");
  r.algebra_hash = A->hash;
  const Quiver& Q = A->quiver();
  std::vector<int> blocks;
  for (int v = 0; v < Q.n_vertices(); ++v) blocks.push_back(A->basis.dim_from(v));
  c.add("algebra dimension 24 with the expected blocks",
        A->dim() == 24 && blocks == std::vector<int>({4, 4, 4, 2, 4, 2, 2, 2}));

  Criterion3Input inp = ex6_criterion_input(*A);
  ScanOptions sopt;
  sopt.max_len = o.max_len;
  sopt.pd.cutoff = o.cutoff;
  Criterion3Report rep = run_criterion3(A, inp, sopt);
  r.results["scan"] = criterion3_to_json(*A, rep);
  c.add("criterion input validates", rep.validation.ok);
  bool mn_ok = rep.mn.size() == static_cast<std::size_t>(sopt.n_max);
  for (const auto& m : rep.mn)
    mn_ok = mn_ok && m.pd.kind == PdimResult::Kind::exact && m.pd.n == 2 && m.tops_independent;
  c.add("pdim M_n = 2 with independent tops, n = 1.." + std::to_string(sopt.n_max), mn_ok);

  RepPtr tau = string_rep(A, parse_word(Q, "tau"));
  RepPtr eps = string_rep(A, parse_word(Q, "epsilon"));
  bool omega_ok = true;
  std::string detail;
  for (int n = 1; n <= sopt.n_max; ++n) {
    RepPtr O2 = syzygy(build_Mn(A, inp, n).rep, 2);
    std::vector<Summand> parts = decompose(O2, DecompOptions{o.seed, 64});
    int nt = count_iso(parts, tau), ne = count_iso(parts, eps);
    omega_ok = omega_ok && nt == n && ne == n && static_cast<int>(parts.size()) == 2 * n;
    detail += (n > 1 ? "; " : "") + std::to_string(nt) + " tau + " + std::to_string(ne) +
              " epsilon at n=" + std::to_string(n);
  }
  c.add("Omega^2(M_n) = n str(tau) + n str(epsilon)", omega_ok, detail);

  bool simples_ok = true;
  for (const char* v : {"3", "4"}) {
    RepPtr S = simple_rep(A, Q.require_vertex(v));
    PdimResult pd = pdim(S, PdimOptions{o.cutoff});
    simples_ok = simples_ok && pd.kind == PdimResult::Kind::infinite &&
                 verify_infinite_certificate(S, pd);
  }
  c.add("pdim S_3 = pdim S_4 = infinity with verified cycle certificates", simples_ok);

  c.add("scan passes conditions (i)-(iii) up to the bounds", rep.ok && !rep.vacuous,
        rep.bounds_summary());
  bool facts_ok = rep.band_facts.size() == 2;
  for (const auto& f : rep.band_facts)
    facts_ok = facts_ok && f.two_arrow_property && f.paths.size() == 2;
  c.add("exactly two arrows end at each e(i)", facts_ok);

  AlgPtr A2 = builtin_algebra("ex6", Field::Fp(2));
  Criterion3Input inp2 = ex6_criterion_input(*A2);
  RefuteOptions ropt;
  ropt.dim_bound = o.refute_bound;
  ropt.n_max = o.n_max;
  ropt.pd.cutoff = std::max(o.cutoff, 12);
  RefuteReport rr = refute_left_bounded(A2, inp2, ropt);
  r.results["refute"] = refute_to_json(rr);
  c.add("bounded refutation over F2: S_3 admits no left approximation", rr.refuted,
        std::to_string(rr.cases.size()) + " candidate maps over a corpus of " +
            std::to_string(rr.corpus_size));
  return c.all ? 0 : 1;
}

int reproduce_example7(Runner& r, const ReproOpts& o) {
  CheckList c{r};
  AlgPtr L = builtin_algebra("ex7-lambda");
  r.algebra_hash = L->hash;
  c.add("base algebra has dimension 21", L->dim() == 21);

  ExtensionSpec s1 = parse_extension_spec(
      "extend: vertex 9; arrow chi1: 9 -> 5; arrow chi2: 9 -> 6; rel: beta1.chi1 - beta2.chi2");
  ExtendResult e1 = one_point_extend(L, s1);
  ExtensionSpec s2 = parse_extension_spec(
      "extend: vertex 10; arrow psi1: 10 -> 7; arrow psi2: 10 -> 8; rel: gamma1.psi1 - gamma2.psi2");
  ExtendResult e2 = one_point_extend(e1.ext, s2);
  AlgPtr D = e2.ext;
  c.add("extensions reproduce the bundled presentations",
        e1.ext->canonical_text == builtin_algebra("ex7-lambda1")->canonical_text &&
            D->canonical_text == builtin_algebra("ex7-delta")->canonical_text);
  c.add("old path-class blocks unchanged in both steps",
        e1.old_blocks_unchanged && e2.old_blocks_unchanged);
  int d9 = D->basis.dim_from(D->quiver().require_vertex("9"));
  int d10 = D->basis.dim_from(D->quiver().require_vertex("10"));
  c.add("dim of the new projectives is 5",
        d9 == 5 && d10 == 5 && e1.ext->dim() == 26 && D->dim() == 31);

  bool proj_ok = true;
  for (int v = 0; v < L->quiver().n_vertices(); ++v)
    proj_ok = proj_ok &&
              is_isomorphic(restrict_to_base(L, projective_rep(D, v)), projective_rep(L, v));
  c.add("extension preserves the old projectives up to isomorphism", proj_ok);

  bool hn_ok = true;
  RepPtr Le2 = projective_rep(L, L->quiver().require_vertex("2"));
  for (int n = 1; n <= 4; ++n) {
    RepPtr H = build_Hn(L, n);
    hn_ok = hn_ok && H->total_dim() == 3 * n + 2;
    hn_ok = hn_ok && is_isomorphic(H, build_Hn_graph(L, n).rep);
    std::vector<RepPtr> copies(n, Le2);
    hn_ok = hn_ok && is_isomorphic(syzygy_once(H).first, direct_sum(copies));
  }
  c.add("dim H_n = 3n+2 and Omega^1(H_n) = (P(2))^n for n = 1..4", hn_ok);

  GraphModule A1 = ex7_A1(D);
  RepPtr De1 = projective_rep(D, D->quiver().require_vertex("1"));
  RepPtr De2 = projective_rep(D, D->quiver().require_vertex("2"));
  c.add("A_1 has dim 9, trivial endomorphisms, no maps to P(1), syzygy P(2)",
        A1.rep->total_dim() == 9 && hom_dim(A1.rep, A1.rep) == 1 &&
            hom_dim(A1.rep, De1) == 0 && is_isomorphic(syzygy_once(A1.rep).first, De2));

  std::vector<CorpusEntry> corpus =
      pinf_corpus_closure(D, ex7_corpus_seeds(D), o.dim_bound, PdimOptions{std::max(o.cutoff, 12)});
  std::string desc = "syzygy closure corpus, dim <= " + std::to_string(o.dim_bound);
  r.results["corpus_size"] = static_cast<int>(corpus.size());
  std::vector<NamedApprox> approx = ex7_approximations(D);
  bool approx_ok = approx.size() == 10;
  json rows = json::array();
  for (const auto& a : approx) {
    ApproxReport rep = is_right_approximation(a.f, corpus, desc);
    approx_ok = approx_ok && rep.ok;
    json fails = json::array();
    r.text << "  S_" << D->quiver().vertices[a.vertex] << " <- " << a.f.src->name << ": "
           << (rep.ok ? "ok" : "FAIL");
    for (const auto& t : rep.tests)
      if (!t.ok) {
        fails.push_back(json{{"module", t.name}, {"hom", t.hom_to_target}, {"factored", t.factored}});
        r.text << " [" << t.name << ": " << t.factored << "/" << t.hom_to_target
               << " homs factor]";
      }
    r.text << "\n";
    rows.push_back(json{{"simple", D->quiver().vertices[a.vertex]},
                        {"source", a.f.src->name},
                        {"ok", rep.ok},
                        {"failures", fails}});
  }
  r.results["approximations"] = rows;
  c.add("all ten catalogued right approximations verify against the corpus", approx_ok,
        std::to_string(corpus.size()) + " corpus modules");
  if (!approx_ok)
    r.text << "  (the H chain modules reject the four pair sums; the bridge rows below are the\n"
              "   corrected sources)\n";

  /* The pair sums for S_5..S_8 lose against the H chains; the two-top
   * bridges absorb them.  Report both so the scan result is reproducible. */
  json brows = json::array();
  bool bridge_ok = true;
  for (int v : {5, 6, 7, 8}) {
    GraphModule B = ex7_bridge(D, v);
    ModuleMap f = epi_onto_simple(B.rep, D->quiver().require_vertex(std::to_string(v)));
    ApproxReport rep = is_right_approximation(f, corpus, desc);
    bool min = rep.ok && minimality_check(f, corpus, &rep);
    bridge_ok = bridge_ok && rep.ok && min;
    brows.push_back(json{{"simple", std::to_string(v)},
                         {"source", B.rep->name},
                         {"ok", rep.ok},
                         {"minimal", min}});
    r.text << "  S_" << v << " <- " << B.rep->name << ": " << (rep.ok ? "ok" : "FAIL")
           << (min ? ", minimal" : "") << "\n";
  }
  r.results["bridges"] = brows;
  c.add("the bridge sources B(5)..B(8) verify and are minimal", bridge_ok);

  ApproxReport arep = is_right_approximation(approx[0].f, corpus, desc);
  bool minimal = minimality_check(approx[0].f, corpus, &arep);
  c.add("the approximation of S_1 by A_1 is minimal", minimal);
  return c.all ? 0 : 1;
}

int run_reproduce(const ReproOpts& o) {
  Common c = o;
  c.algebra = o.which;
  Runner r = start("reproduce " + o.which, c);
  r.parameters["bounds"] = json{{"max_len", o.max_len},
                                {"cutoff", o.cutoff},
                                {"dim_bound", o.dim_bound},
                                {"refute_dim_bound", o.refute_bound},
                                {"n_max", o.n_max}};
  r.results["checks"] = json::array();
  int code;
  if (o.which == "example2")
    code = reproduce_example2(r, o);
  else if (o.which == "example6")
    code = reproduce_example6(r, o);
  else
    code = reproduce_example7(r, o);
  r.text << (code == 0 ? "all checks passed\n" : "SOME CHECKS FAILED\n");
  return r.finish(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact module calculus over finite-dimensional quiver algebras"};
  app.require_subcommand(1);
  int code = 0;

  auto algebra = app.add_subcommand("algebra", "inspect a presentation");
  algebra->require_subcommand(1);
  for (const char* mode : {"validate", "basis", "classify"}) {
    auto o = std::make_shared<AlgebraOpts>();
    o->mode = mode;
    auto sub = algebra->add_subcommand(mode, std::string("algebra ") + mode);
    add_common(sub, *o);
    sub->callback([o, &code] { code = run_algebra(*o); });
  }

  {
    auto o = std::make_shared<Common>();
    auto sub = app.add_subcommand("projectives", "list the indecomposable projectives");
    add_common(sub, *o);
    sub->callback([o, &code] { code = run_projectives(*o); });
  }

  auto module = app.add_subcommand("module", "build and measure single modules");
  module->require_subcommand(1);
  {
    auto o = std::make_shared<ModuleOpts>();
    auto sub = module->add_subcommand("graph", "build a module from a word or graph spec");
    add_common(sub, *o);
    sub->add_option("--spec", o->spec, "GraphSpec JSON file");
    sub->add_option("--word", o->word, "string word, e.g. \"beta^- alpha\"");
    sub->add_option("--name", o->name, "name for the constructed module");
    sub->add_flag("--dot", o->dot, "emit DOT");
    sub->add_option("--save", o->save, "write the module JSON here");
    sub->callback([o, &code] { code = run_module_graph(*o); });
  }
  {
    auto o = std::make_shared<ModuleOpts>();
    auto sub = module->add_subcommand("syzygy", "compute a syzygy");
    add_common(sub, *o);
    sub->add_option("--module", o->module, "module JSON file");
    sub->add_option("--word", o->word, "string word");
    sub->add_option("--simple", o->simple, "vertex of a simple module");
    sub->add_option("--k", o->k, "syzygy index (default 1)");
    sub->add_option("--save", o->save, "write the syzygy JSON here");
    sub->callback([o, &code] { code = run_module_syzygy(*o); });
  }
  {
    auto o = std::make_shared<ModuleOpts>();
    auto sub = module->add_subcommand("pdim", "projective dimension with certificates");
    add_common(sub, *o);
    sub->add_option("--module", o->module, "module JSON file");
    sub->add_option("--word", o->word, "string word");
    sub->add_option("--simple", o->simple, "vertex of a simple module");
    sub->add_option("--cutoff", o->cutoff, "syzygy cutoff (default 24)");
    sub->callback([o, &code] { code = run_module_pdim(*o); });
  }

  auto strings = app.add_subcommand("strings", "string module combinatorics");
  strings->require_subcommand(1);
  {
    auto o = std::make_shared<StringsOpts>();
    auto sub = strings->add_subcommand("enumerate", "all strings up to a length");
    add_common(sub, *o);
    sub->add_option("--max-len", o->max_len, "maximal word length (default 8)");
    sub->callback([o, &code] { code = run_strings(*o); });
  }

  auto crit = app.add_subcommand("criterion3", "covariant-finiteness obstruction");
  crit->require_subcommand(1);
  {
    auto o = std::make_shared<Crit3Opts>();
    auto sub = crit->add_subcommand("validate", "check the path data");
    add_common(sub, *o);
    sub->add_option("--input", o->input, "criterion input JSON");
    sub->callback([o, &code] { code = run_crit3_validate(*o); });
  }
  {
    auto o = std::make_shared<Crit3Opts>();
    auto sub = crit->add_subcommand("scan", "verify condition (2) over strings and bands");
    add_common(sub, *o);
    sub->add_option("--input", o->input, "criterion input JSON");
    sub->add_option("--max-len", o->max_len, "string length bound (default 12)");
    sub->add_option("--band-len", o->band_len, "band length bound (default 8)");
    sub->add_option("--n-max", o->n_max, "largest test module index (default 4)");
    sub->add_option("--cutoff", o->cutoff, "pdim cutoff (default 24)");
    sub->add_option("--lambdas", o->lambdas, "band parameters, comma separated");
    sub->callback([o, &code] { code = run_crit3_scan(*o); });
  }
  {
    auto o = std::make_shared<Crit3Opts>();
    auto sub = crit->add_subcommand("refute", "exhaust candidate left approximations");
    add_common(sub, *o);
    sub->add_option("--input", o->input, "criterion input JSON");
    sub->add_option("--dim-bound", o->dim_bound, "corpus dimension bound (default 8)");
    sub->add_option("--n-max", o->refute_n_max, "largest embedding index (default 9)");
    sub->add_option("--cutoff", o->cutoff, "pdim cutoff (default 24)");
    sub->callback([o, &code] { code = run_crit3_refute(*o); });
  }

  auto approx = app.add_subcommand("approx", "approximation checks over a corpus");
  approx->require_subcommand(1);
  for (const char* mode : {"right", "left", "minimal"}) {
    auto o = std::make_shared<ApproxOpts>();
    o->mode = mode;
    auto sub = approx->add_subcommand(mode, std::string("approx ") + mode);
    add_common(sub, *o);
    sub->add_option("--source", o->source, "source module JSON")->required();
    sub->add_option("--target", o->target, "target module JSON");
    sub->add_option("--simple", o->simple, "target simple vertex");
    sub->add_option("--map", o->map, "map JSON (defaults to the top epi onto the simple)");
    sub->add_option("--corpus-module", o->corpus_modules, "extra closure seeds (repeatable)");
    sub->add_option("--max-len", o->max_len, "string corpus length bound (default 12)");
    sub->add_option("--band-len", o->band_len, "band corpus length bound (default 8)");
    sub->add_option("--lambdas", o->lambdas, "band parameters, comma separated");
    sub->add_option("--dim-bound", o->dim_bound, "closure corpus dimension bound (default 12)");
    sub->add_option("--cutoff", o->cutoff, "pdim cutoff (default 24)");
    sub->callback([o, &code] { code = run_approx(*o); });
  }

  {
    auto o = std::make_shared<ExtendOpts>();
    auto sub = app.add_subcommand("extend", "one-point extension");
    add_common(sub, *o);
    sub->add_option("--spec", o->spec, "inline extension spec");
    sub->add_option("--spec-file", o->spec_file, "extension spec file");
    sub->add_option("--save", o->save, "write the extended presentation DSL here");
    sub->callback([o, &code] { code = run_extend(*o); });
  }

  auto findim = app.add_subcommand("findim", "finitistic dimension experiments");
  findim->require_subcommand(1);
  {
    auto o = std::make_shared<FindimOpts>();
    auto sub = findim->add_subcommand("probe", "tabulate pdim over all short strings");
    add_common(sub, *o);
    sub->add_option("--max-len", o->max_len, "string length bound (default 12)");
    sub->add_option("--cutoff", o->cutoff, "pdim cutoff (default 24)");
    sub->callback([o, &code] { code = run_findim(*o); });
  }

  {
    auto o = std::make_shared<ReproOpts>();
    auto sub = app.add_subcommand("reproduce", "re-run a bundled example end to end");
    sub->add_option("example", o->which, "example2, example6 or example7")
        ->required()
        ->check(CLI::IsMember({"example2", "example6", "example7"}));
    sub->add_option("--field", o->field, "unused; examples pick their own fields");
    sub->add_flag("--json", o->json, "emit the run report as JSON");
    sub->add_option("--seed", o->seed, "seed for randomized decomposition heuristics");
    sub->add_option("--max-len", o->max_len, "scan length bound (default 12)");
    sub->add_option("--cutoff", o->cutoff, "pdim cutoff (default 12)");
    sub->add_option("--dim-bound", o->dim_bound, "closure corpus bound (default 12)");
    sub->add_option("--refute-bound", o->refute_bound, "refutation corpus bound (default 8)");
    sub->add_option("--n-max", o->n_max, "refutation embedding bound (default 9)");
    sub->callback([o, &code] { code = run_reproduce(*o); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << (e.code == Errc::internal ? "internal error: " : "error: ") << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
