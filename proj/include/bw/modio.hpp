#pragma once
#include <string>

#include "bw/finiteness.hpp"
#include "json.hpp"

namespace bw {

using json = nlohmann::json;

/* Row-major entries as exact scalar strings. */
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& F, const json& j);

/* Module files carry the hash of the algebra they were saved over; loading
 * against a different algebra is rejected.  Omitted vertices and arrows
 * default to zero. */
json module_to_json(const Representation& M);
RepPtr module_from_json(AlgPtr A, const json& j);

json map_to_json(const ModuleMap& f);
ModuleMap map_from_json(RepPtr src, RepPtr tgt, const json& j);

json graphspec_to_json(const GraphSpec& s);
GraphSpec graphspec_from_json(const json& j);

json criterion_input_to_json(const Algebra& A, const Criterion3Input& inp);
Criterion3Input criterion_input_from_json(const Algebra& A, const json& j);

json pdim_to_json(const PdimResult& r);
json findim_to_json(const Algebra& A, const FindimReport& r);
json validation_to_json(const ValidationReport& r);
json criterion3_to_json(const Algebra& A, const Criterion3Report& r);
json approx_to_json(const ApproxReport& r);
json refute_to_json(const RefuteReport& r);

/* Envelope emitted by every CLI run; to_json/from_json round-trip. */
struct RunReport {
  std::string command;
  json parameters = json::object();
  std::string algebra_hash;
  json results = json::object();
  double wall_ms = 0.0;

  json to_json() const;
  static RunReport from_json(const json& j);
};

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

/* DOT in the paper's drawing style: top elements on the highest rank,
 * valleys below them, edges labeled by paths, dependency groups as dotted
 * clusters. */
std::string dot_of_word(AlgPtr A, const StringWord& w, const std::string& name);
std::string dot_of_graph(const GraphModule& G);
/* String modules render as their word graph; everything else falls back to
 * a one-node dimension summary. */
std::string dot_of_module(RepPtr M);

}  // namespace bw
