#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bw/field.hpp"

namespace bw {

struct Arrow {
  std::string label;
  int src = -1;
  int tgt = -1;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::map<std::string, int> vertex_id;
  std::map<std::string, int> arrow_id;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_arrows() const { return static_cast<int>(arrows.size()); }
  int require_vertex(const std::string& name) const;
  int require_arrow(const std::string& label) const;
  void add_vertex(const std::string& name);
  void add_arrow(const std::string& label, int src, int tgt);
};

/* A path in the quiver.  `arrows` is stored in application order: arrows[0]
 * acts first.  The printed form lists the last-applied arrow first, so
 * "gamma.alpha" means alpha then gamma, and its `arrows` are {alpha, gamma}. */
struct Path {
  int src = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  int target(const Quiver& Q) const { return arrows.empty() ? src : Q.arrows[arrows.back()].tgt; }
  std::string to_string(const Quiver& Q) const;
  /* Compact order-preserving key for hashing/dedup within one quiver. */
  std::string key() const;
  bool operator==(const Path& o) const { return src == o.src && arrows == o.arrows; }
  bool operator<(const Path& o) const {
    if (src != o.src) return src < o.src;
    return arrows < o.arrows;
  }
};

/* q after p: apply p first.  Requires target(p) == source(q). */
Path compose(const Quiver& Q, const Path& q, const Path& p);
Path trivial_path(int vertex);
Path arrow_path(const Quiver& Q, int arrow);
/* Parse "gamma.alpha" style dotted words; validates composability. */
Path parse_path(const Quiver& Q, const std::string& text);
bool is_subpath(const Path& needle, const Path& hay);

struct RelationTerm {
  Value coeff;
  Path path;
};

/* K-linear combination of parallel paths of length >= 2. */
struct Relation {
  std::vector<RelationTerm> terms;
  int src(const Quiver& Q) const;
  int tgt(const Quiver& Q) const;
  std::string to_string(const Quiver& Q, const Field& F) const;
};

struct Presentation {
  Field field = Field::Q();
  Quiver quiver;
  std::vector<Relation> relations;

  std::string canonical_text() const;
  std::string hash_hex() const { return hex64(fnv1a64(canonical_text())); }
};

/* Parse the presentation DSL.  Lines (order free except vertices-first):
 *   # comment
 *   field: Q            (optional, default Q; also F2, F3, ...)
 *   vertices: 1 2 3
 *   arrow alpha: 1 -> 2
 *   rel: gamma.beta
 *   rel: gamma.alpha - delta.beta
 *   rel: 2*rho.chi + 1/3*sigma.psi
 * Errors carry 1-based line/column positions. */
Presentation parse_presentation(const std::string& text, std::optional<Field> field_override = {});
Presentation parse_presentation_file(const std::string& path, std::optional<Field> field_override = {});

/* One relation expression, the body of a "rel:" line. */
Relation parse_relation_expr(const Quiver& Q, const Field& F, const std::string& text);

}  // namespace bw
