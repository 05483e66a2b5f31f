#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bw/matrix.hpp"
#include "bw/quiver.hpp"

namespace bw {

/* Everything reachable from one source vertex: the coordinates are all
 * literal paths from `v` that avoid monomial relation generators, sorted by
 * (length, arrow sequence).  `rel_rref` spans the relation subspace in those
 * coordinates, echelonized so pivots sit on the longest possible paths; the
 * surviving (non-pivot) coordinates are the path-class basis. */
struct VertexBlock {
  std::vector<Path> paths;
  std::map<std::string, int> index;
  Matrix rel_rref;
  std::vector<int> row_pivot;
  std::vector<int> basis_coords;
};

class PathBasis {
 public:
  std::vector<VertexBlock> blocks;
  int total_dim = 0;
  int loewy_length = 0;
  std::vector<int> jpower_dims;

  int dim_from(int v) const { return static_cast<int>(blocks[v].basis_coords.size()); }
  /* Class of a literal path as a sparse vector over the basis of its source
   * block: (position within basis_coords, coefficient).  Empty means zero. */
  std::vector<std::pair<int, Value>> reduce_path(const Path& p) const;
  bool is_zero_class(const Path& p) const { return reduce_path(p).empty(); }
};

struct Classification {
  bool monomial = false;
  bool special_biserial = false;
  std::vector<std::string> notes;
};

struct AlgebraScratch;

/* Immutable algebra context: presentation, computed path-class basis,
 * classification, and the canonical text/hash used to identify it. */
class Algebra {
 public:
  Presentation pres;
  PathBasis basis;
  Classification cls;
  std::string canonical_text;
  std::string hash;
  /* Single-term relation paths: zero as literal subwords. */
  std::vector<Path> monomial_forbidden;
  /* Every term of every relation; walks must avoid these. */
  std::vector<Path> string_forbidden;
  std::shared_ptr<AlgebraScratch> scratch;

  const Field& field() const { return pres.field; }
  const Quiver& quiver() const { return pres.quiver; }
  int dim() const { return basis.total_dim; }
};

using AlgPtr = std::shared_ptr<const Algebra>;

/* Computes the path-class basis (error when the quotient is not visibly
 * finite-dimensional below `path_cap`) and classifies the algebra. */
AlgPtr make_algebra(Presentation P, int path_cap = 64);

/* Bundled example presentations: ex2, ex6, ex7-lambda, ex7-lambda1, ex7-delta. */
std::vector<std::string> builtin_names();
std::string builtin_dsl(const std::string& name);
bool is_builtin(const std::string& name);
AlgPtr builtin_algebra(const std::string& name, std::optional<Field> field = {});
/* Load from builtin name or DSL file path. */
AlgPtr load_algebra(const std::string& name_or_path, std::optional<Field> field = {});

}  // namespace bw
