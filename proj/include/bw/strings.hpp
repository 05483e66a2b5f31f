#pragma once
#include <optional>
#include <string>
#include <vector>

#include "bw/rep.hpp"

namespace bw {

struct Letter {
  int arrow;
  bool inv;
  bool operator==(const Letter& o) const { return arrow == o.arrow && inv == o.inv; }
  /* Direct letters sort before inverse ones, then by arrow index. */
  bool operator<(const Letter& o) const {
    if (inv != o.inv) return !inv;
    return arrow < o.arrow;
  }
};

/* A walk in the quiver, read left to right over nodes v_0..v_m: a direct
 * letter `a` at step k acts by a . z_{k-1} = z_k, an inverse letter `a^-`
 * by a . z_k = z_{k-1}.  Trivial words sit at a single vertex. */
struct StringWord {
  int trivial_vertex = -1;  /* >= 0 iff letters empty */
  std::vector<Letter> letters;

  bool trivial() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  /* v_0..v_m. */
  std::vector<int> nodes(const Quiver& Q) const;
  std::string to_string(const Quiver& Q) const;
  bool operator==(const StringWord& o) const {
    return trivial_vertex == o.trivial_vertex && letters == o.letters;
  }
  bool operator<(const StringWord& o) const {
    if (trivial_vertex != o.trivial_vertex) return trivial_vertex < o.trivial_vertex;
    return letters < o.letters;
  }
};

/* Parse "beta^- alpha chi^-" or "e_3" (trivial word at a vertex). */
StringWord parse_word(const Quiver& Q, const std::string& text);
StringWord reverse_word(const StringWord& w);
/* min(w, reverse(w)); the normal form used for dedup and memo keys. */
StringWord canonical_word(const StringWord& w);

struct WordCheck {
  bool ok = false;
  std::string reason;
};

/* Full string validity: composable walk, no a a^- backtracking, distinct
 * arrows at every direction change, and no maximal direct run containing a
 * forbidden subword (in either reading direction). */
WordCheck check_string(const Algebra& A, const StringWord& w);
bool is_valid_string(const Algebra& A, const StringWord& w);

RepPtr string_rep(AlgPtr A, const StringWord& w);

/* All valid strings up to the given length, canonical forms, sorted.
 * Includes the trivial words.  Requires a special biserial algebra. */
std::vector<StringWord> enumerate_strings(AlgPtr A, int max_len);
/* Valid strings whose vertex multiset fits under `dim_bound` per vertex. */
std::vector<StringWord> enumerate_strings_bounded(AlgPtr A, const std::vector<int>& dim_bound);

/* A band: cyclic word whose square is a valid string, primitive, with both
 * direct and inverse letters.  Stored rotated/reflected to a normal form. */
struct BandWord {
  std::vector<Letter> letters;
  std::string to_string(const Quiver& Q) const;
  bool operator<(const BandWord& o) const { return letters < o.letters; }
  bool operator==(const BandWord& o) const { return letters == o.letters; }
};

WordCheck check_band(const Algebra& A, const BandWord& b);
std::vector<BandWord> enumerate_bands(AlgPtr A, int max_len);
/* One-dimensional twist: the first letter of the cycle acts through lambda
 * (lambda != 0). */
RepPtr band_rep(AlgPtr A, const BandWord& b, const Value& lambda);

/* Declarative amalgam of projectives: named tops with typed vertices, edges
 * routing path images of tops into shared slots, and dependency groups that
 * impose s_1 - s_2 - ... - s_m = 0 on slots over a common vertex. */
struct GraphSpec {
  struct Top {
    std::string name;
    std::string vertex;
  };
  struct Edge {
    std::string top;
    std::string path;  /* dotted word */
    std::string slot;
  };
  std::vector<Top> tops;
  std::vector<Edge> edges;
  std::vector<std::vector<std::string>> deps;
};

/* The constructed module keeps the projection from the covering projective
 * so elements named by (top, path) stay addressable. */
class GraphModule {
 public:
  RepPtr rep;
  RepPtr cover;  /* direct sum of the tops' projectives */
  ModuleMap proj;
  /* Column of the image of `path * top` in rep, at vertex target(path). */
  Matrix element(const std::string& top, const std::string& path) const;
  Matrix top_vector(const std::string& top) const;

  AlgPtr alg;
  GraphSpec spec;
  std::vector<int> top_vertex;  /* vertex of each top */
};

GraphModule build_graph_module(AlgPtr A, const GraphSpec& spec, const std::string& name);

}  // namespace bw
