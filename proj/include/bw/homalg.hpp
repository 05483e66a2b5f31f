#pragma once
#include <string>
#include <vector>

#include "bw/strings.hpp"

namespace bw {

struct CoverData {
  RepPtr P;
  ModuleMap onto;              /* P -> M, surjective with superfluous kernel */
  std::vector<int> top_types;  /* vertex of each indecomposable cover summand */
};

/* Minimal projective cover: lifts a basis of M/JM. */
CoverData projective_cover(RepPtr M);

/* First syzygy: kernel of the projective cover, with its inclusion. */
std::pair<RepPtr, ModuleMap> syzygy_once(RepPtr M);
RepPtr syzygy(RepPtr M, int k);

struct PdimResult {
  enum class Kind { exact, infinite, at_least };
  Kind kind = Kind::at_least;
  int n = 0;  /* exact value, or the cutoff that was reached */
  /* Infinite certificates: a syzygy layer key that recurs. */
  std::string cycle_key;
  int first_index = 0;
  int period = 0;

  static PdimResult exact(int n);
  static PdimResult infinite(std::string key, int first, int period);
  static PdimResult at_least(int cutoff);
  bool finite() const { return kind == Kind::exact; }
  std::string to_string() const;
};

struct PdimOptions {
  int cutoff = 24;
};

/* Projective dimension with certificates.  String-decomposable modules over
 * special biserial algebras run through a memoized word recursion; everything
 * else iterates syzygies with dimension-vector fingerprints and explicit
 * isomorphism certificates for detected cycles. */
PdimResult pdim(RepPtr M, const PdimOptions& opt = {});
PdimResult pdim_word(AlgPtr A, const StringWord& w, const PdimOptions& opt = {});

/* Re-runs the syzygy iteration and confirms the recorded cycle. */
bool verify_infinite_certificate(RepPtr M, const PdimResult& r);

struct FindimEntry {
  StringWord word;
  int dim = 0;
  PdimResult pd;
};

struct FindimReport {
  int max_len = 0;
  int cutoff = 0;
  std::vector<FindimEntry> entries;
  int max_finite = -1;               /* largest finite pdim seen; -1 if none */
  std::vector<int> finite_values;    /* sorted distinct finite values */
  bool saw_infinite = false;
  bool saw_at_least = false;
};

/* Scan all strings up to max_len and tabulate projective dimensions; a lower
 * bound for the finitistic dimension, verified up to the stated bounds. */
FindimReport findim_probe(AlgPtr A, int max_len, const PdimOptions& opt = {});

}  // namespace bw
