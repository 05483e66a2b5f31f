#pragma once
#include <string>
#include <vector>

#include "bw/homalg.hpp"

namespace bw {

/* Data for the covariant-finiteness obstruction: vertices e(1..r) with paths
 * p_i, q_i of positive length sharing sources pairwise, chained so that
 * target(q_i) = target(p_{i+1 cyclic}) = e(i+1 cyclic), and none of the 2r
 * paths a subpath of another.  Indices are 0-based internally; s() wraps. */
struct Criterion3Input {
  int r = 0;
  std::vector<Path> p, q;
  std::vector<int> e;  /* e[i] = target(p[i]) */

  int s(int i) const { return ((i % r) + r) % r; }
};

Criterion3Input make_criterion_input(const Algebra& A, const std::vector<std::string>& p_words,
                                     const std::vector<std::string>& q_words);

struct CheckItem {
  std::string label;
  bool ok = false;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<CheckItem> items;
  void add(std::string label, bool good, std::string detail = "");
};

ValidationReport validate_criterion_input(const Algebra& A, const Criterion3Input& inp);

/* The zigzag test module with nr tops x_1..x_{nr} of types source(p_{s(i)});
 * edges p to the left valley and q to the right one, final top p-only.
 * Requires a validated input. */
GraphModule build_Mn(AlgPtr A, const Criterion3Input& inp, int n);
/* The embedding S_{e(1)} -> M_n sending the generator to p_1 x_1. */
ModuleMap mn_socle_embedding(const GraphModule& Mn, const Criterion3Input& inp);

struct Condition2Result {
  bool i = true;
  std::vector<bool> ii, iii; /* indexed by 0..r-1 */
  bool all() const;
  std::string to_string() const;
};

/* Exact subspace translations of condition (2):
 *   (i)   e(1)-socle inside the image of p_1,
 *   (ii)  im(q_i) meet socle inside im(p_{i+1 cyc}),
 *   (iii) q_i applied to the p_i-preimage of the socle lands in the socle. */
Condition2Result condition2_check(const Criterion3Input& inp, const Representation& A);

/* For bands the stronger fact holds at each e(i):
 * e(i) Soc B is contained in im(p_i) meet im(q_{i-1 cyc}). */
std::vector<bool> band_socle_containment(const Criterion3Input& inp, const Representation& B);

struct BandFactReport {
  int vertex = -1;
  std::vector<std::string> paths; /* nonzero positive-length classes ending at v */
  bool two_arrow_property = false;
};

/* The structural hypothesis behind the band argument: every nonzero path
 * class of positive length ending at v is a single arrow, and there are at
 * most two of them. */
BandFactReport band_socle_fact_check(const Algebra& A, int vertex);

struct CorpusEntry {
  RepPtr rep;
  PdimResult pd;
};

/* Test corpus over a special biserial algebra: strings up to max_len,
 * projectives, and bands up to band_len twisted by each lambda, each tagged
 * with its projective dimension.  Infinite-dimension entries are dropped;
 * AtLeast entries are kept only when keep_at_least is set. */
std::vector<CorpusEntry> pinf_corpus_sb(AlgPtr A, int max_len, int band_len,
                                        const std::vector<Value>& lambdas,
                                        const PdimOptions& opt = {}, bool keep_at_least = false);

/* Closure corpus for arbitrary algebras: projectives plus seeds, closed
 * under syzygies and indecomposable summands, capped by dim_bound, filtered
 * to finite projective dimension. */
std::vector<CorpusEntry> pinf_corpus_closure(AlgPtr A, const std::vector<RepPtr>& seeds,
                                             int dim_bound, const PdimOptions& opt = {});

struct MnResult {
  int n = 0;
  int dim = 0;
  PdimResult pd;
  bool tops_independent = false;
};

struct Cond2Row {
  std::string name;
  int dim = 0;
  PdimResult pd;
  bool counted = false;   /* pdim exact: a genuine corpus member */
  bool at_least = false;  /* cutoff reached: listed, not counted as pass */
  Condition2Result res;
};

struct BandSampleRow {
  std::string name;
  PdimResult pd;
  bool counted = false;
  Condition2Result res;
  std::vector<bool> socle_in_pq;
};

struct ScanOptions {
  int n_max = 4;
  int max_len = 12;
  int band_len = 8;
  std::vector<std::string> lambdas = {"1", "-1", "2"};
  PdimOptions pd;
};

struct Criterion3Report {
  ValidationReport validation;
  std::vector<MnResult> mn;
  std::vector<Cond2Row> strings;
  std::vector<BandSampleRow> bands;
  std::vector<BandFactReport> band_facts;
  ScanOptions bounds;
  std::vector<std::string> lambdas_used;
  bool vacuous = false; /* no module was counted */
  bool ok = false;
  std::string bounds_summary() const;
};

/* Condition-(2) scan plus the band facts; fills everything but validation
 * and mn. */
Criterion3Report scan_condition2(AlgPtr A, const Criterion3Input& inp, const ScanOptions& opt);
/* Full run: validation, M_1..M_{n_max} membership, scan. */
Criterion3Report run_criterion3(AlgPtr A, const Criterion3Input& inp, const ScanOptions& opt);

struct ApproxTest {
  std::string name;
  int dim = 0;
  std::string pd;
  int hom_to_target = 0;
  int factored = 0;
  bool ok = false;
};

struct ApproxReport {
  std::string direction;
  std::string map_desc;
  std::string corpus_desc;
  std::vector<ApproxTest> tests;
  bool ok = true;
  bool minimal_checked = false;
  bool minimal = false;
  std::vector<std::string> deletable; /* summands whose removal keeps the property */
};

/* f : A -> M is a right approximation over the corpus when post-composition
 * Hom(B,A) -> Hom(B,M) is onto for every corpus B.  Every reported
 * factorization is recomposed and compared exactly. */
ApproxReport is_right_approximation(const ModuleMap& f, const std::vector<CorpusEntry>& corpus,
                                    const std::string& corpus_desc = "");
/* Dual: pre-composition Hom(A,B) -> Hom(M,B) onto for f : M -> A. */
ApproxReport is_left_approximation(const ModuleMap& f, const std::vector<CorpusEntry>& corpus,
                                   const std::string& corpus_desc = "");

/* Right minimality over the corpus: dropping any indecomposable summand of
 * the source breaks is_right_approximation.  Appends results to `base` when
 * given. */
bool minimality_check(const ModuleMap& f, const std::vector<CorpusEntry>& corpus,
                      ApproxReport* base = nullptr);

struct RefuteCase {
  std::string module;
  int dim = 0;
  std::string pd;
  std::string f_desc;   /* socle coefficient vector defining f : S -> A */
  int witness_n = -1;   /* least n whose embedding fails to factor; -1 = survived */
};

struct RefuteOptions {
  int dim_bound = 8;
  int n_max = 9;
  PdimOptions pd;
};

struct RefuteReport {
  bool refuted = false;
  bool degenerate = false;
  std::string field;
  int dim_bound = 0, n_max = 0;
  std::vector<MnResult> mn;
  std::vector<RefuteCase> cases;
  std::vector<std::string> survivors;
  int corpus_size = 0;
};

/* Bounded refutation of a left approximation of S_{e(1)}: over a finite
 * field, every corpus module A with dim <= dim_bound and every f in
 * Hom(S, A) must fail to factor some canonical embedding S -> M_n with
 * n <= n_max.  Survivors mean the bounds were too small or the criterion
 * does not apply; over Q the enumeration of f is impossible and the call
 * is rejected. */
RefuteReport refute_left_bounded(AlgPtr A, const Criterion3Input& inp, const RefuteOptions& opt);

/* Built-in criterion inputs used by the bundled algebras. */
Criterion3Input ex6_criterion_input(const Algebra& A);
Criterion3Input ex2_criterion_input(const Algebra& A);

}  // namespace bw
