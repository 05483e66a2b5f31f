#pragma once
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bw/algebra.hpp"

namespace bw {

/* A finite-dimensional representation: one exact matrix per arrow, acting on
 * column vectors, mats[a] : K^{dims[src]} -> K^{dims[tgt]}.  Immutable after
 * construction; `prov` records how it was built ("string"/"projective"/
 * "band"/"graph"/"") for fast paths and naming only. */
struct Representation {
  AlgPtr alg;
  std::vector<int> dims;
  std::vector<Matrix> mats;
  std::string name;
  std::string prov_kind;
  std::string prov;

  int total_dim() const;
  int vertex_offset(int v) const;
  std::string dims_string() const;
};

using RepPtr = std::shared_ptr<const Representation>;

/* Validates shapes and that every relation acts as zero. */
RepPtr make_rep(AlgPtr A, std::vector<int> dims, std::vector<Matrix> mats, std::string name,
                std::string prov_kind = "", std::string prov = "");
RepPtr zero_rep(AlgPtr A);
RepPtr simple_rep(AlgPtr A, int vertex);
RepPtr projective_rep(AlgPtr A, int vertex);  /* cached per algebra */

/* How the path-class basis of (Lambda)e_v lays out inside projective_rep:
 * entry k describes basis class k as (target vertex, index within that
 * vertex, representative path).  Shared by covers and graph amalgams. */
struct ProjBasisEntry {
  int vertex;
  int local;
  Path path;
};
std::vector<ProjBasisEntry> projective_basis_layout(const Algebra& A, int v);
RepPtr direct_sum(const std::vector<RepPtr>& parts);

Matrix path_action(const Representation& M, const Path& p);
/* Action of a linear combination of parallel paths. */
Matrix combo_action(const Representation& M, const std::vector<std::pair<Value, Path>>& terms);

/* One subspace per vertex, stored as columns. */
struct Subspace {
  std::vector<Matrix> cols;
  int total_dim() const;
};

Subspace radical_subspace(const Representation& M);
Subspace socle_subspace(const Representation& M);
/* Smallest subrepresentation containing the given columns per vertex. */
Subspace submodule_closure(const Representation& M, const Subspace& gens);
bool is_subrepresentation(const Representation& M, const Subspace& U);

struct ModuleMap {
  RepPtr src;
  RepPtr tgt;
  std::vector<Matrix> blocks;

  bool is_zero() const;
  bool equals(const ModuleMap& o) const;
  ModuleMap compose(const ModuleMap& inner) const;  /* this after inner */
  ModuleMap add(const ModuleMap& o) const;
  ModuleMap scaled(const Value& c) const;
  /* Check commutation with every arrow. */
  bool well_defined() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
};

ModuleMap zero_map(RepPtr A, RepPtr B);
ModuleMap identity_map(RepPtr A);

/* Basis of Hom(A, B) in a deterministic order. */
std::vector<ModuleMap> hom_basis(RepPtr A, RepPtr B);
int hom_dim(RepPtr A, RepPtr B);

/* Kernel with its inclusion; the kernel carries the induced action. */
std::pair<RepPtr, ModuleMap> kernel_of(const ModuleMap& f);
/* Image of f as a subspace of the target. */
Subspace image_subspace(const ModuleMap& f);
/* Subrepresentation spanned by a subspace (must be arrow-closed), with its
 * inclusion map. */
std::pair<RepPtr, ModuleMap> subrep_from_subspace(RepPtr M, const Subspace& U, std::string name);
/* Quotient M/U with the projection. */
std::pair<RepPtr, ModuleMap> quotient_by(RepPtr M, const Subspace& U, std::string name);

/* Shallow copy with a new display name. */
RepPtr renamed(RepPtr M, std::string name);
/* Assemble a map out of a direct sum built from the parts' sources, in
 * order: blocks are horizontal stacks of the parts' blocks. */
ModuleMap hstack_maps(RepPtr sum, const std::vector<ModuleMap>& parts);

/* The canonical epi M -> S_v killing the radical and sending each given top
 * column to the generator; tops default to unit vectors completing rad M_v. */
ModuleMap epi_onto_simple(RepPtr M, int vertex, const std::vector<Matrix>& tops = {});

struct IsoOptions {
  std::uint64_t seed = 20260815;
  int random_tries = 64;
};

std::optional<ModuleMap> find_isomorphism(RepPtr A, RepPtr B, const IsoOptions& opt = {});
bool is_isomorphic(RepPtr A, RepPtr B, const IsoOptions& opt = {});

/* One indecomposable summand of a decomposition, with a split mono into the
 * original module and the matching retraction (pi . mono = id). */
struct Summand {
  RepPtr piece;
  ModuleMap mono;
  ModuleMap retraction;
};

struct DecompOptions {
  std::uint64_t seed = 20260815;
  int random_tries = 64;
};

/* If C is a direct summand of M, produce a split mono iota: C -> M and a
 * retraction pi with pi . iota = id.  A definite negative for indecomposable
 * C; may miss splits only when the randomized search budget is exhausted. */
std::optional<std::pair<ModuleMap, ModuleMap>> find_split_pair(RepPtr C, RepPtr M,
                                                               const DecompOptions& opt = {});

using CandidateFn = std::function<std::vector<RepPtr>(const Representation&)>;

/* Peel off candidate summands, then fall back to Fitting splits; leftover
 * pieces must certify as indecomposable or the call fails with
 * Errc::unsupported.  Every returned certificate satisfies
 * retraction . mono = id exactly. */
std::vector<Summand> decompose_with_candidates(RepPtr M, const CandidateFn& fn,
                                               const DecompOptions& opt = {});

/* decompose() picks candidates automatically: bounded string enumeration
 * plus projectives over special biserial algebras, projectives otherwise. */
std::vector<Summand> decompose(RepPtr M, const DecompOptions& opt = {});

/* True: End(M) certified local.  False: a proper split was found.
 * Throws Errc::unsupported when neither certificate is available. */
bool certified_indecomposable(RepPtr M);

}  // namespace bw
