#include "bw/rep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "scratch.hpp"

namespace bw {

int Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

int Representation::vertex_offset(int v) const {
  return std::accumulate(dims.begin(), dims.begin() + v, 0);
}

std::string Representation::dims_string() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (!dims[v]) continue;
    if (any) out << ' ';
    out << alg->quiver().vertices[v] << ':' << dims[v];
    any = true;
  }
  return any ? out.str() : "0";
}

RepPtr make_rep(AlgPtr A, std::vector<int> dims, std::vector<Matrix> mats, std::string name,
                std::string prov_kind, std::string prov) {
  const Quiver& Q = A->quiver();
  require(static_cast<int>(dims.size()) == Q.n_vertices(), Errc::invalid_input,
          "module has wrong number of vertex dimensions");
  require(static_cast<int>(mats.size()) == Q.n_arrows(), Errc::invalid_input,
          "module has wrong number of arrow matrices");
  for (int a = 0; a < Q.n_arrows(); ++a) {
    const Arrow& ar = Q.arrows[a];
    require(mats[a].rows() == dims[ar.tgt] && mats[a].cols() == dims[ar.src] &&
                mats[a].field() == A->field(),
            Errc::invalid_input, "matrix for arrow '" + ar.label + "' has wrong shape or field");
  }
  auto M = std::make_shared<Representation>();
  M->alg = std::move(A);
  M->dims = std::move(dims);
  M->mats = std::move(mats);
  M->name = std::move(name);
  M->prov_kind = std::move(prov_kind);
  M->prov = std::move(prov);
  for (const auto& rel : M->alg->pres.relations) {
    std::vector<std::pair<Value, Path>> terms;
    for (const auto& t : rel.terms) terms.emplace_back(t.coeff, t.path);
    require(combo_action(*M, terms).is_zero(), Errc::invalid_input,
            "relation '" + rel.to_string(Q, M->alg->field()) + "' does not vanish on module '" +
                M->name + "'");
  }
  return M;
}

RepPtr zero_rep(AlgPtr A) {
  const Quiver& Q = A->quiver();
  std::vector<int> dims(Q.n_vertices(), 0);
  std::vector<Matrix> mats(Q.n_arrows(), Matrix(A->field(), 0, 0));
  return make_rep(A, std::move(dims), std::move(mats), "0");
}

RepPtr simple_rep(AlgPtr A, int vertex) {
  const Quiver& Q = A->quiver();
  std::vector<int> dims(Q.n_vertices(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> mats;
  for (const auto& a : Q.arrows)
    mats.emplace_back(A->field(), dims[a.tgt], dims[a.src]);
  return make_rep(A, std::move(dims), std::move(mats), "S_" + Q.vertices[vertex]);
}

std::vector<ProjBasisEntry> projective_basis_layout(const Algebra& A, int v) {
  const Quiver& Q = A.quiver();
  const VertexBlock& blk = A.basis.blocks[v];
  std::vector<int> counts(Q.n_vertices(), 0);
  std::vector<ProjBasisEntry> out;
  for (int coord : blk.basis_coords) {
    const Path& p = blk.paths[coord];
    int w = p.target(Q);
    out.push_back({w, counts[w]++, p});
  }
  return out;
}

RepPtr projective_rep(AlgPtr A, int vertex) {
  {
    std::lock_guard<std::mutex> lock(A->scratch->mu);
    if (A->scratch->projectives.empty())
      A->scratch->projectives.resize(A->quiver().n_vertices());
    if (A->scratch->projectives[vertex]) return A->scratch->projectives[vertex];
  }
  const Quiver& Q = A->quiver();
  const Field& F = A->field();
  std::vector<ProjBasisEntry> layout = projective_basis_layout(*A, vertex);

  std::vector<int> dims(Q.n_vertices(), 0);
  for (const auto& e : layout) dims[e.vertex]++;
  std::vector<Matrix> mats;
  for (const auto& ar : Q.arrows) mats.emplace_back(F, dims[ar.tgt], dims[ar.src]);
  for (const auto& e : layout) {
    for (int a = 0; a < Q.n_arrows(); ++a) {
      if (Q.arrows[a].src != e.vertex) continue;
      Path ext = compose(Q, arrow_path(Q, a), e.path);
      for (const auto& [pos, c] : A->basis.reduce_path(ext))
        mats[a].at(layout[pos].local, e.local) = c;
    }
  }
  RepPtr P = make_rep(A, std::move(dims), std::move(mats), "P_" + Q.vertices[vertex],
                      "projective", Q.vertices[vertex]);
  std::lock_guard<std::mutex> lock(A->scratch->mu);
  if (!A->scratch->projectives[vertex]) A->scratch->projectives[vertex] = P;
  return A->scratch->projectives[vertex];
}

RepPtr direct_sum(const std::vector<RepPtr>& parts) {
  require(!parts.empty(), Errc::internal, "direct_sum of nothing");
  AlgPtr A = parts[0]->alg;
  const Quiver& Q = A->quiver();
  const Field& F = A->field();
  std::vector<int> dims(Q.n_vertices(), 0);
  for (const auto& p : parts) {
    require(p->alg->hash == A->hash, Errc::internal, "direct_sum across algebras");
    for (int v = 0; v < Q.n_vertices(); ++v) dims[v] += p->dims[v];
  }
  std::vector<Matrix> mats;
  for (int a = 0; a < Q.n_arrows(); ++a) {
    const Arrow& ar = Q.arrows[a];
    Matrix M(F, dims[ar.tgt], dims[ar.src]);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      for (int i = 0; i < p->dims[ar.tgt]; ++i)
        for (int j = 0; j < p->dims[ar.src]; ++j) M.at(ro + i, co + j) = p->mats[a].at(i, j);
      ro += p->dims[ar.tgt];
      co += p->dims[ar.src];
    }
    mats.push_back(std::move(M));
  }
  std::string name;
  for (const auto& p : parts) name += (name.empty() ? "" : " + ") + p->name;
  return make_rep(A, std::move(dims), std::move(mats), name, "sum", "");
}

RepPtr renamed(RepPtr M, std::string name) {
  auto copy = std::make_shared<Representation>(*M);
  copy->name = std::move(name);
  return copy;
}

Matrix path_action(const Representation& M, const Path& p) {
  Matrix acc = Matrix::identity(M.alg->field(), M.dims[p.src]);
  for (int a : p.arrows) acc = M.mats[a].mul(acc);
  return acc;
}

Matrix combo_action(const Representation& M, const std::vector<std::pair<Value, Path>>& terms) {
  require(!terms.empty(), Errc::internal, "empty combination");
  const Quiver& Q = M.alg->quiver();
  int s = terms[0].second.src, t = terms[0].second.target(Q);
  Matrix acc(M.alg->field(), M.dims[t], M.dims[s]);
  for (const auto& [c, p] : terms) {
    require(p.src == s && p.target(Q) == t, Errc::internal, "combination terms not parallel");
    acc = acc.add(path_action(M, p).scaled(c));
  }
  return acc;
}

int Subspace::total_dim() const {
  int d = 0;
  for (const auto& m : cols) d += m.cols();
  return d;
}

Subspace radical_subspace(const Representation& M) {
  const Quiver& Q = M.alg->quiver();
  const Field& F = M.alg->field();
  Subspace U;
  for (int v = 0; v < Q.n_vertices(); ++v) {
    Matrix acc(F, M.dims[v], 0);
    for (int a = 0; a < Q.n_arrows(); ++a)
      if (Q.arrows[a].tgt == v) acc = acc.hstack(M.mats[a]);
    U.cols.push_back(col_space(acc));
  }
  return U;
}

Subspace socle_subspace(const Representation& M) {
  const Quiver& Q = M.alg->quiver();
  const Field& F = M.alg->field();
  Subspace U;
  for (int v = 0; v < Q.n_vertices(); ++v) {
    Matrix acc(F, 0, M.dims[v]);
    for (int a = 0; a < Q.n_arrows(); ++a)
      if (Q.arrows[a].src == v) acc = acc.vstack(M.mats[a]);
    U.cols.push_back(nullspace(acc));
  }
  return U;
}

Subspace submodule_closure(const Representation& M, const Subspace& gens) {
  const Quiver& Q = M.alg->quiver();
  Subspace U;
  for (int v = 0; v < Q.n_vertices(); ++v) U.cols.push_back(col_space(gens.cols[v]));
  for (;;) {
    bool grew = false;
    for (int a = 0; a < Q.n_arrows(); ++a) {
      const Arrow& ar = Q.arrows[a];
      Matrix img = M.mats[a].mul(U.cols[ar.src]);
      if (!cols_contained_in(img, U.cols[ar.tgt])) {
        U.cols[ar.tgt] = col_space(U.cols[ar.tgt].hstack(img));
        grew = true;
      }
    }
    if (!grew) return U;
  }
}

bool is_subrepresentation(const Representation& M, const Subspace& U) {
  const Quiver& Q = M.alg->quiver();
  for (int a = 0; a < Q.n_arrows(); ++a) {
    const Arrow& ar = Q.arrows[a];
    if (!cols_contained_in(M.mats[a].mul(U.cols[ar.src]), U.cols[ar.tgt])) return false;
  }
  return true;
}

bool ModuleMap::is_zero() const {
  for (const auto& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool ModuleMap::equals(const ModuleMap& o) const {
  if (blocks.size() != o.blocks.size()) return false;
  for (std::size_t v = 0; v < blocks.size(); ++v)
    if (!blocks[v].equals(o.blocks[v])) return false;
  return true;
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
  require(inner.tgt->dims == src->dims && inner.tgt->alg->hash == src->alg->hash, Errc::internal,
          "map composition mismatch");
  ModuleMap out;
  out.src = inner.src;
  out.tgt = tgt;
  for (std::size_t v = 0; v < blocks.size(); ++v)
    out.blocks.push_back(blocks[v].mul(inner.blocks[v]));
  return out;
}

ModuleMap ModuleMap::add(const ModuleMap& o) const {
  ModuleMap out = *this;
  for (std::size_t v = 0; v < blocks.size(); ++v) out.blocks[v] = blocks[v].add(o.blocks[v]);
  return out;
}

ModuleMap ModuleMap::scaled(const Value& c) const {
  ModuleMap out = *this;
  for (auto& b : out.blocks) b = b.scaled(c);
  return out;
}

bool ModuleMap::well_defined() const {
  const Quiver& Q = src->alg->quiver();
  for (int a = 0; a < Q.n_arrows(); ++a) {
    const Arrow& ar = Q.arrows[a];
    if (!blocks[ar.tgt].mul(src->mats[a]).equals(tgt->mats[a].mul(blocks[ar.src]))) return false;
  }
  return true;
}

bool ModuleMap::is_injective() const {
  for (std::size_t v = 0; v < blocks.size(); ++v)
    if (rank_of(blocks[v]) != src->dims[v]) return false;
  return true;
}

bool ModuleMap::is_surjective() const {
  for (std::size_t v = 0; v < blocks.size(); ++v)
    if (rank_of(blocks[v]) != tgt->dims[v]) return false;
  return true;
}

bool ModuleMap::is_isomorphism() const {
  return src->total_dim() == tgt->total_dim() && is_injective() && is_surjective();
}

ModuleMap zero_map(RepPtr A, RepPtr B) {
  ModuleMap f;
  f.src = A;
  f.tgt = B;
  for (std::size_t v = 0; v < A->dims.size(); ++v)
    f.blocks.emplace_back(A->alg->field(), B->dims[v], A->dims[v]);
  return f;
}

ModuleMap identity_map(RepPtr A) {
  ModuleMap f;
  f.src = A;
  f.tgt = A;
  for (std::size_t v = 0; v < A->dims.size(); ++v)
    f.blocks.push_back(Matrix::identity(A->alg->field(), A->dims[v]));
  return f;
}

namespace {

/* Unknowns: entries of one matrix per vertex, row-major, vertex blocks
 * concatenated.  Rows: commutation with every arrow. */
Matrix hom_system(const Representation& A, const Representation& B, int* unknowns_out) {
  const Quiver& Q = A.alg->quiver();
  const Field& F = A.alg->field();
  std::vector<int> off(Q.n_vertices() + 1, 0);
  for (int v = 0; v < Q.n_vertices(); ++v) off[v + 1] = off[v] + B.dims[v] * A.dims[v];
  int unknowns = off[Q.n_vertices()];
  *unknowns_out = unknowns;
  int rows = 0;
  for (int a = 0; a < Q.n_arrows(); ++a)
    rows += B.dims[Q.arrows[a].tgt] * A.dims[Q.arrows[a].src];
  Matrix S(F, rows, unknowns);
  int r = 0;
  for (int a = 0; a < Q.n_arrows(); ++a) {
    const Arrow& ar = Q.arrows[a];
    for (int i = 0; i < B.dims[ar.tgt]; ++i)
      for (int j = 0; j < A.dims[ar.src]; ++j) {
        for (int k = 0; k < A.dims[ar.tgt]; ++k)
          F.add_in(S.at(r, off[ar.tgt] + i * A.dims[ar.tgt] + k), A.mats[a].at(k, j));
        for (int k = 0; k < B.dims[ar.src]; ++k) {
          Value c = F.neg(B.mats[a].at(i, k));
          F.add_in(S.at(r, off[ar.src] + k * A.dims[ar.src] + j), c);
        }
        ++r;
      }
  }
  return S;
}

ModuleMap map_from_vector(RepPtr A, RepPtr B, const Matrix& K, int col) {
  const Quiver& Q = A->alg->quiver();
  ModuleMap f = zero_map(A, B);
  int pos = 0;
  for (int v = 0; v < Q.n_vertices(); ++v)
    for (int i = 0; i < B->dims[v]; ++i)
      for (int j = 0; j < A->dims[v]; ++j) f.blocks[v].at(i, j) = K.at(pos++, col);
  return f;
}

}  // namespace

std::vector<ModuleMap> hom_basis(RepPtr A, RepPtr B) {
  require(A->alg->hash == B->alg->hash, Errc::internal, "hom across algebras");
  int unknowns = 0;
  Matrix S = hom_system(*A, *B, &unknowns);
  Matrix K = nullspace(S);
  std::vector<ModuleMap> out;
  for (int c = 0; c < K.cols(); ++c) {
    ModuleMap f = map_from_vector(A, B, K, c);
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(RepPtr A, RepPtr B) {
  int unknowns = 0;
  Matrix S = hom_system(*A, *B, &unknowns);
  return unknowns - rank_of(std::move(S));
}

std::pair<RepPtr, ModuleMap> kernel_of(const ModuleMap& f) {
  AlgPtr A = f.src->alg;
  const Quiver& Q = A->quiver();
  std::vector<int> dims(Q.n_vertices());
  std::vector<Matrix> K(Q.n_vertices());
  for (int v = 0; v < Q.n_vertices(); ++v) {
    K[v] = nullspace(f.blocks[v]);
    dims[v] = K[v].cols();
  }
  std::vector<Matrix> mats;
  for (int a = 0; a < Q.n_arrows(); ++a) {
    const Arrow& ar = Q.arrows[a];
    auto Z = solve(K[ar.tgt], f.src->mats[a].mul(K[ar.src]));
    require(Z.has_value(), Errc::internal, "kernel is not arrow-closed");
    mats.push_back(std::move(*Z));
  }
  RepPtr ker = make_rep(A, std::move(dims), std::move(mats), "ker(" + f.src->name + ")");
  ModuleMap incl;
  incl.src = ker;
  incl.tgt = f.src;
  incl.blocks = std::move(K);
  return {ker, incl};
}

Subspace image_subspace(const ModuleMap& f) {
  Subspace U;
  for (const auto& b : f.blocks) U.cols.push_back(col_space(b));
  return U;
}

std::pair<RepPtr, ModuleMap> subrep_from_subspace(RepPtr M, const Subspace& U, std::string name) {
  AlgPtr A = M->alg;
  const Quiver& Q = A->quiver();
  std::vector<Matrix> B(Q.n_vertices());
  std::vector<int> dims(Q.n_vertices());
  for (int v = 0; v < Q.n_vertices(); ++v) {
    B[v] = col_space(U.cols[v]);
    dims[v] = B[v].cols();
  }
  std::vector<Matrix> mats;
  for (int a = 0; a < Q.n_arrows(); ++a) {
    const Arrow& ar = Q.arrows[a];
    auto Z = solve(B[ar.tgt], M->mats[a].mul(B[ar.src]));
    require(Z.has_value(), Errc::invalid_input, "subspace is not arrow-closed");
    mats.push_back(std::move(*Z));
  }
  RepPtr S = make_rep(A, std::move(dims), std::move(mats), std::move(name));
  ModuleMap incl;
  incl.src = S;
  incl.tgt = M;
  incl.blocks = std::move(B);
  return {S, incl};
}

std::pair<RepPtr, ModuleMap> quotient_by(RepPtr M, const Subspace& U, std::string name) {
  AlgPtr A = M->alg;
  const Quiver& Q = A->quiver();
  const Field& F = A->field();
  require(is_subrepresentation(*M, U), Errc::invalid_input,
          "cannot form quotient: subspace is not a subrepresentation");
  std::vector<Matrix> proj(Q.n_vertices()), section(Q.n_vertices());
  std::vector<int> dims(Q.n_vertices());
  for (int v = 0; v < Q.n_vertices(); ++v) {
    int d = M->dims[v];
    Matrix E = U.cols[v].transpose();
    RrefResult rr = rref_in_place(E);
    std::vector<bool> is_piv(d, false);
    for (int c : rr.pivot_cols) is_piv[c] = true;
    std::vector<int> free;
    for (int j = 0; j < d; ++j)
      if (!is_piv[j]) free.push_back(j);
    dims[v] = static_cast<int>(free.size());
    /* Reduction against the echelon rows sends every coset to its unique
     * representative supported on the free coordinates. */
    Matrix red = Matrix::identity(F, d);
    for (int k = 0; k < rr.rank; ++k) {
      int c = rr.pivot_cols[k];
      for (int j = 0; j < d; ++j) {
        Value f = red.at(c, j);
        if (F.is_zero(f)) continue;
        for (int i = 0; i < d; ++i) F.submul_in(red.at(i, j), f, E.at(k, i));
      }
    }
    proj[v] = red.rows_subset(free);
    Matrix sec(F, d, dims[v]);
    for (int k = 0; k < dims[v]; ++k) sec.at(free[k], k) = F.one();
    section[v] = std::move(sec);
  }
  std::vector<Matrix> mats;
  for (int a = 0; a < Q.n_arrows(); ++a) {
    const Arrow& ar = Q.arrows[a];
    mats.push_back(proj[ar.tgt].mul(M->mats[a]).mul(section[ar.src]));
  }
  RepPtr Qt = make_rep(A, std::move(dims), std::move(mats), std::move(name));
  ModuleMap pr;
  pr.src = M;
  pr.tgt = Qt;
  pr.blocks = std::move(proj);
  require(pr.well_defined(), Errc::internal, "quotient projection is not a module map");
  return {Qt, pr};
}

ModuleMap hstack_maps(RepPtr sum, const std::vector<ModuleMap>& parts) {
  require(!parts.empty(), Errc::internal, "hstack_maps of nothing");
  RepPtr tgt = parts[0].tgt;
  ModuleMap f = zero_map(sum, tgt);
  std::vector<int> off(sum->dims.size(), 0);
  for (const auto& p : parts) {
    require(p.tgt->dims == tgt->dims, Errc::internal, "hstack_maps target mismatch");
    for (std::size_t v = 0; v < sum->dims.size(); ++v) {
      for (int i = 0; i < p.blocks[v].rows(); ++i)
        for (int j = 0; j < p.blocks[v].cols(); ++j) f.blocks[v].at(i, off[v] + j) = p.blocks[v].at(i, j);
      off[v] += p.blocks[v].cols();
    }
  }
  for (std::size_t v = 0; v < sum->dims.size(); ++v)
    require(off[v] == sum->dims[v], Errc::internal, "hstack_maps source mismatch");
  require(f.well_defined(), Errc::internal, "hstack_maps produced a non-map");
  return f;
}

ModuleMap epi_onto_simple(RepPtr M, int vertex, const std::vector<Matrix>& tops) {
  const Field& F = M->alg->field();
  int d = M->dims[vertex];
  require(d > 0, Errc::invalid_input, "module vanishes at the requested vertex");
  Subspace rad = radical_subspace(*M);
  Matrix R = rad.cols[vertex];
  Matrix T(F, d, 0);
  if (tops.empty()) {
    std::vector<int> piv = coordinate_pivots(R);
    for (int i = 0; i < d; ++i) {
      if (std::find(piv.begin(), piv.end(), i) != piv.end()) continue;
      Matrix unit(F, d, 1);
      unit.at(i, 0) = F.one();
      T = T.hstack(unit);
    }
  } else {
    for (const auto& c : tops) T = T.hstack(c);
  }
  require(T.cols() > 0, Errc::invalid_input, "no top elements at the requested vertex");
  /* Send every chosen top element to 1 in the simple and kill the radical. */
  Matrix sys = T.hstack(R).transpose();
  Matrix rhs(F, sys.rows(), 1);
  for (int i = 0; i < T.cols(); ++i) rhs.at(i, 0) = F.one();
  auto lam = solve(sys, rhs);
  require(lam.has_value(), Errc::invalid_input, "tops are not independent modulo the radical");
  ModuleMap f = zero_map(M, simple_rep(M->alg, vertex));
  f.blocks[vertex] = lam->transpose();
  require(f.well_defined(), Errc::internal, "simple-top epi does not commute");
  return f;
}

namespace {

ModuleMap sum_maps(RepPtr A, RepPtr B, const std::vector<ModuleMap>& basis, const Matrix& coef,
                   int col) {
  ModuleMap f = zero_map(A, B);
  const Field& F = A->alg->field();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Value c = coef.at(static_cast<int>(k), col);
    if (F.is_zero(c)) continue;
    f = f.add(basis[k].scaled(c));
  }
  return f;
}

Matrix vec_of_map(const ModuleMap& f) {
  const Field& F = f.src->alg->field();
  int total = 0;
  for (const auto& b : f.blocks) total += b.rows() * b.cols();
  Matrix v(F, total, 1);
  int pos = 0;
  for (const auto& b : f.blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) v.at(pos++, 0) = b.at(i, j);
  return v;
}

/* Given iota, look for pi in span(pis) with pi . iota = id_C. */
std::optional<ModuleMap> retraction_for(const ModuleMap& iota, const std::vector<ModuleMap>& pis) {
  RepPtr C = iota.src;
  const Field& F = C->alg->field();
  int rows = 0;
  for (int d : C->dims) rows += d * d;
  Matrix G(F, rows, static_cast<int>(pis.size()));
  for (std::size_t b = 0; b < pis.size(); ++b) {
    Matrix col = vec_of_map(pis[b].compose(iota));
    for (int i = 0; i < rows; ++i) G.at(i, static_cast<int>(b)) = col.at(i, 0);
  }
  Matrix rhs = vec_of_map(identity_map(C));
  auto c = solve(G, rhs);
  if (!c) return std::nullopt;
  ModuleMap pi = sum_maps(iota.tgt, C, pis, *c, 0);
  require(pi.compose(iota).equals(identity_map(C)), Errc::internal, "retraction check failed");
  return pi;
}

}  // namespace

std::optional<std::pair<ModuleMap, ModuleMap>> find_split_pair(RepPtr C, RepPtr M,
                                                               const DecompOptions& opt) {
  require(C->alg->hash == M->alg->hash, Errc::internal, "split search across algebras");
  if (C->total_dim() == 0 || C->total_dim() > M->total_dim()) return std::nullopt;
  const Field& F = C->alg->field();
  std::vector<ModuleMap> iotas = hom_basis(C, M);
  if (iotas.empty()) return std::nullopt;
  std::vector<ModuleMap> pis = hom_basis(M, C);
  if (pis.empty()) return std::nullopt;

  /* Certain negative: id_C must lie in span{pi_b . iota_a}. */
  {
    int rows = 0;
    for (int d : C->dims) rows += d * d;
    Matrix G(F, rows, static_cast<int>(iotas.size() * pis.size()));
    int col = 0;
    for (const auto& io : iotas)
      for (const auto& pi : pis) {
        Matrix v = vec_of_map(pi.compose(io));
        for (int i = 0; i < rows; ++i) G.at(i, col) = v.at(i, 0);
        ++col;
      }
    if (!solve(G, vec_of_map(identity_map(C))).has_value()) return std::nullopt;
  }

  auto attempt = [&](const ModuleMap& iota) -> std::optional<std::pair<ModuleMap, ModuleMap>> {
    auto pi = retraction_for(iota, pis);
    if (!pi) return std::nullopt;
    return std::make_pair(iota, *pi);
  };

  for (const auto& io : iotas)
    if (auto r = attempt(io)) return r;

  std::mt19937_64 rng(opt.seed ^ fnv1a64(C->name) ^ (std::uint64_t(M->total_dim()) << 32));
  for (int t = 0; t < opt.random_tries; ++t) {
    ModuleMap io = zero_map(C, M);
    for (const auto& b : iotas) io = io.add(b.scaled(F.random_small(rng)));
    if (io.is_zero()) continue;
    if (auto r = attempt(io)) return r;
  }

  /* Tiny prime fields: exhaust all combinations before giving up. */
  if (F.kind() == Field::Kind::prime) {
    double combos = 1;
    for (std::size_t i = 0; i < iotas.size(); ++i) combos *= F.characteristic();
    if (combos <= 4096) {
      std::vector<Value> elems = F.all_elements();
      std::vector<std::size_t> idx(iotas.size(), 0);
      for (;;) {
        ModuleMap io = zero_map(C, M);
        for (std::size_t k = 0; k < iotas.size(); ++k)
          io = io.add(iotas[k].scaled(elems[idx[k]]));
        if (!io.is_zero())
          if (auto r = attempt(io)) return r;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == elems.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
  }
  return std::nullopt;
}

std::optional<ModuleMap> find_isomorphism(RepPtr A, RepPtr B, const IsoOptions& opt) {
  if (A->alg->hash != B->alg->hash) return std::nullopt;
  if (A->dims != B->dims) return std::nullopt;
  if (A->total_dim() == 0) return zero_map(A, B);
  if (A->prov_kind == "string" && B->prov_kind == "string") {
    if (A->prov != B->prov) return std::nullopt;  /* distinct strings are non-isomorphic */
  }
  DecompOptions dopt;
  dopt.seed = opt.seed;
  dopt.random_tries = opt.random_tries;
  auto sp = find_split_pair(A, B, dopt);
  if (!sp) return std::nullopt;
  const ModuleMap& iota = sp->first;
  require(iota.is_isomorphism(), Errc::internal, "split pair of equal dims must be an iso");
  return iota;
}

bool is_isomorphic(RepPtr A, RepPtr B, const IsoOptions& opt) {
  return find_isomorphism(A, B, opt).has_value();
}

namespace {

ModuleMap map_power(const ModuleMap& f, int n) {
  ModuleMap acc = identity_map(f.src);
  ModuleMap base = f;
  while (n) {
    if (n & 1) acc = base.compose(acc);
    base = base.compose(base);
    n >>= 1;
  }
  return acc;
}

bool map_nilpotent(const ModuleMap& f) { return map_power(f, f.src->total_dim()).is_zero(); }

bool map_invertible(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (!is_invertible(b)) return false;
  return true;
}

struct FitPieces {
  Summand a, b;
};

/* Retraction onto the complement W inside X, where iota: C -> X and
 * inclW: W -> X stack to an isomorphism. */
ModuleMap complement_retraction(const ModuleMap& iota, const ModuleMap& inclW) {
  RepPtr X = iota.tgt;
  ModuleMap piW = zero_map(X, inclW.src);
  for (std::size_t v = 0; v < X->dims.size(); ++v) {
    Matrix S = iota.blocks[v].hstack(inclW.blocks[v]);
    auto inv = inverse(S);
    require(inv.has_value(), Errc::internal, "summand and complement do not span");
    int dc = iota.blocks[v].cols();
    std::vector<int> lower(inclW.blocks[v].cols());
    std::iota(lower.begin(), lower.end(), dc);
    piW.blocks[v] = inv->rows_subset(lower);
  }
  require(piW.compose(inclW).equals(identity_map(inclW.src)), Errc::internal,
          "complement retraction check failed");
  return piW;
}

std::optional<FitPieces> fitting_split_by(RepPtr X, const ModuleMap& psi) {
  ModuleMap phi = map_power(psi, X->total_dim());
  auto [K, inclK] = kernel_of(phi);
  if (K->total_dim() == 0 || K->total_dim() == X->total_dim()) return std::nullopt;
  auto [I, inclI] = subrep_from_subspace(X, image_subspace(phi), "im");
  require(K->total_dim() + I->total_dim() == X->total_dim(), Errc::internal,
          "Fitting dimensions do not add up");
  ModuleMap piI = complement_retraction(inclK, inclI);
  ModuleMap piK = complement_retraction(inclI, inclK);
  FitPieces out;
  out.a = {K, inclK, piK};
  out.b = {I, inclI, piI};
  return out;
}

std::optional<FitPieces> try_fitting(RepPtr X, const DecompOptions& opt) {
  std::vector<ModuleMap> ends = hom_basis(X, X);
  auto useful = [&](const ModuleMap& f) -> std::optional<FitPieces> {
    if (f.is_zero() || map_nilpotent(f) || map_invertible(f)) return std::nullopt;
    return fitting_split_by(X, f);
  };
  for (const auto& f : ends)
    if (auto r = useful(f)) return r;
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = 0; j < ends.size(); ++j) {
      if (i == j) continue;
      if (auto r = useful(ends[i].compose(ends[j]))) return r;
    }
  const Field& F = X->alg->field();
  std::mt19937_64 rng(opt.seed ^ fnv1a64(X->name) ^ 0x9e3779b97f4a7c15ull);
  for (int t = 0; t < opt.random_tries; ++t) {
    ModuleMap f = zero_map(X, X);
    for (const auto& b : ends) f = f.add(b.scaled(F.random_small(rng)));
    if (auto r = useful(f)) return r;
  }
  return std::nullopt;
}

/* End(X) local?  nullopt when no certificate is available. */
std::optional<bool> certify_local(RepPtr X) {
  const Field& F = X->alg->field();
  std::vector<ModuleMap> ends = hom_basis(X, X);
  int n = static_cast<int>(ends.size());
  if (n == 1) return true;
  if (F.kind() == Field::Kind::rationals) {
    /* Over the rationals the radical is the kernel of the trace form, so
     * End/rad has dimension n - rank(Gram); local iff that equals one. */
    Matrix Gram(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ModuleMap prod = ends[i].compose(ends[j]);
        Value tr = F.zero();
        for (const auto& b : prod.blocks)
          for (int k = 0; k < b.rows(); ++k) F.add_in(tr, b.at(k, k));
        Gram.at(i, j) = tr;
      }
    if (rank_of(Gram) == 1) return true;
    return std::nullopt;  /* could still be a division algebra; undecided */
  }
  double combos = 1;
  for (int i = 0; i < n; ++i) {
    combos *= F.characteristic();
    if (combos > 65536) return std::nullopt;
  }
  std::vector<Value> elems = F.all_elements();
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    ModuleMap f = zero_map(X, X);
    for (int k = 0; k < n; ++k) f = f.add(ends[k].scaled(elems[idx[k]]));
    if (!f.is_zero() && !map_nilpotent(f) && !map_invertible(f)) return false;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == elems.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return true;
}

}  // namespace

bool certified_indecomposable(RepPtr M) {
  require(M->total_dim() > 0, Errc::invalid_input, "the zero module is not indecomposable");
  if (M->total_dim() == 1) return true;
  if (try_fitting(M, {}).has_value()) return false;
  auto cert = certify_local(M);
  require(cert.has_value(), Errc::unsupported,
          "indecomposability of '" + M->name + "' not certified");
  return *cert;
}

std::vector<Summand> decompose_with_candidates(RepPtr M, const CandidateFn& fn,
                                               const DecompOptions& opt) {
  std::vector<Summand> out;
  struct Item {
    RepPtr X;
    ModuleMap mono, retr;
  };
  std::vector<Item> work;
  if (M->total_dim() > 0) work.push_back({M, identity_map(M), identity_map(M)});
  auto dims_le = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  while (!work.empty()) {
    Item it = std::move(work.back());
    work.pop_back();
    if (it.X->total_dim() == 0) continue;
    bool split = false;
    if (it.X->total_dim() > 1 || fn) {
      for (const RepPtr& C : fn ? fn(*it.X) : std::vector<RepPtr>{}) {
        if (C->total_dim() == 0 || !dims_le(C->dims, it.X->dims)) continue;
        auto sp = find_split_pair(C, it.X, opt);
        if (!sp) continue;
        const auto& [iota, pi] = *sp;
        out.push_back({C, it.mono.compose(iota), pi.compose(it.retr)});
        if (C->total_dim() < it.X->total_dim()) {
          auto [W, inclW] = kernel_of(pi);
          ModuleMap piW = complement_retraction(iota, inclW);
          work.push_back({W, it.mono.compose(inclW), piW.compose(it.retr)});
        }
        split = true;
        break;
      }
    }
    if (split) continue;
    if (it.X->total_dim() > 1) {
      if (auto fit = try_fitting(it.X, opt)) {
        work.push_back({fit->a.piece, it.mono.compose(fit->a.mono),
                        fit->a.retraction.compose(it.retr)});
        work.push_back({fit->b.piece, it.mono.compose(fit->b.mono),
                        fit->b.retraction.compose(it.retr)});
        continue;
      }
      auto cert = certify_local(it.X);
      require(cert.has_value() && *cert, Errc::unsupported,
              "decomposition of '" + M->name + "' not certified at piece '" + it.X->name + "'");
    }
    out.push_back({it.X, it.mono, it.retr});
  }
  /* Deterministic report order: big pieces first, then by name. */
  std::stable_sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
    if (a.piece->total_dim() != b.piece->total_dim())
      return a.piece->total_dim() > b.piece->total_dim();
    return a.piece->name < b.piece->name;
  });
  return out;
}

}  // namespace bw
