#include "bw/algebra.hpp"

#include <algorithm>

#include "scratch.hpp"

namespace bw {

namespace {

constexpr std::size_t kPathCountCap = 200000;

bool tail_matches(const Path& p, const Path& f) {
  std::size_t L = f.arrows.size();
  if (L > p.arrows.size()) return false;
  std::size_t off = p.arrows.size() - L;
  for (std::size_t i = 0; i < L; ++i)
    if (p.arrows[off + i] != f.arrows[i]) return false;
  return true;
}

bool tail_hits_forbidden(const Path& p, const std::vector<Path>& forb) {
  for (const auto& f : forb)
    if (tail_matches(p, f)) return true;
  return false;
}

/* All literal paths from v avoiding monomial generators as subwords, sorted
 * by (length, arrow sequence).  Extending only clean paths keeps the suffix
 * check sufficient. */
std::vector<Path> enumerate_clean_paths(const Quiver& Q, int v,
                                        const std::vector<Path>& monomials, int cap,
                                        std::size_t* count_guard) {
  std::vector<Path> out{trivial_path(v)};
  std::vector<Path> frontier = out;
  int len = 0;
  while (!frontier.empty()) {
    require(++len <= cap, Errc::invalid_input,
            "presentation not confirmed finite-dimensional: live path of length > " +
                std::to_string(cap) + " from vertex " + Q.vertices[v]);
    std::vector<Path> next;
    for (const auto& p : frontier) {
      int w = p.target(Q);
      for (int a = 0; a < Q.n_arrows(); ++a) {
        if (Q.arrows[a].src != w) continue;
        Path ext = p;
        ext.arrows.push_back(a);
        if (tail_hits_forbidden(ext, monomials)) continue;
        next.push_back(std::move(ext));
      }
    }
    require(*count_guard + next.size() <= kPathCountCap, Errc::invalid_input,
            "path enumeration exceeded the global count cap");
    *count_guard += next.size();
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    return a.arrows < b.arrows;
  });
  return out;
}

}  // namespace

std::vector<std::pair<int, Value>> PathBasis::reduce_path(const Path& p) const {
  const VertexBlock& B = blocks[p.src];
  const Field& F = B.rel_rref.field();
  auto it = B.index.find(p.key());
  if (it == B.index.end()) return {};
  int n = static_cast<int>(B.paths.size());
  std::vector<Value> vec(n, F.zero());
  vec[it->second] = F.one();
  for (int r = 0; r < static_cast<int>(B.row_pivot.size()); ++r) {
    int c = B.row_pivot[r];
    if (F.is_zero(vec[c])) continue;
    Value f = vec[c];
    for (int j = 0; j < n; ++j) F.submul_in(vec[j], f, B.rel_rref.at(r, j));
  }
  std::vector<std::pair<int, Value>> out;
  for (std::size_t k = 0; k < B.basis_coords.size(); ++k)
    if (!F.is_zero(vec[B.basis_coords[k]])) out.emplace_back(static_cast<int>(k), vec[B.basis_coords[k]]);
  return out;
}

namespace {

Classification classify(const Presentation& P, const PathBasis& basis) {
  Classification c;
  const Quiver& Q = P.quiver;
  c.monomial = true;
  for (const auto& r : P.relations)
    if (r.terms.size() != 1) {
      c.monomial = false;
      c.notes.push_back("relation '" + r.to_string(Q, P.field) + "' is not monomial");
      break;
    }

  bool sb = true;
  for (int v = 0; v < Q.n_vertices(); ++v) {
    int in = 0, out = 0;
    for (const auto& a : Q.arrows) {
      if (a.src == v) ++out;
      if (a.tgt == v) ++in;
    }
    if (in > 2 || out > 2) {
      sb = false;
      c.notes.push_back("vertex " + Q.vertices[v] + " has in-degree " + std::to_string(in) +
                        ", out-degree " + std::to_string(out));
    }
  }
  for (int b = 0; b < Q.n_arrows(); ++b) {
    int succ = 0, pred = 0;
    for (int a = 0; a < Q.n_arrows(); ++a) {
      if (Q.arrows[a].src == Q.arrows[b].tgt &&
          !basis.is_zero_class(compose(Q, arrow_path(Q, a), arrow_path(Q, b))))
        ++succ;
      if (Q.arrows[a].tgt == Q.arrows[b].src &&
          !basis.is_zero_class(compose(Q, arrow_path(Q, b), arrow_path(Q, a))))
        ++pred;
    }
    if (succ > 1 || pred > 1) {
      sb = false;
      c.notes.push_back("arrow " + Q.arrows[b].label + " extends nontrivially in " +
                        std::to_string(succ) + " ways and lifts in " + std::to_string(pred));
    }
  }
  c.special_biserial = sb;
  return c;
}

}  // namespace

AlgPtr make_algebra(Presentation P, int path_cap) {
  auto A = std::make_shared<Algebra>();
  A->pres = std::move(P);
  const Quiver& Q = A->pres.quiver;
  const Field& F = A->pres.field;

  for (const auto& r : A->pres.relations) {
    if (r.terms.size() == 1) A->monomial_forbidden.push_back(r.terms[0].path);
    for (const auto& t : r.terms) A->string_forbidden.push_back(t.path);
  }

  PathBasis& B = A->basis;
  B.blocks.resize(Q.n_vertices());
  std::size_t count_guard = 0;
  for (int v = 0; v < Q.n_vertices(); ++v) {
    VertexBlock& blk = B.blocks[v];
    blk.paths = enumerate_clean_paths(Q, v, A->monomial_forbidden, path_cap, &count_guard);
    for (std::size_t i = 0; i < blk.paths.size(); ++i)
      blk.index[blk.paths[i].key()] = static_cast<int>(i);
  }

  /* Relation span per source block: rows u * rel * g over the coordinates,
   * with coordinate-less terms dropped (they contain a monomial generator,
   * hence vanish). */
  for (int v = 0; v < Q.n_vertices(); ++v) {
    VertexBlock& blk = B.blocks[v];
    int n = static_cast<int>(blk.paths.size());
    std::vector<std::vector<Value>> rows;
    for (const auto& rel : A->pres.relations) {
      int s = rel.terms[0].path.src;
      int t = rel.terms[0].path.target(Q);
      for (const auto& g : blk.paths) {
        if (g.target(Q) != s) continue;
        for (const auto& u : B.blocks[t].paths) {
          std::vector<Value> row(n, F.zero());
          bool nonzero = false;
          for (const auto& term : rel.terms) {
            Path full = compose(Q, u, compose(Q, term.path, g));
            auto it = blk.index.find(full.key());
            if (it == blk.index.end()) continue;
            F.add_in(row[it->second], term.coeff);
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }
    Matrix M(F, static_cast<int>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < n; ++j) M.at(static_cast<int>(i), j) = rows[i][j];
    std::vector<int> order(n);
    for (int j = 0; j < n; ++j) order[j] = n - 1 - j;
    RrefResult rr = rref_in_place(M, order);
    std::vector<int> keep(rr.rank);
    for (int k = 0; k < rr.rank; ++k) keep[k] = k;
    blk.rel_rref = M.rows_subset(keep);
    blk.row_pivot = rr.pivot_cols;
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    for (int j = 0; j < n; ++j)
      if (!is_pivot[j]) blk.basis_coords.push_back(j);
    B.total_dim += static_cast<int>(blk.basis_coords.size());
  }

  /* Radical filtration: dim J^k as an honest rank computation. */
  for (int k = 0;; ++k) {
    int dim = 0;
    for (const auto& blk : B.blocks) {
      int n = static_cast<int>(blk.paths.size());
      std::vector<int> deep;
      for (int j = 0; j < n; ++j)
        if (blk.paths[j].length() >= k) deep.push_back(j);
      if (deep.empty()) continue;
      Matrix M(F, static_cast<int>(deep.size()), n);
      for (std::size_t i = 0; i < deep.size(); ++i) M.at(static_cast<int>(i), deep[i]) = F.one();
      dim += rank_of(blk.rel_rref.vstack(M)) - blk.rel_rref.rows();
    }
    B.jpower_dims.push_back(dim);
    if (dim == 0) {
      B.loewy_length = k;
      break;
    }
    require(k <= path_cap + 1, Errc::internal, "radical filtration failed to terminate");
  }

  A->cls = classify(A->pres, B);
  A->canonical_text = A->pres.canonical_text();
  A->hash = A->pres.hash_hex();
  A->scratch = std::make_shared<AlgebraScratch>();
  return A;
}

namespace {

const std::map<std::string, const char*>& builtin_table() {
  static const std::map<std::string, const char*> table = {
      {"ex2", R"(# two parallel arrows and a return arrow
vertices: 1 2
arrow alpha: 1 -> 2
arrow beta: 1 -> 2
arrow gamma: 2 -> 1
rel: gamma.beta
rel: alpha.gamma
rel: beta.gamma
)"},
      {"ex6", R"(# two commuting squares feeding two loops
vertices: 1 2 3 4 5 6 7 8
arrow alpha: 1 -> 2
arrow beta: 1 -> 3
arrow chi: 5 -> 2
arrow psi: 5 -> 3
arrow gamma: 2 -> 4
arrow rho: 2 -> 6
arrow delta: 3 -> 4
arrow sigma: 3 -> 6
arrow epsilon: 4 -> 8
arrow epsilonp: 8 -> 8
arrow tau: 6 -> 7
arrow taup: 7 -> 7
rel: gamma.alpha - delta.beta
rel: rho.chi - sigma.psi
rel: gamma.chi
rel: rho.alpha
rel: delta.psi
rel: sigma.beta
rel: epsilon.gamma
rel: epsilonp.epsilon
rel: epsilonp.epsilonp
rel: taup.tau
rel: taup.taup
rel: tau.sigma
)"},
      {"ex7-lambda", R"(# five sources into a hub with two loop tails
vertices: 1 2 3 4 5 6 7 8
arrow alpha: 1 -> 2
arrow beta1: 5 -> 2
arrow beta2: 6 -> 2
arrow gamma1: 7 -> 2
arrow gamma2: 8 -> 2
arrow delta: 2 -> 3
arrow epsilon: 2 -> 4
arrow rho: 3 -> 3
arrow sigma: 4 -> 4
rel: delta.alpha
rel: epsilon.alpha
rel: epsilon.beta1
rel: epsilon.beta2
rel: delta.gamma1
rel: delta.gamma2
rel: rho.delta
rel: sigma.epsilon
rel: rho.rho
rel: sigma.sigma
)"},
      {"ex7-lambda1", R"(# ex7-lambda extended by one source vertex over beta1/beta2
vertices: 1 2 3 4 5 6 7 8 9
arrow alpha: 1 -> 2
arrow beta1: 5 -> 2
arrow beta2: 6 -> 2
arrow gamma1: 7 -> 2
arrow gamma2: 8 -> 2
arrow delta: 2 -> 3
arrow epsilon: 2 -> 4
arrow rho: 3 -> 3
arrow sigma: 4 -> 4
arrow chi1: 9 -> 5
arrow chi2: 9 -> 6
rel: delta.alpha
rel: epsilon.alpha
rel: epsilon.beta1
rel: epsilon.beta2
rel: delta.gamma1
rel: delta.gamma2
rel: rho.delta
rel: sigma.epsilon
rel: rho.rho
rel: sigma.sigma
rel: beta1.chi1 - beta2.chi2
)"},
      {"ex7-delta", R"(# ex7-lambda1 extended once more over gamma1/gamma2
vertices: 1 2 3 4 5 6 7 8 9 10
arrow alpha: 1 -> 2
arrow beta1: 5 -> 2
arrow beta2: 6 -> 2
arrow gamma1: 7 -> 2
arrow gamma2: 8 -> 2
arrow delta: 2 -> 3
arrow epsilon: 2 -> 4
arrow rho: 3 -> 3
arrow sigma: 4 -> 4
arrow chi1: 9 -> 5
arrow chi2: 9 -> 6
arrow psi1: 10 -> 7
arrow psi2: 10 -> 8
rel: delta.alpha
rel: epsilon.alpha
rel: epsilon.beta1
rel: epsilon.beta2
rel: delta.gamma1
rel: delta.gamma2
rel: rho.delta
rel: sigma.epsilon
rel: rho.rho
rel: sigma.sigma
rel: beta1.chi1 - beta2.chi2
rel: gamma1.psi1 - gamma2.psi2
)"},
  };
  return table;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : builtin_table()) out.push_back(k);
  return out;
}

bool is_builtin(const std::string& name) { return builtin_table().count(name) > 0; }

std::string builtin_dsl(const std::string& name) {
  auto it = builtin_table().find(name);
  require(it != builtin_table().end(), Errc::usage, "unknown builtin algebra '" + name + "'");
  return it->second;
}

AlgPtr builtin_algebra(const std::string& name, std::optional<Field> field) {
  return make_algebra(parse_presentation(builtin_dsl(name), field));
}

AlgPtr load_algebra(const std::string& name_or_path, std::optional<Field> field) {
  if (is_builtin(name_or_path)) return builtin_algebra(name_or_path, field);
  return make_algebra(parse_presentation_file(name_or_path, field));
}

}  // namespace bw
