#include "vhs/integral/integral_element.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "vhs/error.hpp"
#include "vhs/exact/echelon.hpp"
#include "vhs/exact/modular.hpp"
#include "vhs/exact/random.hpp"

namespace vhs {

namespace {

void check_lengths(const GradedLie& lie, const std::vector<Vec>& vs) {
  for (const auto& v : vs)
    if (v.size() != lie.piece_dim(1))
      throw PreconditionError("vector of length " + std::to_string(v.size()) + " is not in g^{-1,1} (dim " +
                              std::to_string(lie.piece_dim(1)) + ")");
}

// [u_j, v] for every basis vector u_j of g^{-1,1}, as columns.
std::vector<Vec> brackets_with_basis(const GradedLie& lie, const Vec& v) {
  const std::size_t d1 = lie.piece_dim(1);
  const std::size_t d2 = lie.piece_dim(2);
  std::vector<Vec> cols(d1, Vec(d2));
  if (d2 == 0) return cols;
  const BracketTable& t = lie.bracket_table(1, 1);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t m = 0; m < d1; ++m) {
      if (sgn(v[m]) == 0) continue;
      for (const auto& [k, x] : t[j][m]) cols[j][k] += v[m] * x;
    }
  return cols;
}

std::size_t polar_rank(const GradedLie& lie, const std::vector<Vec>& e) {
  if (e.empty()) return 0;
  return rank(polar_equations(lie, e));
}

}  // namespace

bool is_integral(const GradedLie& lie, const std::vector<Vec>& vectors) {
  check_lengths(lie, vectors);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (!is_zero(lie.bracket(1, vectors[i], 1, vectors[j]))) return false;
  return true;
}

IntegralElement::IntegralElement(const GradedLie& lie, std::vector<Vec> basis) : lie_(&lie), basis_(std::move(basis)) {
  check_lengths(lie, basis_);
  if (Subspace::span(lie.piece_dim(1), basis_).dim() != basis_.size())
    throw PreconditionError("integral element basis is linearly dependent");
  if (!is_integral(lie, basis_)) throw CheckFailure("vectors do not span an abelian subspace of g^{-1,1}");
}

Mat polar_equations(const GradedLie& lie, const std::vector<Vec>& e) {
  check_lengths(lie, e);
  const std::size_t d1 = lie.piece_dim(1);
  const std::size_t d2 = lie.piece_dim(2);
  Mat m(d2 * e.size(), d1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto cols = brackets_with_basis(lie, e[i]);
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k) m(i * d2 + k, j) = cols[j][k];
  }
  return m;
}

Subspace polar_space(const GradedLie& lie, const std::vector<Vec>& e) {
  if (e.empty()) return Subspace::whole(lie.piece_dim(1));
  return kernel(polar_equations(lie, e));
}

PolarReport rank_sequence(const IntegralElement& e, const std::vector<Vec>& flag) {
  const GradedLie& lie = e.lie();
  if (flag.size() != e.dim() || Subspace::span(lie.piece_dim(1), flag) != e.span())
    throw PreconditionError("flag vectors must form a basis of E");
  PolarReport rep;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    const std::vector<Vec> ei(flag.begin(), flag.begin() + static_cast<std::ptrdiff_t>(i));
    rep.c.push_back(polar_rank(lie, ei));
    rep.sum_c += rep.c.back();
  }
  rep.polar = polar_space(e);
  rep.tangent_codim = tangent_codim(e);
  rep.ordinary = rep.sum_c == rep.tangent_codim;
  rep.flags_tried = 1;
  return rep;
}

PolarReport rank_sequence(const IntegralElement& e, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i || sorted.size() != e.dim()) throw PreconditionError("flag order is not a permutation");
  std::vector<Vec> flag;
  for (auto i : order) flag.push_back(e.basis()[i]);
  return rank_sequence(e, flag);
}

std::size_t tangent_codim(const IntegralElement& e) {
  const GradedLie& lie = e.lie();
  const std::size_t p = e.dim();
  if (p < 2) return 0;
  const std::size_t d2 = lie.piece_dim(2);
  const std::vector<std::size_t> comp = e.span().complement_indices();
  // b[j][c] = [u_c, e_j].
  std::vector<std::vector<Vec>> b(p);
  for (std::size_t j = 0; j < p; ++j) {
    const auto cols = brackets_with_basis(lie, e.basis()[j]);
    for (auto c : comp) b[j].push_back(cols[c]);
  }
  const std::size_t q = comp.size();
  const std::size_t pairs = p * (p - 1) / 2;
  Mat m(pairs * d2, p * q);
  std::size_t row = 0;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j, row += d2) {
      for (std::size_t c = 0; c < q; ++c) {
        for (std::size_t k = 0; k < d2; ++k) {
          m(row + k, i * q + c) += b[j][c][k];
          m(row + k, j * q + c) -= b[i][c][k];
        }
      }
    }
  }
  return rank(m);
}

PolarReport cartan_test(const IntegralElement& e, std::size_t trials, std::uint64_t seed) {
  SeededStream rng(seed);
  const std::size_t p = e.dim();
  PolarReport best;
  bool have = false;
  for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
    Mat g(p, p);
    do {
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) g(i, j) = rng.next_scalar(5);
    } while (rank(g) != p);
    std::vector<Vec> flag;
    for (std::size_t i = 0; i < p; ++i) {
      Vec v(e.lie().piece_dim(1));
      for (std::size_t j = 0; j < p; ++j)
        if (sgn(g(i, j)) != 0)
          for (std::size_t k = 0; k < v.size(); ++k) v[k] += g(i, j) * e.basis()[j][k];
      flag.push_back(std::move(v));
    }
    PolarReport rep = rank_sequence(e, flag);
    if (!have || rep.sum_c > best.sum_c) {
      best = std::move(rep);
      have = true;
    }
  }
  best.flags_tried = std::max<std::size_t>(trials, 1);
  return best;
}

IntegralElement random_integral_element(const GradedLie& lie, std::size_t dim, std::uint64_t seed) {
  SeededStream rng(seed);
  const std::size_t d1 = lie.piece_dim(1);
  std::size_t best = 0;
  for (int restart = 0; restart < 32; ++restart) {
    std::vector<Vec> e;
    for (std::size_t attempt = 0; e.size() < dim && attempt < 16 * (dim + 1); ++attempt) {
      const Subspace h = polar_space(lie, e);
      const Subspace es = Subspace::span(d1, e);
      if (h.dim() == es.dim()) break;
      Vec v(d1);
      for (const auto& b : h.basis()) {
        const long c = rng.next_int(-2, 2);
        if (c == 0) continue;
        for (std::size_t k = 0; k < d1; ++k)
          if (sgn(b[k]) != 0) v[k] += c * b[k];
      }
      if (!es.contains(v)) e.push_back(std::move(v));
    }
    if (e.size() == dim) return IntegralElement(lie, std::move(e));
    best = std::max(best, e.size());
  }
  throw CheckFailure("random growth stalled at dimension " + std::to_string(best) + " < " + std::to_string(dim));
}

// ---- weight two ---------------------------------------------------------------------------

namespace {

void require_weight_two(const GradedLie& lie) {
  if (lie.weight() != 2) throw PreconditionError("weight-two construction on a Hodge structure of weight " +
                                                 std::to_string(lie.weight()));
}

// index[beta][i] of the basis element sending e_{2,i} to e_{1,beta}.
std::vector<std::vector<std::size_t>> w2_index(const GradedLie& lie) {
  require_weight_two(lie);
  const std::size_t h20 = lie.hodge().level_dim(2), h11 = lie.hodge().level_dim(1);
  std::vector<std::vector<std::size_t>> idx(h11, std::vector<std::size_t>(h20));
  const auto& labels = lie.piece_labels(1);
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k].source_level == 2) idx[labels[k].target_index][labels[k].source_index] = k;
  return idx;
}

}  // namespace

Vec w2_from_matrix(const GradedLie& lie, const Mat& a) {
  const auto idx = w2_index(lie);
  const std::size_t h20 = lie.hodge().level_dim(2), h11 = lie.hodge().level_dim(1);
  if (a.rows() != h11 || a.cols() != h20) throw PreconditionError("weight-two block must be h^{1,1} x h^{2,0}");
  Vec v(lie.piece_dim(1));
  for (std::size_t b = 0; b < h11; ++b)
    for (std::size_t i = 0; i < h20; ++i) v[idx[b][i]] = a(b, i);
  return v;
}

Mat w2_to_matrix(const GradedLie& lie, const Vec& v) {
  const auto idx = w2_index(lie);
  const std::size_t h20 = lie.hodge().level_dim(2), h11 = lie.hodge().level_dim(1);
  if (v.size() != lie.piece_dim(1)) throw PreconditionError("vector is not in g^{-1,1}");
  Mat a(h11, h20);
  for (std::size_t b = 0; b < h11; ++b)
    for (std::size_t i = 0; i < h20; ++i) a(b, i) = v[idx[b][i]];
  return a;
}

IntegralElement normal_form_w2(const GradedLie& lie, const std::vector<Scalar>& lambda, const std::vector<Scalar>& mu) {
  require_weight_two(lie);
  const std::size_t h20 = lie.hodge().level_dim(2), h11 = lie.hodge().level_dim(1);
  if (h20 != 3) throw PreconditionError("normal form needs h^{2,0} = 3");
  if (lambda.size() != h11 || mu.size() != h11) throw PreconditionError("lambda and mu need h^{1,1} entries");
  std::vector<Vec> basis;
  for (std::size_t a = 0; a < h11; ++a) {
    Mat m(h11, 3);
    m(a, 0) = 1;
    m(a, 1) = lambda[a];
    m(a, 2) = mu[a];
    basis.push_back(w2_from_matrix(lie, m));
  }
  if (!is_integral(lie, basis)) throw CheckFailure("normal-form vectors are not abelian for these parameters");
  return IntegralElement(lie, std::move(basis));
}

std::size_t sharp_bound_w2(std::size_t h20, std::size_t h11) {
  if (h11 % 2 == 0) return h20 * h11 / 2;
  return h20 * (h11 - 1) / 2 + 1;
}

IntegralElement sharp_construction_w2(const GradedLie& lie) {
  require_weight_two(lie);
  const std::size_t h20 = lie.hodge().level_dim(2), h11 = lie.hodge().level_dim(1);
  std::vector<Vec> basis;
  if (h20 == 2) {
    // A = [a, 0]: e_{2,0} -> a, e_{2,1} -> 0.
    for (std::size_t b = 0; b < h11; ++b) {
      Mat m(h11, 2);
      m(b, 0) = 1;
      basis.push_back(w2_from_matrix(lie, m));
    }
  } else if (h20 == 3) {
    if (h11 % 2 != 0) throw PreconditionError("h^{2,0} = 3 construction needs h^{1,1} even");
    const std::size_t s = h11 / 2;
    const PolarizedSpace& sp = lie.space();
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = 0; b < s; ++b)
        if (sgn(sp.pairing(sp.index(1, a), sp.index(1, b))) != 0)
          throw PreconditionError("no rational isotropic subspace in this frame; use MiddleForm::Split");
    // U = span(e_{1,0..s-1}). A: e_{2,0} -> 0, e_{2,1}, e_{2,2} -> U. B: e_{2,0} -> U, others -> 0.
    for (std::size_t i = 1; i <= 2; ++i)
      for (std::size_t u = 0; u < s; ++u) {
        Mat m(h11, 3);
        m(u, i) = 1;
        basis.push_back(w2_from_matrix(lie, m));
      }
    for (std::size_t u = 0; u < s; ++u) {
      Mat m(h11, 3);
      m(u, 0) = 1;
      basis.push_back(w2_from_matrix(lie, m));
    }
  } else {
    throw PreconditionError("sharp construction is available for h^{2,0} in {2, 3}");
  }
  return IntegralElement(lie, std::move(basis));
}

namespace {

// Span membership runs over F_p, p = 2^61 - 1. For {0,1}-vectors of length at most 16 every minor is
// bounded by the Hadamard bound 16^8 < p, so ranks and span membership agree with those over Q.

// Candidates are the nonzero {0,1}-vectors; a state is keyed by the set of candidates it contains,
// which determines the subspace since every state is spanned by candidates.
struct Exhaustive {
  const GradedLie& lie;
  std::size_t d1;
  std::vector<Vec> candidates;
  std::vector<std::vector<std::uint64_t>> modular;
  std::vector<std::vector<bool>> commute;
  std::set<std::vector<bool>> visited;
  std::size_t limit;
  SearchReport rep;
  bool aborted = false;

  void prepare() {
    for (std::size_t mask = 1; mask < (std::size_t{1} << d1); ++mask) {
      Vec v(d1);
      std::vector<std::uint64_t> w(d1);
      for (std::size_t i = 0; i < d1; ++i)
        if (mask >> i & 1) v[i] = 1, w[i] = 1;
      candidates.push_back(std::move(v));
      modular.push_back(std::move(w));
    }
    const std::size_t m = candidates.size();
    commute.assign(m, std::vector<bool>(m, true));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        commute[i][j] = commute[j][i] = is_zero(lie.bracket(1, candidates[i], 1, candidates[j]));
  }

  std::vector<bool> members(const ModEchelon& span, const std::vector<bool>& allowed) const {
    std::vector<bool> inside(candidates.size(), false);
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (allowed[i] && span.contains(modular[i])) inside[i] = true;
    return inside;
  }

  void dfs(const ModEchelon& span, const std::vector<bool>& inside, std::vector<std::size_t>& gens,
           const std::vector<bool>& allowed) {
    if (++rep.states > limit) {
      aborted = true;
      return;
    }
    if (gens.size() > rep.best_dim) {
      rep.best_dim = gens.size();
      rep.witness.clear();
      for (auto g : gens) rep.witness.push_back(candidates[g]);
    }
    const std::size_t m = candidates.size();
    std::vector<bool> done = inside;
    for (std::size_t c = 0; c < m; ++c) {
      if (!allowed[c] || done[c]) continue;
      ModEchelon next = span;
      next.insert(modular[c]);
      std::vector<bool> a2 = allowed;
      for (std::size_t i = 0; i < m; ++i) a2[i] = a2[i] && commute[c][i];
      const std::vector<bool> in2 = members(next, a2);
      for (std::size_t i = 0; i < m; ++i)
        if (in2[i]) done[i] = true;
      if (!visited.insert(in2).second) continue;
      gens.push_back(c);
      dfs(next, in2, gens, a2);
      gens.pop_back();
      if (aborted) return;
    }
  }
};

}  // namespace

SearchReport max_abelian_search(const GradedLie& lie, const SearchOptions& opts) {
  const std::size_t d1 = lie.piece_dim(1);
  if (d1 <= std::min<std::size_t>(opts.exhaustive_dim_limit, 16)) {
    Exhaustive ex{lie, d1, {}, {}, {}, {}, opts.state_limit, {}, false};
    ex.prepare();
    std::vector<std::size_t> gens;
    const std::vector<bool> all(ex.candidates.size(), true);
    ex.visited.insert(std::vector<bool>(ex.candidates.size(), false));
    ex.dfs(ModEchelon(d1), std::vector<bool>(ex.candidates.size(), false), gens, all);
    if (!ex.aborted) {
      ex.rep.exhaustive = true;
      return ex.rep;
    }
  }

  SearchReport rep;
  SeededStream rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    std::vector<Vec> e;
    Subspace es = Subspace::zero(d1);
    while (true) {
      const Subspace h = polar_space(lie, e);
      if (h.dim() == es.dim()) break;
      Vec v;
      for (int attempt = 0; attempt < 16; ++attempt) {
        Vec w(d1);
        for (const auto& b : h.basis()) {
          if (rng.next_int(0, 2) != 0) continue;
          const Scalar c = rng.next_nonzero(2);
          for (std::size_t k = 0; k < d1; ++k)
            if (sgn(b[k]) != 0) w[k] += c * b[k];
        }
        if (!es.contains(w)) {
          v = std::move(w);
          break;
        }
      }
      if (v.empty()) {
        for (const auto& b : h.basis())
          if (!es.contains(b)) {
            v = b;
            break;
          }
      }
      e.push_back(v);
      es = Subspace::span(d1, e);
      ++rep.states;
    }
    if (e.size() > rep.best_dim) {
      rep.best_dim = e.size();
      rep.witness = e;
    }
    ++rep.trials;
  }
  return rep;
}

Subspace symmetrizer(const Bilinear& b) {
  if (b.phi.size() != b.dim_a) throw PreconditionError("symmetrizer: phi must have dim_a rows");
  for (const auto& row : b.phi) {
    if (row.size() != b.dim_b) throw PreconditionError("symmetrizer: phi rows must have dim_b entries");
    for (const auto& v : row)
      if (v.size() != b.dim_c) throw PreconditionError("symmetrizer: phi values must lie in Q^{dim_c}");
  }
  const std::size_t unknowns = b.dim_a * b.dim_b;
  const std::size_t pairs = b.dim_a * (b.dim_a - (b.dim_a > 0 ? 1 : 0)) / 2;
  Mat m(pairs * b.dim_c, unknowns);
  std::size_t row = 0;
  // Phi(a, Psi(a')) - Phi(a', Psi(a)) = 0 for a < a'.
  for (std::size_t a = 0; a < b.dim_a; ++a) {
    for (std::size_t a2 = a + 1; a2 < b.dim_a; ++a2, row += b.dim_c) {
      for (std::size_t j = 0; j < b.dim_b; ++j) {
        for (std::size_t c = 0; c < b.dim_c; ++c) {
          m(row + c, a2 * b.dim_b + j) += b.phi[a][j][c];
          m(row + c, a * b.dim_b + j) -= b.phi[a2][j][c];
        }
      }
    }
  }
  return kernel(m);
}

}  // namespace vhs
