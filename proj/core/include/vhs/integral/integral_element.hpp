#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vhs/exact/matrix.hpp"
#include "vhs/exact/subspace.hpp"
#include "vhs/hodge/graded_lie.hpp"

namespace vhs {

/// True iff all pairwise brackets of the given elements of g^{-1,1} vanish.
/// Throws PreconditionError if a vector has the wrong length.
bool is_integral(const GradedLie& lie, const std::vector<Vec>& vectors);

/// An abelian subspace E of g^{-1,1}, with a fixed ordered basis.
///
/// Holds a non-owning reference: the GradedLie must outlive the element.
class IntegralElement {
 public:
  /// Throws PreconditionError on dependent or malformed vectors and CheckFailure
  /// when some bracket is nonzero.
  IntegralElement(const GradedLie& lie, std::vector<Vec> basis);

  const GradedLie& lie() const { return *lie_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  Subspace span() const { return Subspace::span(lie_->piece_dim(1), basis_); }

 private:
  const GradedLie* lie_;
  std::vector<Vec> basis_;
};

/// Matrix of v -> ([v, e_1], ..., [v, e_k]) from g^{-1,1} to (g^{-2,2})^k.
Mat polar_equations(const GradedLie& lie, const std::vector<Vec>& e);

/// H(E) = {v in g^{-1,1} : [v, E] = 0}.
Subspace polar_space(const GradedLie& lie, const std::vector<Vec>& e);
inline Subspace polar_space(const IntegralElement& e) { return polar_space(e.lie(), e.basis()); }

struct PolarReport {
  std::vector<std::size_t> c;     ///< c_0, ..., c_{p-1} for the flag E_0 < E_1 < ... < E_{p-1}
  std::size_t sum_c = 0;
  Subspace polar;                 ///< H(E)
  std::size_t tangent_codim = 0;
  bool ordinary = false;          ///< sum_c == tangent_codim
  std::size_t flags_tried = 0;
};

/// Ranks of the polar equations along the flag spanned by the leading vectors of `flag`.
/// `flag` must be an ordered basis of E.
PolarReport rank_sequence(const IntegralElement& e, const std::vector<Vec>& flag);
/// Flag given by a permutation of E's basis.
PolarReport rank_sequence(const IntegralElement& e, const std::vector<std::size_t>& order);

/// Rank of the linearized commutation equations [psi(u), v] + [u, psi(v)] = 0 on
/// Hom(E, g^{-1,1}/E); the codimension of the integral-element variety at a smooth point.
std::size_t tangent_codim(const IntegralElement& e);

/// Cartan's test: maximum of sum c_i over `trials` seeded random flags, compared with tangent_codim.
PolarReport cartan_test(const IntegralElement& e, std::size_t trials = 8, std::uint64_t seed = 0);

// ---- weight two: g^{-1,1} = Hom(H^{2,0}, H^{1,1}) ----------------------------------------

/// Integral element of dimension `dim` grown by adding seeded random vectors of H(E) outside E,
/// with entries in {-2..2}, restarting when a maximal element is hit. Throws CheckFailure if
/// 32 restarts all stall below `dim`.
IntegralElement random_integral_element(const GradedLie& lie, std::size_t dim, std::uint64_t seed);

/// Coordinate vector of the element of g^{-1,1} whose 2 -> 1 block is `a` (h^{1,1} x h^{2,0};
/// column i is the image of e_{2,i}).
Vec w2_from_matrix(const GradedLie& lie, const Mat& a);
/// The 2 -> 1 block of an element of g^{-1,1}.
Mat w2_to_matrix(const GradedLie& lie, const Vec& v);

/// E spanned by v_a = e_{1a} + lambda_a e_{2a} + mu_a e_{3a} (h^{2,0} = 3, diagonal form), where
/// e_{ia} sends the i-th basis vector of H^{2,0} to the a-th of H^{1,1}.
/// Throws CheckFailure if the result is not integral or not of dimension h^{1,1}.
IntegralElement normal_form_w2(const GradedLie& lie, const std::vector<Scalar>& lambda, const std::vector<Scalar>& mu);

/// Integral element of the sharp dimension: h^{1,1} for h^{2,0} = 2, 3h^{1,1}/2 for h^{2,0} = 3
/// with h^{1,1} even (needs a rational isotropic subspace, i.e. MiddleForm::Split).
IntegralElement sharp_construction_w2(const GradedLie& lie);

/// Upper bound for abelian subspaces of g^{-1,1} in weight two:
/// h^{2,0}h^{1,1}/2 for h^{1,1} even, h^{2,0}(h^{1,1}-1)/2 + 1 for h^{1,1} odd.
std::size_t sharp_bound_w2(std::size_t h20, std::size_t h11);

struct SearchReport {
  std::size_t best_dim = 0;
  std::vector<Vec> witness;     ///< basis of an abelian subspace of dimension best_dim
  bool exhaustive = false;      ///< the finite candidate family was searched completely
  std::size_t states = 0;       ///< subspaces visited (exhaustive) or growth steps (random)
  std::size_t trials = 0;
};

struct SearchOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  /// Run the exhaustive search when dim g^{-1,1} does not exceed this.
  std::size_t exhaustive_dim_limit = 8;
  /// Abort the exhaustive search (falling back to random trials) after this many states.
  std::size_t state_limit = 2'000'000;
};

/// Largest abelian subspace found. Exhaustive mode enumerates every abelian subspace spanned
/// by vectors with entries in {0, 1}; random mode grows E greedily inside H(E).
SearchReport max_abelian_search(const GradedLie& lie, const SearchOptions& opts = {});

// ---- symmetrizers ------------------------------------------------------------------------

/// Bilinear data Phi: A x B -> C given by phi[a][b] in Q^{dim_c}.
struct Bilinear {
  std::size_t dim_a = 0, dim_b = 0, dim_c = 0;
  std::vector<std::vector<Vec>> phi;
};

/// Sym Phi = {Psi in Hom(A, B) : Phi(a, Psi(a')) = Phi(a', Psi(a))}, as a subspace of the
/// coordinates Psi_{a b} (index a * dim_b + b, Psi(e_a) = sum_b Psi_{ab} e_b).
Subspace symmetrizer(const Bilinear& phi);

}  // namespace vhs
