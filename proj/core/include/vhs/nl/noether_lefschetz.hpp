#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vhs/exact/matrix.hpp"
#include "vhs/exact/subspace.hpp"
#include "vhs/integral/integral_element.hpp"

namespace vhs {

/// An integral element E at a Hodge structure of even weight 2m, a class zeta in H^{m,m}
/// (coordinates in the basis of that level) and optionally a generator omega of H^{2m,0}.
struct NLInput {
  IntegralElement e;
  Vec zeta;
  std::optional<Vec> omega;
};

/// Throws PreconditionError unless the weight is even, zeta is a nonzero vector of H^{m,m}
/// and omega, when present, is a nonzero vector of H^{2m,0}.
void validate(const NLInput& inp);

/// h^{2m,0} + ... + h^{m+1,m-1}. Throws PreconditionError for odd weight.
std::size_t nl_codim(const HodgeNumbers& h);

/// Matrix of the equations Q(eta, phi(zeta)) = 0: rows eta over the basis of H^{m+1,m-1},
/// columns phi over the basis of E.
Mat e_zeta_equations(const NLInput& inp);
/// E_zeta as a subspace of g^{-1,1}.
Subspace e_zeta(const NLInput& inp);
/// dim E - dim E_zeta.
std::size_t codim_e_zeta(const NLInput& inp);

/// True when phi -> phi(omega) maps E injectively into H^{m+1,m-1}, with omega the given
/// generator (or the first basis vector of H^{2m,0}).
bool is_calabi_yau_type(const NLInput& inp);

/// Q_zeta(phi_i, phi_j) = Q(phi_i phi_j omega, zeta) on the basis of E. Needs weight 4,
/// h^{4,0} = 1 and E of Calabi-Yau type (PreconditionError otherwise); throws CheckFailure
/// if the result is not symmetric.
Mat quadric_q_zeta(const NLInput& inp);

enum class SigmaMode {
  /// dim Im{E_zeta x H^{4,0} -> H^{3,1}}; weight 4 only.
  Verbatim,
  /// Any even weight: span of the images of E_zeta x Sym^{m-2-p} E x H^{2m-p,p} -> H^{m+1,m-1},
  /// 0 <= p <= m-2. Agrees with Verbatim for m = 2.
  TypeConsistent,
};

std::size_t sigma_zeta(const NLInput& inp, SigmaMode mode = SigmaMode::Verbatim);

struct RefinedBoundReport {
  std::size_t codim = 0;          ///< codim_E E_zeta
  std::size_t h_lower = 0;        ///< h^{m-1,m+1}
  std::size_t sigma = 0;
  std::size_t bound = 0;          ///< h^{m-1,m+1} - sigma
  bool holds = false;             ///< codim <= bound
  bool equality = false;
  std::optional<std::size_t> q_rank;  ///< rank Q_zeta when defined
};

RefinedBoundReport refined_bound(const NLInput& inp, SigmaMode mode = SigmaMode::Verbatim);

/// Calabi-Yau type integral element for weight 4, h = (1, a, b, a, 1) with the diagonal form:
/// phi_i sends the generator of H^{4,0} to e_{3,i} and e_{3,j} to T(i,j) = sum_t c_t x(t,i) x(t,j) e_{2,t}.
/// x is b x a. Throws PreconditionError on shape mismatch.
IntegralElement cy_type_element(const GradedLie& lie, const Mat& x, const std::vector<Scalar>& c);

}  // namespace vhs
