#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vhs/exact/matrix.hpp"
#include "vhs/jacobian/graded_ideal.hpp"
#include "vhs/jacobian/poly.hpp"

namespace vhs {

/// Hypersurface F = 0 in P^{n+1}, optionally containing the plane x_1 = x_2 = x_3 = 0
/// through a decomposition F = x_1 G_1 + x_2 G_2 + x_3 G_3.
struct HypersurfaceFixture {
  int n = 0;
  int d = 0;
  Poly F;
  std::optional<std::array<Poly, 3>> plane;
};

/// Checks degrees, variable counts and the identity F = sum x_i G_i; throws PreconditionError.
void validate(const HypersurfaceFixture& fix);

/// Greedy decomposition: monomials divisible by x_1 go to G_1, the remaining ones divisible
/// by x_2 to G_2, the rest to G_3. Throws PreconditionError when F does not contain the plane.
std::array<Poly, 3> extract_plane_decomposition(const Poly& F);

/// Fixture from a raw polynomial in n + 2 variables; with_plane extracts the G_i.
HypersurfaceFixture hypersurface_from_poly(const Poly& F, bool with_plane = false);

HypersurfaceFixture fermat_fixture(int n, int d);
/// Fermat polynomial plus extra_terms seeded monomials with small coefficients.
HypersurfaceFixture seeded_fixture(int n, int d, std::uint64_t seed, std::size_t extra_terms = 6);
/// Fourfold of degree d containing the plane: G_i = x_i^{d-1} + x_{i+3}^{d-1} + seeded terms.
HypersurfaceFixture plane_fixture(int d, std::uint64_t seed, std::size_t extra_terms = 8);
/// As plane_fixture, but G_3 restricts to G_1 on the plane, so the restricted sequence is not regular.
HypersurfaceFixture degenerate_plane_fixture(int d, std::uint64_t seed);

/// Jacobian ring of a fixture together with the plane ideals, sharing memoized slices.
class HypersurfaceRing {
 public:
  explicit HypersurfaceRing(HypersurfaceFixture fix, std::size_t budget = kDefaultRingBudget);

  const HypersurfaceFixture& fixture() const { return fix_; }
  std::size_t num_vars() const { return static_cast<std::size_t>(fix_.n) + 2; }
  int n() const { return fix_.n; }
  int d() const { return fix_.d; }
  std::size_t budget() const { return budget_; }
  /// (n + 2)(d - 2).
  int socle_degree() const { return (fix_.n + 2) * (fix_.d - 2); }

  const GradedIdeal& jacobian() const { return jacobian_; }
  bool has_plane() const { return fix_.plane.has_value(); }
  /// (x_1, x_2, x_3, G_1, G_2, G_3) in V.
  const GradedIdeal& plane_ideal() const;
  /// (G_1, G_2, G_3) restricted to the plane, in the ring of the remaining variables.
  const GradedIdeal& restricted_ideal() const;
  std::size_t plane_vars() const { return num_vars() - 3; }
  /// plane_vars() * (d - 2).
  int restricted_socle_degree() const;
  /// Sets x_1, x_2, x_3 to zero.
  Poly restrict_to_plane(const Poly& p) const;

 private:
  void require_plane() const;
  HypersurfaceFixture fix_;
  std::size_t budget_;
  GradedIdeal jacobian_;
  GradedIdeal plane_ideal_;
  GradedIdeal restricted_;
};

struct SmoothnessReport {
  bool pass = true;          ///< no mismatch among the checked degrees
  bool complete = false;     ///< degree socle + 1 was reached and V^{socle+1} lies in J
  int socle_degree = 0;
  int checked_up_to = -1;
  std::optional<int> first_mismatch;
  std::vector<long long> expected;
  std::vector<long long> actual;
};

/// Compares dim V^k/J_k with the complete-intersection Hilbert function for k up to
/// socle + 1, stopping at max_degree or at the ring budget. Quotient dimensions are computed
/// modulo p = 2^61 - 1, which bounds the rational ones from above. A complete pass means
/// V^{socle+1} lies in J over Q, so V/J is Artinian and the partials form a regular sequence.
SmoothnessReport smoothness_check(const HypersurfaceRing& ring, std::optional<int> max_degree = std::nullopt);

struct RegularityReport {
  bool regular = false;      ///< the restricted quotient vanishes past its socle degree
  bool hilbert_match = false;
  int socle_degree = 0;
  std::size_t socle_dim = 0;
};

/// Regularity of (G_1, G_2, G_3) on the plane via the Hilbert function of the restricted ring.
RegularityReport restricted_regularity(const HypersurfaceRing& ring);

/// dim V^{(p+1)d-n-2}/J, the primitive piece H^{n-p,p}. Uses duality with socle - k when
/// V^k exceeds the budget. Assumes the fixture is smooth.
std::size_t hodge_piece_dim(const HypersurfaceRing& ring, int p);

/// Pairing V^k/J_k x V^{s-k}/J_{s-k} -> V^s/J_s in quotient bases, s the socle degree.
Mat macaulay_pairing(const HypersurfaceRing& ring, int k);

/// Pairing on the restricted ring of the plane, socle degree 3d - 6 for fourfolds.
Mat restricted_pairing(const HypersurfaceRing& ring, int k);

/// Matrix of multiplication by a (degree a) from V^b/J_b to V^{a+b}/J_{a+b}.
Mat period_multiplication(const HypersurfaceRing& ring, const Poly& a, int b);

struct TPCodimReport {
  std::size_t dim_t = 0;            ///< dim V^d/J_d
  std::size_t dim_plane_ideal = 0;  ///< dim (x, G)_d
  std::size_t via_slice = 0;        ///< dim V^d - dim (x, G)_d
  std::size_t via_restriction = 0;  ///< rank of V^d/J_d -> V_P^d/(G)_{P,d}
  std::size_t dim_vp = 0;           ///< dim V_P^d
  std::size_t dim_gp = 0;           ///< dim (G)_{P,d}
  std::size_t koszul = 0;           ///< dim V_P^d - 3 dim V_P^1
};

/// Codimension of T_P = (x, G)_d / J_d in V^d/J_d, two ways. Throws PreconditionError when the
/// restricted sequence is not regular and CheckFailure when the two counts disagree.
TPCodimReport t_p_codim(const HypersurfaceRing& ring);

/// Rank of Q_zeta(S, S') = lambda_P((S S' omega)|_P) on V^d/J_d, omega over V^{d-6}.
std::size_t rank_q_zeta(const HypersurfaceRing& ring);

struct NLPipelineReport {
  int d = 0;
  SmoothnessReport smoothness;
  RegularityReport regularity;
  std::size_t h40 = 0;
  std::size_t h31 = 0;              ///< dim V^d/J_d
  std::size_t h13 = 0;              ///< dim V^{2d-6}/J_{2d-6}
  std::size_t nl_codim = 0;         ///< h40 + h31
  std::size_t dim_j_d = 0;
  std::size_t dim_plane_ideal = 0;
  std::size_t codim_slice = 0;
  std::size_t codim_restriction = 0;
  std::optional<std::size_t> q_rank;
  std::size_t dim_vp = 0;
  std::size_t dim_gp = 0;
  std::size_t sigma = 0;            ///< dim T_P . V^{d-6} in V^{2d-6}/J
  std::size_t bound = 0;            ///< h13 - sigma
  bool holds = false;
  bool equality = false;
  std::vector<std::string> failures;
};

/// The sextic-with-plane pipeline for fourfolds of degree d >= 6 containing the plane.
NLPipelineReport nl_pipeline(const HypersurfaceRing& ring);

struct SymmetrizerKernelReport {
  std::size_t h20 = 0;          ///< dim V^{d-4}/J
  std::size_t dim_e = 0;        ///< dim V^d/J_d
  std::size_t h11 = 0;          ///< dim V^{2d-4}/J
  std::size_t equations = 0;
  std::size_t kernel_dim = 0;
  std::size_t lower_bound = 0;  ///< dim V^4/J_4
  bool multiplications_in_kernel = false;
  std::size_t multiplication_span = 0;
};

/// Kernel of H^{2,0}-dual x E -> Lambda^2 H^{2,0}-dual x H^{1,1} for a surface in P^3 with d >= 5,
/// built from ring multiplication. Throws PreconditionError when the smoothness gate fails.
SymmetrizerKernelReport symmetrizer_kernel(const HypersurfaceRing& ring);

}  // namespace vhs
