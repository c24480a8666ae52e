#include "vhs/jacobian/hypersurface.hpp"

#include <map>
#include <string>

#include "vhs/error.hpp"
#include "vhs/exact/echelon.hpp"
#include "vhs/exact/random.hpp"
#include "vhs/integral/integral_element.hpp"

namespace vhs {

namespace {

Poly poly_from(const IdealSlice& slice, const SparseVec& v) {
  Poly p(slice.num_vars());
  for (const auto& [i, c] : v) p.add_term(slice.monomials()[i], c);
  return p;
}

Poly power(std::size_t num_vars, std::size_t i, int e) {
  Monomial m(num_vars, 0);
  m[i] = e;
  return Poly::monomial(m);
}

Poly seeded_terms(SeededStream& rng, std::size_t num_vars, int degree, std::size_t count) {
  const auto basis = monomial_basis(num_vars, degree);
  Poly p(num_vars);
  for (std::size_t t = 0; t < count; ++t) {
    const auto& m = basis[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(basis.size()) - 1))];
    p.add_term(m, Scalar(rng.next_nonzero(3)));
  }
  return p;
}

HypersurfaceFixture fixture_from_g(std::array<Poly, 3> g) {
  HypersurfaceFixture fix;
  fix.n = 4;
  fix.d = g[0].degree() + 1;
  fix.F = Poly(6);
  for (std::size_t i = 0; i < 3; ++i) fix.F += Poly::variable(6, i) * g[i];
  fix.plane = std::move(g);
  validate(fix);
  return fix;
}

std::vector<Poly> partials(const Poly& F) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < F.num_vars(); ++i) out.push_back(F.derivative(i));
  return out;
}

Scalar socle_value(const IdealSlice& socle, const Poly& p) {
  if (socle.quotient_dim() != 1)
    throw CheckFailure("socle of degree " + std::to_string(socle.degree()) + " has dimension " +
                       std::to_string(socle.quotient_dim()) + ", expected 1");
  return socle.quotient_coordinates(p)[0];
}

Mat pairing(const GradedIdeal& ideal, int socle, int k) {
  if (k < 0 || k > socle)
    throw PreconditionError("pairing degree " + std::to_string(k) + " outside [0, " + std::to_string(socle) + "]");
  const IdealSlice& top = ideal.slice(socle);
  const auto left = ideal.slice(k).quotient_basis();
  const auto right = ideal.slice(socle - k).quotient_basis();
  Mat m(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      m(i, j) = socle_value(top, Poly::monomial(left[i]) * Poly::monomial(right[j]));
  return m;
}

}  // namespace

void validate(const HypersurfaceFixture& fix) {
  if (fix.n < 1) throw PreconditionError("hypersurface dimension n must be at least 1");
  if (fix.d < 2) throw PreconditionError("degree d must be at least 2");
  const std::size_t vars = static_cast<std::size_t>(fix.n) + 2;
  if (fix.F.num_vars() != vars)
    throw PreconditionError("F has " + std::to_string(fix.F.num_vars()) + " variables, expected " +
                            std::to_string(vars));
  if (fix.F.degree() != fix.d)
    throw PreconditionError("F is not homogeneous of degree " + std::to_string(fix.d));
  if (!fix.plane) return;
  if (fix.n != 4) throw PreconditionError("plane data is supported for fourfolds (n = 4) only");
  Poly sum(vars);
  for (std::size_t i = 0; i < 3; ++i) {
    const Poly& g = (*fix.plane)[i];
    if (g.num_vars() != vars) throw PreconditionError("G_i has the wrong number of variables");
    if (!g.is_zero() && g.degree() != fix.d - 1)
      throw PreconditionError("G_" + std::to_string(i + 1) + " is not homogeneous of degree d - 1");
    sum += Poly::variable(vars, i) * g;
  }
  if (!(sum == fix.F)) throw PreconditionError("F differs from x_1 G_1 + x_2 G_2 + x_3 G_3");
}

std::array<Poly, 3> extract_plane_decomposition(const Poly& F) {
  const std::size_t vars = F.num_vars();
  if (vars < 3) throw PreconditionError("need at least three variables to contain the plane");
  std::array<Poly, 3> g{Poly(vars), Poly(vars), Poly(vars)};
  for (const auto& [m, c] : F.terms()) {
    std::size_t i = 0;
    while (i < 3 && m[i] == 0) ++i;
    if (i == 3) throw PreconditionError("F does not vanish on x_1 = x_2 = x_3 = 0");
    Monomial q = m;
    --q[i];
    g[i].add_term(q, c);
  }
  return g;
}

HypersurfaceFixture hypersurface_from_poly(const Poly& F, bool with_plane) {
  if (F.num_vars() < 3) throw PreconditionError("need at least three variables");
  HypersurfaceFixture fix;
  fix.n = static_cast<int>(F.num_vars()) - 2;
  fix.d = F.degree();
  fix.F = F;
  if (with_plane) fix.plane = extract_plane_decomposition(F);
  validate(fix);
  return fix;
}

HypersurfaceFixture fermat_fixture(int n, int d) {
  if (n < 1 || d < 2) throw PreconditionError("fermat fixture needs n >= 1 and d >= 2");
  const std::size_t vars = static_cast<std::size_t>(n) + 2;
  HypersurfaceFixture fix{n, d, Poly(vars), std::nullopt};
  for (std::size_t i = 0; i < vars; ++i) fix.F += power(vars, i, d);
  return fix;
}

HypersurfaceFixture seeded_fixture(int n, int d, std::uint64_t seed, std::size_t extra_terms) {
  HypersurfaceFixture fix = fermat_fixture(n, d);
  SeededStream rng(seed);
  fix.F += seeded_terms(rng, fix.F.num_vars(), d, extra_terms);
  validate(fix);
  return fix;
}

HypersurfaceFixture plane_fixture(int d, std::uint64_t seed, std::size_t extra_terms) {
  if (d < 2) throw PreconditionError("plane fixture needs d >= 2");
  SeededStream rng(seed);
  std::array<Poly, 3> g{Poly(6), Poly(6), Poly(6)};
  for (std::size_t i = 0; i < 3; ++i)
    g[i] = power(6, i, d - 1) + power(6, i + 3, d - 1) + seeded_terms(rng, 6, d - 1, extra_terms);
  return fixture_from_g(std::move(g));
}

HypersurfaceFixture degenerate_plane_fixture(int d, std::uint64_t seed) {
  auto g = *plane_fixture(d, seed).plane;
  g[2] = g[0] + power(6, 2, d - 1);
  return fixture_from_g(std::move(g));
}

HypersurfaceRing::HypersurfaceRing(HypersurfaceFixture fix, std::size_t budget)
    : fix_(std::move(fix)), budget_(budget) {
  validate(fix_);
  jacobian_ = GradedIdeal(num_vars(), partials(fix_.F), budget_);
  if (fix_.plane) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < 3; ++i) gens.push_back(Poly::variable(num_vars(), i));
    std::vector<Poly> restricted;
    for (const auto& g : *fix_.plane) {
      gens.push_back(g);
      restricted.push_back(restrict_to_plane(g));
    }
    plane_ideal_ = GradedIdeal(num_vars(), std::move(gens), budget_);
    restricted_ = GradedIdeal(plane_vars(), std::move(restricted), budget_);
  }
}

void HypersurfaceRing::require_plane() const {
  if (!fix_.plane) throw PreconditionError("fixture has no plane data");
}

const GradedIdeal& HypersurfaceRing::plane_ideal() const {
  require_plane();
  return plane_ideal_;
}

const GradedIdeal& HypersurfaceRing::restricted_ideal() const {
  require_plane();
  return restricted_;
}

int HypersurfaceRing::restricted_socle_degree() const {
  return static_cast<int>(plane_vars()) * (fix_.d - 2);
}

Poly HypersurfaceRing::restrict_to_plane(const Poly& p) const { return p.restrict_to_zero({0, 1, 2}); }

SmoothnessReport smoothness_check(const HypersurfaceRing& ring, std::optional<int> max_degree) {
  SmoothnessReport rep;
  rep.socle_degree = ring.socle_degree();
  const int top = rep.socle_degree + 1;
  rep.expected = complete_intersection_hilbert(ring.num_vars(), std::vector<int>(ring.num_vars(), ring.d() - 1), top);
  for (int k = 0; k <= top; ++k) {
    if (max_degree && k > *max_degree) break;
    if (!ring.jacobian().fits_budget(k)) break;
    const auto actual = static_cast<long long>(ring.jacobian().modular_quotient_dim(k));
    rep.actual.push_back(actual);
    rep.checked_up_to = k;
    if (actual != rep.expected[static_cast<std::size_t>(k)]) {
      rep.pass = false;
      rep.first_mismatch = k;
      break;
    }
  }
  rep.complete = rep.pass && rep.checked_up_to == top;
  return rep;
}

RegularityReport restricted_regularity(const HypersurfaceRing& ring) {
  const GradedIdeal& ideal = ring.restricted_ideal();
  RegularityReport rep;
  rep.socle_degree = ring.restricted_socle_degree();
  const auto expected = complete_intersection_hilbert(ring.plane_vars(), std::vector<int>(3, ring.d() - 1),
                                                      rep.socle_degree + 1);
  rep.hilbert_match = true;
  for (int k = 0; k <= rep.socle_degree + 1; ++k)
    if (static_cast<long long>(ideal.quotient_dim(k)) != expected[static_cast<std::size_t>(k)])
      rep.hilbert_match = false;
  rep.socle_dim = ideal.quotient_dim(rep.socle_degree);
  rep.regular = ideal.quotient_dim(rep.socle_degree + 1) == 0;
  return rep;
}

std::size_t hodge_piece_dim(const HypersurfaceRing& ring, int p) {
  if (p < 0 || p > ring.n()) throw PreconditionError("p must lie in [0, n]");
  const int k = (p + 1) * ring.d() - ring.n() - 2;
  if (k < 0)
    throw PreconditionError("degree (p+1)d - n - 2 = " + std::to_string(k) + " is negative for p = " +
                            std::to_string(p));
  const GradedIdeal& jac = ring.jacobian();
  if (jac.fits_budget(k)) return jac.quotient_dim(k);
  const int dual = ring.socle_degree() - k;
  if (dual < 0) return 0;
  if (jac.fits_budget(dual)) return jac.quotient_dim(dual);
  return jac.quotient_dim(k);
}

Mat macaulay_pairing(const HypersurfaceRing& ring, int k) {
  return pairing(ring.jacobian(), ring.socle_degree(), k);
}

Mat restricted_pairing(const HypersurfaceRing& ring, int k) {
  if (!restricted_regularity(ring).regular) throw PreconditionError("restricted sequence G_i|_P is not regular");
  return pairing(ring.restricted_ideal(), ring.restricted_socle_degree(), k);
}

Mat period_multiplication(const HypersurfaceRing& ring, const Poly& a, int b) {
  if (a.num_vars() != ring.num_vars()) throw PreconditionError("multiplier has the wrong number of variables");
  const int da = a.degree();
  if (da < 0) throw PreconditionError("multiplier must be nonzero and homogeneous");
  if (b < 0) throw PreconditionError("negative source degree");
  const GradedIdeal& jac = ring.jacobian();
  const auto source = jac.slice(b).quotient_basis();
  const IdealSlice& target = jac.slice(da + b);
  Mat m(target.quotient_dim(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Vec col = target.quotient_coordinates(a * Poly::monomial(source[j]));
    for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
  }
  return m;
}

TPCodimReport t_p_codim(const HypersurfaceRing& ring) {
  if (!restricted_regularity(ring).regular) throw PreconditionError("restricted sequence G_i|_P is not regular");
  const int d = ring.d();
  TPCodimReport rep;
  const IdealSlice& jac = ring.jacobian().slice(d);
  const IdealSlice& xg = ring.plane_ideal().slice(d);
  const IdealSlice& res = ring.restricted_ideal().slice(d);
  rep.dim_t = jac.quotient_dim();
  rep.dim_plane_ideal = xg.ideal_dim();
  rep.via_slice = xg.quotient_dim();
  RowEchelon image(res.quotient_dim());
  for (const auto& m : jac.quotient_basis()) {
    const Poly r = ring.restrict_to_plane(Poly::monomial(m));
    if (!r.is_zero()) image.insert(res.quotient_coordinates(r));
  }
  rep.via_restriction = image.rank();
  rep.dim_vp = res.ambient_dim();
  rep.dim_gp = res.ideal_dim();
  rep.koszul = rep.dim_vp - 3 * monomial_count(ring.plane_vars(), 1);
  if (rep.via_slice != rep.via_restriction)
    throw CheckFailure("codim T_P disagrees: " + std::to_string(rep.via_slice) + " from the ideal slice, " +
                       std::to_string(rep.via_restriction) + " from the restriction map");
  return rep;
}

std::size_t rank_q_zeta(const HypersurfaceRing& ring) {
  if (ring.d() < 6) throw PreconditionError("Q_zeta needs d >= 6");
  if (!restricted_regularity(ring).regular) throw PreconditionError("restricted sequence G_i|_P is not regular");
  const IdealSlice& top = ring.restricted_ideal().slice(ring.restricted_socle_degree());
  std::vector<Poly> rows;
  for (const auto& m : ring.jacobian().slice(ring.d()).quotient_basis()) {
    Poly r = ring.restrict_to_plane(Poly::monomial(m));
    if (!r.is_zero()) rows.push_back(std::move(r));
  }
  std::vector<Poly> omegas;
  for (const auto& m : monomial_basis(ring.plane_vars(), ring.d() - 6)) omegas.push_back(Poly::monomial(m));
  std::map<Monomial, Scalar> memo;
  auto lambda = [&](const Poly& p) {
    const Monomial& m = p.terms().begin()->first;
    auto it = memo.find(m);
    if (it == memo.end()) it = memo.emplace(m, socle_value(top, Poly::monomial(m))).first;
    return it->second * p.terms().begin()->second;
  };
  Mat q(rows.size(), rows.size() * omegas.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (std::size_t w = 0; w < omegas.size(); ++w) q(i, j * omegas.size() + w) = lambda(rows[i] * rows[j] * omegas[w]);
  return rank(q);
}

NLPipelineReport nl_pipeline(const HypersurfaceRing& ring) {
  if (ring.n() != 4) throw PreconditionError("nl_pipeline needs a fourfold (n = 4)");
  if (ring.d() < 6) throw PreconditionError("nl_pipeline needs d >= 6");
  if (!ring.has_plane()) throw PreconditionError("nl_pipeline needs plane data");
  const int d = ring.d();
  NLPipelineReport rep;
  rep.d = d;
  rep.smoothness = smoothness_check(ring, 2 * d - 6);
  if (!rep.smoothness.pass)
    rep.failures.push_back("Jacobian Hilbert function differs from a complete intersection in degree " +
                           std::to_string(*rep.smoothness.first_mismatch));
  rep.regularity = restricted_regularity(ring);
  if (!rep.regularity.regular) rep.failures.push_back("restricted sequence G_i|_P is not regular");

  const GradedIdeal& jac = ring.jacobian();
  rep.h40 = hodge_piece_dim(ring, 0);
  rep.h31 = hodge_piece_dim(ring, 1);
  rep.h13 = jac.quotient_dim(2 * d - 6);
  rep.nl_codim = rep.h40 + rep.h31;
  rep.dim_j_d = jac.ideal_dim(d);

  const IdealSlice& xg = ring.plane_ideal().slice(d);
  const IdealSlice& res = ring.restricted_ideal().slice(d);
  rep.dim_plane_ideal = xg.ideal_dim();
  rep.codim_slice = xg.quotient_dim();
  rep.dim_vp = res.ambient_dim();
  rep.dim_gp = res.ideal_dim();
  RowEchelon image(res.quotient_dim());
  for (const auto& m : jac.slice(d).quotient_basis()) {
    const Poly r = ring.restrict_to_plane(Poly::monomial(m));
    if (!r.is_zero()) image.insert(res.quotient_coordinates(r));
  }
  rep.codim_restriction = image.rank();
  if (rep.codim_slice != rep.codim_restriction) rep.failures.push_back("the two counts of codim T_P disagree");

  const IdealSlice& target = jac.slice(2 * d - 6);
  RowEchelon span(target.quotient_dim());
  const auto omegas = monomial_basis(ring.num_vars(), d - 6);
  for (const auto& row : xg.echelon().rows()) {
    const Poly t = poly_from(xg, row);
    for (const auto& w : omegas) span.insert(target.quotient_coordinates(t * Poly::monomial(w)));
  }
  rep.sigma = span.rank();
  rep.bound = rep.h13 - rep.sigma;

  if (rep.regularity.regular) {
    rep.q_rank = rank_q_zeta(ring);
    if (*rep.q_rank != rep.codim_slice) rep.failures.push_back("rank Q_zeta differs from codim T_P");
  }
  rep.holds = rep.codim_slice <= rep.bound;
  if (!rep.holds) rep.failures.push_back("codim T_P exceeds h^{1,3} - sigma_zeta");
  rep.equality = rep.failures.empty() && rep.codim_slice == rep.bound;
  return rep;
}

SymmetrizerKernelReport symmetrizer_kernel(const HypersurfaceRing& ring) {
  if (ring.n() != 2) throw PreconditionError("symmetrizer_kernel needs a surface in P^3 (n = 2)");
  if (ring.d() < 5) throw PreconditionError("symmetrizer_kernel needs d >= 5");
  const auto smooth = smoothness_check(ring);
  if (!smooth.pass) throw PreconditionError("smoothness check failed; the partials are not a regular sequence");
  const int d = ring.d();
  const GradedIdeal& jac = ring.jacobian();
  const auto a_basis = jac.slice(d - 4).quotient_basis();
  const auto b_basis = jac.slice(d).quotient_basis();
  const IdealSlice& b_slice = jac.slice(d);
  const IdealSlice& c_slice = jac.slice(2 * d - 4);

  SymmetrizerKernelReport rep;
  rep.h20 = a_basis.size();
  rep.dim_e = b_basis.size();
  rep.h11 = c_slice.quotient_dim();
  rep.equations = rep.h20 * (rep.h20 - 1) / 2 * rep.h11;
  Bilinear phi{rep.h20, rep.dim_e, rep.h11, {}};
  phi.phi.assign(rep.h20, std::vector<Vec>(rep.dim_e));
  for (std::size_t a = 0; a < rep.h20; ++a)
    for (std::size_t b = 0; b < rep.dim_e; ++b)
      phi.phi[a][b] = c_slice.quotient_coordinates(Poly::monomial(a_basis[a]) * Poly::monomial(b_basis[b]));
  const Subspace kernel = symmetrizer(phi);
  rep.kernel_dim = kernel.dim();

  const auto r_basis = jac.slice(4).quotient_basis();
  rep.lower_bound = r_basis.size();
  rep.multiplications_in_kernel = true;
  RowEchelon span(rep.h20 * rep.dim_e);
  for (const auto& r : r_basis) {
    Vec psi(rep.h20 * rep.dim_e);
    for (std::size_t a = 0; a < rep.h20; ++a) {
      const Vec image = b_slice.quotient_coordinates(Poly::monomial(r) * Poly::monomial(a_basis[a]));
      for (std::size_t b = 0; b < rep.dim_e; ++b) psi[a * rep.dim_e + b] = image[b];
    }
    if (!kernel.contains(psi)) rep.multiplications_in_kernel = false;
    span.insert(psi);
  }
  rep.multiplication_span = span.rank();
  return rep;
}

}  // namespace vhs
