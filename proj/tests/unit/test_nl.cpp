#include <gtest/gtest.h>

#include "vhs/error.hpp"
#include "vhs/exact/random.hpp"
#include "vhs/nl/noether_lefschetz.hpp"

using namespace vhs;

namespace {

Mat random_mat(SeededStream& rng, std::size_t r, std::size_t c, long bound) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.next_int(-bound, bound);
  return m;
}

Vec random_vec(SeededStream& rng, std::size_t n, long bound) {
  Vec v(n);
  do {
    for (auto& x : v) x = rng.next_int(-bound, bound);
  } while (is_zero(v));
  return v;
}

std::vector<Scalar> random_weights(SeededStream& rng, std::size_t n) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(rng.next_nonzero(3));
  return c;
}

// codim of E_zeta from the component of phi(zeta) in H^{m-1,m+1}, without the pairing.
std::size_t oracle_codim(const NLInput& inp) {
  const GradedLie& lie = inp.e.lie();
  const PolarizedSpace& sp = lie.space();
  const int m = lie.weight() / 2;
  Vec z(lie.hodge().total_dim());
  for (std::size_t a = 0; a < inp.zeta.size(); ++a) z[sp.index(m, a)] = inp.zeta[a];
  const std::size_t rows = lie.hodge().level_dim(m - 1);
  Mat c(rows, inp.e.dim());
  for (std::size_t k = 0; k < inp.e.dim(); ++k) {
    const Vec y = lie.element(1, inp.e.basis()[k]).apply(z);
    for (std::size_t l = 0; l < rows; ++l) c(l, k) = y[sp.index(m - 1, l)];
  }
  return rank(c);
}

}  // namespace

TEST(NLCodim, Formula) {
  EXPECT_EQ(nl_codim(HodgeNumbers(2, {1, 5, 1})), 1u);
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) EXPECT_EQ(nl_codim(HodgeNumbers(4, {1, a, b, a, 1})), 1 + a);
  EXPECT_EQ(nl_codim(HodgeNumbers(4, {2, 3, 4, 3, 2})), 5u);
  EXPECT_EQ(nl_codim(HodgeNumbers(6, {1, 2, 3, 4, 3, 2, 1})), 6u);
  EXPECT_THROW(nl_codim(HodgeNumbers(3, {1, 1, 1, 1})), PreconditionError);
}

TEST(NLInput, Validation) {
  const GradedLie lie(HodgeNumbers(4, {1, 2, 2, 2, 1}));
  const auto e = random_integral_element(lie, 1, 1);
  EXPECT_THROW(validate({e, Vec(2), std::nullopt}), PreconditionError);
  EXPECT_THROW(validate({e, Vec{1}, std::nullopt}), PreconditionError);
  EXPECT_THROW(validate({e, Vec{1, 0}, Vec{0}}), PreconditionError);
  EXPECT_NO_THROW(validate({e, Vec{1, 0}, Vec{2}}));
  const GradedLie odd(HodgeNumbers(3, {1, 1, 1, 1}));
  EXPECT_THROW(validate({random_integral_element(odd, 1, 1), Vec{1}, std::nullopt}), PreconditionError);
}

TEST(EZeta, AnnihilatedClass) {
  const GradedLie lie(HodgeNumbers(4, {1, 2, 3, 2, 1}));
  // Row 2 of x vanishes, so no T(i,j) has an e_{2,2} component.
  const Mat x = Mat::from_rows({{1, 2}, {3, -1}, {0, 0}});
  const auto e = cy_type_element(lie, x, {1, 2, 5});
  const NLInput inp{e, Vec{0, 0, 1}, std::nullopt};
  EXPECT_EQ(e_zeta(inp), e.span());
  EXPECT_EQ(codim_e_zeta(inp), 0u);
  EXPECT_EQ(rank(quadric_q_zeta(inp)), 0u);
}

TEST(EZeta, MiddleBasisVector) {
  const GradedLie lie(HodgeNumbers(4, {1, 2, 2, 2, 1}));
  const auto e = cy_type_element(lie, Mat::from_rows({{1, 1}, {1, -1}}), {1, 1});
  const NLInput inp{e, Vec{1, 0}, std::nullopt};
  // Q_zeta = [[1, 1], [1, 1]] has rank 1.
  EXPECT_EQ(quadric_q_zeta(inp), Mat::from_rows({{1, 1}, {1, 1}}));
  EXPECT_EQ(codim_e_zeta(inp), 1u);
  EXPECT_EQ(e_zeta(inp).dim(), 1u);
  EXPECT_EQ(oracle_codim(inp), 1u);
  EXPECT_EQ(sigma_zeta(inp), 1u);
  const auto rep = refined_bound(inp);
  EXPECT_EQ(rep.bound, 1u);
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(rep.equality);
}

TEST(EZeta, GenericClassKillsE) {
  SeededStream rng(2);
  const GradedLie lie(HodgeNumbers(4, {1, 3, 3, 3, 1}));
  const auto e = cy_type_element(lie, random_mat(rng, 3, 3, 3), random_weights(rng, 3));
  const NLInput inp{e, random_vec(rng, 3, 5), std::nullopt};
  EXPECT_EQ(e_zeta(inp).dim(), 0u);
  EXPECT_EQ(sigma_zeta(inp), 0u);
}

TEST(EZeta, MatchesDirectComponent) {
  SeededStream rng(3);
  for (const auto& h : {HodgeNumbers(4, {1, 2, 2, 2, 1}), HodgeNumbers(4, {2, 2, 3, 2, 2}), HodgeNumbers(4, {1, 3, 2, 3, 1}),
                        HodgeNumbers(6, {1, 1, 2, 2, 2, 1, 1})}) {
    const GradedLie lie(h);
    for (std::size_t dim = 1; dim <= 2; ++dim) {
      const auto e = random_integral_element(lie, dim, rng.next());
      const NLInput inp{e, random_vec(rng, h.level_dim(h.weight() / 2), 3), std::nullopt};
      EXPECT_EQ(codim_e_zeta(inp), oracle_codim(inp)) << h.to_string();
      EXPECT_EQ(e_zeta(inp).dim() + codim_e_zeta(inp), dim);
      EXPECT_LE(codim_e_zeta(inp), h.level_dim(h.weight() / 2 + 1));
    }
  }
}

TEST(Quadric, DimensionOne) {
  const GradedLie lie(HodgeNumbers(4, {1, 1, 2, 1, 1}));
  const auto e = cy_type_element(lie, Mat::from_rows({{2}, {1}}), {1, 3});
  const Mat q = quadric_q_zeta({e, Vec{1, 1}, std::nullopt});
  EXPECT_EQ(q.rows(), 1u);
  EXPECT_EQ(q(0, 0), Scalar(7));
}

TEST(Quadric, MatchesFixtureFormula) {
  SeededStream rng(4);
  const std::size_t a = 3, b = 4;
  const GradedLie lie(HodgeNumbers(4, {1, a, b, a, 1}));
  const Mat x = random_mat(rng, b, a, 2);
  const auto c = random_weights(rng, b);
  const Vec zeta = random_vec(rng, b, 3);
  const Mat q = quadric_q_zeta({cy_type_element(lie, x, c), zeta, std::nullopt});
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      Scalar expect = 0;
      for (std::size_t t = 0; t < b; ++t) expect += c[t] * x(t, i) * x(t, j) * zeta[t];
      EXPECT_EQ(q(i, j), expect);
    }
}

TEST(Quadric, Preconditions) {
  const GradedLie two(HodgeNumbers(4, {2, 2, 2, 2, 2}));
  const auto e2 = random_integral_element(two, 1, 5);
  EXPECT_THROW(quadric_q_zeta({e2, Vec{1, 0}, std::nullopt}), PreconditionError);
  const GradedLie lie(HodgeNumbers(4, {1, 2, 2, 2, 1}));
  // Only the 3 -> 2 block: phi(omega) = 0.
  const PolarizedSpace& sp = lie.space();
  const SparseEndo partial(lie.hodge().total_dim(), {{sp.index(2, 0), sp.index(3, 0), Scalar(1)}});
  const IntegralElement e(lie, {lie.key_coordinates(1, partial)});
  const NLInput inp{e, Vec{1, 0}, std::nullopt};
  EXPECT_FALSE(is_calabi_yau_type(inp));
  EXPECT_THROW(quadric_q_zeta(inp), PreconditionError);
  EXPECT_THROW(cy_type_element(lie, Mat(3, 2), {1, 1}), PreconditionError);
}

TEST(Sigma, CalabiYauTypeEqualsDimEZeta) {
  SeededStream rng(6);
  for (int t = 0; t < 10; ++t) {
    const std::size_t a = 1 + static_cast<std::size_t>(rng.next_int(0, 2));
    const std::size_t b = 1 + static_cast<std::size_t>(rng.next_int(0, 3));
    const GradedLie lie(HodgeNumbers(4, {1, a, b, a, 1}));
    const auto e = cy_type_element(lie, random_mat(rng, b, a, 2), random_weights(rng, b));
    Vec zeta(b);
    zeta[static_cast<std::size_t>(rng.next_int(0, static_cast<long>(b) - 1))] = 1;
    const NLInput inp{e, zeta, std::nullopt};
    EXPECT_EQ(sigma_zeta(inp), e_zeta(inp).dim());
    EXPECT_EQ(sigma_zeta(inp, SigmaMode::TypeConsistent), sigma_zeta(inp));
  }
}

// codim_E E_zeta = rank Q_zeta and the refined bound, over seeded Calabi-Yau type fixtures.
TEST(RefinedBound, CalabiYauProperty) {
  SeededStream rng(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t a = 1 + static_cast<std::size_t>(rng.next_int(0, 3));
    const std::size_t b = 1 + static_cast<std::size_t>(rng.next_int(0, 4));
    const GradedLie lie(HodgeNumbers(4, {1, a, b, a, 1}));
    const auto e = cy_type_element(lie, random_mat(rng, b, a, 2), random_weights(rng, b));
    Vec zeta(b);
    for (auto& z : zeta) z = rng.next_int(0, 2) == 0 ? 0 : rng.next_int(-3, 3);
    if (is_zero(zeta)) zeta[0] = 1;
    const auto rep = refined_bound({e, zeta, std::nullopt});
    ASSERT_TRUE(rep.q_rank.has_value());
    EXPECT_EQ(rep.codim, *rep.q_rank) << "trial " << t;
    EXPECT_TRUE(rep.holds) << "trial " << t;
    EXPECT_TRUE(rep.equality) << "trial " << t;
  }
}

// Random integral elements that are not of Calabi-Yau type: only the inequality is claimed.
TEST(RefinedBound, RandomElements) {
  SeededStream rng(8);
  for (const auto& h : {HodgeNumbers(4, {1, 2, 2, 2, 1}), HodgeNumbers(4, {2, 2, 2, 2, 2}), HodgeNumbers(4, {1, 3, 3, 3, 1})}) {
    const GradedLie lie(h);
    for (std::size_t dim = 1; dim <= 3; ++dim) {
      const auto e = random_integral_element(lie, dim, rng.next());
      const auto rep = refined_bound({e, random_vec(rng, h.level_dim(2), 2), std::nullopt});
      EXPECT_TRUE(rep.holds) << h.to_string();
    }
  }
}

TEST(RefinedBound, HigherWeightNeedsInterpretation) {
  SeededStream rng(9);
  const HodgeNumbers h(6, {1, 2, 2, 2, 2, 2, 1});
  const GradedLie lie(h);
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    const auto e = random_integral_element(lie, dim, rng.next());
    const NLInput inp{e, random_vec(rng, h.level_dim(3), 2), std::nullopt};
    EXPECT_THROW(sigma_zeta(inp), PreconditionError);
    const auto rep = refined_bound(inp, SigmaMode::TypeConsistent);
    EXPECT_TRUE(rep.holds);
    EXPECT_FALSE(rep.q_rank.has_value());
  }
}
