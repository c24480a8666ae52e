#include <gtest/gtest.h>

#include "vhs/error.hpp"
#include "vhs/exact/echelon.hpp"
#include "vhs/exact/matrix.hpp"
#include "vhs/exact/random.hpp"
#include "vhs/exact/subspace.hpp"

using namespace vhs;

namespace {

Mat random_mat(SeededStream& rng, std::size_t r, std::size_t c, long bound = 5) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.next_scalar(bound);
  return m;
}

// Random subspace of dimension exactly d, grown until the target is reached.
Subspace random_subspace(SeededStream& rng, std::size_t ambient, std::size_t d) {
  std::vector<Vec> vs;
  Subspace s = Subspace::zero(ambient);
  while (s.dim() < d) {
    Vec v(ambient);
    for (auto& x : v) x = rng.next_scalar(3);
    vs.push_back(v);
    s = Subspace::span(ambient, vs);
  }
  return s;
}

}  // namespace

TEST(Scalar, CanonicalForm) {
  const Scalar x = fraction(6, -4);
  EXPECT_EQ(x.get_num(), -3);
  EXPECT_EQ(x.get_den(), 2);
  EXPECT_EQ(to_string(fraction(4, 2)), "2");
  EXPECT_EQ(Scalar(1, 3) + Scalar(1, 6), fraction(1, 2));
}

TEST(Rank, ProportionalRows) { EXPECT_EQ(rank(Mat::from_rows({{1, 2}, {2, 4}})), 1u); }

TEST(Rank, Identity) { EXPECT_EQ(rank(Mat::identity(5)), 5u); }

TEST(Rank, ProductOfFullRankFactors) {
  SeededStream rng(7);
  Mat a, b;
  do a = random_mat(rng, 20, 7); while (rank(a) != 7);
  do b = random_mat(rng, 7, 30); while (rank(b) != 7);
  EXPECT_EQ(rank(a * b), 7u);
}

TEST(Rank, TransposeInvariant) {
  SeededStream rng(11);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = 1 + rng.next_int(0, 7), c = 1 + rng.next_int(0, 7);
    Mat m = random_mat(rng, r, c, 2);
    // Force some dependence.
    if (r > 2)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) - 2 * m(1, j);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Kernel, SingleRow) {
  const Subspace k = kernel(Mat::from_rows({{1, 1}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(Vec{1, -1}));
}

TEST(Kernel, IdentityHasZeroKernel) { EXPECT_EQ(kernel(Mat::identity(3)).dim(), 0u); }

TEST(Kernel, MultiplyBackAndRankNullity) {
  SeededStream rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng.next_int(0, 6), c = 1 + rng.next_int(0, 8);
    Mat m = random_mat(rng, r, c, 2);
    if (r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 3 * m(0, j);
    const auto basis = kernel_basis(m);
    EXPECT_EQ(basis.size() + rank(m), c);
    for (const auto& v : basis) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(Rref, PivotsAreFirstNonzeroColumns) {
  const Rref r = rref(Mat::from_rows({{0, 2, 4}, {0, 1, 3}, {0, 0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(r.form, Mat::from_rows({{0, 1, 0}, {0, 0, 1}}));
}

TEST(RowEchelon, PivotSetIndependentOfOrder) {
  SeededStream rng(5);
  std::vector<Vec> rows;
  for (int i = 0; i < 6; ++i) {
    Vec v(9);
    for (auto& x : v) x = rng.next_int(0, 3) == 0 ? rng.next_scalar(4) : Scalar(0);
    rows.push_back(v);
  }
  rows.push_back(rows[0]);
  RowEchelon a(9), b(9);
  for (const auto& v : rows) a.insert(v);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) b.insert(*it);
  EXPECT_EQ(a.rank(), b.rank());
  EXPECT_EQ(a.pivot_columns(), b.pivot_columns());
  EXPECT_EQ(a.pivot_columns(), rref(Mat::from_rows(rows, 9)).pivots);
  for (const auto& v : rows) EXPECT_TRUE(a.contains(to_sparse(v)));
  // Normal forms agree and vanish on pivots.
  Vec probe(9);
  for (auto& x : probe) x = rng.next_scalar(5);
  EXPECT_EQ(a.reduce(probe), b.reduce(probe));
  const Vec red = a.reduce(probe);
  for (auto c : a.pivot_columns()) EXPECT_EQ(sgn(red[c]), 0);
}

TEST(Subspace, TwoLines) {
  const auto a = Subspace::span(2, {{1, 0}});
  const auto b = Subspace::span(2, {{1, 1}});
  EXPECT_EQ(sum(a, b).dim(), 2u);
  EXPECT_EQ(intersection(a, b).dim(), 0u);
  EXPECT_EQ(quotient_dim(a, b), 1u);
}

TEST(Subspace, NestedIntersection) {
  const auto a = Subspace::span(4, {{1, 2, 0, 0}});
  const auto b = Subspace::span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
  ASSERT_TRUE(b.contains(a));
  EXPECT_EQ(intersection(a, b), a);
  EXPECT_EQ(sum(a, b), b);
}

TEST(Subspace, GrassmannIdentity) {
  SeededStream rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_subspace(rng, 7, 4);
    const auto b = random_subspace(rng, 7, 5);
    EXPECT_EQ(sum(a, b).dim() + intersection(a, b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(sum(a, b).contains(a));
    EXPECT_TRUE(a.contains(intersection(a, b)));
    EXPECT_TRUE(b.contains(intersection(a, b)));
  }
}

TEST(Subspace, CanonicalEquality) {
  const auto a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  const auto b = Subspace::span(3, {{1, 2, 1}, {2, 1, -1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.complement_indices(), (std::vector<std::size_t>{2}));
}

TEST(Subspace, AmbientMismatchThrows) {
  EXPECT_THROW(sum(Subspace::zero(2), Subspace::zero(3)), PreconditionError);
  EXPECT_THROW(intersection(Subspace::zero(2), Subspace::zero(3)), PreconditionError);
}

TEST(SeededStream, Deterministic) {
  SeededStream a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_int(-5, 5), b.next_int(-5, 5));
  SeededStream c(1);
  for (int i = 0; i < 100; ++i) EXPECT_NE(c.next_nonzero(3), 0);
}
