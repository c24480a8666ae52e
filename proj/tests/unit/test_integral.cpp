#include <gtest/gtest.h>

#include "vhs/error.hpp"
#include "vhs/exact/random.hpp"
#include "vhs/integral/integral_element.hpp"

using namespace vhs;

namespace {

Mat dense_of(const GradedLie& lie, const Vec& v) { return lie.element(1, v).to_dense(); }

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

std::vector<Scalar> flatten(const Mat& m) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// Commutant of E inside g^{-1,1} from dense matrix commutators.
Subspace dense_polar(const GradedLie& lie, const std::vector<Vec>& e) {
  const std::size_t d1 = lie.piece_dim(1);
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t j = 0; j < d1; ++j) {
    std::vector<Scalar> col;
    const Mat u = dense_of(lie, unit(d1, j));
    for (const auto& v : e) {
      const auto f = flatten(commutator(u, dense_of(lie, v)));
      col.insert(col.end(), f.begin(), f.end());
    }
    cols.push_back(col);
  }
  if (e.empty()) return Subspace::whole(d1);
  Mat m(cols[0].size(), d1);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return kernel(m);
}

// Codimension of the tangent space of the integral-element variety, from unrestricted psi: E -> g^{-1,1}
// modulo Hom(E, E).
std::size_t dense_tangent_codim(const GradedLie& lie, const std::vector<Vec>& e) {
  const std::size_t d1 = lie.piece_dim(1), p = e.size();
  if (p < 2) return 0;
  std::vector<Mat> u, ed;
  for (std::size_t j = 0; j < d1; ++j) u.push_back(dense_of(lie, unit(d1, j)));
  for (const auto& v : e) ed.push_back(dense_of(lie, v));
  std::vector<std::vector<Scalar>> rows;
  const std::size_t sz = ed[0].rows() * ed[0].cols();
  Mat m(p * (p - 1) / 2 * sz, p * d1);
  std::size_t row = 0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j, row += sz)
      for (std::size_t c = 0; c < d1; ++c) {
        const auto a = flatten(commutator(u[c], ed[j]));
        const auto b = flatten(commutator(ed[i], u[c]));
        for (std::size_t k = 0; k < sz; ++k) {
          m(row + k, i * d1 + c) += a[k];
          m(row + k, j * d1 + c) += b[k];
        }
      }
  const std::size_t sol = p * d1 - rank(m);
  return p * (d1 - p) - (sol - p * p);
}

Mat q_on_h11(const GradedLie& lie) {
  const auto& sp = lie.space();
  const std::size_t k = lie.hodge().level_dim(1);
  Mat s(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) s(a, b) = sp.pairing(sp.index(1, a), sp.index(1, b));
  return s;
}

Mat random_mat(SeededStream& rng, std::size_t r, std::size_t c, long bound) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.next_int(-bound, bound);
  return m;
}

}  // namespace

TEST(IntegralElement, SingleVectorIsIntegral) {
  const GradedLie lie(HodgeNumbers(3, {1, 2, 2, 1}));
  Vec v(lie.piece_dim(1));
  v[0] = 1;
  v[3] = fraction(2, 3);
  EXPECT_TRUE(is_integral(lie, {v}));
  EXPECT_EQ(IntegralElement(lie, {v}).dim(), 1u);
}

TEST(IntegralElement, RejectsWrongLengthAndDependence) {
  const GradedLie lie(HodgeNumbers(2, {2, 2, 2}));
  EXPECT_THROW(is_integral(lie, {Vec(3)}), PreconditionError);
  const Vec v = unit(lie.piece_dim(1), 0);
  EXPECT_THROW(IntegralElement(lie, {v, v}), PreconditionError);
}

TEST(IntegralElement, WeightTwoSymmetricPair) {
  const GradedLie lie(HodgeNumbers(2, {2, 2, 2}));
  const Vec a = w2_from_matrix(lie, Mat::from_rows({{1, 0}, {0, 2}}));
  const Vec b = w2_from_matrix(lie, Mat::from_rows({{3, 0}, {0, -1}}));
  EXPECT_TRUE(is_integral(lie, {a, b}));
}

TEST(IntegralElement, WeightTwoNonSymmetricPairFails) {
  const GradedLie lie(HodgeNumbers(2, {2, 2, 2}));
  const Vec a = w2_from_matrix(lie, Mat::from_rows({{0, 1}, {0, 0}}));
  const Vec b = w2_from_matrix(lie, Mat::identity(2));
  EXPECT_FALSE(is_integral(lie, {a, b}));
  EXPECT_THROW(IntegralElement(lie, {a, b}), CheckFailure);
}

TEST(IntegralElement, MatrixRoundTrip) {
  const GradedLie lie(HodgeNumbers(2, {3, 2, 3}));
  SeededStream rng(5);
  const Mat a = random_mat(rng, 2, 3, 4);
  EXPECT_EQ(w2_to_matrix(lie, w2_from_matrix(lie, a)), a);
  EXPECT_THROW(w2_from_matrix(GradedLie(HodgeNumbers(3, {1, 1, 1, 1})), a), PreconditionError);
}

// Weight two: [A, B] = 0 iff tA S B is symmetric, S the form on H^{1,1}.
TEST(IntegralElement, WeightTwoMatrixCriterionOracle) {
  SeededStream rng(11);
  for (auto middle : {MiddleForm::Diagonal, MiddleForm::Split}) {
    for (std::size_t h20 = 1; h20 <= 3; ++h20) {
      for (std::size_t h11 = 1; h11 <= 3; ++h11) {
        const GradedLie lie(HodgeNumbers(2, {h20, h11, h20}), middle);
        const Mat s = q_on_h11(lie);
        for (int t = 0; t < 20; ++t) {
          const Mat a = random_mat(rng, h11, h20, 1);
          Mat b = random_mat(rng, h11, h20, 1);
          if (t % 2 == 0) b = a + a;
          const Mat g = a.transpose() * s * b;
          const bool sym = g == g.transpose();
          EXPECT_EQ(is_integral(lie, {w2_from_matrix(lie, a), w2_from_matrix(lie, b)}), sym);
        }
      }
    }
  }
}

TEST(PolarSpace, EmptyIsEverything) {
  const GradedLie lie(HodgeNumbers(2, {2, 3, 2}));
  EXPECT_EQ(polar_space(lie, {}), Subspace::whole(lie.piece_dim(1)));
}

TEST(PolarSpace, MatchesDenseCommutant) {
  SeededStream rng(3);
  for (const auto& h : {HodgeNumbers(2, {2, 2, 2}), HodgeNumbers(2, {3, 2, 3}), HodgeNumbers(3, {1, 2, 2, 1}),
                        HodgeNumbers(3, {2, 1, 1, 2}), HodgeNumbers(4, {1, 1, 2, 1, 1})}) {
    const GradedLie lie(h);
    const std::size_t d1 = lie.piece_dim(1);
    for (int t = 0; t < 4; ++t) {
      Vec v(d1);
      for (auto& x : v) x = rng.next_int(-2, 2);
      const std::vector<Vec> e{v};
      EXPECT_EQ(polar_space(lie, e), dense_polar(lie, e)) << h.to_string();
      EXPECT_TRUE(polar_space(lie, e).contains(v));
    }
  }
}

TEST(PolarSpace, LagrangianIsMaximal) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const GradedLie lie(HodgeNumbers(2, {2, k, 2}));
    const auto e = sharp_construction_w2(lie);
    EXPECT_EQ(e.dim(), k);
    EXPECT_EQ(polar_space(e), e.span());
    EXPECT_EQ(dense_polar(lie, e.basis()), e.span());
  }
}

TEST(NormalForm, PaperExample) {
  const GradedLie lie(HodgeNumbers(2, {3, 2, 3}));
  const auto e = normal_form_w2(lie, {1, 2}, {3, 5});
  EXPECT_EQ(e.dim(), 2u);
  EXPECT_TRUE(is_integral(lie, e.basis()));
}

TEST(NormalForm, LambdaEqualsMu) {
  const GradedLie lie(HodgeNumbers(2, {3, 3, 3}));
  EXPECT_EQ(normal_form_w2(lie, {1, 2, 3}, {1, 2, 3}).dim(), 3u);
}

TEST(NormalForm, Preconditions) {
  EXPECT_THROW(normal_form_w2(GradedLie(HodgeNumbers(2, {2, 2, 2})), {1, 2}, {3, 4}), PreconditionError);
  EXPECT_THROW(normal_form_w2(GradedLie(HodgeNumbers(2, {3, 2, 3})), {1}, {3, 4}), PreconditionError);
}

// Rank 2h of the polar equations; H(E) = E.
TEST(NormalForm, PolarRankTwiceH) {
  for (std::size_t h = 2; h <= 4; ++h) {
    const GradedLie lie(HodgeNumbers(2, {3, h, 3}));
    std::vector<Scalar> lambda, mu;
    for (std::size_t a = 0; a < h; ++a) {
      lambda.push_back(Scalar(a + 1));
      mu.push_back(Scalar(a * a + 3));
    }
    const auto e = normal_form_w2(lie, lambda, mu);
    EXPECT_EQ(rank(polar_equations(lie, e.basis())), 2 * h);
    EXPECT_EQ(polar_space(e), e.span());
    EXPECT_EQ(dense_polar(lie, e.basis()), e.span());
  }
}

TEST(NormalForm, CartanKahlerExample) {
  const GradedLie lie(HodgeNumbers(2, {3, 2, 3}));
  const auto e = normal_form_w2(lie, {1, 2}, {3, 5});
  const auto rep = cartan_test(e, 8, 1);
  ASSERT_EQ(rep.c.size(), 2u);
  EXPECT_EQ(rep.c[0], 0u);
  EXPECT_EQ(rep.c[1], 3u);
  EXPECT_EQ(rep.tangent_codim, 3u);
  EXPECT_EQ(8 - rep.tangent_codim, 2u * (2 + 3) / 2);
  EXPECT_TRUE(rep.ordinary);
  EXPECT_EQ(dense_tangent_codim(lie, e.basis()), 3u);
}

TEST(NormalForm, FamilyDimensionThree) {
  const GradedLie lie(HodgeNumbers(2, {3, 3, 3}));
  const auto e = normal_form_w2(lie, {1, 2, 4}, {3, 5, 7});
  const auto rep = cartan_test(e);
  EXPECT_EQ(rep.c, (std::vector<std::size_t>{0, 3, 6}));
  EXPECT_EQ(rep.tangent_codim, 9u);
  EXPECT_EQ(3 * 6 - rep.tangent_codim, 3u * (3 + 3) / 2);
  EXPECT_TRUE(rep.ordinary);
}

// A repeated lambda alone does not lower the ranks; a repeated pair (lambda, mu) does.
TEST(NormalForm, RepeatedParameters) {
  const GradedLie lie(HodgeNumbers(2, {3, 2, 3}));
  const auto rep = cartan_test(normal_form_w2(lie, {1, 1}, {3, 5}));
  EXPECT_EQ(rep.c, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(rep.tangent_codim, 3u);
  EXPECT_TRUE(rep.ordinary);
  const auto e = normal_form_w2(lie, {1, 1}, {3, 3});
  const auto deg = cartan_test(e);
  EXPECT_EQ(deg.c, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(deg.tangent_codim, 2u);
  EXPECT_EQ(deg.tangent_codim, dense_tangent_codim(lie, e.basis()));
  EXPECT_EQ(deg.polar, e.span());
}

TEST(RankSequence, DimensionOne) {
  const GradedLie lie(HodgeNumbers(2, {3, 2, 3}));
  const IntegralElement e(lie, {unit(lie.piece_dim(1), 0)});
  const auto rep = rank_sequence(e, std::vector<std::size_t>{0});
  EXPECT_EQ(rep.c, std::vector<std::size_t>{0});
  EXPECT_EQ(rep.tangent_codim, 0u);
  EXPECT_TRUE(cartan_test(e).ordinary);
}

TEST(RankSequence, RejectsBadFlags) {
  const GradedLie lie(HodgeNumbers(2, {2, 2, 2}));
  const auto e = sharp_construction_w2(lie);
  EXPECT_THROW(rank_sequence(e, std::vector<std::size_t>{0, 0}), PreconditionError);
  EXPECT_THROW(rank_sequence(e, std::vector<Vec>{e.basis()[0]}), PreconditionError);
}

TEST(RankSequence, LagrangianFlags) {
  for (std::size_t k = 2; k <= 3; ++k) {
    const GradedLie lie(HodgeNumbers(2, {2, k, 2}));
    const auto e = sharp_construction_w2(lie);
    const auto rep = cartan_test(e, 16, 7);
    EXPECT_LE(rep.sum_c, rep.tangent_codim);
    EXPECT_EQ(rep.tangent_codim, dense_tangent_codim(lie, e.basis()));
    EXPECT_EQ(rep.sum_c, k == 2 ? 1u : 3u);
    EXPECT_TRUE(rep.ordinary);
  }
}

// Cartan inequality on every random flag across several fixtures.
TEST(RankSequence, CartanInequalityProperty) {
  SeededStream rng(21);
  for (std::size_t h = 2; h <= 3; ++h) {
    const GradedLie lie(HodgeNumbers(2, {3, h, 3}));
    std::vector<Scalar> lambda, mu;
    for (std::size_t a = 0; a < h; ++a) {
      lambda.push_back(rng.next_nonzero(9));
      mu.push_back(rng.next_nonzero(9));
    }
    try {
      const auto e = normal_form_w2(lie, lambda, mu);
      const std::size_t codim = tangent_codim(e);
      for (int t = 0; t < 10; ++t) EXPECT_LE(cartan_test(e, 1, rng.next()).sum_c, codim);
    } catch (const CheckFailure&) {
    }
  }
}

TEST(SharpConstruction, Dimensions) {
  EXPECT_EQ(sharp_construction_w2(GradedLie(HodgeNumbers(2, {2, 4, 2}))).dim(), 4u);
  EXPECT_EQ(sharp_construction_w2(GradedLie(HodgeNumbers(2, {3, 4, 3}), MiddleForm::Split)).dim(), 6u);
  EXPECT_EQ(sharp_construction_w2(GradedLie(HodgeNumbers(2, {3, 2, 3}), MiddleForm::Split)).dim(), 3u);
  EXPECT_EQ(sharp_bound_w2(3, 4), 6u);
  EXPECT_EQ(sharp_bound_w2(3, 3), 4u);
  EXPECT_EQ(sharp_bound_w2(2, 3), 3u);
}

TEST(SharpConstruction, Errors) {
  EXPECT_THROW(sharp_construction_w2(GradedLie(HodgeNumbers(2, {3, 3, 3}), MiddleForm::Split)), PreconditionError);
  EXPECT_THROW(sharp_construction_w2(GradedLie(HodgeNumbers(2, {3, 2, 3}))), PreconditionError);
  EXPECT_THROW(sharp_construction_w2(GradedLie(HodgeNumbers(2, {4, 2, 4}))), PreconditionError);
  EXPECT_THROW(sharp_construction_w2(GradedLie(HodgeNumbers(3, {1, 1, 1, 1}))), PreconditionError);
}

TEST(MaxAbelianSearch, BoundsAndSharpness) {
  for (std::size_t h20 = 2; h20 <= 3; ++h20) {
    for (std::size_t h11 = 1; h11 <= 4; ++h11) {
      const GradedLie lie(HodgeNumbers(2, {h20, h11, h20}), MiddleForm::Split);
      const auto rep = max_abelian_search(lie, {});
      const std::size_t bound = sharp_bound_w2(h20, h11);
      EXPECT_LE(rep.best_dim, bound) << h20 << "," << h11;
      EXPECT_TRUE(is_integral(lie, rep.witness));
      EXPECT_EQ(rep.exhaustive, lie.piece_dim(1) <= 8);
      EXPECT_EQ(rep.best_dim, bound) << h20 << "," << h11;
    }
  }
}

TEST(Symmetrizer, ScalarMultiplication) {
  Bilinear b{1, 3, 3, {{unit(3, 0), unit(3, 1), unit(3, 2)}}};
  EXPECT_EQ(symmetrizer(b).dim(), 3u);
}

TEST(Symmetrizer, SymplecticForm) {
  Bilinear b{2, 2, 1, {{Vec{0}, Vec{1}}, {Vec{-1}, Vec{0}}}};
  const Subspace s = symmetrizer(b);
  EXPECT_EQ(s.dim(), 3u);
  // Psi in Sym iff J Psi is symmetric, J the symplectic matrix.
  for (const auto& v : s.basis()) {
    const Mat psi = Mat::from_rows({Vec{v[0], v[2]}, Vec{v[1], v[3]}}, 2);
    const Mat j = Mat::from_rows({{0, 1}, {-1, 0}});
    const Mat g = j * psi;
    EXPECT_EQ(g, g.transpose());
  }
}

TEST(Symmetrizer, RejectsBadShape) {
  Bilinear b{2, 2, 1, {{Vec{0}, Vec{1}}}};
  EXPECT_THROW(symmetrizer(b), PreconditionError);
}
