#include "vhs/chern/chern.hpp"

#include "vhs/error.hpp"

namespace vhs {

std::vector<Form> char_coeffs(const FormMat& a) {
  if (a.rows() != a.cols()) throw PreconditionError("char_coeffs needs a square matrix");
  if (a.degree() % 2 != 0) throw PreconditionError("char_coeffs needs entries of even degree");
  const std::size_t d = a.rows(), n = a.generators();
  std::vector<Form> c{Form(n, Scalar(1))};
  FormMat m(d, d, 0, n);
  for (std::size_t k = 1; k <= d; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k) / k.
    FormMat next = k == 1 ? FormMat(d, d, 0, n) : a * m;
    for (std::size_t i = 0; i < d; ++i) next.add(i, i, c[k - 1]);
    m = std::move(next);
    const FormMat am = a * m;
    Form tr(n);
    for (std::size_t i = 0; i < d; ++i) tr += am(i, i);
    c.push_back(tr * fraction(-1, static_cast<long>(k)));
  }
  return c;
}

std::vector<Scalar> char_coeffs(const Mat& a) {
  std::vector<Scalar> out;
  for (const auto& f : char_coeffs(FormMat::from_scalar(a, 0))) out.push_back(f.coefficient(0));
  return out;
}

LemmaReport lemma_ab(const FormMat& a, const FormMat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw PreconditionError("lemma_ab needs square matrices of the same size");
  LemmaReport rep;
  rep.hypothesis = (a * b).is_zero();
  const std::size_t d = a.rows();
  const auto ca = char_coeffs(a), cb = char_coeffs(b);
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j) {
      if (i + j <= d) continue;
      ++rep.products_checked;
      if (!(ca[i] * cb[j]).is_zero()) rep.nonzero.emplace_back(i, j);
    }
  rep.products_vanish = rep.nonzero.empty();
  return rep;
}

LemmaReport lemma_ab(const Mat& a, const Mat& b) {
  return lemma_ab(FormMat::from_scalar(a, 0), FormMat::from_scalar(b, 0));
}

std::vector<FormMat> hodge_block_matrices(const GradedLie& lie, const std::vector<Vec>& vectors) {
  const std::size_t n_gen = vectors.size();
  if (n_gen > Form::kMaxGenerators)
    throw PreconditionError("integral element of dimension " + std::to_string(n_gen) + " exceeds the " +
                            std::to_string(Form::kMaxGenerators) + "-generator exterior algebra");
  for (const auto& v : vectors)
    if (v.size() != lie.piece_dim(1)) throw PreconditionError("vector is not in g^{-1,1}");
  const int n = lie.weight();
  const HodgeNumbers& h = lie.hodge();
  const PolarizedSpace& sp = lie.space();
  std::vector<SparseEndo> endos;
  for (const auto& v : vectors) endos.push_back(lie.element(1, v));
  std::vector<FormMat> a(static_cast<std::size_t>(n) + 1);
  a[0] = FormMat(0, h.level_dim(0), 1, n_gen);
  for (int p = 1; p <= n; ++p) {
    FormMat m(h.level_dim(p - 1), h.level_dim(p), 1, n_gen);
    for (std::size_t k = 0; k < n_gen; ++k) {
      const Form xi = Form::xi(n_gen, k);
      for (std::size_t b = 0; b < m.rows(); ++b)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          const Scalar x = endos[k].at(sp.index(p - 1, b), sp.index(p, c));
          if (sgn(x) != 0) m.add(b, c, xi * x);
        }
    }
    a[static_cast<std::size_t>(p)] = std::move(m);
  }
  return a;
}

std::vector<FormMat> integrability_matrices(const GradedLie& lie, const std::vector<Vec>& vectors) {
  auto a = hodge_block_matrices(lie, vectors);
  for (std::size_t p = 2; p < a.size(); ++p)
    if (!(a[p - 1] * a[p]).is_zero())
      throw CheckFailure("A_" + std::to_string(p - 1) + " A_" + std::to_string(p) +
                         " != 0: the vectors do not span an integral element");
  return a;
}

FormMat theta(const std::vector<FormMat>& a, const HodgeNumbers& h, int p) {
  const std::size_t d = h.level_dim(p);
  const std::size_t n_gen = a.empty() ? 0 : a[0].generators();
  if (p == 0) return FormMat(d, d, 2, n_gen);
  const auto& ap = a[static_cast<std::size_t>(p)];
  return ap.conj_transpose() * ap;
}

FormMat theta_star(const std::vector<FormMat>& a, const HodgeNumbers& h, int p) {
  const std::size_t d = h.level_dim(p);
  const std::size_t n_gen = a.empty() ? 0 : a[0].generators();
  if (p == h.weight()) return FormMat(d, d, 2, n_gen);
  const auto& ap1 = a[static_cast<std::size_t>(p) + 1];
  return -(ap1 * ap1.conj_transpose());
}

FormMat theta_full(const std::vector<FormMat>& a, const HodgeNumbers& h, int p) {
  const FormMat block = theta(a, h, p);
  const std::size_t rest = h.f(p) - h.level_dim(p);
  return block_diag(block, FormMat(rest, rest, 2, block.generators()));
}

ChernReport verify_chern_relations(const IntegralElement& e) {
  const GradedLie& lie = e.lie();
  const HodgeNumbers& h = lie.hodge();
  const int n = lie.weight();
  ChernReport rep;
  const auto a = hodge_block_matrices(lie, e.basis());

  rep.integrable = true;
  for (int p = 2; p <= n; ++p) {
    ++rep.identities_checked;
    if (!(a[static_cast<std::size_t>(p) - 1] * a[static_cast<std::size_t>(p)]).is_zero()) {
      rep.integrable = false;
      rep.failures.push_back("A_" + std::to_string(p - 1) + " A_" + std::to_string(p) + " != 0");
    }
  }

  std::vector<std::vector<Form>> c_theta, c_star;
  rep.theta_identity = true;
  rep.rank_vanishing = true;
  for (int p = 0; p <= n; ++p) {
    const FormMat t = theta(a, h, p), ts = theta_star(a, h, p);
    ++rep.identities_checked;
    if (!(t * ts).is_zero()) {
      rep.theta_identity = false;
      rep.failures.push_back("Theta_{F^" + std::to_string(p) + "} Theta*_{F^" + std::to_string(n - p) + "} != 0");
    }
    c_theta.push_back(char_coeffs(t));
    c_star.push_back(char_coeffs(ts));
    const auto full = char_coeffs(theta_full(a, h, p));
    for (std::size_t k = h.level_dim(p) + 1; k < full.size(); ++k) {
      ++rep.products_checked;
      if (!full[k].is_zero()) {
        rep.rank_vanishing = false;
        rep.failures.push_back("c_" + std::to_string(k) + "(F^" + std::to_string(p) + ") != 0");
      }
    }
  }

  rep.product_vanishing = true;
  rep.direct_product_vanishing = true;
  for (int p = 0; p <= n; ++p) {
    const std::size_t d = h.level_dim(p);
    const auto& ci = c_theta[static_cast<std::size_t>(p)];
    const auto& cs = c_star[static_cast<std::size_t>(p)];
    const auto& cd = c_theta[static_cast<std::size_t>(n - p)];
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j <= d; ++j) {
        if (i + j <= d) continue;
        rep.products_checked += 2;
        const std::string tag = "c_" + std::to_string(i) + "(F^" + std::to_string(p) + ") c_" + std::to_string(j) +
                                "(F^" + std::to_string(n - p) + ")";
        if (!(ci[i] * cs[j]).is_zero()) {
          rep.product_vanishing = false;
          rep.failures.push_back(tag + " via Theta* != 0");
        }
        if (!(ci[i] * cd[j]).is_zero()) {
          rep.direct_product_vanishing = false;
          rep.failures.push_back(tag + " != 0");
        }
      }
  }
  rep.pass = rep.integrable && rep.theta_identity && rep.rank_vanishing && rep.product_vanishing &&
             rep.direct_product_vanishing;
  return rep;
}

int invariant_weight(int p, int q) { return 2 * (p - q); }

}  // namespace vhs
