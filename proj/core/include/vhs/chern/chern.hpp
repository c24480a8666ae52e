#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vhs/chern/exterior.hpp"
#include "vhs/integral/integral_element.hpp"

namespace vhs {

/// c_0 = 1, c_1, ..., c_d with det(tI - A) = sum_k c_k t^{d-k}, by Faddeev-LeVerrier.
/// Requires a square matrix of even degree, whose entries commute.
std::vector<Form> char_coeffs(const FormMat& a);
std::vector<Scalar> char_coeffs(const Mat& a);

struct LemmaReport {
  bool hypothesis = false;               ///< AB = 0
  bool products_vanish = false;          ///< c_i(A) c_j(B) = 0 for all i + j > d
  std::vector<std::pair<std::size_t, std::size_t>> nonzero;  ///< (i, j) with i + j > d and a nonzero product
  std::size_t products_checked = 0;
};

/// Lemma: AB = 0 implies c_i(A) c_j(B) = 0 for i + j > d. The check runs even when AB != 0.
LemmaReport lemma_ab(const FormMat& a, const FormMat& b);
LemmaReport lemma_ab(const Mat& a, const Mat& b);

/// A_p for p = 1..n (index 0 is an empty placeholder): the map H^{p,n-p} -> H^{p-1,n-p+1}
/// of the generic element sum_k xi_k v_k, rows indexed by H^{p-1,n-p+1}.
std::vector<FormMat> hodge_block_matrices(const GradedLie& lie, const std::vector<Vec>& vectors);

/// hodge_block_matrices after verifying A_{p-1} A_p = 0 for every p; throws CheckFailure otherwise.
std::vector<FormMat> integrability_matrices(const GradedLie& lie, const std::vector<Vec>& vectors);
inline std::vector<FormMat> integrability_matrices(const IntegralElement& e) {
  return integrability_matrices(e.lie(), e.basis());
}

/// Theta_{F^p} restricted to its nonzero block H^{p,n-p}: conj(A_p)^T A_p, zero for p = 0.
FormMat theta(const std::vector<FormMat>& a, const HodgeNumbers& h, int p);
/// Theta*_{F^{n-p}} = -A_{p+1} conj(A_{p+1})^T on H^{p,n-p}, zero for p = n.
FormMat theta_star(const std::vector<FormMat>& a, const HodgeNumbers& h, int p);
/// Theta_{F^p} on all of F^p: the block theta(p) followed by zeros on F^{p+1}.
FormMat theta_full(const std::vector<FormMat>& a, const HodgeNumbers& h, int p);

struct ChernReport {
  bool integrable = false;             ///< A_{p-1} A_p = 0 for all p
  bool theta_identity = false;         ///< Theta_{F^p} Theta*_{F^{n-p}} = 0 for all p
  bool rank_vanishing = false;         ///< c_k(F^p) = 0 for k > h^{p,n-p}
  bool product_vanishing = false;      ///< c_i(F^p) c_j(Theta*_{F^{n-p}}) = 0 for i + j > h^{p,n-p}
  bool direct_product_vanishing = false;  ///< the same with c_j(F^{n-p}) from Theta_{F^{n-p}}
  std::size_t identities_checked = 0;
  std::size_t products_checked = 0;
  std::vector<std::string> failures;
  bool pass = false;
};

/// Builds A_p, Theta and Theta* for E and checks the curvature relations exactly.
ChernReport verify_chern_relations(const IntegralElement& e);

/// Weight of Ad phi(z) on Lambda^p of the dual of g^{-1,1} tensor Lambda^q of the dual of g^{1,-1}.
int invariant_weight(int p, int q);

}  // namespace vhs
