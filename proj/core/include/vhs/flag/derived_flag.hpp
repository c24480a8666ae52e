#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vhs/exact/subspace.hpp"
#include "vhs/hodge/graded_lie.hpp"

namespace vhs {

/// One step of the derived flag: W^{[k]} and its annihilator I_[k].
struct FlagStep {
  int k = 0;
  std::size_t w_dim = 0;                 ///< dim W^{[k]}
  std::size_t i_dim = 0;                 ///< dim I_[k] = dim p - dim W^{[k]}
  std::vector<std::size_t> graded_dims;  ///< dim (W^{[k]} cap g^{-r,r}) for r = 1..n
};

/// Derived flag I = I_[0] > I_[1] > ... of the infinitesimal period relation,
/// computed dually as the bracket closure W^{[k+1]} = W^{[k]} + [W^{[k]}, W^{[k]}]
/// of W^{[0]} = g^{-1,1} inside p = sum_{r >= 1} g^{-r,r}.
struct FlagReport {
  std::size_t nilpotent_dim = 0;  ///< dim p = dim D
  std::vector<FlagStep> steps;    ///< k = 0 .. stabilized_at
  int stabilized_at = 0;          ///< first k with W^{[k+1]} = W^{[k]}
  std::size_t terminal_dim = 0;   ///< dim I_[infinity]
  /// W^{[k]} cap g^{-r,r} as subspaces of g^{-r,r}: graded[k][r - 1].
  std::vector<std::vector<Subspace>> graded;

  std::size_t rank_I() const { return steps.front().i_dim; }
  /// dim I_[k]; steps past stabilization repeat the terminal value.
  std::size_t i_dim(int k) const;
  /// W^{[k]} as a subspace of the coordinates of p.
  Subspace w(const GradedLie& lie, int k) const;
};

FlagReport derived_flag(const GradedLie& lie);

/// Inclusion I_[m] in I(2^m) for every m, equality when all h^{p,q} >= 2, and
/// termination I_[m] = 0 for m >= ceil(log2 n).
struct FlagTheoremReport {
  bool hypothesis = false;          ///< all h^{p,q} != 0; checks are skipped otherwise
  bool equality_expected = false;   ///< n >= 2 and all h^{p,q} >= 2
  bool inclusion_holds = true;
  bool equality_holds = true;       ///< I_[m] = I(2^m) at every computed m
  bool termination_holds = true;
  int termination_bound = 0;        ///< ceil(log2 n)
  std::vector<bool> strict;         ///< per m: inclusion strict
  bool pass = true;
  std::string failure;
};

FlagTheoremReport check_flag_theorem(const GradedLie& lie, const FlagReport& flag);
FlagTheoremReport check_flag_theorem(const GradedLie& lie);

/// Weight-four special cases.
struct SpecialCaseReport {
  std::size_t h40 = 0;
  std::size_t h22 = 0;
  /// dim of the span of the forms theta^{4b}_{0a}, i.e. of the dual of g^{-4,4}.
  std::size_t top_forms_dim = 0;
  bool cy_case_applies = false;       ///< h^{4,0} = 1
  bool cy_case_holds = true;          ///< h^{4,0} = 1 iff top_forms_dim = 0 (among h^{4,0} != 0)
  bool h22_case_applies = false;      ///< h^{2,2} = 0
  bool h22_case_holds = true;         ///< I_[2] = I_[1] = I_[infinity] != 0
  bool pass = true;
  std::string failure;
};

SpecialCaseReport special_cases(const GradedLie& lie);

/// ceil(log2 n) for n >= 1.
int ceil_log2(int n);

}  // namespace vhs
