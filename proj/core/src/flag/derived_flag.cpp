#include "vhs/flag/derived_flag.hpp"

#include "vhs/error.hpp"
#include "vhs/exact/echelon.hpp"

namespace vhs {

int ceil_log2(int n) {
  if (n < 1) throw PreconditionError("ceil_log2 needs n >= 1");
  int m = 0;
  while ((1 << m) < n) ++m;
  return m;
}

std::size_t FlagReport::i_dim(int k) const {
  if (k < 0) throw PreconditionError("negative flag index");
  if (static_cast<std::size_t>(k) < steps.size()) return steps[static_cast<std::size_t>(k)].i_dim;
  return terminal_dim;
}

Subspace FlagReport::w(const GradedLie& lie, int k) const {
  const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(k), graded.size() - 1);
  std::vector<Vec> vs;
  for (int r = 1; r <= lie.weight(); ++r) {
    const std::size_t off = lie.nilpotent_offset(r);
    for (const Vec& b : graded[idx][static_cast<std::size_t>(r - 1)].basis()) {
      Vec v(lie.nilpotent_dim());
      for (std::size_t i = 0; i < b.size(); ++i) v[off + i] = b[i];
      vs.push_back(std::move(v));
    }
  }
  return Subspace::span(lie.nilpotent_dim(), vs);
}

namespace {

std::vector<Subspace> bracket_step(const GradedLie& lie, const std::vector<Subspace>& w) {
  const int n = lie.weight();
  std::vector<Subspace> next;
  for (int t = 1; t <= n; ++t) {
    const std::size_t target = lie.piece_dim(t);
    RowEchelon ech(target);
    for (const Vec& v : w[static_cast<std::size_t>(t - 1)].basis()) ech.insert(v);
    for (int r = 1; r <= t / 2 && ech.rank() < target; ++r) {
      const int s = t - r;
      const auto& wr = w[static_cast<std::size_t>(r - 1)].basis();
      const auto& ws = w[static_cast<std::size_t>(s - 1)].basis();
      for (std::size_t i = 0; i < wr.size() && ech.rank() < target; ++i) {
        const std::size_t j0 = r == s ? i + 1 : 0;
        for (std::size_t j = j0; j < ws.size() && ech.rank() < target; ++j) ech.insert(lie.bracket(r, wr[i], s, ws[j]));
      }
    }
    std::vector<Vec> rows;
    for (const auto& row : ech.rows()) rows.push_back(to_dense(row, target));
    next.push_back(Subspace::span(target, rows));
  }
  return next;
}

std::size_t total(const std::vector<Subspace>& w) {
  std::size_t d = 0;
  for (const auto& s : w) d += s.dim();
  return d;
}

}  // namespace

FlagReport derived_flag(const GradedLie& lie) {
  const int n = lie.weight();
  FlagReport rep;
  rep.nilpotent_dim = lie.nilpotent_dim();
  std::vector<Subspace> w;
  for (int r = 1; r <= n; ++r)
    w.push_back(r == 1 ? Subspace::whole(lie.piece_dim(1)) : Subspace::zero(lie.piece_dim(r)));
  for (int k = 0;; ++k) {
    FlagStep step;
    step.k = k;
    step.w_dim = total(w);
    step.i_dim = rep.nilpotent_dim - step.w_dim;
    for (const auto& s : w) step.graded_dims.push_back(s.dim());
    rep.steps.push_back(step);
    rep.graded.push_back(w);
    if (n == 0) break;
    std::vector<Subspace> next = bracket_step(lie, w);
    if (total(next) == total(w)) break;
    w = std::move(next);
  }
  rep.stabilized_at = static_cast<int>(rep.steps.size()) - 1;
  rep.terminal_dim = rep.steps.back().i_dim;
  return rep;
}

FlagTheoremReport check_flag_theorem(const GradedLie& lie, const FlagReport& flag) {
  FlagTheoremReport rep;
  const HodgeNumbers& h = lie.hodge();
  const int n = h.weight();
  rep.hypothesis = h.all_nonzero();
  rep.equality_expected = n >= 2 && h.all_at_least(2);
  if (n < 1 || !rep.hypothesis) return rep;
  rep.termination_bound = ceil_log2(n);
  const int last = std::max(flag.stabilized_at, rep.termination_bound);
  for (int m = 0; m <= last; ++m) {
    const int reach = m >= 31 ? n : std::min(n, 1 << m);
    const auto& gr = flag.graded[std::min<std::size_t>(static_cast<std::size_t>(m), flag.graded.size() - 1)];
    bool includes = true;
    bool equal = true;
    for (int r = 1; r <= n; ++r) {
      const std::size_t d = gr[static_cast<std::size_t>(r - 1)].dim();
      const std::size_t full = lie.piece_dim(r);
      if (r <= reach && d != full) includes = false;
      if (r > reach && d != 0) equal = false;
    }
    equal = equal && includes;
    rep.strict.push_back(includes && !equal);
    if (!includes && rep.inclusion_holds) {
      rep.inclusion_holds = false;
      rep.failure = "I_[" + std::to_string(m) + "] is not contained in I(" + std::to_string(reach) + ")";
    }
    if (!equal) rep.equality_holds = false;
    if (m >= rep.termination_bound && flag.i_dim(m) != 0 && rep.termination_holds) {
      rep.termination_holds = false;
      if (rep.failure.empty()) rep.failure = "I_[" + std::to_string(m) + "] != 0 past the bound";
    }
  }
  if (rep.equality_expected && !rep.equality_holds && rep.failure.empty())
    rep.failure = "equality I_[m] = I(2^m) fails although all h^{p,q} >= 2";
  rep.pass = rep.inclusion_holds && rep.termination_holds && (!rep.equality_expected || rep.equality_holds);
  return rep;
}

FlagTheoremReport check_flag_theorem(const GradedLie& lie) { return check_flag_theorem(lie, derived_flag(lie)); }

SpecialCaseReport special_cases(const GradedLie& lie) {
  const HodgeNumbers& h = lie.hodge();
  if (h.weight() != 4) throw PreconditionError("special_cases needs weight 4");
  SpecialCaseReport rep;
  rep.h40 = h.level_dim(4);
  rep.h22 = h.level_dim(2);
  rep.top_forms_dim = lie.piece_dim(4);
  rep.cy_case_applies = rep.h40 == 1;
  if (rep.h40 > 0) {
    rep.cy_case_holds = (rep.top_forms_dim == 0) == (rep.h40 == 1);
    if (!rep.cy_case_holds)
      rep.failure = "forms dual to g^{-4,4} have dim " + std::to_string(rep.top_forms_dim) + " with h^{4,0} = " +
                    std::to_string(rep.h40);
  }
  rep.h22_case_applies = rep.h22 == 0;
  if (rep.h22_case_applies) {
    const FlagReport f = derived_flag(lie);
    rep.h22_case_holds = f.i_dim(2) == f.i_dim(1) && f.terminal_dim == f.i_dim(1) && f.terminal_dim != 0;
    if (!rep.h22_case_holds && rep.failure.empty())
      rep.failure = "expected I_[2] = I_[1] = I_[infinity] != 0, got dims " + std::to_string(f.i_dim(1)) + ", " +
                    std::to_string(f.i_dim(2)) + ", " + std::to_string(f.terminal_dim);
  }
  rep.pass = rep.cy_case_holds && rep.h22_case_holds;
  return rep;
}

}  // namespace vhs
