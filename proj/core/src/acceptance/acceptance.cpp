#include "vhs/acceptance/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "vhs/chern/chern.hpp"
#include "vhs/error.hpp"
#include "vhs/exact/random.hpp"
#include "vhs/flag/derived_flag.hpp"
#include "vhs/hodge/graded_lie.hpp"
#include "vhs/integral/integral_element.hpp"
#include "vhs/jacobian/hypersurface.hpp"
#include "vhs/nl/noether_lefschetz.hpp"

namespace vhs {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

Mat random_mat(SeededStream& rng, std::size_t r, std::size_t c, long bound) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.next_int(-bound, bound);
  return m;
}

void domain_dimensions(Outcome& o) {
  const std::size_t a = domain_dimension(HodgeNumbers(3, {1, 1, 1, 1}));
  const std::size_t b = domain_dimension(HodgeNumbers(2, {2, 1, 2}));
  o.check(a == 4, "dim D(1,1,1,1) = " + std::to_string(a));
  o.check(b == 3, "dim D(2,1,2) = " + std::to_string(b));
  o.detail << "dim D = " << a << " for (1,1,1,1), " << b << " for (2,1,2)";
}

void derived_flags(Outcome& o) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto f = derived_flag(GradedLie(HodgeNumbers(2, {2, k, 2})));
    o.check(f.rank_I() == 1 && f.i_dim(1) == 0, "(2," + std::to_string(k) + ",2)");
  }
  for (std::size_t h = 1; h <= 4; ++h) {
    const auto f = derived_flag(GradedLie(HodgeNumbers(3, {1, h, h, 1})));
    o.check(f.rank_I() == h + 1 && f.i_dim(1) == 1 && f.i_dim(2) == 0, "(1," + std::to_string(h) + ",...)");
  }
  const GradedLie all2(HodgeNumbers(4, {2, 2, 2, 2, 2}));
  const auto f4 = derived_flag(all2);
  o.check(f4.w(all2, 1) == horizontal_subsystem(all2, 2), "n=4 all 2: I_[1] != I(2)");
  o.check(f4.i_dim(2) == 0, "n=4 all 2: I_[2] != 0");
  const auto f0 = derived_flag(GradedLie(HodgeNumbers(4, {2, 2, 0, 2, 2})));
  o.check(f0.i_dim(2) == f0.i_dim(1) && f0.i_dim(1) != 0, "n=4 h22=0: I_[2] != I_[1] or zero");
  o.detail << "weight 2 rank I = 1, I_[1] = 0; weight 3 rank I = h+1, I_[1] = 1, I_[2] = 0; n=4 all 2 I_[1] = I(2) (dim "
           << f4.i_dim(1) << "), I_[2] = 0; h22 = 0 I_[2] = I_[1] = " << f0.i_dim(1);
}

void flag_sweep(Outcome& o) {
  std::size_t total = 0, inclusion_failures = 0, termination_failures = 0;
  std::vector<std::string> bad;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& h : palindromic_sweep(n, {1, 2})) {
      ++total;
      const auto t = check_flag_theorem(GradedLie(h));
      if (!t.inclusion_holds) {
        ++inclusion_failures;
        bad.push_back(h.to_string());
      }
      if (!t.termination_holds) {
        ++termination_failures;
        o.check(false, "termination fails for " + h.to_string());
      }
    }
  }
  o.detail << total << " Hodge vectors; termination holds on " << total - termination_failures
           << "; inclusion I_[m] in I(2^m) fails on " << inclusion_failures;
  if (inclusion_failures > 0) {
    std::string list;
    for (const auto& s : bad) list += (list.empty() ? "" : " ") + s;
    o.check(false, "inclusion counterexamples: " + list);
  }
}

void cartan_kahler(Outcome& o) {
  const GradedLie lie(HodgeNumbers(2, {3, 2, 3}));
  const auto e = normal_form_w2(lie, {1, 2}, {3, 5});
  const auto rep = cartan_test(e);
  o.check(rep.c == std::vector<std::size_t>{0, 3}, "polar ranks");
  o.check(rep.tangent_codim == 3, "tangent codim " + std::to_string(rep.tangent_codim));
  o.check(8 - rep.tangent_codim == 2 * (2 + 3) / 2, "family dimension");
  o.check(rep.ordinary, "not ordinary");
  o.detail << "c = (" << rep.c.at(0) << "," << rep.c.at(1) << "), tangent codim " << rep.tangent_codim
           << " in Gr(2,6), family dim " << 8 - rep.tangent_codim << ", ordinary " << (rep.ordinary ? "yes" : "no");
}

void polar_rank(Outcome& o) {
  for (std::size_t h = 2; h <= 4; ++h) {
    const GradedLie lie(HodgeNumbers(2, {3, h, 3}));
    std::vector<Scalar> lambda, mu;
    for (std::size_t a = 0; a < h; ++a) {
      lambda.push_back(Scalar(a + 1));
      mu.push_back(Scalar(a * a + 3));
    }
    const auto e = normal_form_w2(lie, lambda, mu);
    const std::size_t r = rank(polar_equations(lie, e.basis()));
    o.check(r == 2 * h, "h=" + std::to_string(h) + " rank " + std::to_string(r));
    o.check(polar_space(e) == e.span(), "h=" + std::to_string(h) + " H(E) != E");
    o.detail << (h > 2 ? ", " : "") << "h=" << h << " rank " << r;
  }
}

void sharp_bounds(Outcome& o) {
  std::size_t exhaustive = 0;
  for (std::size_t h20 = 2; h20 <= 3; ++h20)
    for (std::size_t h11 = 1; h11 <= 4; ++h11) {
      const GradedLie lie(HodgeNumbers(2, {h20, h11, h20}), MiddleForm::Split);
      const auto rep = max_abelian_search(lie, {});
      const std::size_t bound = sharp_bound_w2(h20, h11);
      const std::string tag = "(" + std::to_string(h20) + "," + std::to_string(h11) + ")";
      o.check(rep.best_dim <= bound, tag + " exceeds bound");
      o.check(is_integral(lie, rep.witness), tag + " witness not integral");
      o.check(rep.exhaustive == (lie.piece_dim(1) <= 8), tag + " search mode");
      if (rep.exhaustive) ++exhaustive;
    }
  for (std::size_t k : {2u, 4u}) {
    const auto a = sharp_construction_w2(GradedLie(HodgeNumbers(2, {2, k, 2})));
    const auto b = sharp_construction_w2(GradedLie(HodgeNumbers(2, {3, k, 3}), MiddleForm::Split));
    o.check(a.dim() == k, "h20=2 construction");
    o.check(b.dim() == 3 * k / 2, "h20=3 construction");
  }
  o.detail << "8 cases within the bound (" << exhaustive << " exhaustive); constructions reach k and 3k/2 for k = 2, 4";
}

void lemma_suite(Outcome& o) {
  SeededStream rng(7);
  std::size_t products = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng.next_int(0, 4));
    const std::size_t r = static_cast<std::size_t>(rng.next_int(0, static_cast<long>(d)));
    const Mat a = random_mat(rng, d, r, 3) * random_mat(rng, r, d, 3);
    const Subspace ker = kernel(a);
    Mat b(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& v : ker.basis()) {
        const long c = rng.next_int(-2, 2);
        for (std::size_t i = 0; i < d; ++i) b(i, j) += c * v[i];
      }
    const auto rep = lemma_ab(a, b);
    o.check(rep.hypothesis && rep.products_vanish, "pair " + std::to_string(t));
    products += rep.products_checked;
  }
  const auto id = lemma_ab(Mat::identity(3), Mat::identity(3));
  o.check(!id.hypothesis && !id.products_vanish, "identity counterexample");
  o.detail << "100 pairs with AB = 0, " << products << " products vanish; A = B = I_3 gives a nonzero product";
}

void chern_suite(Outcome& o) {
  const std::vector<std::pair<HodgeNumbers, MiddleForm>> fixtures{
      {HodgeNumbers(2, {2, 2, 2}), MiddleForm::Diagonal},    {HodgeNumbers(2, {2, 4, 2}), MiddleForm::Diagonal},
      {HodgeNumbers(2, {3, 2, 3}), MiddleForm::Split},       {HodgeNumbers(3, {1, 2, 2, 1}), MiddleForm::Diagonal},
      {HodgeNumbers(3, {1, 3, 3, 1}), MiddleForm::Diagonal}, {HodgeNumbers(3, {2, 2, 2, 2}), MiddleForm::Diagonal}};
  std::uint64_t seed = 100;
  std::size_t checked = 0, identities = 0, products = 0;
  std::size_t by_weight[2] = {0, 0};
  for (const auto& [h, middle] : fixtures) {
    const GradedLie lie(h, middle);
    for (std::size_t dim = 1; dim <= 4; ++dim) {
      std::optional<IntegralElement> e;
      try {
        e.emplace(random_integral_element(lie, dim, seed++));
      } catch (const CheckFailure&) {
        continue;
      }
      const auto rep = verify_chern_relations(*e);
      o.check(rep.pass && rep.theta_identity && rep.product_vanishing,
              h.to_string() + " dim " + std::to_string(dim));
      ++checked;
      ++by_weight[h.weight() - 2];
      identities += rep.identities_checked;
      products += rep.products_checked;
    }
  }
  o.check(by_weight[0] > 0 && by_weight[1] > 0, "both weights represented");
  o.detail << checked << " integral elements (" << by_weight[0] << " weight 2, " << by_weight[1] << " weight 3), "
           << identities << " Theta identities, " << products << " coefficient products";
}

std::size_t oracle_nl_codim(const HodgeNumbers& h, SeededStream& rng) {
  const GradedLie lie(h);
  const int m = h.weight() / 2;
  Vec z(h.total_dim());
  for (std::size_t a = 0; a < h.level_dim(m); ++a) z[lie.space().index(m, a)] = rng.next_nonzero(5);
  std::vector<Vec> images;
  for (int r = 1; r <= h.weight(); ++r)
    for (const auto& x : lie.piece_basis(r)) images.push_back(x.apply(z));
  if (images.empty()) return 0;
  return rank(Mat::from_rows(images, h.total_dim()));
}

void nl_codim_sweep(Outcome& o) {
  SeededStream rng(3);
  std::size_t count = 0;
  for (int n : {2, 4, 6, 8}) {
    const std::vector<std::size_t> values = n == 8 ? std::vector<std::size_t>{1, 2} : std::vector<std::size_t>{1, 2, 3};
    for (const auto& h : palindromic_sweep(n, values)) {
      const std::size_t f = nl_codim(h), g = oracle_nl_codim(h, rng);
      o.check(f == g, h.to_string() + ": formula " + std::to_string(f) + ", rank " + std::to_string(g));
      ++count;
    }
  }
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      o.check(nl_codim(HodgeNumbers(4, {1, a, b, a, 1})) == 1 + a, "spot value (1,a,b,a,1)");
  o.detail << count << " even-weight Hodge vectors: formula equals rank of X -> X zeta for generic zeta; (1,a,b,a,1) -> 1+a";
}

void sextic_pipeline(Outcome& o) {
  const HypersurfaceRing ring(plane_fixture(6, 0));
  const auto tp = t_p_codim(ring);
  const auto rep = nl_pipeline(ring);
  o.check(rep.dim_vp == 28, "dim V_P^6 = " + std::to_string(rep.dim_vp));
  o.check(tp.via_slice == 19 && tp.via_restriction == 19, "codim T_P");
  o.check(rep.q_rank && *rep.q_rank == 19, "rank Q_zeta");
  o.check(rep.h31 == 426, "dim V^6/J_6 = " + std::to_string(rep.h31));
  o.check(rep.sigma == 407, "sigma = " + std::to_string(rep.sigma));
  o.check(rep.equality && rep.codim_slice == rep.h13 - rep.sigma, "equality");
  for (const auto& f : rep.failures) o.check(false, f);
  o.detail << "dim V_P^6 = " << rep.dim_vp << ", codim T_P = " << tp.via_slice << " (slice) = " << tp.via_restriction
           << " (restriction), rank Q_zeta = " << (rep.q_rank ? std::to_string(*rep.q_rank) : "n/a")
           << ", dim V^6/J_6 = " << rep.h31 << ", sigma = " << rep.sigma << ", " << rep.codim_slice << " = "
           << rep.h13 << " - " << rep.sigma;
}

void macaulay(Outcome& o) {
  const HypersurfaceRing cubic(fermat_fixture(4, 3));
  const std::vector<std::size_t> dims{1, 6, 15, 20, 15, 6, 1};
  for (int k = 0; k <= 6; ++k) {
    const Mat m = macaulay_pairing(cubic, k);
    o.check(m.rows() == dims[k] && rank(m) == dims[k], "cubic pairing k=" + std::to_string(k));
  }
  o.check(hodge_piece_dim(cubic, 2) == 20, "dim V^3/J_3");
  const HypersurfaceRing sextic(plane_fixture(6, 0));
  const Mat r = restricted_pairing(sextic, 6);
  o.check(r.rows() == 19 && r.cols() == 19 && rank(r) == 19, "restricted pairing");
  o.detail << "cubic fourfold pairings full rank for k = 0..6 (dim V^3/J_3 = " << hodge_piece_dim(cubic, 2)
           << "); restricted pairing " << r.rows() << "x" << r.cols() << " rank " << rank(r);
}

void refined_bound_property(Outcome& o) {
  SeededStream rng(12);
  std::size_t equal = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t a = 1 + static_cast<std::size_t>(rng.next_int(0, 3));
    const std::size_t b = 1 + static_cast<std::size_t>(rng.next_int(0, 4));
    const GradedLie lie(HodgeNumbers(4, {1, a, b, a, 1}));
    std::vector<Scalar> c;
    const Mat x = random_mat(rng, b, a, 2);
    for (std::size_t i = 0; i < b; ++i) c.push_back(rng.next_nonzero(3));
    const auto e = cy_type_element(lie, x, c);
    Vec zeta(b);
    for (auto& z : zeta) z = rng.next_int(0, 2) == 0 ? 0 : rng.next_int(-3, 3);
    if (is_zero(zeta)) zeta[0] = 1;
    const auto rep = refined_bound({e, zeta, std::nullopt});
    o.check(rep.q_rank && rep.codim == *rep.q_rank, "pair " + std::to_string(t) + ": codim != rank Q_zeta");
    o.check(rep.holds, "pair " + std::to_string(t) + ": bound violated");
    if (rep.equality) ++equal;
  }
  o.detail << "50 pairs: codim E_zeta = rank Q_zeta and codim <= h^{1,3} - sigma in all; equality in " << equal;
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<void(Outcome&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "period domain dimensions", 1, domain_dimensions},
      {2, "derived flags", 20, derived_flags},
      {3, "derived flag inclusion and termination sweep, n <= 8", 60, flag_sweep},
      {4, "Cartan-Kahler example", 5, cartan_kahler},
      {5, "polar rank 2h of normal-form elements", 5, polar_rank},
      {6, "sharp weight-2 abelian bounds", 300, sharp_bounds},
      {7, "Chern coefficient lemma for AB = 0", 30, lemma_suite},
      {8, "Theta identities on integral elements", 120, chern_suite},
      {9, "Noether-Lefschetz codimension formula", 60, nl_codim_sweep},
      {10, "sextic fourfold containing a plane", 600, sextic_pipeline},
      {11, "Macaulay duality", 60, macaulay},
      {12, "refined Noether-Lefschetz bound on Calabi-Yau type elements", 60, refined_bound_property},
  };
  return all;
}

}  // namespace

std::vector<int> acceptance_ids() {
  std::vector<int> ids;
  for (const auto& s : criteria()) ids.push_back(s.id);
  return ids;
}

CriterionResult run_criterion(int id) {
  for (const auto& s : criteria()) {
    if (s.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.title = s.title;
    r.time_limit = s.limit;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      s.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.time_limit) o.check(false, "time limit exceeded");
    r.pass = o.pass;
    r.detail = o.detail.str();
    for (const auto& f : o.failures) r.detail += (r.detail.empty() ? "" : "; ") + f;
    return r;
  }
  throw PreconditionError("unknown acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  for (int id : ids.empty() ? acceptance_ids() : ids) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + ": " + r.detail +
         " (" + secs + " s)";
}

}  // namespace vhs
