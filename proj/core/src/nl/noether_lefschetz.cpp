#include "vhs/nl/noether_lefschetz.hpp"

#include <string>

#include "vhs/error.hpp"

namespace vhs {

namespace {

int middle(const NLInput& inp) { return inp.e.lie().weight() / 2; }

Vec embed(const GradedLie& lie, int p, const Vec& coords) {
  const PolarizedSpace& sp = lie.space();
  Vec v(lie.hodge().total_dim());
  for (std::size_t a = 0; a < coords.size(); ++a) v[sp.index(p, a)] = coords[a];
  return v;
}

Vec unit_at(const GradedLie& lie, int p, std::size_t a) {
  Vec v(lie.hodge().total_dim());
  v[lie.space().index(p, a)] = 1;
  return v;
}

Vec restrict_level(const GradedLie& lie, int p, const Vec& v) {
  const PolarizedSpace& sp = lie.space();
  Vec out(lie.hodge().level_dim(p));
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = v[sp.index(p, a)];
  return out;
}

std::vector<SparseEndo> endos_of(const GradedLie& lie, const std::vector<Vec>& vs) {
  std::vector<SparseEndo> out;
  for (const auto& v : vs) out.push_back(lie.element(1, v));
  return out;
}

Vec omega_of(const NLInput& inp) {
  const GradedLie& lie = inp.e.lie();
  const int n = lie.weight();
  if (inp.omega) return embed(lie, n, *inp.omega);
  if (lie.hodge().level_dim(n) == 0) throw PreconditionError("H^{2m,0} = 0: no generator omega");
  return unit_at(lie, n, 0);
}

std::size_t rank_of(std::size_t ambient, const std::vector<Vec>& vs) { return Subspace::span(ambient, vs).dim(); }

}  // namespace

void validate(const NLInput& inp) {
  const GradedLie& lie = inp.e.lie();
  const int n = lie.weight();
  if (n % 2 != 0) throw PreconditionError("Noether-Lefschetz data needs even weight, got " + std::to_string(n));
  const int m = n / 2;
  if (inp.zeta.size() != lie.hodge().level_dim(m))
    throw PreconditionError("zeta must have h^{m,m} = " + std::to_string(lie.hodge().level_dim(m)) + " coordinates");
  if (is_zero(inp.zeta)) throw PreconditionError("zeta must be nonzero");
  if (inp.omega) {
    if (inp.omega->size() != lie.hodge().level_dim(n)) throw PreconditionError("omega must lie in H^{2m,0}");
    if (is_zero(*inp.omega)) throw PreconditionError("omega must be nonzero");
  }
}

std::size_t nl_codim(const HodgeNumbers& h) {
  const int n = h.weight();
  if (n % 2 != 0) throw PreconditionError("nl_codim needs even weight, got " + std::to_string(n));
  std::size_t sum = 0;
  for (int p = n / 2 + 1; p <= n; ++p) sum += h.level_dim(p);
  return sum;
}

Mat e_zeta_equations(const NLInput& inp) {
  validate(inp);
  const GradedLie& lie = inp.e.lie();
  const PolarizedSpace& sp = lie.space();
  const int m = middle(inp);
  const Vec z = embed(lie, m, inp.zeta);
  const std::size_t rows = lie.hodge().level_dim(m + 1);
  Mat c(rows, inp.e.dim());
  const auto endos = endos_of(lie, inp.e.basis());
  for (std::size_t k = 0; k < endos.size(); ++k) {
    const Vec y = endos[k].apply(z);
    for (std::size_t l = 0; l < rows; ++l) c(l, k) = sp.pairing(unit_at(lie, m + 1, l), y);
  }
  return c;
}

Subspace e_zeta(const NLInput& inp) {
  const Mat c = e_zeta_equations(inp);
  const Subspace ker = kernel(c);
  const std::size_t d1 = inp.e.lie().piece_dim(1);
  std::vector<Vec> vs;
  for (const auto& x : ker.basis()) {
    Vec v(d1);
    for (std::size_t k = 0; k < x.size(); ++k)
      if (sgn(x[k]) != 0)
        for (std::size_t i = 0; i < d1; ++i) v[i] += x[k] * inp.e.basis()[k][i];
    vs.push_back(std::move(v));
  }
  return Subspace::span(d1, vs);
}

std::size_t codim_e_zeta(const NLInput& inp) { return rank(e_zeta_equations(inp)); }

bool is_calabi_yau_type(const NLInput& inp) {
  validate(inp);
  const GradedLie& lie = inp.e.lie();
  const int n = lie.weight();
  const Vec w = omega_of(inp);
  std::vector<Vec> images;
  for (const auto& phi : endos_of(lie, inp.e.basis())) images.push_back(restrict_level(lie, n - 1, phi.apply(w)));
  return rank_of(lie.hodge().level_dim(n - 1), images) == inp.e.dim();
}

Mat quadric_q_zeta(const NLInput& inp) {
  validate(inp);
  const GradedLie& lie = inp.e.lie();
  if (lie.weight() != 4) throw PreconditionError("Q_zeta is defined for weight 4");
  if (lie.hodge().level_dim(4) != 1) throw PreconditionError("Q_zeta needs h^{4,0} = 1");
  if (!is_calabi_yau_type(inp)) throw PreconditionError("E is not of Calabi-Yau type: E -> Hom(H^{4,0}, H^{3,1}) is not injective");
  const Vec w = omega_of(inp);
  const Vec z = embed(lie, 2, inp.zeta);
  const auto endos = endos_of(lie, inp.e.basis());
  const std::size_t p = endos.size();
  std::vector<Vec> first;
  for (const auto& phi : endos) first.push_back(phi.apply(w));
  Mat q(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) q(i, j) = lie.space().pairing(endos[i].apply(first[j]), z);
  if (q != q.transpose()) throw CheckFailure("Q_zeta is not symmetric; E is not integral");
  return q;
}

std::size_t sigma_zeta(const NLInput& inp, SigmaMode mode) {
  validate(inp);
  const GradedLie& lie = inp.e.lie();
  const int n = lie.weight(), m = n / 2;
  if (mode == SigmaMode::Verbatim && m != 2)
    throw PreconditionError("sigma_zeta for weight " + std::to_string(n) +
                            " needs SigmaMode::TypeConsistent (the printed exponent is negative)");
  const Subspace ez = e_zeta(inp);
  const auto phis = endos_of(lie, ez.basis());
  const auto psis = endos_of(lie, inp.e.basis());
  std::vector<Vec> images;
  for (int p = 0; p <= m - 2; ++p) {
    const int k = m - 2 - p;
    const int level = n - p;
    // Start from x in H^{2m-p,p}, apply k factors from E (nondecreasing indices), then phi.
    std::vector<Vec> layer;
    for (std::size_t a = 0; a < lie.hodge().level_dim(level); ++a) layer.push_back(unit_at(lie, level, a));
    std::vector<std::size_t> last(layer.size(), 0);
    for (int step = 0; step < k; ++step) {
      std::vector<Vec> next;
      std::vector<std::size_t> next_last;
      for (std::size_t t = 0; t < layer.size(); ++t)
        for (std::size_t i = last[t]; i < psis.size(); ++i) {
          next.push_back(psis[i].apply(layer[t]));
          next_last.push_back(i);
        }
      layer = std::move(next);
      last = std::move(next_last);
    }
    for (const auto& phi : phis)
      for (const auto& y : layer) images.push_back(restrict_level(lie, m + 1, phi.apply(y)));
  }
  return rank_of(lie.hodge().level_dim(m + 1), images);
}

RefinedBoundReport refined_bound(const NLInput& inp, SigmaMode mode) {
  validate(inp);
  const GradedLie& lie = inp.e.lie();
  const int m = lie.weight() / 2;
  RefinedBoundReport rep;
  rep.codim = codim_e_zeta(inp);
  rep.h_lower = lie.hodge().level_dim(m - 1);
  rep.sigma = sigma_zeta(inp, mode);
  rep.bound = rep.sigma <= rep.h_lower ? rep.h_lower - rep.sigma : 0;
  rep.holds = rep.sigma <= rep.h_lower && rep.codim <= rep.bound;
  rep.equality = rep.holds && rep.codim == rep.bound;
  if (lie.weight() == 4 && lie.hodge().level_dim(4) == 1 && is_calabi_yau_type(inp))
    rep.q_rank = rank(quadric_q_zeta(inp));
  return rep;
}

IntegralElement cy_type_element(const GradedLie& lie, const Mat& x, const std::vector<Scalar>& c) {
  const HodgeNumbers& h = lie.hodge();
  if (lie.weight() != 4 || h.level_dim(4) != 1)
    throw PreconditionError("Calabi-Yau type fixture needs weight 4 and h^{4,0} = 1");
  const std::size_t a = h.level_dim(3), b = h.level_dim(2);
  if (x.rows() != b || x.cols() != a || c.size() != b)
    throw PreconditionError("Calabi-Yau fixture needs x of shape h^{2,2} x h^{3,1} and h^{2,2} weights c");
  const PolarizedSpace& sp = lie.space();
  const std::size_t dim = h.total_dim();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < a; ++i) {
    std::vector<SparseEndo::Entry> entries{{sp.index(3, i), sp.index(4, 0), Scalar(1)}};
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t t = 0; t < b; ++t) {
        const Scalar v = c[t] * x(t, i) * x(t, j);
        if (sgn(v) != 0) entries.push_back({sp.index(2, t), sp.index(3, j), v});
      }
    const SparseEndo partial(dim, entries);
    const Vec coords = lie.key_coordinates(1, partial);
    const SparseEndo full = lie.element(1, coords);
    for (const auto& en : partial.entries())
      if (full.at(en.row, en.col) != en.value) throw CheckFailure("Calabi-Yau fixture blocks are not free coordinates");
    basis.push_back(coords);
  }
  return IntegralElement(lie, std::move(basis));
}

}  // namespace vhs
