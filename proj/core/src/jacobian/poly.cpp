#include "vhs/jacobian/poly.hpp"

#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "vhs/error.hpp"

namespace vhs {

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Monomial> monomial_basis(std::size_t num_vars, int k) {
  if (k < 0) throw PreconditionError("monomial degree must be nonnegative");
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Monomial m(num_vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == num_vars) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, k);
  return out;
}

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
  Poly p(m.size());
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw PreconditionError("variable index out of range");
  Monomial m(num_vars, 0);
  m[i] = 1;
  return monomial(m);
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  const int d = monomial_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) != d) return -2;
  return d;
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != n_) throw PreconditionError("monomial has the wrong number of variables");
  for (int e : m)
    if (e < 0) throw PreconditionError("negative exponent");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::derivative(std::size_t i) const {
  if (i >= n_) throw PreconditionError("variable index out of range");
  Poly out(n_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    --d[i];
    out.add_term(d, c * m[i]);
  }
  return out;
}

Poly Poly::restrict_to_zero(const std::vector<std::size_t>& vars) const {
  std::vector<bool> drop(n_, false);
  for (auto v : vars) {
    if (v >= n_) throw PreconditionError("variable index out of range");
    drop[v] = true;
  }
  std::size_t kept = 0;
  for (bool b : drop) kept += b ? 0 : 1;
  Poly out(kept);
  for (const auto& [m, c] : terms_) {
    bool vanishes = false;
    Monomial r;
    for (std::size_t i = 0; i < n_; ++i) {
      if (drop[i]) {
        if (m[i] != 0) vanishes = true;
      } else {
        r.push_back(m[i]);
      }
    }
    if (!vanishes) out.add_term(r, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << vhs::to_string(it->second);
    for (std::size_t i = 0; i < n_; ++i)
      if (it->first[i] > 0) os << "*x" << i + 1 << (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
  }
  return os.str();
}

void Poly::check_vars(const Poly& o) const {
  if (n_ != o.n_) throw PreconditionError("polynomials in different numbers of variables");
}

Poly& Poly::operator+=(const Poly& o) {
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_vars(b);
  Poly out(a.n_);
  Monomial m(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Poly read_poly(std::istream& in) {
  Poly p;
  bool have_vars = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string coeff;
    ls >> coeff;
    Scalar c;
    try {
      c = Scalar(coeff);
      c.canonicalize();
    } catch (const std::invalid_argument&) {
      throw PreconditionError("line " + std::to_string(line_no) + ": bad coefficient '" + coeff + "'");
    }
    Monomial m;
    std::string tok;
    while (ls >> tok) {
      std::size_t pos = 0;
      int e = 0;
      try {
        e = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || e < 0)
        throw PreconditionError("line " + std::to_string(line_no) + ": bad exponent '" + tok + "'");
      m.push_back(e);
    }
    if (!have_vars) {
      p = Poly(m.size());
      have_vars = true;
    } else if (m.size() != p.num_vars()) {
      throw PreconditionError("line " + std::to_string(line_no) + ": expected " + std::to_string(p.num_vars()) +
                              " exponents, got " + std::to_string(m.size()));
    }
    p.add_term(m, c);
  }
  if (!have_vars) throw PreconditionError("polynomial file has no terms");
  return p;
}

Poly parse_poly(const std::string& text) {
  std::istringstream in(text);
  return read_poly(in);
}

void write_poly(std::ostream& out, const Poly& p) {
  for (const auto& [m, c] : p.terms()) {
    out << vhs::to_string(c);
    for (int e : m) out << ' ' << e;
    out << '\n';
  }
}

std::string format_poly(const Poly& p) {
  std::ostringstream os;
  write_poly(os, p);
  return os.str();
}

}  // namespace vhs
