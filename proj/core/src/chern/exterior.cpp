#include "vhs/chern/exterior.hpp"

#include <bit>
#include <sstream>

#include "vhs/error.hpp"

namespace vhs {

namespace {

void check_generators(std::size_t n) {
  if (n > Form::kMaxGenerators)
    throw PreconditionError("exterior algebra supports at most " + std::to_string(Form::kMaxGenerators) +
                            " generators, got " + std::to_string(n));
}

}  // namespace

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

Form::Form(std::size_t n) : n_(n) { check_generators(n); }

Form::Form(std::size_t n, const Scalar& c) : Form(n) { add_term(0, c); }

Form Form::xi(std::size_t n, std::size_t i) {
  Form f(n);
  if (i >= n) throw PreconditionError("generator index out of range");
  f.add_term(std::uint32_t{1} << i, Scalar(1));
  return f;
}

Form Form::xi_bar(std::size_t n, std::size_t i) {
  Form f(n);
  if (i >= n) throw PreconditionError("generator index out of range");
  f.add_term(std::uint32_t{1} << (n + i), Scalar(1));
  return f;
}

void Form::add_term(std::uint32_t m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Form::degree() const {
  if (terms_.empty()) return -1;
  const int d = std::popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) != d) return -2;
  return d;
}

Scalar Form::coefficient(std::uint32_t monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Form Form::conj() const {
  Form out(n_);
  const std::uint32_t low = (std::uint32_t{1} << n_) - 1;
  for (const auto& [m, c] : terms_) {
    std::uint32_t acc = 0;
    int sign = 1;
    for (std::uint32_t rest = m; rest; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const std::uint32_t bit = (std::uint32_t{1} << i) & low ? std::uint32_t{1} << (i + n_)
                                                             : std::uint32_t{1} << (i - n_);
      sign *= wedge_sign(acc, bit);
      acc |= bit;
    }
    out.add_term(acc, sign > 0 ? c : Scalar(-c));
  }
  return out;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << vhs::to_string(c);
    for (std::uint32_t rest = m; rest; rest &= rest - 1) {
      const std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
      os << (i < n_ ? " x" + std::to_string(i + 1) : " xb" + std::to_string(i - n_ + 1));
    }
  }
  return os.str();
}

Form& Form::operator+=(const Form& o) {
  if (n_ != o.n_ && !o.terms_.empty()) {
    if (!terms_.empty()) throw PreconditionError("forms over different generator sets");
    n_ = o.n_;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (n_ != o.n_ && !o.terms_.empty()) {
    if (!terms_.empty()) throw PreconditionError("forms over different generator sets");
    n_ = o.n_;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Form operator*(const Form& a, const Form& b) {
  if (a.n_ != b.n_ && !a.terms_.empty() && !b.terms_.empty())
    throw PreconditionError("forms over different generator sets");
  Form out(std::max(a.n_, b.n_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (ma & mb) continue;
      const Scalar c = ca * cb;
      out.add_term(ma | mb, wedge_sign(ma, mb) > 0 ? c : Scalar(-c));
    }
  return out;
}

FormMat::FormMat(std::size_t rows, std::size_t cols, int degree, std::size_t generators)
    : rows_(rows), cols_(cols), degree_(degree), n_(generators), data_(rows * cols, Form(generators)) {
  if (degree < 0) throw PreconditionError("form degree must be nonnegative");
}

FormMat FormMat::from_scalar(const Mat& m, std::size_t generators) {
  FormMat out(m.rows(), m.cols(), 0, generators);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, Form(generators, m(i, j)));
  return out;
}

void FormMat::set(std::size_t r, std::size_t c, Form f) {
  if (r >= rows_ || c >= cols_) throw PreconditionError("form matrix index out of range");
  const int d = f.degree();
  if (d != -1 && d != degree_)
    throw PreconditionError("entry of degree " + std::to_string(d) + " in a matrix of degree " +
                            std::to_string(degree_));
  if (f.is_zero()) f = Form(n_);
  data_[r * cols_ + c] = std::move(f);
}

void FormMat::add(std::size_t r, std::size_t c, const Form& f) { set(r, c, (*this)(r, c) + f); }

bool FormMat::is_zero() const {
  for (const auto& f : data_)
    if (!f.is_zero()) return false;
  return true;
}

FormMat FormMat::transpose() const {
  FormMat out(cols_, rows_, degree_, n_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = (*this)(i, j);
  return out;
}

FormMat FormMat::conj() const {
  FormMat out = *this;
  for (auto& f : out.data_) f = f.conj();
  return out;
}

FormMat FormMat::operator-() const {
  FormMat out = *this;
  for (auto& f : out.data_) f *= Scalar(-1);
  return out;
}

FormMat operator*(const FormMat& a, const FormMat& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("form matrix shapes do not compose");
  if (a.n_ != b.n_) throw PreconditionError("form matrices over different generator sets");
  FormMat out(a.rows_, b.cols_, a.degree_ + b.degree_, a.n_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Form& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Form& y = b(k, j);
        if (!y.is_zero()) out.data_[i * out.cols_ + j] += x * y;
      }
    }
  return out;
}

FormMat operator+(const FormMat& a, const FormMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("form matrix shapes differ");
  if (a.degree_ != b.degree_) throw PreconditionError("form matrix degrees differ");
  FormMat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

bool operator==(const FormMat& a, const FormMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

FormMat block_diag(const FormMat& a, const FormMat& b) {
  if (a.degree() != b.degree()) throw PreconditionError("block_diag: degrees differ");
  FormMat out(a.rows() + b.rows(), a.cols() + b.cols(), a.degree(), std::max(a.generators(), b.generators()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

}  // namespace vhs
