#include "ktree/matrix.hpp"

#include <regex>

#include "ktree/error.hpp"
#include "ktree/linalg.hpp"

namespace ktree {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  static const std::regex re(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(s, re)) throw InvalidInput("not a rational: \"" + s + "\"");
  auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0)
    throw InvalidInput("zero denominator: \"" + s + "\"");
  Rational q(s);
  q.canonicalize();
  return q;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : a_)
    if (x != 0) ++n;
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product: shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (b(k, c) != 0) p(r, c) += x * b(k, c);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum: shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += b.a_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference: shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] -= b.a_[i];
  return s;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Rational trace(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

std::size_t rank(const Matrix& m) {
  Echelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) row.emplace_back(c, m(r, c));
    ech.add(std::move(row));
  }
  return ech.rank();
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("inverse of non-square matrix");
  Matrix a = m, inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw PropertyViolation("singular matrix");
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(p, k), a(c, k));
        std::swap(inv(p, k), inv(c, k));
      }
    Rational f = 1 / a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) *= f;
      inv(c, k) *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational g = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= g * a(c, k);
        inv(r, k) -= g * inv(c, k);
      }
    }
  }
  return inv;
}

}  // namespace ktree
