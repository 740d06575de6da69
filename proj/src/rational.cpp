#include "ackkit/rational.hpp"

#include <stdexcept>

namespace ackkit {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_from_string(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_den() == 1 ? v[i].get_num().get_str() : v[i].get_str();
  }
  return out + ")";
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::span<const QVector> columns) {
  if (columns.empty()) return {};
  QMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows()) throw std::invalid_argument("from_columns: ragged columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(r, k)) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

QVector operator*(const QMatrix& m, const QVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  QVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out[r] += m(r, c) * v[c];
  return out;
}

namespace {
QMatrix combine(const QMatrix& a, const QMatrix& b, int sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = sign > 0 ? Rational(a(r, c) + b(r, c)) : Rational(a(r, c) - b(r, c));
  return out;
}
}  // namespace

QMatrix operator+(const QMatrix& a, const QMatrix& b) { return combine(a, b, 1); }
QMatrix operator-(const QMatrix& a, const QMatrix& b) { return combine(a, b, -1); }

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector scaled(const QVector& v, const Rational& factor) {
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_full(const QVector& v) {
  for (const auto& x : v)
    if (sgn(x) == 0) return false;
  return true;
}

bool is_zero(const QMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r))
      if (sgn(x) != 0) return false;
  return true;
}

bool is_full(const QMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r))
      if (sgn(x) == 0) return false;
  return true;
}

QVector primitive_form(const QVector& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& x : v) {
    mpz_class scaled_num = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0) factor = -factor;
    break;
  }
  return scaled(v, factor);
}

bool proportional(const QVector& a, const QVector& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  return primitive_form(a) == primitive_form(b);
}

QVector from_ints(std::initializer_list<long> values) {
  QVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

}  // namespace ackkit
