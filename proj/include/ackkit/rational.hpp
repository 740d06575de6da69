#pragma once

// Exact scalar, vector and dense matrix types. Every entry is a GMP rational
// kept in canonical form (gcd-reduced, positive denominator).

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ackkit {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Serialises as "p/q", always with an explicit denominator ("-1/1", "0/1").
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational rational_from_string(std::string_view text);

std::string to_string(const QVector& v);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(std::span<const QVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  QVector column(std::size_t c) const;

  bool is_symmetric() const;
  QMatrix transpose() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& m, const QVector& v);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);

Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector scaled(const QVector& v, const Rational& factor);
bool is_zero(const QVector& v);
/// True when no entry is zero (a "full" vector).
bool is_full(const QVector& v);
bool is_zero(const QMatrix& m);
bool is_full(const QMatrix& m);

/// Integer multiple of `v` with coprime entries whose first nonzero entry is
/// positive. The zero vector maps to itself.
QVector primitive_form(const QVector& v);

/// True when `a` and `b` span the same line (both nonzero).
bool proportional(const QVector& a, const QVector& b);

QVector from_ints(std::initializer_list<long> values);

}  // namespace ackkit
