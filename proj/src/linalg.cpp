#include "ackkit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ackkit {

namespace {

void require_nonempty(const QMatrix& m, const char* op) {
  if (m.empty()) throw std::invalid_argument(std::string(op) + ": empty matrix");
}

// In-place Gauss-Jordan over the first `limit_cols` columns.
std::vector<std::size_t> reduce(QMatrix& m, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t col = 0; col < limit_cols && lead_row < rows; ++col) {
    std::size_t pivot = lead_row;
    while (pivot < rows && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(lead_row, c));

    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t c = col; c < cols; ++c) m(lead_row, c) *= inv;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c)
        if (sgn(m(lead_row, c)) != 0) m(r, c) -= factor * m(lead_row, c);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

RowEchelon rref(const QMatrix& m) {
  require_nonempty(m, "rref");
  RowEchelon out{m, {}};
  out.pivot_columns = reduce(out.reduced, m.cols());
  return out;
}

std::vector<QVector> nullspace_basis(const QMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RankNullity rank_nullity(const QMatrix& m) {
  const auto rank = rref(m).pivot_columns.size();
  return {rank, m.cols() - rank};
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  require_nonempty(m, "solve");
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = reduce(aug, m.cols());
  for (std::size_t r = pivots.size(); r < m.rows(); ++r)
    if (sgn(aug(r, m.cols())) != 0) return std::nullopt;

  QVector y(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = aug(i, m.cols());
  return y;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  require_nonempty(m, "inverse");
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  if (reduce(aug, n).size() < n) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace ackkit
