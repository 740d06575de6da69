#pragma once

// Exact dense elimination over Q. Column and row indices here are 0-based;
// vertex labels (1-based) only appear at the graph level.

#include "ackkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ackkit {

struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // strictly increasing
};

/// Reduced row echelon form. The pivot for each column is the first remaining
/// row with a nonzero entry; no magnitude pivoting.
RowEchelon rref(const QMatrix& m);

/// Free-variable basis of N(m): one vector per non-pivot column, in increasing
/// column order, with that free variable set to 1 and the others to 0.
std::vector<QVector> nullspace_basis(const QMatrix& m);

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;
};
RankNullity rank_nullity(const QMatrix& m);

/// Particular solution of m*y = b with every free variable set to 0, or
/// nullopt when the system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

std::optional<QMatrix> inverse(const QMatrix& m);

}  // namespace ackkit
