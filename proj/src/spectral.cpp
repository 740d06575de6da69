#include "ackkit/spectral.hpp"

#include "ackkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ackkit {

bool KernelBasis::is_core() const {
  return !basis.empty() && std::all_of(support.begin(), support.end(), [](bool b) { return b; });
}

KernelBasis kernel(const Graph& g) {
  KernelBasis k;
  k.n = g.order();
  k.basis = nullspace_basis(adjacency_matrix(g));
  k.support.assign(static_cast<std::size_t>(k.n), false);
  for (const auto& v : k.basis)
    for (int i = 0; i < k.n; ++i)
      if (sgn(v[i]) != 0) k.support[i] = true;
  return k;
}

std::optional<QVector> full_kernel_vector(const KernelBasis& k) {
  if (!k.is_core()) return std::nullopt;
  QVector x = k.basis.front();
  for (std::size_t b = 1; b < k.basis.size() && !is_full(x); ++b) {
    const QVector& next = k.basis[b];
    bool covers_missing = false;
    for (int i = 0; i < k.n; ++i)
      if (sgn(x[i]) == 0 && sgn(next[i]) != 0) covers_missing = true;
    if (!covers_missing) continue;

    // Each existing nonzero coordinate forbids at most one multiplier.
    for (long m = 1;; ++m) {
      bool kills = false;
      for (int i = 0; i < k.n && !kills; ++i)
        if (sgn(x[i]) != 0 && sgn(x[i] + m * next[i]) == 0) kills = true;
      if (!kills) {
        for (int i = 0; i < k.n; ++i) x[i] += m * next[i];
        break;
      }
    }
  }
  if (!is_full(x)) throw std::logic_error("full_kernel_vector: greedy combination left a zero entry");
  return x;
}

std::optional<QVector> full_kernel_vector(const Graph& g) { return full_kernel_vector(kernel(g)); }

SpectralProfile classify(const Graph& g) {
  const KernelBasis k = kernel(g);
  SpectralProfile p;
  p.nullity = static_cast<int>(k.nullity());
  p.is_core = k.is_core();
  p.is_nut = p.nullity == 1 && is_full(k.basis.front());
  p.zero_is_main = std::any_of(k.basis.begin(), k.basis.end(), [](const QVector& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return sgn(s) != 0;
  });

  const QMatrix a = adjacency_matrix(g);
  const QMatrix id = QMatrix::identity(a.rows());
  p.mult_plus1 = static_cast<int>(rank_nullity(a - id).nullity);
  p.mult_minus1 = static_cast<int>(rank_nullity(a + id).nullity);
  p.full_kernel_vector = full_kernel_vector(k);
  return p;
}

ParterVerdict is_parter(const Graph& extended, const Graph& base, int v) {
  if (v < 1 || v > extended.order())
    throw GraphError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(extended.order()));
  if (!(extended.without_vertex(v) == base))
    throw std::invalid_argument("is_parter: base is not the extended graph with vertex " + std::to_string(v) +
                                " deleted");

  ParterVerdict out;
  const KernelBasis kb = kernel(base);
  out.nullity_base = static_cast<int>(kb.nullity());
  out.nullity_extended = static_cast<int>(rank_nullity(adjacency_matrix(extended)).nullity);
  out.parter = out.nullity_extended == out.nullity_base - 1;

  // a^v over the base's vertex labels.
  std::vector<int> image;
  for (int u : extended.neighbors(v)) image.push_back(u > v ? u - 1 : u);
  const VertexSet nbrs(image);
  const QVector av = characteristic_vector(base.order(), nbrs);

  bool duplicated = false;
  for (int u = 1; u <= base.order() && !duplicated; ++u) duplicated = base.neighborhood(u) == nbrs;

  out.adjacency_in_row_space = std::all_of(kb.basis.begin(), kb.basis.end(),
                                           [&](const QVector& x) { return sgn(dot(av, x)) == 0; });
  out.characterization_applies = out.nullity_base > 0 && !nbrs.empty() && !duplicated;
  if (out.characterization_applies) out.consistent = out.parter == !out.adjacency_in_row_space;
  return out;
}

}  // namespace ackkit
