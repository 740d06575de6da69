#pragma once

#include "ackkit/constructions.hpp"
#include "ackkit/graph.hpp"
#include "ackkit/linalg.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace ackkit::testing {

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(order[pick(rng)], order[i]);
  }
  std::bernoulli_distribution coin(p);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

// Graph on n vertices whose edges are the set bits of `mask` over the pairs
// (1,2), (1,3), ..., (n-1,n).
inline Graph graph_from_mask(int n, unsigned long long mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b, ++bit)
      if (mask >> bit & 1ULL) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

// Row-space membership by rank comparison, independent of solve().
inline bool in_row_space_by_rank(const QMatrix& a, const QVector& chi) {
  QMatrix extended(a.rows() + 1, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) extended(r, c) = a(r, c);
  for (std::size_t c = 0; c < a.cols(); ++c) extended(a.rows(), c) = chi[c];
  return rank_nullity(extended).rank == rank_nullity(a).rank;
}

// First valid ACK witness in (size, lex) order by plain enumeration.
inline std::optional<VertexSet> reference_witness(const Graph& g) {
  const int n = g.order();
  const QMatrix a = adjacency_matrix(g);
  for (int size = 1; size <= n; ++size) {
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i + 1;
    while (true) {
      const VertexSet s(combo);
      const QVector chi = characteristic_vector(n, s);
      bool is_a_row = false;
      for (int u = 1; u <= n && !is_a_row; ++u) is_a_row = g.neighborhood(u) == s;
      if (!is_a_row && in_row_space_by_rank(a, chi)) return s;
      int i = size - 1;
      while (i >= 0 && combo[i] == n - size + i + 1) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace ackkit::testing
