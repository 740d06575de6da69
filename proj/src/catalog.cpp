#include "ackkit/constructions.hpp"

#include "ackkit/linalg.hpp"

#include <stdexcept>

namespace ackkit {

namespace {

std::vector<Edge> dominating_edges(int n) {
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return edges;
}

std::vector<Edge> cycle_edges(int first, int last) {
  std::vector<Edge> edges;
  for (int v = first; v < last; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(last, first);
  return edges;
}

std::vector<Edge> concat(std::initializer_list<std::vector<Edge>> parts) {
  std::vector<Edge> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Graph from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw std::logic_error("catalog matrix is not symmetric");
      if (rows[i][j]) edges.emplace_back(i + 1, j + 1);
    }
  return Graph::from_edges(n, edges);
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  out.push_back({"PRISM6",
                 Graph::from_edges(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}, {2, 5}, {3, 6}}),
                 {},
                 2,
                 "triangular prism C3 x K2; core graph that is not a nut graph"});

  out.push_back({"NUT7",
                 Graph::from_edges(7, {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 5}, {3, 4}, {5, 7}, {6, 7}}),
                 {from_ints({1, 1, -1, -1, -1, 1, -1})},
                 1,
                 "7-vertex nut graph; vertex 7 attached to 5 and 6 of a nonsingular base"});

  out.push_back({"E8",
                 Graph::from_edges(8, concat({dominating_edges(8), cycle_edges(2, 7),
                                              {{4, 8}, {4, 6}, {5, 7}, {2, 6}, {3, 6}}})),
                 {from_ints({1, 1, -1, -1, -1, -1, 1, 2})},
                 1,
                 "even-order family, k = 4"});

  out.push_back({"E10",
                 Graph::from_edges(10, concat({dominating_edges(10), cycle_edges(2, 8),
                                               {{4, 9}, {6, 10}, {4, 6}, {5, 7}, {3, 8}, {2, 6}}})),
                 {from_ints({1, -1, -1, -1, -1, -1, 1, 1, 2, 1})},
                 1,
                 "even-order family, k = 5"});

  // The drawn k = 6 graph has a two-dimensional kernel; the published vector
  // is one kernel vector, not a spanning one.
  out.push_back({"E12",
                 Graph::from_edges(12, concat({dominating_edges(12), cycle_edges(2, 9),
                                               {{2, 10}, {4, 11}, {6, 12}, {4, 6}, {5, 7}, {3, 8}, {6, 9}}})),
                 {from_ints({1, -1, -1, -1, -1, -1, 1, 1, -1, 1, 2, 1})},
                 2,
                 "even-order family, k = 6, as drawn; computed nullity is 2, so it is core but not nut"});

  out.push_back({"G14",
                 Graph::from_edges(14, {{1, 2},  {1, 3},  {1, 4},   {1, 6},  {1, 7},  {1, 8},  {1, 9},  {1, 10},
                                        {1, 11}, {1, 12}, {1, 13},  {1, 14}, {2, 3},  {2, 10}, {2, 11}, {3, 4},
                                        {3, 5},  {4, 5},  {4, 12},  {5, 6},  {6, 7},  {6, 8},  {6, 13}, {7, 8},
                                        {7, 9},  {8, 9},  {8, 10},  {8, 14}, {9, 10}}),
                 {from_ints({0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 1, 0, -1, 0})},
                 1,
                 "14-vertex graph from the printed 29-edge list; 0 is not a main eigenvalue"});

  out.push_back({"G18",
                 Graph::from_edges(18, concat({dominating_edges(18), cycle_edges(2, 12),
                                               {{2, 13}, {4, 14}, {6, 15}, {8, 16}, {10, 17}, {12, 18},
                                                {4, 6}, {6, 9}, {7, 11}, {14, 16}}})),
                 {from_ints({0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0})},
                 1,
                 "18-vertex base graph of the dominating-vertex addition example"});

  out.push_back({"H5",
                 Graph::from_edges(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 4}}),
                 {},
                 0,
                 "-1 is a simple eigenvalue and 1 is not an eigenvalue"});

  out.push_back({"H8",
                 from_rows({{0, 0, 1, 0, 1, 1, 0, 0},
                            {0, 0, 0, 1, 1, 1, 0, 1},
                            {1, 0, 0, 0, 1, 0, 1, 1},
                            {0, 1, 0, 0, 1, 1, 1, 0},
                            {1, 1, 1, 1, 0, 1, 0, 1},
                            {1, 1, 0, 1, 1, 0, 0, 1},
                            {0, 0, 1, 1, 0, 0, 0, 0},
                            {0, 1, 1, 0, 1, 1, 0, 0}}),
                 {},
                 0,
                 "nonsingular 8-vertex base graph of the multi-vertex attachment example"});

  for (const auto& e : out) {
    const QMatrix a = adjacency_matrix(e.graph);
    for (const auto& x : e.expected_kernel)
      if (x.size() != static_cast<std::size_t>(e.graph.order()) || !is_zero(a * x))
        throw std::logic_error("catalog " + e.name + ": published kernel vector fails A*x = 0");
    if (rank_nullity(a).nullity != static_cast<std::size_t>(e.expected_nullity))
      throw std::logic_error("catalog " + e.name + ": nullity mismatch");
  }
  return out;
}

}  // namespace

std::span<const CatalogEntry> catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw std::out_of_range("unknown catalog graph '" + std::string(name) + "'");
}

}  // namespace ackkit
