#pragma once

// Simple undirected graphs with vertices labelled 1..n, the adjacency
// matrix, structural predicates, and graph6 / edge-list interchange.

#include "ackkit/rational.hpp"

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ackkit {

using Edge = std::pair<int, int>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text parsers. `position` is a byte offset for graph6 and a
/// 1-based line number for edge lists.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t position) : GraphError(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Sorted, duplicate-free set of 1-based vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(std::vector<int> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::string to_string() const;  // "{1,3,5}"

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

class Graph {
 public:
  Graph() = default;

  /// Duplicate pairs collapse and {j,i} normalises to {i,j}. Throws
  /// GraphError on n < 1, out-of-range endpoints or self-loops.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  VertexSet neighborhood(int v) const;
  const std::vector<int>& neighbors(int v) const;

  /// Vertex degrees sorted ascending.
  std::vector<int> degree_sequence() const;

  /// New graph with vertex n+1 attached to `neighbors`.
  Graph with_vertex(const VertexSet& neighbors) const;
  /// New graph with `v` deleted; later labels shift down by one.
  Graph without_vertex(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;             // sorted, first < second
  std::vector<std::vector<int>> adj_;  // adj_[v-1] sorted
};

QMatrix adjacency_matrix(const Graph& g);

/// {0,1}-vector of length n with ones on `s`.
QVector characteristic_vector(int n, const VertexSet& s);

struct StructuralPredicates {
  bool connected = false;
  bool bipartite = false;
  bool regular = false;
  std::optional<int> diameter;  // nullopt when disconnected
  bool every_vertex_on_triangle = false;
  bool every_edge_on_triangle = false;
};

StructuralPredicates structural_predicates(const Graph& g);

// Interchange formats.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Reads a graph file: ".g6"/".graph6" as graph6, anything else as an edge list.
Graph load_graph_file(const std::filesystem::path& path);

}  // namespace ackkit
