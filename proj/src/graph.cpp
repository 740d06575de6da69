#include "ackkit/graph.hpp"

#include <algorithm>
#include <deque>

namespace ackkit {

VertexSet::VertexSet(std::initializer_list<int> members) : VertexSet(std::vector<int>(members)) {}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError("graph must have at least one vertex, got n = " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [a, b] : edges) {
    const std::string pair = "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    if (a < 1 || a > n || b < 1 || b > n)
      throw GraphError("vertex out of range in edge " + pair + " (n = " + std::to_string(n) + ")");
    if (a == b) throw GraphError("self-loop in edge " + pair);
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (auto [a, b] : g.edges_) {
    g.adj_[a - 1].push_back(b);
    g.adj_[b - 1].push_back(a);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw GraphError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adj_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v - 1].size());
}

VertexSet Graph::neighborhood(int v) const {
  check_vertex(v);
  return VertexSet(adj_[v - 1]);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v - 1];
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degrees;
  degrees.reserve(adj_.size());
  for (const auto& list : adj_) degrees.push_back(static_cast<int>(list.size()));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

Graph Graph::with_vertex(const VertexSet& neighbors) const {
  std::vector<Edge> edges = edges_;
  for (int u : neighbors) {
    if (u < 1 || u > n_) throw GraphError("new vertex neighbour " + std::to_string(u) + " out of range");
    edges.emplace_back(u, n_ + 1);
  }
  return from_edges(n_ + 1, edges);
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  if (n_ == 1) throw GraphError("cannot delete the only vertex");
  auto relabel = [v](int u) { return u > v ? u - 1 : u; };
  std::vector<Edge> edges;
  for (auto [a, b] : edges_)
    if (a != v && b != v) edges.emplace_back(relabel(a), relabel(b));
  return from_edges(n_ - 1, edges);
}

QMatrix adjacency_matrix(const Graph& g) {
  QMatrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) {
    a(u - 1, v - 1) = 1;
    a(v - 1, u - 1) = 1;
  }
  return a;
}

QVector characteristic_vector(int n, const VertexSet& s) {
  QVector chi(static_cast<std::size_t>(n));
  for (int v : s) {
    if (v < 1 || v > n) throw GraphError("vertex " + std::to_string(v) + " out of range in characteristic vector");
    chi[v - 1] = 1;
  }
  return chi;
}

namespace {

// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source - 1] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (dist[w - 1] < 0) {
        dist[w - 1] = dist[u - 1] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

bool has_common_neighbor(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

}  // namespace

StructuralPredicates structural_predicates(const Graph& g) {
  StructuralPredicates p;
  const int n = g.order();

  int diameter = 0;
  p.connected = true;
  for (int s = 1; s <= n && p.connected; ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) {
        p.connected = false;
        break;
      }
      diameter = std::max(diameter, d);
    }
  }
  if (p.connected) p.diameter = diameter;

  // Two-colouring, component by component.
  std::vector<int> colour(n, -1);
  p.bipartite = true;
  for (int s = 1; s <= n && p.bipartite; ++s) {
    if (colour[s - 1] >= 0) continue;
    colour[s - 1] = 0;
    std::deque<int> queue{s};
    while (!queue.empty() && p.bipartite) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (colour[w - 1] < 0) {
          colour[w - 1] = 1 - colour[u - 1];
          queue.push_back(w);
        } else if (colour[w - 1] == colour[u - 1]) {
          p.bipartite = false;
          break;
        }
      }
    }
  }

  const auto degrees = g.degree_sequence();
  p.regular = degrees.front() == degrees.back();

  p.every_edge_on_triangle = true;
  std::vector<bool> on_triangle(n, false);
  for (auto [u, v] : g.edges()) {
    if (has_common_neighbor(g, u, v)) {
      on_triangle[u - 1] = on_triangle[v - 1] = true;
    } else {
      p.every_edge_on_triangle = false;
    }
  }
  p.every_vertex_on_triangle = std::all_of(on_triangle.begin(), on_triangle.end(), [](bool b) { return b; });
  return p;
}

}  // namespace ackkit
