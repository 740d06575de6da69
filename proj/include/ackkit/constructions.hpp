#pragma once

// Graph families and graph operations that produce singular graphs together
// with exact kernel certificates, plus a catalogue of fixed example graphs
// carrying their published kernel vectors as checksums.

#include "ackkit/ack.hpp"
#include "ackkit/graph.hpp"
#include "ackkit/rational.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ackkit {

struct NamedCheck {
  std::string name;
  bool passed = false;
};

struct ConstructionResult {
  Graph graph;
  // Every vector here satisfies A_graph * v = 0 exactly.
  std::vector<QVector> certified_kernel_vectors;
  std::vector<NamedCheck> hypothesis_report;
  std::optional<AckReport> ack;
  // Construction-specific intermediate vectors: b^i + b^j for nut_extension,
  // the columns B*c_i for multi_attach, the coordinate-repeating extension
  // of the kernel vector for duplicate_vertices.
  std::vector<QVector> derived_vectors;
  // For duplicate_vertices: origin[f-1] is the vertex of the input graph that
  // vertex f of the result copies (or is). Empty for other constructions.
  std::vector<int> origin;

  /// Value of a named check; throws std::out_of_range when absent.
  bool check(std::string_view name) const;
};

/// A construction's precondition failed; `failed_checks` names each one.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, std::vector<std::string> failed)
      : std::invalid_argument(what), failed_checks(std::move(failed)) {}
  std::vector<std::string> failed_checks;
};

/// S_{2k+1}: vertex 1 dominating, u_1..u_k = 2..k+1 forming a cycle in index
/// order, w_i = k+1+i adjacent to u_i and to vertex 1. Requires k >= 3.
ConstructionResult satellite(int k);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);

/// Vertex (g, h) becomes (g-1)*|V(H)| + h, so for G = K2 the adjacency
/// matrix is exactly [[A_H, I], [I, A_H]].
Graph cartesian_product(const Graph& g, const Graph& h);

/// Builds K2 x H, checks the eigenvalue hypotheses on H (+1 simple and -1
/// absent, or the swapped variant), verifies
/// nullity(K2 x H) = nullity(A_H - I) + nullity(A_H + I), certifies the
/// kernel vectors (v, -v) and (w, w), and runs the witness search.
ConstructionResult k2_product_ack(const Graph& h, const AckOptions& options = {});

/// Adjoins one vertex per set with N(v_i) = S_i + {1}. Throws
/// PreconditionError naming each violated precondition.
ConstructionResult add_vertex_dominating(const Graph& g, std::span<const VertexSet> sets,
                                         const AckOptions& options = {});

/// Adjoins a vertex adjacent to i and j of a graph with invertible A_H and
/// compares the two-condition criterion on B = A_H^{-1} with a direct nut
/// test. Throws PreconditionError for singular A_H or bad i, j.
ConstructionResult nut_extension(const Graph& h, int i, int j);

/// Adjoins v_1..v_k with N(v_i) = S_i to a graph with invertible A_H and
/// evaluates the BC-full / C^T B C = 0 criterion; certifies (B c_i, -e_i)
/// when both hold.
ConstructionResult multi_attach(const Graph& h, std::span<const VertexSet> sets, const AckOptions& options = {});

struct DuplicationStep {
  int vertex = 0;
  int multiplicity = 0;
};

/// Open-neighbourhood duplication of a nut graph: each copy of v gets N(v)
/// and is adjacent neither to v nor to other copies. Copies are placed
/// directly after their original, so vertex labels shift.
///
/// Certified kernel vectors: the kernel vector x of G on the originals with
/// zeros on the copies, then e_v - e_copy for every copy. The vector that
/// repeats x_v on each copy of v is reported in derived_vectors and its
/// membership in N(A_F) as the check "repeated_extension_in_kernel"; it is
/// generally not a kernel vector because each neighbour of v then sees x_v
/// m_v + 1 times.
ConstructionResult duplicate_vertices(const Graph& g, std::span<const DuplicationStep> plan,
                                      const std::optional<VertexSet>& zero_sum_subset = std::nullopt,
                                      const AckOptions& options = {});

struct CatalogEntry {
  std::string name;
  Graph graph;
  std::vector<QVector> expected_kernel;  // published vectors, up to scale
  int expected_nullity = 0;
  std::string notes;
};

/// Throws std::out_of_range for unknown names. Every entry passes its
/// load-time checks (A*x = 0 for each expected vector, matching nullity).
const CatalogEntry& catalog(std::string_view name);
std::span<const CatalogEntry> catalog_entries();

/// Resolves "catalog:NAME", "satellite:K", "cycle:N", "path:N",
/// "complete:N", or a file path.
Graph resolve_graph(std::string_view spec);

}  // namespace ackkit
