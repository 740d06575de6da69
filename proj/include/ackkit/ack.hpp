#pragma once

// Witness search for the Akbari-Cameron-Khosrovshahi conjecture: a nonempty
// vertex subset S whose characteristic vector lies in the row space of A_G
// (equivalently, is orthogonal to N(A_G), since A_G is symmetric) and is not
// itself a row of A_G.
//
// Subsets are always visited in (size, lexicographic) order, and the reported
// witness is the first valid subset in that order.

#include "ackkit/graph.hpp"
#include "ackkit/spectral.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ackkit {

enum class AckStatus { WitnessFound, NoWitness, AbortedTooLarge };
enum class AckMethod { OrthogonalitySearch, BruteOracle, DegreePruned };

std::string_view to_string(AckStatus s);
std::string_view to_string(AckMethod m);
AckStatus ack_status_from_string(std::string_view s);
AckMethod ack_method_from_string(std::string_view s);

struct AckReport {
  AckStatus status = AckStatus::NoWitness;
  std::optional<VertexSet> witness;
  AckMethod method = AckMethod::OrthogonalitySearch;
  // Number of subsets accounted for in (size, lex) order, including the
  // witness itself and subsets eliminated by pruning. Equals 2^n - 1 for an
  // exhaustive NoWitness result.
  std::uint64_t checked_count = 0;
  int n = 0;

  friend bool operator==(const AckReport&, const AckReport&) = default;
};

/// Thrown for inputs the conjecture does not speak about (no edges).
class AckInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AckOptions {
  int limit_n = 24;
  // Skip the row comparison for subset sizes that are not vertex degrees.
  bool degree_filter = true;
};

/// Kernel-orthogonality search. When n > limit_n only the subset sizes whose
/// cumulative count stays within 2^limit_n are searched; if none yields a
/// witness the status is AbortedTooLarge. Throws AckInputError on edgeless
/// graphs.
AckReport ack_witness(const Graph& g, const AckOptions& options = {});

/// Definition-level oracle: row-space membership by linear-system consistency
/// and non-rowness by direct comparison. Returns AbortedTooLarge without
/// searching when n > limit_n.
AckReport ack_brute_oracle(const Graph& g, int limit_n = 16);

/// chi must be a {0,1}-vector of length n; throws std::invalid_argument otherwise.
bool is_in_row_space(const Graph& g, const QVector& chi);
bool is_in_row_space(const KernelBasis& k, const QVector& chi);

/// First vertex u with a^u == chi, if any.
std::optional<int> is_row(const Graph& g, const QVector& chi);

/// Lazily enumerates the nonempty subsets S with sum_{v in S} x_v = 0, in
/// (size, lexicographic) order, optionally restricted to one size.
class ZeroSumSubsets {
 public:
  explicit ZeroSumSubsets(QVector x, std::optional<int> size = std::nullopt);
  std::optional<VertexSet> next();

 private:
  bool advance();

  QVector x_;
  int max_size_;
  int size_;
  std::vector<int> combo_;  // 0-based indices
  bool started_ = false;
  bool done_ = false;
};

std::vector<VertexSet> zero_sum_subsets(const QVector& x, std::optional<int> size = std::nullopt);

/// N(v0), which is zero-sum relative to every kernel vector by the kernel
/// equation at v0. Throws std::invalid_argument when the graph is nonsingular
/// or v0 is isolated.
VertexSet neighborhood_zero_sum(const Graph& g, int v0);

/// The eight necessary conditions for a potential counterexample.
struct ClassCReport {
  bool core = false;
  bool zero_main = false;
  bool vertex_triangle = false;
  bool edge_triangle = false;
  bool non_regular = false;
  bool connected = false;
  bool non_bipartite = false;
  bool diameter_2_or_3 = false;
  bool in_class_c = false;

  std::vector<std::string> failed_conditions() const;
  friend bool operator==(const ClassCReport&, const ClassCReport&) = default;
};

ClassCReport class_c_report(const Graph& g);
ClassCReport class_c_report(const SpectralProfile& spectral, const StructuralPredicates& structure);

}  // namespace ackkit
