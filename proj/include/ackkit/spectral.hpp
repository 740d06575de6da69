#pragma once

// Kernel-level classification of a graph: core vertices, core and nut
// status, main-ness of the eigenvalue 0, multiplicities of +1 and -1, and the
// Parter-vertex test.

#include "ackkit/graph.hpp"
#include "ackkit/rational.hpp"

#include <optional>
#include <vector>

namespace ackkit {

struct KernelBasis {
  int n = 0;
  std::vector<QVector> basis;  // canonical RREF free-variable basis of N(A)
  std::vector<bool> support;   // support[v-1]: v is a core vertex

  std::size_t nullity() const { return basis.size(); }
  bool is_core() const;
};

KernelBasis kernel(const Graph& g);

struct SpectralProfile {
  int nullity = 0;
  bool is_core = false;
  bool is_nut = false;
  bool zero_is_main = false;
  int mult_plus1 = 0;
  int mult_minus1 = 0;
  std::optional<QVector> full_kernel_vector;

  friend bool operator==(const SpectralProfile&, const SpectralProfile&) = default;
};

SpectralProfile classify(const Graph& g);

/// A kernel vector with no zero entry, built greedily from the canonical
/// basis: start from the first vector and, for each later vector that covers
/// a still-zero coordinate, add the smallest positive integer multiple of it
/// that keeps every coordinate nonzero so far. Empty unless the graph is a
/// core graph with nullity >= 1.
std::optional<QVector> full_kernel_vector(const KernelBasis& k);
std::optional<QVector> full_kernel_vector(const Graph& g);

struct ParterVerdict {
  bool parter = false;  // nullity(extended) == nullity(base) - 1
  int nullity_base = 0;
  int nullity_extended = 0;
  // The row-space characterisation applies when the base is singular and the
  // new vertex has a neighbour and a non-duplicated adjacency vector.
  bool characterization_applies = false;
  bool adjacency_in_row_space = false;
  bool consistent = true;  // false flags an internal-consistency failure
};

/// `extended` must equal `base` plus vertex `v` (so `base` is `extended`
/// with `v` deleted and later labels shifted down). Throws GraphError when
/// `v` is out of range and std::invalid_argument when `base` does not match.
ParterVerdict is_parter(const Graph& extended, const Graph& base, int v);

}  // namespace ackkit
