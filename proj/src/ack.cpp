#include "ackkit/ack.hpp"

#include "ackkit/linalg.hpp"

#include <algorithm>
#include <limits>

namespace ackkit {

std::string_view to_string(AckStatus s) {
  switch (s) {
    case AckStatus::WitnessFound: return "WITNESS_FOUND";
    case AckStatus::NoWitness: return "NO_WITNESS";
    case AckStatus::AbortedTooLarge: return "ABORTED_TOO_LARGE";
  }
  return "?";
}

std::string_view to_string(AckMethod m) {
  switch (m) {
    case AckMethod::OrthogonalitySearch: return "ORTHOGONALITY_SEARCH";
    case AckMethod::BruteOracle: return "BRUTE_ORACLE";
    case AckMethod::DegreePruned: return "DEGREE_PRUNED";
  }
  return "?";
}

AckStatus ack_status_from_string(std::string_view s) {
  for (auto v : {AckStatus::WitnessFound, AckStatus::NoWitness, AckStatus::AbortedTooLarge})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown ack status '" + std::string(s) + "'");
}

AckMethod ack_method_from_string(std::string_view s) {
  for (auto v : {AckMethod::OrthogonalitySearch, AckMethod::BruteOracle, AckMethod::DegreePruned})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown ack method '" + std::string(s) + "'");
}

namespace {

using Count = std::uint64_t;

Count saturating_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  const unsigned __int128 cap = std::numeric_limits<Count>::max();
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (c > cap) return std::numeric_limits<Count>::max();
  }
  return static_cast<Count>(c);
}

// Largest subset size s such that all subsets of size <= s number at most
// 2^limit_n. Returns n when n <= limit_n.
int searchable_size(int n, int limit_n) {
  if (n <= limit_n) return n;
  const unsigned __int128 budget = static_cast<unsigned __int128>(1) << std::clamp(limit_n, 0, 120);
  unsigned __int128 total = 0;
  int s = 0;
  while (s < n) {
    total += saturating_binomial(n, s + 1);
    if (total > budget) break;
    ++s;
  }
  return s;
}

void require_edges(const Graph& g) {
  if (g.edge_count() == 0) throw AckInputError("conjecture requires at least one edge");
}

// Scales each kernel basis vector to a primitive integer vector.
std::vector<std::vector<mpz_class>> integer_constraints(const KernelBasis& k) {
  std::vector<std::vector<mpz_class>> out;
  for (const auto& v : k.basis) {
    const QVector p = primitive_form(v);
    std::vector<mpz_class> row;
    row.reserve(p.size());
    for (const auto& x : p) row.push_back(x.get_num());
    out.push_back(std::move(row));
  }
  return out;
}

// Depth-first (size, lex) subset search over the kernel equations
// sum_{v in S} x_v = 0. A branch is cut when no completion with the
// remaining picks can bring some equation back to zero; the subsets it
// would have covered are still counted.
template <class Int>
class OrthogonalSearch {
 public:
  OrthogonalSearch(const Graph& g, const std::vector<std::vector<Int>>& constraints, bool degree_filter)
      : g_(g), n_(g.order()), constraints_(constraints), degree_filter_(degree_filter) {
    degree_present_.assign(n_ + 1, false);
    for (int v = 1; v <= n_; ++v) degree_present_[g.degree(v)] = true;
    build_bounds();
  }

  // Returns true when a witness of `size` was found.
  bool search_size(int size) {
    size_ = size;
    chosen_.clear();
    partial_.assign(constraints_.size(), Int(0));
    return descend(0, size);
  }

  Count checked() const { return checked_; }
  const std::vector<int>& witness() const { return chosen_; }
  bool witness_by_degree() const { return by_degree_; }

 private:
  // lo_[c][start][r] / hi_[c][start][r]: smallest / largest sum of r entries
  // of constraint c drawn from positions start..n-1.
  void build_bounds() {
    lo_.resize(constraints_.size());
    hi_.resize(constraints_.size());
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      lo_[c].assign(n_ + 1, {});
      hi_[c].assign(n_ + 1, {});
      for (int start = 0; start <= n_; ++start) {
        std::vector<Int> tail(constraints_[c].begin() + start, constraints_[c].end());
        std::sort(tail.begin(), tail.end());
        const int m = static_cast<int>(tail.size());
        lo_[c][start].assign(m + 1, Int(0));
        hi_[c][start].assign(m + 1, Int(0));
        for (int r = 1; r <= m; ++r) {
          lo_[c][start][r] = lo_[c][start][r - 1] + tail[r - 1];
          hi_[c][start][r] = hi_[c][start][r - 1] + tail[m - r];
        }
      }
    }
  }

  bool feasible(int next_start, int remaining) const {
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      if (partial_[c] + lo_[c][next_start][remaining] > 0) return false;
      if (partial_[c] + hi_[c][next_start][remaining] < 0) return false;
    }
    return true;
  }

  bool descend(int start, int remaining) {
    for (int idx = start; idx <= n_ - remaining; ++idx) {
      for (std::size_t c = 0; c < constraints_.size(); ++c) partial_[c] += constraints_[c][idx];
      chosen_.push_back(idx + 1);
      const int left = remaining - 1;
      if (!feasible(idx + 1, left)) {
        checked_ += saturating_binomial(n_ - 1 - idx, left);
      } else if (left == 0) {
        ++checked_;
        if (accept()) return true;
      } else if (descend(idx + 1, left)) {
        return true;
      }
      chosen_.pop_back();
      for (std::size_t c = 0; c < constraints_.size(); ++c) partial_[c] -= constraints_[c][idx];
    }
    return false;
  }

  // chi_S is orthogonal to the kernel; accept unless it equals a row.
  bool accept() {
    if (degree_filter_ && (size_ > n_ || !degree_present_[size_])) {
      by_degree_ = true;
      return true;
    }
    for (int u = 1; u <= n_; ++u)
      if (g_.neighbors(u) == chosen_) return false;
    by_degree_ = false;
    return true;
  }

  const Graph& g_;
  int n_;
  const std::vector<std::vector<Int>>& constraints_;
  bool degree_filter_;
  std::vector<bool> degree_present_;
  std::vector<std::vector<std::vector<Int>>> lo_, hi_;

  int size_ = 0;
  std::vector<int> chosen_;
  std::vector<Int> partial_;
  Count checked_ = 0;
  bool by_degree_ = false;
};

template <class Int>
AckReport run_search(const Graph& g, const std::vector<std::vector<Int>>& constraints, const AckOptions& options) {
  AckReport report;
  report.n = g.order();
  OrthogonalSearch<Int> search(g, constraints, options.degree_filter);
  const int max_size = searchable_size(g.order(), options.limit_n);
  for (int s = 1; s <= max_size; ++s) {
    if (search.search_size(s)) {
      report.status = AckStatus::WitnessFound;
      report.witness = VertexSet(search.witness());
      report.method = search.witness_by_degree() ? AckMethod::DegreePruned : AckMethod::OrthogonalitySearch;
      report.checked_count = search.checked();
      return report;
    }
  }
  report.status = max_size == g.order() ? AckStatus::NoWitness : AckStatus::AbortedTooLarge;
  report.checked_count = search.checked();
  return report;
}

}  // namespace

AckReport ack_witness(const Graph& g, const AckOptions& options) {
  require_edges(g);
  const KernelBasis k = kernel(g);
  const auto big = integer_constraints(k);

  // Machine integers suffice when every partial sum stays well inside int64.
  mpz_class bound = 0;
  for (const auto& row : big) {
    mpz_class total = 0;
    for (const auto& x : row) total += abs(x);
    if (total > bound) bound = total;
  }
  if (bound < mpz_class(1) << 60) {
    std::vector<std::vector<std::int64_t>> small;
    for (const auto& row : big) {
      std::vector<std::int64_t> r;
      for (const auto& x : row) r.push_back(x.get_si());
      small.push_back(std::move(r));
    }
    return run_search(g, small, options);
  }
  return run_search(g, big, options);
}

AckReport ack_brute_oracle(const Graph& g, int limit_n) {
  require_edges(g);
  AckReport report;
  report.n = g.order();
  report.method = AckMethod::BruteOracle;
  const int n = g.order();
  if (n > limit_n) {
    report.status = AckStatus::AbortedTooLarge;
    return report;
  }

  const QMatrix a = adjacency_matrix(g);
  std::vector<int> combo;
  for (int s = 1; s <= n; ++s) {
    combo.resize(s);
    for (int i = 0; i < s; ++i) combo[i] = i;
    while (true) {
      ++report.checked_count;
      QVector chi(n);
      for (int i : combo) chi[i] = 1;
      if (solve(a, chi)) {
        bool equals_row = false;
        for (int u = 0; u < n && !equals_row; ++u) {
          const auto row = a.row(u);
          equals_row = std::equal(row.begin(), row.end(), chi.begin());
        }
        if (!equals_row) {
          std::vector<int> labels;
          for (int i : combo) labels.push_back(i + 1);
          report.status = AckStatus::WitnessFound;
          report.witness = VertexSet(labels);
          return report;
        }
      }
      int i = s - 1;
      while (i >= 0 && combo[i] == n - s + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  report.status = AckStatus::NoWitness;
  return report;
}

namespace {
void require_binary(const QVector& chi, std::size_t n) {
  if (chi.size() != n) throw std::invalid_argument("characteristic vector has wrong length");
  for (const auto& x : chi)
    if (x != 0 && x != 1) throw std::invalid_argument("characteristic vector entry " + x.get_str() + " not in {0,1}");
}
}  // namespace

bool is_in_row_space(const KernelBasis& k, const QVector& chi) {
  require_binary(chi, static_cast<std::size_t>(k.n));
  return std::all_of(k.basis.begin(), k.basis.end(), [&](const QVector& x) { return sgn(dot(chi, x)) == 0; });
}

bool is_in_row_space(const Graph& g, const QVector& chi) { return is_in_row_space(kernel(g), chi); }

std::optional<int> is_row(const Graph& g, const QVector& chi) {
  require_binary(chi, static_cast<std::size_t>(g.order()));
  for (int u = 1; u <= g.order(); ++u)
    if (characteristic_vector(g.order(), g.neighborhood(u)) == chi) return u;
  return std::nullopt;
}

ZeroSumSubsets::ZeroSumSubsets(QVector x, std::optional<int> size) : x_(std::move(x)) {
  const int n = static_cast<int>(x_.size());
  if (is_zero(x_)) throw std::invalid_argument("zero_sum_subsets: x must be nonzero");
  if (size && (*size < 1 || *size > n)) {
    done_ = true;
    size_ = max_size_ = 0;
    return;
  }
  size_ = size.value_or(1);
  max_size_ = size.value_or(n);
}

bool ZeroSumSubsets::advance() {
  const int n = static_cast<int>(x_.size());
  if (!started_) {
    started_ = true;
    combo_.resize(size_);
    for (int i = 0; i < size_; ++i) combo_[i] = i;
    return true;
  }
  int i = size_ - 1;
  while (i >= 0 && combo_[i] == n - size_ + i) --i;
  if (i >= 0) {
    ++combo_[i];
    for (int j = i + 1; j < size_; ++j) combo_[j] = combo_[j - 1] + 1;
    return true;
  }
  if (size_ == max_size_) return false;
  ++size_;
  combo_.resize(size_);
  for (int j = 0; j < size_; ++j) combo_[j] = j;
  return true;
}

std::optional<VertexSet> ZeroSumSubsets::next() {
  while (!done_ && advance()) {
    Rational s = 0;
    for (int i : combo_) s += x_[i];
    if (sgn(s) == 0) {
      std::vector<int> labels;
      for (int i : combo_) labels.push_back(i + 1);
      return VertexSet(labels);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<VertexSet> zero_sum_subsets(const QVector& x, std::optional<int> size) {
  std::vector<VertexSet> out;
  ZeroSumSubsets gen(x, size);
  while (auto s = gen.next()) out.push_back(std::move(*s));
  return out;
}

VertexSet neighborhood_zero_sum(const Graph& g, int v0) {
  const VertexSet s = g.neighborhood(v0);
  if (s.empty()) throw std::invalid_argument("vertex " + std::to_string(v0) + " is isolated");
  const KernelBasis k = kernel(g);
  if (k.basis.empty()) throw std::invalid_argument("graph is nonsingular; no kernel vector");
  for (const auto& x : k.basis) {
    Rational sum = 0;
    for (int v : s) sum += x[v - 1];
    if (sgn(sum) != 0) throw std::logic_error("kernel equation violated at vertex " + std::to_string(v0));
  }
  return s;
}

std::vector<std::string> ClassCReport::failed_conditions() const {
  std::vector<std::string> out;
  const std::pair<const char*, bool> items[] = {
      {"core", core},
      {"zero_main", zero_main},
      {"vertex_triangle", vertex_triangle},
      {"edge_triangle", edge_triangle},
      {"non_regular", non_regular},
      {"connected", connected},
      {"non_bipartite", non_bipartite},
      {"diameter_2_or_3", diameter_2_or_3},
  };
  for (auto [name, ok] : items)
    if (!ok) out.emplace_back(name);
  return out;
}

ClassCReport class_c_report(const SpectralProfile& spectral, const StructuralPredicates& structure) {
  ClassCReport r;
  r.core = spectral.is_core;
  r.zero_main = spectral.zero_is_main;
  r.vertex_triangle = structure.every_vertex_on_triangle;
  r.edge_triangle = structure.every_edge_on_triangle;
  r.non_regular = !structure.regular;
  r.connected = structure.connected;
  r.non_bipartite = !structure.bipartite;
  r.diameter_2_or_3 = structure.diameter && (*structure.diameter == 2 || *structure.diameter == 3);
  r.in_class_c = r.core && r.zero_main && r.vertex_triangle && r.edge_triangle && r.non_regular && r.connected &&
                 r.non_bipartite && r.diameter_2_or_3;
  return r;
}

ClassCReport class_c_report(const Graph& g) { return class_c_report(classify(g), structural_predicates(g)); }

}  // namespace ackkit
