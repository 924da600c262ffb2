#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ranges>
#include <span>
#include <vector>

#include "permgraph/error.hpp"

namespace permgraph {

/// Boolean n x n adjacency matrix, self-loops allowed. Row i is a bitmask of
/// the out-neighbours of vertex i (bit j set means edge i -> j). Vertices are
/// 0-indexed here; text I/O uses 1-indexed labels.
class DirectedGraph {
 public:
  static constexpr std::size_t kMaxVertices = 32;

  /// Edgeless graph on n vertices.
  explicit DirectedGraph(std::size_t n);

  static DirectedGraph from_rows(std::span<const std::uint32_t> rows);
  static DirectedGraph identity(std::size_t n);
  static DirectedGraph complete(std::size_t n);

  /// Row-major bit code: bit (i*n + j) is edge i -> j. Only for n <= 8.
  static DirectedGraph from_code(std::size_t n, std::uint64_t code);
  std::uint64_t code() const;

  std::size_t size() const noexcept { return n_; }
  bool has_edge(std::size_t i, std::size_t j) const noexcept {
    return (rows_[i] >> j) & 1u;
  }
  std::uint32_t row(std::size_t i) const noexcept { return rows_[i]; }
  std::uint32_t column(std::size_t j) const noexcept;
  std::uint32_t vertex_mask() const noexcept;
  std::size_t edge_count() const noexcept;
  std::size_t out_degree(std::size_t i) const noexcept;

  DirectedGraph with_edge(std::size_t i, std::size_t j, bool present = true) const;
  DirectedGraph with_row(std::size_t i, std::uint32_t mask) const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;
  friend std::strong_ordering operator<=>(const DirectedGraph& a, const DirectedGraph& b);

 private:
  std::size_t n_;
  std::array<std::uint32_t, kMaxVertices> rows_{};
};

/// Bijection on {0..n-1} with a cached cycle count.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  /// Builds from disjoint cycles; unmentioned points are fixed.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t size() const noexcept { return map_.size(); }
  std::uint32_t operator()(std::size_t i) const noexcept { return map_[i]; }
  std::span<const std::uint32_t> images() const noexcept { return map_; }
  std::size_t cycle_count() const noexcept { return cycle_count_; }

  /// Cycles in canonical order: each starts at its smallest point, cycles
  /// sorted by starting point.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  Permutation inverse() const;
  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  /// tau sigma tau^{-1} as a map.
  Permutation conjugated_by(const Permutation& tau) const;

  /// Extends to a permutation of {0..n}: the new point n is spliced into the
  /// cycle right after `position` (sigma'(position) = n, sigma'(n) =
  /// sigma(position)), or becomes a fixed point when position == n. This is
  /// the seating step of the Chinese restaurant process and the inverse of
  /// delete-and-repair on permutations.
  Permutation inserted_after(std::size_t position) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.map_ == b.map_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<std::uint32_t> map_;
  std::size_t cycle_count_ = 0;
};

/// Set partition of {0..n-1} stored as a restricted growth string.
class Partition {
 public:
  Partition() = default;
  /// Any labelling; relabelled to canonical restricted-growth form.
  explicit Partition(std::span<const std::uint32_t> labels);
  static Partition from_blocks(std::size_t n,
                               const std::vector<std::vector<std::uint32_t>>& blocks);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }
  std::vector<std::vector<std::uint32_t>> blocks() const;
  std::vector<std::size_t> block_sizes() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.labels_ == b.labels_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<std::uint32_t> labels_;
  std::size_t block_count_ = 0;
};

bool contains_permutation(const DirectedGraph& g, const Permutation& sigma);

/// result[tau(i)][tau(j)] = g[i][j].
DirectedGraph conjugate(const DirectedGraph& g, const Permutation& tau);

DirectedGraph permutation_to_graph(const Permutation& sigma);
DirectedGraph partition_to_graph(const Partition& pi);
Partition cycles_to_partition(const Permutation& sigma);

/// True when some permutation is a subgraph, via bipartite matching. This is
/// independent of the permanent code paths.
bool has_permutation_subgraph(const DirectedGraph& g);

DirectedGraph transitive_closure(const DirectedGraph& g);

/// Largest n for which enumerate_graphs walks all 2^(n^2) graphs.
inline constexpr std::size_t kMaxEnumerationSize = 5;

using GraphPredicate = std::function<bool(const DirectedGraph&)>;

/// Every n-graph exactly once, in increasing code order, optionally filtered.
inline auto enumerate_graphs(std::size_t n, GraphPredicate predicate = {}) {
  require(n >= 1 && n <= kMaxEnumerationSize, ErrorCode::capacity,
          "full graph enumeration is limited to 1 <= n <= 5");
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  if (!predicate) predicate = [](const DirectedGraph&) { return true; };
  return std::views::iota(std::uint64_t{0}, count) |
         std::views::transform([n](std::uint64_t c) { return DirectedGraph::from_code(n, c); }) |
         std::views::filter(std::move(predicate));
}

/// Lexicographic order of one-line notation.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> all_permutations(std::size_t n);

/// Restricted growth strings in lexicographic order.
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit);

}  // namespace permgraph
