#include "permgraph/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace permgraph {
namespace {

std::uint32_t low_mask(std::size_t n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

void check_size(std::size_t n) {
  require(n >= 1 && n <= DirectedGraph::kMaxVertices, ErrorCode::capacity,
          "graph size must lie in [1, 32], got " + std::to_string(n));
}

std::size_t count_cycles(std::span<const std::uint32_t> map) {
  std::vector<bool> seen(map.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = map[j]) seen[j] = true;
  }
  return cycles;
}

}  // namespace

// --- DirectedGraph ---------------------------------------------------------

DirectedGraph::DirectedGraph(std::size_t n) : n_(n) { check_size(n); }

DirectedGraph DirectedGraph::from_rows(std::span<const std::uint32_t> rows) {
  DirectedGraph g(rows.size());
  const std::uint32_t mask = low_mask(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require((rows[i] & ~mask) == 0, ErrorCode::dimension,
            "row " + std::to_string(i + 1) + " has bits beyond column " + std::to_string(rows.size()));
    g.rows_[i] = rows[i];
  }
  return g;
}

DirectedGraph DirectedGraph::identity(std::size_t n) {
  DirectedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.rows_[i] = std::uint32_t{1} << i;
  return g;
}

DirectedGraph DirectedGraph::complete(std::size_t n) {
  DirectedGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.rows_[i] = low_mask(n);
  return g;
}

DirectedGraph DirectedGraph::from_code(std::size_t n, std::uint64_t code) {
  require(n >= 1 && n <= 8, ErrorCode::capacity, "bit codes exist only for n <= 8");
  DirectedGraph g(n);
  const std::uint64_t mask = low_mask(n);
  for (std::size_t i = 0; i < n; ++i) g.rows_[i] = static_cast<std::uint32_t>((code >> (i * n)) & mask);
  if (n < 8)
    require((code >> (n * n)) == 0, ErrorCode::dimension, "graph code has bits beyond n^2");
  return g;
}

std::uint64_t DirectedGraph::code() const {
  require(n_ <= 8, ErrorCode::capacity, "bit codes exist only for n <= 8");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n_; ++i) code |= std::uint64_t{rows_[i]} << (i * n_);
  return code;
}

std::uint32_t DirectedGraph::column(std::size_t j) const noexcept {
  std::uint32_t col = 0;
  for (std::size_t i = 0; i < n_; ++i) col |= ((rows_[i] >> j) & 1u) << i;
  return col;
}

std::uint32_t DirectedGraph::vertex_mask() const noexcept { return low_mask(n_); }

std::size_t DirectedGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) total += std::popcount(rows_[i]);
  return total;
}

std::size_t DirectedGraph::out_degree(std::size_t i) const noexcept {
  return std::popcount(rows_[i]);
}

DirectedGraph DirectedGraph::with_edge(std::size_t i, std::size_t j, bool present) const {
  require(i < n_ && j < n_, ErrorCode::dimension, "edge endpoint out of range");
  DirectedGraph g = *this;
  if (present)
    g.rows_[i] |= std::uint32_t{1} << j;
  else
    g.rows_[i] &= ~(std::uint32_t{1} << j);
  return g;
}

DirectedGraph DirectedGraph::with_row(std::size_t i, std::uint32_t mask) const {
  require(i < n_, ErrorCode::dimension, "row index out of range");
  require((mask & ~vertex_mask()) == 0, ErrorCode::dimension, "row mask has bits beyond n");
  DirectedGraph g = *this;
  g.rows_[i] = mask;
  return g;
}

std::strong_ordering operator<=>(const DirectedGraph& a, const DirectedGraph& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = 0; i < a.n_; ++i)
    if (auto c = a.rows_[i] <=> b.rows_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// --- Permutation -----------------------------------------------------------

Permutation::Permutation(std::vector<std::uint32_t> images) : map_(std::move(images)) {
  check_size(map_.size());
  std::vector<bool> hit(map_.size(), false);
  for (std::uint32_t v : map_) {
    require(v < map_.size() && !hit[v], ErrorCode::invalid_argument, "images do not form a bijection");
    hit[v] = true;
  }
  cycle_count_ = count_cycles(map_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  return Permutation(std::move(map));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  check_size(n);
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const std::uint32_t from = cycle[k];
      require(from < n, ErrorCode::dimension, "cycle element " + std::to_string(from + 1) + " exceeds n");
      require(!used[from], ErrorCode::invalid_argument, "cycles are not disjoint");
      used[from] = true;
      map[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(map));
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    auto& cycle = out.emplace_back();
    for (std::uint32_t j = i; !seen[j]; j = map_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(size());
  for (std::uint32_t i = 0; i < size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  require(size() == other.size(), ErrorCode::dimension, "permutation sizes differ");
  std::vector<std::uint32_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = map_[other.map_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::conjugated_by(const Permutation& tau) const {
  return tau.compose(*this).compose(tau.inverse());
}

Permutation Permutation::inserted_after(std::size_t position) const {
  const std::size_t n = size();
  require(position <= n, ErrorCode::invalid_argument, "insertion position out of range");
  require(n + 1 <= DirectedGraph::kMaxVertices, ErrorCode::capacity, "permutation would exceed 32 points");
  std::vector<std::uint32_t> out(map_);
  out.push_back(static_cast<std::uint32_t>(n));
  if (position < n) {
    out[n] = map_[position];
    out[position] = static_cast<std::uint32_t>(n);
  }
  return Permutation(std::move(out));
}

// --- Partition -------------------------------------------------------------

Partition::Partition(std::span<const std::uint32_t> labels) {
  check_size(labels.size());
  std::vector<std::uint32_t> relabel;
  std::vector<std::uint32_t> seen_labels;
  labels_.reserve(labels.size());
  for (std::uint32_t l : labels) {
    auto it = std::find(seen_labels.begin(), seen_labels.end(), l);
    if (it == seen_labels.end()) {
      seen_labels.push_back(l);
      labels_.push_back(static_cast<std::uint32_t>(seen_labels.size() - 1));
    } else {
      labels_.push_back(static_cast<std::uint32_t>(it - seen_labels.begin()));
    }
  }
  block_count_ = seen_labels.size();
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<std::uint32_t>>& blocks) {
  check_size(n);
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> labels(n, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    require(!blocks[b].empty(), ErrorCode::invalid_argument, "partition blocks must be nonempty");
    for (std::uint32_t v : blocks[b]) {
      require(v < n, ErrorCode::dimension, "block element " + std::to_string(v + 1) + " exceeds n");
      require(labels[v] == unset, ErrorCode::invalid_argument, "partition blocks overlap");
      labels[v] = static_cast<std::uint32_t>(b);
    }
  }
  for (std::uint32_t l : labels)
    require(l != unset, ErrorCode::invalid_argument, "partition blocks do not cover [n]");
  return Partition(labels);
}

std::vector<std::vector<std::uint32_t>> Partition::blocks() const {
  std::vector<std::vector<std::uint32_t>> out(block_count_);
  for (std::uint32_t v = 0; v < size(); ++v) out[labels_[v]].push_back(v);
  return out;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes(block_count_, 0);
  for (std::uint32_t l : labels_) ++sizes[l];
  return sizes;
}

// --- graph operations ------------------------------------------------------

bool contains_permutation(const DirectedGraph& g, const Permutation& sigma) {
  require(g.size() == sigma.size(), ErrorCode::dimension, "graph and permutation sizes differ");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!g.has_edge(i, sigma(i))) return false;
  return true;
}

DirectedGraph conjugate(const DirectedGraph& g, const Permutation& tau) {
  require(g.size() == tau.size(), ErrorCode::dimension, "graph and permutation sizes differ");
  const std::size_t n = g.size();
  std::array<std::uint32_t, DirectedGraph::kMaxVertices> rows{};
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t r = g.row(i);
    std::uint32_t image = 0;
    while (r) {
      const int j = std::countr_zero(r);
      r &= r - 1;
      image |= std::uint32_t{1} << tau(j);
    }
    rows[tau(i)] = image;
  }
  return DirectedGraph::from_rows(std::span(rows.data(), n));
}

DirectedGraph permutation_to_graph(const Permutation& sigma) {
  std::vector<std::uint32_t> rows(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) rows[i] = std::uint32_t{1} << sigma(i);
  return DirectedGraph::from_rows(rows);
}

DirectedGraph partition_to_graph(const Partition& pi) {
  std::vector<std::uint32_t> block_masks(pi.block_count(), 0);
  for (std::uint32_t v = 0; v < pi.size(); ++v) block_masks[pi.labels()[v]] |= std::uint32_t{1} << v;
  std::vector<std::uint32_t> rows(pi.size());
  for (std::uint32_t v = 0; v < pi.size(); ++v) rows[v] = block_masks[pi.labels()[v]];
  return DirectedGraph::from_rows(rows);
}

Partition cycles_to_partition(const Permutation& sigma) {
  std::vector<std::uint32_t> labels(sigma.size());
  const auto cycles = sigma.cycles();
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (std::uint32_t v : cycles[c]) labels[v] = static_cast<std::uint32_t>(c);
  return Partition(labels);
}

bool has_permutation_subgraph(const DirectedGraph& g) {
  // Kuhn's augmenting paths on the rows-vs-columns bipartite graph.
  const std::size_t n = g.size();
  std::vector<int> match_of_column(n, -1);
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t row) {
    std::uint32_t r = g.row(row);
    while (r) {
      const int col = std::countr_zero(r);
      r &= r - 1;
      if (visited[col]) continue;
      visited[col] = true;
      if (match_of_column[col] < 0 || augment(static_cast<std::size_t>(match_of_column[col]))) {
        match_of_column[col] = static_cast<int>(row);
        return true;
      }
    }
    return false;
  };
  for (std::size_t row = 0; row < n; ++row) {
    visited.assign(n, false);
    if (!augment(row)) return false;
  }
  return true;
}

DirectedGraph transitive_closure(const DirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = g.row(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if ((rows[i] >> k) & 1u) rows[i] |= rows[k];
  return DirectedGraph::from_rows(rows);
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit) {
  check_size(n);
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  do {
    visit(Permutation(map));
  } while (std::next_permutation(map.begin(), map.end()));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit) {
  check_size(n);
  // a[i] <= 1 + max(a[0..i-1]), a[0] = 0.
  std::vector<std::uint32_t> a(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);
  for (;;) {
    visit(Partition(a));
    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
}

}  // namespace permgraph
