#include "permgraph/projection.hpp"

#include <bit>
#include <string>

namespace permgraph {
namespace {

void check_projectable(const DirectedGraph& g) {
  require(g.size() >= 2, ErrorCode::underflow, "cannot project a graph with a single vertex");
}

void check_base(const DirectedGraph& g) {
  require(g.size() <= kMaxPreimageBaseSize, ErrorCode::capacity,
          "preimage enumeration is limited to base graphs with n <= " +
              std::to_string(kMaxPreimageBaseSize));
}

inline constexpr std::uint64_t kMaxPreimageMembers = std::uint64_t{1} << 20;

/// Level-(n+1) graph assembled from the top block rows, last column c, last
/// row r and corner d.
DirectedGraph assemble(const std::array<std::uint32_t, DirectedGraph::kMaxVertices>& block, std::size_t n,
                       std::uint32_t r, std::uint32_t c, bool d) {
  std::array<std::uint32_t, DirectedGraph::kMaxVertices> rows{};
  for (std::size_t i = 0; i < n; ++i) rows[i] = block[i] | (((c >> i) & 1u) << n);
  rows[n] = r | (static_cast<std::uint32_t>(d) << n);
  return DirectedGraph::from_rows(std::span(rows.data(), n + 1));
}

/// Whether the top-left block may differ from the base at (i, j): only when
/// the repair term c_i & r_j already supplies the edge.
bool dr_compatible(const DirectedGraph& g, std::uint32_t r, std::uint32_t c) {
  for (std::uint32_t rest = c; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if (r & ~g.row(static_cast<std::size_t>(i))) return false;
  }
  return true;
}

std::uint64_t dr_count_unfiltered(const DirectedGraph& g) {
  const std::size_t n = g.size();
  std::uint64_t total = 0;
  for (std::uint32_t r = 0; r < (std::uint32_t{1} << n); ++r)
    for (std::uint32_t c = 0; c < (std::uint32_t{1} << n); ++c)
      if (dr_compatible(g, r, c))
        total += std::uint64_t{2} << (std::popcount(r) * std::popcount(c));
  return total;
}

}  // namespace

std::string_view to_string(ProjectionOp op) noexcept {
  return op == ProjectionOp::subselection ? "ss" : "dr";
}

ProjectionOp parse_projection_op(std::string_view name) {
  if (name == "ss" || name == "subselection") return ProjectionOp::subselection;
  if (name == "dr" || name == "delete-and-repair") return ProjectionOp::delete_and_repair;
  fail(ErrorCode::invalid_argument, "unknown projection '" + std::string(name) + "' (expected ss or dr)");
}

DirectedGraph subselect(const DirectedGraph& g) {
  check_projectable(g);
  const std::size_t n = g.size() - 1;
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  std::array<std::uint32_t, DirectedGraph::kMaxVertices> rows{};
  for (std::size_t i = 0; i < n; ++i) rows[i] = g.row(i) & mask;
  return DirectedGraph::from_rows(std::span(rows.data(), n));
}

DirectedGraph delete_and_repair(const DirectedGraph& g) {
  check_projectable(g);
  const std::size_t last = g.size() - 1;
  const std::uint32_t mask = (std::uint32_t{1} << last) - 1;
  const std::uint32_t from_last = g.row(last) & mask;
  std::array<std::uint32_t, DirectedGraph::kMaxVertices> rows{};
  for (std::size_t i = 0; i < last; ++i) {
    rows[i] = g.row(i) & mask;
    if (g.has_edge(i, last)) rows[i] |= from_last;
  }
  return DirectedGraph::from_rows(std::span(rows.data(), last));
}

DirectedGraph project(const DirectedGraph& g, ProjectionOp op) {
  return op == ProjectionOp::subselection ? subselect(g) : delete_and_repair(g);
}

DirectedGraph project_vertex(const DirectedGraph& g, std::size_t v, ProjectionOp op) {
  check_projectable(g);
  require(v < g.size(), ErrorCode::dimension, "vertex out of range");
  const std::size_t last = g.size() - 1;
  std::vector<std::uint32_t> swap(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) swap[i] = static_cast<std::uint32_t>(i);
  std::swap(swap[v], swap[last]);
  return project(conjugate(g, Permutation(std::move(swap))), op);
}

bool passes(PreimageFilter filter, const DirectedGraph& g) {
  switch (filter) {
    case PreimageFilter::none:
      return true;
    case PreimageFilter::contains_permutation:
      return has_permutation_subgraph(g);
    case PreimageFilter::positive_degrees: {
      std::uint32_t columns = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.row(i) == 0) return false;
        columns |= g.row(i);
      }
      return columns == g.vertex_mask();
    }
  }
  return false;
}

PreimageSet::PreimageSet(DirectedGraph base, ProjectionOp op, PreimageFilter filter,
                         std::vector<DirectedGraph> members)
    : base_(base), op_(op), filter_(filter), members_(std::move(members)) {}

std::uint64_t for_each_preimage(const DirectedGraph& base, ProjectionOp op,
                                const std::function<void(const DirectedGraph&)>& visit) {
  check_base(base);
  const std::size_t n = base.size();
  std::array<std::uint32_t, DirectedGraph::kMaxVertices> block{};
  for (std::size_t i = 0; i < n; ++i) block[i] = base.row(i);

  std::uint64_t visited = 0;
  for (std::uint32_t r = 0; r < (std::uint32_t{1} << n); ++r) {
    for (std::uint32_t c = 0; c < (std::uint32_t{1} << n); ++c) {
      for (int d = 0; d < 2; ++d) {
        if (op == ProjectionOp::subselection) {
          visit(assemble(block, n, r, c, d != 0));
          ++visited;
          continue;
        }
        if (!dr_compatible(base, r, c)) continue;
        // Free cells are c x r in row-major order, bit k of the counter
        // drives the k-th free cell.
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        for (std::size_t i = 0; i < n; ++i)
          if ((c >> i) & 1u)
            for (std::size_t j = 0; j < n; ++j)
              if ((r >> j) & 1u) free_cells.emplace_back(i, j);
        const std::uint64_t assignments = std::uint64_t{1} << free_cells.size();
        for (std::uint64_t bits = 0; bits < assignments; ++bits) {
          auto rows = block;
          for (std::size_t k = 0; k < free_cells.size(); ++k) {
            const auto [i, j] = free_cells[k];
            if (!((bits >> k) & 1u)) rows[i] &= ~(std::uint32_t{1} << j);
          }
          visit(assemble(rows, n, r, c, d != 0));
          ++visited;
        }
      }
    }
  }
  return visited;
}

PreimageSet preimages(const DirectedGraph& g, ProjectionOp op, PreimageFilter filter) {
  check_base(g);
  const std::uint64_t total = count_preimages(g, op, PreimageFilter::none);
  require(total <= kMaxPreimageScan, ErrorCode::capacity,
          "graph has " + std::to_string(total) + " preimages, more than the enumeration budget");
  std::vector<DirectedGraph> members;
  for_each_preimage(g, op, [&](const DirectedGraph& h) {
    if (!passes(filter, h)) return;
    require(members.size() < kMaxPreimageMembers, ErrorCode::capacity,
            "preimage set too large to materialize; use a count instead");
    members.push_back(h);
  });
  return PreimageSet(g, op, filter, std::move(members));
}

PreimageSet preimages_ss(const DirectedGraph& g, PreimageFilter filter) {
  return preimages(g, ProjectionOp::subselection, filter);
}

PreimageSet preimages_dr(const DirectedGraph& g, PreimageFilter filter) {
  return preimages(g, ProjectionOp::delete_and_repair, filter);
}

std::uint64_t count_preimages(const DirectedGraph& g, ProjectionOp op, PreimageFilter filter) {
  check_base(g);
  const std::size_t n = g.size();
  const std::uint64_t total =
      op == ProjectionOp::subselection ? std::uint64_t{1} << (2 * n + 1) : dr_count_unfiltered(g);
  if (filter == PreimageFilter::none) return total;
  require(total <= kMaxPreimageScan, ErrorCode::capacity,
          "graph has " + std::to_string(total) + " preimages, more than the scan budget");
  std::uint64_t kept = 0;
  for_each_preimage(g, op, [&](const DirectedGraph& h) { kept += passes(filter, h) ? 1 : 0; });
  return kept;
}

std::vector<Permutation> permutation_dr_preimages(const Permutation& sigma) {
  std::vector<Permutation> out;
  out.reserve(sigma.size() + 1);
  for (std::size_t position = 0; position <= sigma.size(); ++position)
    out.push_back(sigma.inserted_after(position));
  return out;
}

}  // namespace permgraph
