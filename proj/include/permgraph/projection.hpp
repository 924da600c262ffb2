#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "permgraph/graphs.hpp"

namespace permgraph {

enum class ProjectionOp { subselection, delete_and_repair };

std::string_view to_string(ProjectionOp op) noexcept;
ProjectionOp parse_projection_op(std::string_view name);

/// Top-left (n-1) x (n-1) block.
DirectedGraph subselect(const DirectedGraph& g);

/// Removes the last vertex v and adds i -> j whenever i -> v -> j, self
/// pairs included.
DirectedGraph delete_and_repair(const DirectedGraph& g);

DirectedGraph project(const DirectedGraph& g, ProjectionOp op);

/// Projects out vertex v by first swapping it into the last position.
DirectedGraph project_vertex(const DirectedGraph& g, std::size_t v, ProjectionOp op);

enum class PreimageFilter {
  none,
  /// At least one permutation is a subgraph.
  contains_permutation,
  /// Every vertex has in-degree and out-degree at least one.
  positive_degrees,
};

bool passes(PreimageFilter filter, const DirectedGraph& g);

/// Largest base size for which preimages are enumerated.
inline constexpr std::size_t kMaxPreimageBaseSize = 6;
/// Members materialized or scanned before a capacity error.
inline constexpr std::uint64_t kMaxPreimageScan = std::uint64_t{1} << 26;

/// Preimages of `base` on n+1 vertices, in canonical order: lexicographic in
/// (last row, last column, corner), then by the free cells.
class PreimageSet {
 public:
  PreimageSet(DirectedGraph base, ProjectionOp op, PreimageFilter filter,
              std::vector<DirectedGraph> members);

  const DirectedGraph& base() const noexcept { return base_; }
  ProjectionOp op() const noexcept { return op_; }
  PreimageFilter filter() const noexcept { return filter_; }
  std::size_t level() const noexcept { return base_.size() + 1; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<DirectedGraph>& members() const noexcept { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  DirectedGraph base_;
  ProjectionOp op_;
  PreimageFilter filter_;
  std::vector<DirectedGraph> members_;
};

/// Visits every preimage without materializing; returns the count visited.
std::uint64_t for_each_preimage(const DirectedGraph& base, ProjectionOp op,
                                const std::function<void(const DirectedGraph&)>& visit);

PreimageSet preimages_ss(const DirectedGraph& g, PreimageFilter filter = PreimageFilter::none);
PreimageSet preimages_dr(const DirectedGraph& g, PreimageFilter filter = PreimageFilter::none);
PreimageSet preimages(const DirectedGraph& g, ProjectionOp op,
                      PreimageFilter filter = PreimageFilter::none);

/// Census count: unfiltered counts come from the free-cell product without
/// enumeration; filtered counts scan.
std::uint64_t count_preimages(const DirectedGraph& g, ProjectionOp op,
                              PreimageFilter filter = PreimageFilter::none);

/// The n+1 permutations of S_{n+1} whose delete-and-repair image is sigma:
/// n+1 inserted after each point in turn, then n+1 as a fixed point.
std::vector<Permutation> permutation_dr_preimages(const Permutation& sigma);

}  // namespace permgraph
