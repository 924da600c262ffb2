#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "permgraph/exact.hpp"
#include "permgraph/graphs.hpp"
#include "permgraph/permanent.hpp"
#include "permgraph/rng.hpp"

namespace permgraph {

/// Parameters of P_n(G) ∝ beta^{#G} per_alpha(G). Both must be positive.
struct PgmParams {
  std::size_t n = 1;
  Rational alpha{1};
  Rational beta{1};

  void validate(std::size_t max_n = DirectedGraph::kMaxVertices) const;
};

/// Conjugation-closed supports.
enum class SupportFamily {
  all,
  permutations,
  partitions,
  fixed_point_free,
  single_cycle,
};

std::string_view to_string(SupportFamily family) noexcept;
SupportFamily parse_support_family(std::string_view name);
bool family_contains(SupportFamily family, const DirectedGraph& g);

/// Upper size for enumerating the members of a family.
std::size_t family_enumeration_limit(SupportFamily family) noexcept;

/// Visits each member once in a deterministic order: code order for `all`,
/// lexicographic one-line order for permutation families, restricted growth
/// order for partitions.
void for_each_member(SupportFamily family, std::size_t n,
                     const std::function<void(const DirectedGraph&)>& visit);

/// beta^{#G} per_alpha(G).
Rational pgm_weight(const DirectedGraph& g, const Rational& alpha, const Rational& beta);

/// alpha_{n up 1} beta^n (1+beta)^{n^2-n}.
Rational normalizer_closed_form(const PgmParams& params);

/// Sum of pgm_weight over the members of the family, by enumeration.
Rational normalizer_bruteforce(const PgmParams& params, SupportFamily family);

Rational pmf(const DirectedGraph& g, const PgmParams& params,
             SupportFamily family = SupportFamily::all);

/// P(out-degree of vertex 1 equals k + 1) = C(n-1,k) beta^k / (1+beta)^{n-1}.
Rational degree_pmf(std::size_t n, const Rational& beta, std::size_t k);

/// Exact E[#G] = n + (n^2 - n) beta / (1 + beta).
Rational expected_edges(std::size_t n, const Rational& beta);

/// Total variation distance to the Erdos-Renyi graph with edge probability
/// beta/(1+beta) on the same n^2 cells, by enumeration (n <= 4).
Rational total_variation_to_erdos_renyi(const PgmParams& params);

/// Row-major 0/1 adjacency with no 32-vertex cap, for large samples.
class DenseGraph {
 public:
  explicit DenseGraph(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool has_edge(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set_edge(std::size_t i, std::size_t j) { cells_[i * n_ + j] = 1; }
  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }
  std::size_t edge_count() const noexcept;
  std::size_t out_degree(std::size_t i) const;
  /// n <= 32 only.
  DirectedGraph to_graph() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

/// Two-stage exact sampler: an Ewens(alpha) permutation supplies n forced
/// edges, then each remaining cell is an independent Bernoulli(beta/(1+beta)).
/// Accepts n up to kMaxSampleSize; draw() needs n <= 32.
class PgmSampler {
 public:
  PgmSampler(const PgmParams& params, std::uint64_t seed);

  DirectedGraph draw();
  /// Same stream as draw().
  DenseGraph draw_dense();
  const PgmParams& params() const noexcept { return params_; }

 private:
  PgmParams params_;
  Rng rng_;
};

using GraphWeight = std::function<Rational(const DirectedGraph&)>;

/// True iff weight(conjugate(G, tau)) == weight(G) for every n-graph and
/// `trials` random tau drawn from `seed` (n <= 4).
bool exchangeability_check(std::size_t n, const GraphWeight& weight, std::size_t trials,
                           std::uint64_t seed);
bool exchangeability_check(const PgmParams& params, std::size_t trials, std::uint64_t seed);

}  // namespace permgraph
