#include "permgraph/pgm.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "permgraph/crp.hpp"

namespace permgraph {
namespace {

/// One edge per row and one per column.
bool is_permutation_graph(const DirectedGraph& g) {
  std::uint32_t columns = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::has_single_bit(g.row(i))) return false;
    columns |= g.row(i);
  }
  return columns == g.vertex_mask();
}

Permutation permutation_of(const DirectedGraph& g) {
  std::vector<std::uint32_t> images(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) images[i] = static_cast<std::uint32_t>(std::countr_zero(g.row(i)));
  return Permutation(std::move(images));
}

/// Reflexive, symmetric and transitive: every vertex in row i shares row i.
bool is_partition_graph(const DirectedGraph& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::uint32_t row = g.row(i);
    if (!((row >> i) & 1u)) return false;
    for (std::uint32_t rest = row; rest; rest &= rest - 1)
      if (g.row(static_cast<std::size_t>(std::countr_zero(rest))) != row) return false;
  }
  return true;
}

Rational edge_probability(const Rational& beta) { return beta / (1 + beta); }

}  // namespace

void PgmParams::validate(std::size_t max_n) const {
  require(n >= 1 && n <= max_n, ErrorCode::dimension, "n must lie in [1, " + std::to_string(max_n) + "]");
  require(is_positive(alpha), ErrorCode::domain, "alpha must be positive for a valid distribution");
  require(is_positive(beta), ErrorCode::domain, "beta must be positive for a valid distribution");
}

std::string_view to_string(SupportFamily family) noexcept {
  switch (family) {
    case SupportFamily::all: return "all";
    case SupportFamily::permutations: return "permutations";
    case SupportFamily::partitions: return "partitions";
    case SupportFamily::fixed_point_free: return "fixed-point-free";
    case SupportFamily::single_cycle: return "single-cycle";
  }
  return "all";
}

SupportFamily parse_support_family(std::string_view name) {
  if (name == "all") return SupportFamily::all;
  if (name == "permutations") return SupportFamily::permutations;
  if (name == "partitions") return SupportFamily::partitions;
  if (name == "fixed-point-free" || name == "fixed-point-free-permutations") return SupportFamily::fixed_point_free;
  if (name == "single-cycle" || name == "single-cycle-permutations") return SupportFamily::single_cycle;
  fail(ErrorCode::invalid_argument,
       "unknown support family '" + std::string(name) +
           "' (expected all, permutations, partitions, fixed-point-free, single-cycle)");
}

bool family_contains(SupportFamily family, const DirectedGraph& g) {
  switch (family) {
    case SupportFamily::all:
      return true;
    case SupportFamily::permutations:
      return is_permutation_graph(g);
    case SupportFamily::partitions:
      return is_partition_graph(g);
    case SupportFamily::fixed_point_free:
      if (!is_permutation_graph(g)) return false;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g.has_edge(i, i)) return false;
      return true;
    case SupportFamily::single_cycle:
      return is_permutation_graph(g) && permutation_of(g).cycle_count() == 1;
  }
  return false;
}

std::size_t family_enumeration_limit(SupportFamily family) noexcept {
  return family == SupportFamily::all ? kMaxEnumerationSize : 8;
}

void for_each_member(SupportFamily family, std::size_t n,
                     const std::function<void(const DirectedGraph&)>& visit) {
  require(n >= 1, ErrorCode::dimension, "n must be at least 1");
  require(n <= family_enumeration_limit(family), ErrorCode::capacity,
          "enumerating the " + std::string(to_string(family)) + " family is limited to n <= " +
              std::to_string(family_enumeration_limit(family)));
  switch (family) {
    case SupportFamily::all:
      for (const auto& g : enumerate_graphs(n)) visit(g);
      return;
    case SupportFamily::partitions:
      for_each_partition(n, [&](const Partition& pi) { visit(partition_to_graph(pi)); });
      return;
    default:
      for_each_permutation(n, [&](const Permutation& sigma) {
        const DirectedGraph g = permutation_to_graph(sigma);
        if (family_contains(family, g)) visit(g);
      });
      return;
  }
}

Rational pgm_weight(const DirectedGraph& g, const Rational& alpha, const Rational& beta) {
  return power(beta, g.edge_count()) * cycle_polynomial(g).evaluate(alpha);
}

Rational normalizer_closed_form(const PgmParams& params) {
  params.validate();
  const std::size_t n = params.n;
  Rational rising = 1;
  for (std::size_t k = 0; k < n; ++k) rising *= params.alpha + k;
  return rising * power(params.beta, n) * power(1 + params.beta, n * n - n);
}

Rational normalizer_bruteforce(const PgmParams& params, SupportFamily family) {
  params.validate();
  const std::size_t limit = family == SupportFamily::all ? 4 : 6;
  require(params.n <= limit, ErrorCode::capacity,
          "brute-force normalizer for the " + std::string(to_string(family)) + " family is limited to n <= " +
              std::to_string(limit));
  Rational total = 0;
  for_each_member(family, params.n, [&](const DirectedGraph& g) { total += pgm_weight(g, params.alpha, params.beta); });
  return total;
}

Rational pmf(const DirectedGraph& g, const PgmParams& params, SupportFamily family) {
  params.validate();
  require(g.size() == params.n, ErrorCode::dimension,
          "graph has " + std::to_string(g.size()) + " vertices but n = " + std::to_string(params.n));
  if (!family_contains(family, g)) return 0;
  const Rational z =
      family == SupportFamily::all ? normalizer_closed_form(params) : normalizer_bruteforce(params, family);
  return pgm_weight(g, params.alpha, params.beta) / z;
}

Rational degree_pmf(std::size_t n, const Rational& beta, std::size_t k) {
  require(n >= 1, ErrorCode::dimension, "n must be at least 1");
  require(is_positive(beta), ErrorCode::domain, "beta must be positive");
  require(k <= n - 1, ErrorCode::invalid_argument,
          "degree offset k must lie in [0, n-1] (out-degree k+1 in [1, n])");
  return Rational(binomial(n - 1, k)) * power(beta, k) / power(1 + beta, n - 1);
}

Rational expected_edges(std::size_t n, const Rational& beta) {
  require(n >= 1, ErrorCode::dimension, "n must be at least 1");
  require(is_positive(beta), ErrorCode::domain, "beta must be positive");
  return Rational(n) + Rational(n * n - n) * edge_probability(beta);
}

Rational total_variation_to_erdos_renyi(const PgmParams& params) {
  params.validate();
  require(params.n <= 4, ErrorCode::capacity, "total variation by enumeration is limited to n <= 4");
  const std::size_t cells = params.n * params.n;
  const Rational q = edge_probability(params.beta);
  const Rational z = normalizer_closed_form(params);
  Rational sum = 0;
  for (const auto& g : enumerate_graphs(params.n)) {
    const std::size_t e = g.edge_count();
    const Rational er = power(q, e) * power(1 - q, cells - e);
    Rational diff = pgm_weight(g, params.alpha, params.beta) / z - er;
    sum += abs(diff);
  }
  return sum / 2;
}

std::size_t DenseGraph::edge_count() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

std::size_t DenseGraph::out_degree(std::size_t i) const {
  const auto row = cells_.begin() + static_cast<std::ptrdiff_t>(i * n_);
  return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), std::uint8_t{1}));
}

DirectedGraph DenseGraph::to_graph() const {
  require(n_ >= 1 && n_ <= DirectedGraph::kMaxVertices, ErrorCode::capacity,
          "graph size must lie in [1, 32], got " + std::to_string(n_));
  std::array<std::uint32_t, DirectedGraph::kMaxVertices> rows{};
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (has_edge(i, j)) rows[i] |= std::uint32_t{1} << j;
  return DirectedGraph::from_rows(std::span(rows.data(), n_));
}

PgmSampler::PgmSampler(const PgmParams& params, std::uint64_t seed) : params_(params), rng_(seed) {
  params_.validate(kMaxSampleSize);
}

DirectedGraph PgmSampler::draw() {
  require(params_.n <= DirectedGraph::kMaxVertices, ErrorCode::capacity,
          "draw() is limited to 32 vertices; use draw_dense()");
  return draw_dense().to_graph();
}

DenseGraph PgmSampler::draw_dense() {
  const auto sigma = sample_ewens_images(params_.n, params_.alpha, rng_);
  const Rational q = edge_probability(params_.beta);
  DenseGraph g(params_.n);
  for (std::size_t i = 0; i < params_.n; ++i) {
    g.set_edge(i, sigma[i]);
    for (std::size_t j = 0; j < params_.n; ++j)
      if (j != sigma[i] && rng_.bernoulli(q)) g.set_edge(i, j);
  }
  return g;
}

bool exchangeability_check(std::size_t n, const GraphWeight& weight, std::size_t trials, std::uint64_t seed) {
  require(n >= 1 && n <= 4, ErrorCode::capacity, "exchangeability check is limited to 1 <= n <= 4");
  Rng rng(seed);
  std::vector<Permutation> taus;
  for (std::size_t t = 0; t < trials; ++t) taus.push_back(sample_uniform_permutation(n, rng));
  for (const auto& g : enumerate_graphs(n)) {
    const Rational w = weight(g);
    for (const auto& tau : taus)
      if (weight(conjugate(g, tau)) != w) return false;
  }
  return true;
}

bool exchangeability_check(const PgmParams& params, std::size_t trials, std::uint64_t seed) {
  params.validate();
  const Rational z = normalizer_closed_form(params);
  return exchangeability_check(
      params.n, [&](const DirectedGraph& g) -> Rational { return pgm_weight(g, params.alpha, params.beta) / z; }, trials, seed);
}

}  // namespace permgraph
