#include "permgraph/crp.hpp"

#include <map>
#include <numeric>
#include <string>

namespace permgraph {
namespace {

void check_alpha(const Rational& alpha) {
  require(is_positive(alpha), ErrorCode::domain, "alpha must be positive for a valid distribution");
}

void check_exhaustive_size(std::size_t n) {
  require(n >= 1 && n <= 6, ErrorCode::capacity, "exhaustive consistency checks are limited to 1 <= n <= 6");
}

}  // namespace

void EwensParams::validate() const {
  require(n >= 1 && n <= DirectedGraph::kMaxVertices, ErrorCode::dimension, "n must lie in [1, 32]");
  check_alpha(alpha);
}

Rational rising_factorial(const Rational& alpha, std::size_t n) {
  Rational value = 1;
  for (std::size_t k = 0; k < n; ++k) value *= alpha + k;
  return value;
}

Rational ewens_pmf(const Permutation& sigma, const Rational& alpha) {
  check_alpha(alpha);
  require(sigma.size() >= 1, ErrorCode::dimension, "empty permutation");
  return power(alpha, sigma.cycle_count()) / rising_factorial(alpha, sigma.size());
}

Rational crp_partition_pmf(const Partition& pi, const Rational& alpha) {
  check_alpha(alpha);
  require(pi.size() >= 1, ErrorCode::dimension, "empty partition");
  BigInt arrangements = 1;
  for (auto size : pi.block_sizes()) arrangements *= factorial(size - 1);
  return power(alpha, pi.block_count()) * Rational(arrangements) / rising_factorial(alpha, pi.size());
}

Permutation sample_ewens_permutation(std::size_t n, const Rational& alpha, Rng& rng) {
  require(n >= 1 && n <= DirectedGraph::kMaxVertices, ErrorCode::dimension, "n must lie in [1, 32]");
  return Permutation(sample_ewens_images(n, alpha, rng));
}

std::vector<std::uint32_t> sample_ewens_images(std::size_t n, const Rational& alpha, Rng& rng) {
  check_alpha(alpha);
  require(n >= 1 && n <= kMaxSampleSize, ErrorCode::dimension,
          "n must lie in [1, " + std::to_string(kMaxSampleSize) + "]");
  // alpha = a/b: opening a cycle has weight a, each placed point weight b.
  const BigInt& a = alpha.get_num();
  const BigInt& b = alpha.get_den();
  const BigInt widest = a + b * static_cast<unsigned long>(n);
  const bool word_sized = widest.fits_ulong_p();

  std::vector<std::uint32_t> map;
  map.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    bool opens;
    std::size_t position = 0;
    if (word_sized) {
      const std::uint64_t aw = a.get_ui();
      const std::uint64_t bw = b.get_ui();
      const std::uint64_t u = rng.uniform_below(aw + bw * k);
      opens = u < aw;
      if (!opens) position = static_cast<std::size_t>((u - aw) / bw);
    } else {
      const BigInt u = rng.uniform_below(BigInt(a + b * static_cast<unsigned long>(k)));
      opens = u < a;
      if (!opens) position = static_cast<std::size_t>(BigInt((u - a) / b).get_ui());
    }
    const auto point = static_cast<std::uint32_t>(k);
    if (opens) {
      map.push_back(point);
    } else {
      map.push_back(map[position]);
      map[position] = point;
    }
  }
  return map;
}

Permutation sample_uniform_permutation(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  for (std::size_t i = n; i > 1; --i) std::swap(map[i - 1], map[rng.uniform_below(std::uint64_t{i})]);
  return Permutation(std::move(map));
}

CrpSampler::CrpSampler(const EwensParams& params, std::uint64_t seed) : params_(params), rng_(seed) {
  params_.validate();
}

Permutation CrpSampler::draw_permutation() { return sample_ewens_permutation(params_.n, params_.alpha, rng_); }

Partition CrpSampler::draw_partition() { return cycles_to_partition(draw_permutation()); }

CrpConsistencyReport crp_consistency_check(std::size_t n, const Rational& alpha, ProjectionOp op) {
  check_exhaustive_size(n);
  check_alpha(alpha);

  // Level-(n+1) mass and preimage count bucketed by projected graph.
  std::map<std::uint64_t, Rational> mass;
  std::map<std::uint64_t, std::size_t> hits;
  for_each_permutation(n + 1, [&](const Permutation& sigma) {
    const std::uint64_t code = project(permutation_to_graph(sigma), op).code();
    mass[code] += ewens_pmf(sigma, alpha);
    ++hits[code];
  });

  CrpConsistencyReport report;
  for_each_permutation(n, [&](const Permutation& sigma) {
    ++report.checked;
    const std::uint64_t code = permutation_to_graph(sigma).code();
    const Rational expected = ewens_pmf(sigma, alpha);
    const auto it = mass.find(code);
    const Rational observed = it == mass.end() ? Rational(0) : it->second;
    if (observed != expected && report.pass) {
      report.pass = false;
      report.first_violation = sigma;
      report.expected = expected;
      report.observed = observed;
    }
    if (op != ProjectionOp::delete_and_repair) return;
    const auto found = permutation_dr_preimages(sigma);
    std::size_t gaining = 0;
    bool projects = true;
    for (const auto& lifted : found) {
      if (lifted.cycle_count() == sigma.cycle_count() + 1) ++gaining;
      else if (lifted.cycle_count() != sigma.cycle_count()) projects = false;
      if (delete_and_repair(permutation_to_graph(lifted)) != permutation_to_graph(sigma)) projects = false;
    }
    const auto count = hits.find(code);
    const std::size_t total = count == hits.end() ? 0 : count->second;
    if (!projects || gaining != 1 || found.size() != n + 1 || total != n + 1) report.census_ok = false;
  });
  if (!report.census_ok) report.pass = false;
  return report;
}

bool crp_partition_consistency_check(std::size_t n, const Rational& alpha) {
  check_exhaustive_size(n);
  check_alpha(alpha);
  std::map<std::uint64_t, Rational> mass;
  for_each_partition(n + 1, [&](const Partition& pi) {
    mass[delete_and_repair(partition_to_graph(pi)).code()] += crp_partition_pmf(pi, alpha);
  });
  bool pass = true;
  for_each_partition(n, [&](const Partition& pi) {
    const auto it = mass.find(partition_to_graph(pi).code());
    if (it == mass.end() || it->second != crp_partition_pmf(pi, alpha)) pass = false;
  });
  return pass;
}

}  // namespace permgraph
