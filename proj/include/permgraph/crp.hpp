#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permgraph/exact.hpp"
#include "permgraph/graphs.hpp"
#include "permgraph/projection.hpp"
#include "permgraph/rng.hpp"

namespace permgraph {

struct EwensParams {
  std::size_t n = 1;
  Rational alpha{1};

  void validate() const;
};

/// alpha (alpha + 1) ... (alpha + n - 1); empty product for n = 0.
Rational rising_factorial(const Rational& alpha, std::size_t n);

/// alpha^{#sigma} / alpha_{n up 1}.
Rational ewens_pmf(const Permutation& sigma, const Rational& alpha);

/// alpha^{#pi} prod_j (n_j - 1)! / alpha_{n up 1}.
Rational crp_partition_pmf(const Partition& pi, const Rational& alpha);

/// Sequential seating: point k (0-based, k points already placed) opens a
/// new cycle with probability alpha/(alpha+k), otherwise it is inserted
/// after one of the k placed points, each with probability 1/(alpha+k).
Permutation sample_ewens_permutation(std::size_t n, const Rational& alpha, Rng& rng);

/// Largest n for one-line Ewens draws, which are not tied to the 32-vertex
/// graph type.
inline constexpr std::size_t kMaxSampleSize = 4096;

/// The same draw as sample_ewens_permutation, from the same RNG stream, as
/// one-line images (0-based). 1 <= n <= kMaxSampleSize.
std::vector<std::uint32_t> sample_ewens_images(std::size_t n, const Rational& alpha, Rng& rng);

/// Uniform permutation of n points (Fisher-Yates).
Permutation sample_uniform_permutation(std::size_t n, Rng& rng);

class CrpSampler {
 public:
  CrpSampler(const EwensParams& params, std::uint64_t seed);

  Permutation draw_permutation();
  /// Blocks are the cycles of a drawn permutation.
  Partition draw_partition();

 private:
  EwensParams params_;
  Rng rng_;
};

struct CrpConsistencyReport {
  bool pass = true;
  /// Each sigma has n+1 preimages, exactly one gaining a cycle (only
  /// meaningful for delete-and-repair).
  bool census_ok = true;
  std::size_t checked = 0;
  std::optional<Permutation> first_violation;
  Rational expected;  // level-n pmf at the violation
  Rational observed;  // preimage mass at the violation
};

/// For every sigma in S_n, sums the level-(n+1) Ewens mass of the
/// permutations projecting onto sigma's graph under `op` and compares it
/// with ewens_pmf(sigma), exactly. n <= 6.
CrpConsistencyReport crp_consistency_check(std::size_t n, const Rational& alpha,
                                           ProjectionOp op = ProjectionOp::delete_and_repair);

/// Same law-of-total-probability check for the partition form, projecting
/// partition graphs with delete-and-repair. n <= 6.
bool crp_partition_consistency_check(std::size_t n, const Rational& alpha);

}  // namespace permgraph
