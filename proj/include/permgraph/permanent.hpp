#pragma once

#include <cstddef>
#include <vector>

#include "permgraph/exact.hpp"
#include "permgraph/graphs.hpp"

namespace permgraph {

/// Factorial-sum oracle limit (n! terms).
inline constexpr std::size_t kBruteForceMaxSize = 10;
/// Default subset-DP limit.
inline constexpr std::size_t kCycleDpMaxSize = 18;
/// Hard DP limit with the cost override: 64-bit counters stay exact up to
/// 20! and the tables need 2^n * (n+1) words.
inline constexpr std::size_t kCycleDpHardMaxSize = 20;

enum class CostPolicy { enforce, accept_cost };

/// Square matrix of exact rationals.
class RealMatrix {
 public:
  explicit RealMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static RealMatrix from_graph(const DirectedGraph& g);

  std::size_t size() const noexcept { return n_; }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// sum over sigma in S_n of alpha^{#sigma} prod_i A[i][sigma(i)], by
/// enumerating all n! permutations.
Rational alpha_permanent_bruteforce(const RealMatrix& a, const Rational& alpha,
                                    CostPolicy policy = CostPolicy::enforce);
Rational alpha_permanent_bruteforce(const DirectedGraph& g, const Rational& alpha,
                                    CostPolicy policy = CostPolicy::enforce);

/// c_k = number of permutations with exactly k cycles contained in a graph;
/// per_alpha(G) = sum_k c_k alpha^k.
class CyclePolynomial {
 public:
  CyclePolynomial() = default;
  /// coeffs[k] is c_k for k = 0..n (c_0 is always zero for n >= 1).
  explicit CyclePolynomial(std::vector<BigInt> coeffs);

  std::size_t size() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const BigInt& coefficient(std::size_t k) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Plain polynomial evaluation; any rational is accepted.
  Rational evaluate(const Rational& alpha) const;
  /// per_1: number of contained permutations.
  BigInt total() const;
  bool is_zero() const;

  friend bool operator==(const CyclePolynomial&, const CyclePolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

struct DpOptions {
  unsigned threads = 1;
  CostPolicy policy = CostPolicy::enforce;
};

/// Subset dynamic program: closed cycles are counted per vertex set (paths
/// anchored at the set's minimum), then covers are assembled by always
/// placing the smallest uncovered vertex in the next cycle. Results are
/// identical for every thread count.
CyclePolynomial cycle_polynomial(const DirectedGraph& g, const DpOptions& options = {});

/// Same quantity by enumerating S_n (n <= 10).
CyclePolynomial cycle_polynomial_bruteforce(const DirectedGraph& g);

}  // namespace permgraph
