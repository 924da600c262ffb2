#pragma once

#include <cstdint>
#include <random>

#include "permgraph/exact.hpp"

namespace permgraph {

/// Seeded generator with a platform-independent output sequence. The engine
/// is std::mt19937_64, whose outputs are fixed by the standard; every draw
/// is derived from raw engine words by rejection sampling, so no
/// implementation-defined std:: distribution is involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_word() { return engine_(); }

  /// Uniform on [0, bound), bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound);
  BigInt uniform_below(const BigInt& bound);

  /// True with exact probability p, 0 <= p <= 1.
  bool bernoulli(const Rational& p);

  /// Uniform on [0, 1) with 53 random bits; only for float diagnostics.
  double uniform01();

 private:
  std::mt19937_64 engine_;
};

}  // namespace permgraph
