#include "permgraph/rng.hpp"

#include <bit>

#include "permgraph/error.hpp"

namespace permgraph {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  require(bound > 0, ErrorCode::invalid_argument, "uniform_below needs a positive bound");
  if ((bound & (bound - 1)) == 0) return next_word() & (bound - 1);
  // Largest multiple of bound representable in 64 bits.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = next_word();
    if (x < limit) return x % bound;
  }
}

BigInt Rng::uniform_below(const BigInt& bound) {
  require(sgn(bound) > 0, ErrorCode::invalid_argument, "uniform_below needs a positive bound");
  if (bound.fits_ulong_p()) return BigInt(static_cast<unsigned long>(uniform_below(std::uint64_t{bound.get_ui()})));
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  for (;;) {
    BigInt x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = next_word();
      if (w == 0 && top_bits < 64) word &= (std::uint64_t{1} << top_bits) - 1;
      x <<= 64;
      x += BigInt(static_cast<unsigned long>(word));
    }
    if (x < bound) return x;
  }
}

bool Rng::bernoulli(const Rational& p) {
  require(sgn(p) >= 0 && p <= 1, ErrorCode::domain, "bernoulli probability must lie in [0, 1]");
  const BigInt& den = p.get_den();
  if (den.fits_ulong_p() && p.get_num().fits_ulong_p())
    return uniform_below(std::uint64_t{den.get_ui()}) < p.get_num().get_ui();
  return uniform_below(den) < p.get_num();
}

double Rng::uniform01() { return static_cast<double>(next_word() >> 11) * 0x1.0p-53; }

}  // namespace permgraph
