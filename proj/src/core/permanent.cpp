#include "permgraph/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <thread>

namespace permgraph {
namespace {

void check_bruteforce_size(std::size_t n, CostPolicy policy) {
  if (policy == CostPolicy::enforce)
    require(n <= kBruteForceMaxSize, ErrorCode::capacity,
            "factorial enumeration is limited to n <= " + std::to_string(kBruteForceMaxSize) +
                " (got " + std::to_string(n) + ")");
}

std::size_t cycles_of(const std::vector<std::uint32_t>& map) {
  std::uint32_t seen = 0;
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if ((seen >> i) & 1u) continue;
    ++cycles;
    for (std::size_t j = i; !((seen >> j) & 1u); j = map[j]) seen |= std::uint32_t{1} << j;
  }
  return cycles;
}

// Runs body(lo, hi) over [0, count) split into contiguous chunks.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned threads, Body body) {
  if (threads <= 1 || count < 1024) {
    body(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + threads - 1) / threads;
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([=] { body(lo, hi); });
  }
}

}  // namespace

RealMatrix RealMatrix::from_graph(const DirectedGraph& g) {
  RealMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m.at(i, j) = g.has_edge(i, j) ? 1 : 0;
  return m;
}

Rational alpha_permanent_bruteforce(const RealMatrix& a, const Rational& alpha, CostPolicy policy) {
  const std::size_t n = a.size();
  require(n >= 1, ErrorCode::dimension, "matrix must be nonempty");
  check_bruteforce_size(n, policy);
  // Products grouped by cycle count, then combined with powers of alpha.
  std::vector<Rational> by_cycles(n + 1);
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  Rational product;
  do {
    product = 1;
    bool zero = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& entry = a.at(i, map[i]);
      if (sgn(entry) == 0) {
        zero = true;
        break;
      }
      product *= entry;
    }
    if (!zero) by_cycles[cycles_of(map)] += product;
  } while (std::next_permutation(map.begin(), map.end()));

  Rational total = 0;
  Rational alpha_power = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    total += by_cycles[k] * alpha_power;
    alpha_power *= alpha;
  }
  return total;
}

Rational alpha_permanent_bruteforce(const DirectedGraph& g, const Rational& alpha, CostPolicy policy) {
  return alpha_permanent_bruteforce(RealMatrix::from_graph(g), alpha, policy);
}

CyclePolynomial::CyclePolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    require(sgn(c) >= 0, ErrorCode::invalid_argument, "cycle polynomial coefficients are counts");
}

const BigInt& CyclePolynomial::coefficient(std::size_t k) const {
  static const BigInt zero = 0;
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

Rational CyclePolynomial::evaluate(const Rational& alpha) const {
  // Horner from the top coefficient.
  Rational value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value *= alpha;
    value += Rational(*it);
  }
  return value;
}

BigInt CyclePolynomial::total() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

bool CyclePolynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

CyclePolynomial cycle_polynomial(const DirectedGraph& g, const DpOptions& options) {
  const std::size_t n = g.size();
  require(n <= kCycleDpHardMaxSize, ErrorCode::capacity,
          "cycle polynomial DP is limited to n <= " + std::to_string(kCycleDpHardMaxSize));
  if (options.policy == CostPolicy::enforce)
    require(n <= kCycleDpMaxSize, ErrorCode::capacity,
            "cycle polynomial DP is limited to n <= " + std::to_string(kCycleDpMaxSize) +
                " unless the cost is explicitly accepted");

  const std::size_t subsets = std::size_t{1} << n;
  const unsigned threads = std::max(1u, options.threads);

  // paths[S*n + e]: simple paths that start at min(S), visit exactly S and
  // end at e. A path over S extends a path over S \ {e}, which has the same
  // minimum, so increasing numeric order is a valid evaluation order.
  std::vector<std::uint64_t> paths(subsets * n, 0);
  std::vector<std::uint64_t> cycles(subsets, 0);
  std::vector<std::uint32_t> into(n);
  for (std::size_t v = 0; v < n; ++v) into[v] = g.column(v);
  for (std::size_t v = 0; v < n; ++v) {
    paths[(std::size_t{1} << v) * n + v] = 1;
    cycles[std::size_t{1} << v] = g.has_edge(v, v) ? 1 : 0;
  }
  for (std::size_t s = 1; s < subsets; ++s) {
    if (std::has_single_bit(s)) continue;
    const std::size_t anchor = static_cast<std::size_t>(std::countr_zero(s));
    std::uint64_t closed = 0;
    for (std::size_t rest = s & (s - 1); rest; rest &= rest - 1) {
      const std::size_t e = static_cast<std::size_t>(std::countr_zero(rest));
      const std::size_t prev = s ^ (std::size_t{1} << e);
      const std::uint32_t into_e = into[e];
      std::uint64_t count = 0;
      for (std::size_t p = prev; p; p &= p - 1) {
        const std::size_t u = static_cast<std::size_t>(std::countr_zero(p));
        if ((into_e >> u) & 1u) count += paths[prev * n + u];
      }
      paths[s * n + e] = count;
      if (g.has_edge(e, anchor)) closed += count;
    }
    cycles[s] = closed;
  }
  paths.clear();
  paths.shrink_to_fit();

  // covers[S*(n+1) + k]: cycle covers of S with k cycles. The cycle through
  // the smallest vertex of S is split off first, so every cover is counted
  // exactly once.
  const std::size_t stride = n + 1;
  std::vector<std::uint64_t> covers(subsets * stride, 0);
  covers[0] = 1;

  std::vector<std::vector<std::uint32_t>> layers(n + 1);
  for (std::size_t s = 1; s < subsets; ++s) layers[std::popcount(s)].push_back(static_cast<std::uint32_t>(s));

  for (std::size_t size = 1; size <= n; ++size) {
    const auto& layer = layers[size];
    parallel_chunks(layer.size(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t idx = lo; idx < hi; ++idx) {
        const std::size_t s = layer[idx];
        const std::size_t low = s & (~s + 1);
        const std::size_t rest = s ^ low;
        std::uint64_t* out = &covers[s * stride];
        for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
          const std::size_t block = sub | low;
          const std::uint64_t c = cycles[block];
          if (c != 0) {
            const std::size_t remaining = s ^ block;
            const std::uint64_t* src = &covers[remaining * stride];
            const std::size_t max_k = static_cast<std::size_t>(std::popcount(remaining));
            for (std::size_t k = 0; k <= max_k; ++k)
              if (src[k]) out[k + 1] += c * src[k];
          }
          if (sub == 0) break;
        }
      }
    });
  }

  std::vector<BigInt> coeffs(n + 1);
  const std::uint64_t* full = &covers[(subsets - 1) * stride];
  for (std::size_t k = 0; k <= n; ++k) coeffs[k] = BigInt(static_cast<unsigned long>(full[k]));
  return CyclePolynomial(std::move(coeffs));
}

CyclePolynomial cycle_polynomial_bruteforce(const DirectedGraph& g) {
  const std::size_t n = g.size();
  check_bruteforce_size(n, CostPolicy::enforce);
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  do {
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) inside = g.has_edge(i, map[i]);
    if (inside) ++counts[cycles_of(map)];
  } while (std::next_permutation(map.begin(), map.end()));
  std::vector<BigInt> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[k] = BigInt(static_cast<unsigned long>(counts[k]));
  return CyclePolynomial(std::move(coeffs));
}

}  // namespace permgraph
