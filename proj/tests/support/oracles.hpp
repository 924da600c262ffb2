#pragma once

// Reference implementations used only by tests. None of them share code
// with the library kernels they check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix from_strings(const std::vector<std::string>& rows) {
  Matrix m(rows.size(), std::vector<int>(rows.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m[i][j] = rows[i][j] == '1';
  return m;
}

inline std::size_t cycles_of(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(perm[i])) seen[i] = 1;
  }
  return count;
}

/// c_k by walking S_n with std::next_permutation.
inline std::vector<mpz_class> cycle_counts(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<mpz_class> c(n + 1, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) inside = m[i][perm[i]] != 0;
    if (inside) c[cycles_of(perm)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

inline mpq_class alpha_permanent(const Matrix& m, const mpq_class& alpha) {
  mpq_class total = 0, power = 1;
  const auto c = cycle_counts(m);
  for (std::size_t k = 1; k < c.size(); ++k) {
    power *= alpha;
    total += power * mpq_class(c[k]);
  }
  if (m.empty()) return 1;
  return total;
}

/// Ryser inclusion-exclusion for the ordinary permanent.
inline mpz_class ryser(const Matrix& m) {
  const std::size_t n = m.size();
  mpz_class total = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    mpz_class prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) {
      long row = 0;
      for (std::size_t j = 0; j < n; ++j)
        if ((s >> j) & 1) row += m[i][j];
      prod *= row;
    }
    const int bits = __builtin_popcountll(s);
    if ((n - static_cast<std::size_t>(bits)) % 2) total -= prod;
    else total += prod;
  }
  return total;
}

/// Determinant by fraction-exact Gaussian elimination.
inline mpq_class determinant(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

/// Delete the last vertex v, adding i -> j whenever i -> v -> j.
inline Matrix delete_and_repair(const Matrix& g) {
  const std::size_t n = g.size() - 1;
  Matrix h(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = g[i][j] || (g[i][n] && g[n][j]);
  return h;
}

inline Matrix random_matrix(std::size_t n, double density, std::mt19937_64& gen) {
  std::bernoulli_distribution edge(density);
  Matrix m(n, std::vector<int>(n));
  for (auto& row : m)
    for (auto& x : row) x = edge(gen);
  return m;
}

/// Patterns over {0,1,*}; each block is a size line followed by rows.
inline std::vector<std::vector<std::string>> read_star_patterns(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<std::string>> patterns;
  std::string line;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
    if (line.empty()) continue;
    if (expected == 0) {
      expected = std::stoul(line);
      patterns.emplace_back();
      continue;
    }
    patterns.back().push_back(line);
    --expected;
  }
  return patterns;
}

inline std::vector<Matrix> expand_stars(const std::vector<std::string>& pattern) {
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    for (std::size_t j = 0; j < pattern[i].size(); ++j)
      if (pattern[i][j] == '*') free.emplace_back(i, j);
  std::vector<Matrix> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    Matrix m = from_strings(pattern);
    for (std::size_t f = 0; f < free.size(); ++f) m[free[f].first][free[f].second] = (bits >> f) & 1;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace oracle
