#pragma once

#include <string>

#include "permgraph/exact.hpp"
#include "permgraph/graphs.hpp"
#include "permgraph/io.hpp"
#include "support/oracles.hpp"

inline oracle::Matrix to_matrix(const permgraph::DirectedGraph& g) {
  oracle::Matrix m(g.size(), std::vector<int>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = g.has_edge(i, j);
  return m;
}

inline permgraph::DirectedGraph from_matrix(const oracle::Matrix& m) {
  permgraph::DirectedGraph g(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j]) g = g.with_edge(i, j);
  return g;
}

inline permgraph::DirectedGraph random_graph(std::size_t n, double density, std::mt19937_64& gen) {
  return from_matrix(oracle::random_matrix(n, density, gen));
}

inline std::string fixture(const std::string& name) { return std::string(PG_FIXTURES_DIR) + "/" + name; }

inline permgraph::Rational q(const char* text) { return permgraph::parse_rational(text); }

#define CHECK_ERROR_CODE(expr, expected_code)                         \
  do {                                                                \
    bool thrown_ = false;                                             \
    try {                                                             \
      (void)(expr);                                                   \
    } catch (const permgraph::Error& e_) {                            \
      thrown_ = true;                                                 \
      CHECK(e_.code() == (expected_code));                            \
    }                                                                 \
    CHECK_MESSAGE(thrown_, "expected a permgraph::Error from " #expr); \
  } while (0)
