#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "permgraph/crp.hpp"
#include "permgraph/pgm.hpp"

using namespace permgraph;

namespace {

std::vector<PgmParams> grid(std::size_t n) {
  std::vector<PgmParams> out;
  for (const char* a : {"1/2", "1", "3"})
    for (const char* b : {"1/3", "1", "2"}) out.push_back({n, q(a), q(b)});
  return out;
}

}  // namespace

TEST_CASE("normalizer closed form examples") {
  CHECK(normalizer_closed_form({1, 1, 1}) == 1);
  CHECK(normalizer_closed_form({2, 1, 1}) == 8);
  CHECK(normalizer_closed_form({3, 2, q("1/2")}) == Rational(2187, 64));
  CHECK(normalizer_bruteforce({3, 2, q("1/2")}, SupportFamily::all) == Rational(2187, 64));
}

TEST_CASE("normalizer closed form equals enumeration") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : grid(n)) CHECK(normalizer_closed_form(p) == normalizer_bruteforce(p, SupportFamily::all));
  const PgmParams p4{4, q("7/3"), q("2/5")};
  CHECK(normalizer_closed_form(p4) == normalizer_bruteforce(p4, SupportFamily::all));
}

TEST_CASE("restricted normalizers") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const char* a : {"1/2", "1", "3"})
      CHECK(normalizer_bruteforce({n, q(a), 1}, SupportFamily::permutations) == rising_factorial(q(a), n));
  // partition graphs of [3] at alpha = beta = 1: I_3 gives 1, each of the
  // three 2+1 splits gives 2, the single block J_3 gives 3! = 6
  CHECK(normalizer_bruteforce({3, 1, 1}, SupportFamily::partitions) == 13);
  CHECK_ERROR_CODE(normalizer_bruteforce({5, 1, 1}, SupportFamily::all), ErrorCode::capacity);
}

TEST_CASE("pmf sums to one") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& p : grid(n)) {
      Rational total = 0;
      for (const auto& g : enumerate_graphs(n)) total += pmf(g, p);
      CHECK(total == 1);
    }
  }
  for (auto family : {SupportFamily::permutations, SupportFamily::partitions, SupportFamily::single_cycle,
                      SupportFamily::fixed_point_free}) {
    const PgmParams p{4, q("3"), q("1/3")};
    Rational total = 0;
    for_each_member(family, 4, [&](const DirectedGraph& g) { total += pmf(g, p, family); });
    CHECK(total == 1);
  }
}

TEST_CASE("pmf edge cases") {
  const PgmParams p{3, 1, 1};
  CHECK(pmf(DirectedGraph(3), p) == 0);
  // per_1(J_3) = 6 against z = 3! * 2^6
  CHECK(pmf(DirectedGraph::complete(3), p) == Rational(1, 64));
  CHECK(pmf(DirectedGraph::complete(3), p, SupportFamily::permutations) == 0);
  CHECK_ERROR_CODE(pmf(DirectedGraph(2), p), ErrorCode::dimension);
  CHECK_ERROR_CODE(pmf(DirectedGraph(3), {3, 0, 1}), ErrorCode::domain);
  CHECK_ERROR_CODE(pmf(DirectedGraph(3), {3, 1, -1}), ErrorCode::domain);
}

TEST_CASE("degree law") {
  CHECK(degree_pmf(2, 1, 0) == Rational(1, 2));
  CHECK(degree_pmf(4, 1, 2) == Rational(3, 8));
  CHECK_ERROR_CODE(degree_pmf(3, 1, 3), ErrorCode::invalid_argument);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& p : grid(n)) {
      std::vector<Rational> marginal(n, 0);
      for (const auto& g : enumerate_graphs(n))
        if (g.out_degree(0) > 0) marginal[g.out_degree(0) - 1] += pmf(g, p);
      for (std::size_t k = 0; k < n; ++k) CHECK(marginal[k] == degree_pmf(n, p.beta, k));
    }
  }
}

TEST_CASE("expected edge count") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& p : grid(n)) {
      Rational mean = 0;
      for (const auto& g : enumerate_graphs(n)) mean += pmf(g, p) * g.edge_count();
      CHECK(mean == expected_edges(n, p.beta));
    }
  }
  const Rational ratio = expected_edges(100, 1) / (Rational(100 * 100) / 2);
  CHECK(std::abs(ratio.get_d() - 1.0) < 0.02);
}

TEST_CASE("sampler basics") {
  PgmSampler one({1, q("1/2"), q("1/3")}, 5);
  for (int i = 0; i < 50; ++i) CHECK(one.draw() == DirectedGraph::identity(1));

  PgmSampler a({6, 2, 1}, 42), b({6, 2, 1}, 42);
  for (int i = 0; i < 100; ++i) {
    const auto g = a.draw();
    CHECK(g == b.draw());
    CHECK(has_permutation_subgraph(g));
  }
}

TEST_CASE("sampled degree frequencies are close to the exact law") {
  PgmSampler s({5, 1, 3}, 7);
  std::vector<double> counts(5, 0);
  const int draws = 40000;
  for (int i = 0; i < draws; ++i) counts[s.draw().out_degree(0) - 1] += 1;
  for (std::size_t k = 0; k < 5; ++k)
    CHECK(std::abs(counts[k] / draws - degree_pmf(5, 3, k).get_d()) < 0.01);
}

TEST_CASE("exchangeability") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : grid(n)) CHECK(exchangeability_check(p, 6, 19));
  // beta^{#G} 2^{G_11} singles out vertex 1
  GraphWeight corrupted = [](const DirectedGraph& g) {
    return power(Rational(1, 2), g.edge_count()) * (g.has_edge(0, 0) ? 2 : 1);
  };
  CHECK_FALSE(exchangeability_check(3, corrupted, 6, 19));
  GraphWeight plain = [](const DirectedGraph& g) { return power(Rational(1, 2), g.edge_count()); };
  CHECK(exchangeability_check(3, plain, 6, 19));
}

TEST_CASE("support families are conjugation closed and carry permutations") {
  Rng rng(12);
  for (auto family : {SupportFamily::all, SupportFamily::permutations, SupportFamily::partitions,
                      SupportFamily::fixed_point_free, SupportFamily::single_cycle}) {
    for (std::size_t n = 2; n <= (family == SupportFamily::all ? 3u : 5u); ++n) {
      std::set<DirectedGraph> members;
      for_each_member(family, n, [&](const DirectedGraph& g) { members.insert(g); });
      REQUIRE_FALSE(members.empty());
      bool some_permutation = false;
      for (const auto& g : members) {
        CHECK(family_contains(family, g));
        some_permutation = some_permutation || has_permutation_subgraph(g);
        for (int t = 0; t < 3; ++t) CHECK(members.count(conjugate(g, sample_uniform_permutation(n, rng))) == 1);
      }
      CHECK(some_permutation);
    }
  }
  CHECK(parse_support_family("fixed-point-free") == SupportFamily::fixed_point_free);
  CHECK_ERROR_CODE(parse_support_family("trees"), ErrorCode::invalid_argument);
}

TEST_CASE("total variation to Erdos-Renyi") {
  // at n = 1 the model is the loop with certainty, ER has it w.p. beta/(1+beta)
  CHECK(total_variation_to_erdos_renyi({1, 3, 2}) == Rational(1, 3));
  const Rational tv = total_variation_to_erdos_renyi({3, 1, 1});
  CHECK(tv > 0);
  CHECK(tv < 1);
  CHECK_ERROR_CODE(total_variation_to_erdos_renyi({5, 1, 1}), ErrorCode::capacity);
}

TEST_CASE("dense draws beyond 32 vertices") {
  PgmSampler small_a({5, q("1/2"), 2}, 77), small_b({5, q("1/2"), 2}, 77);
  for (int i = 0; i < 200; ++i) CHECK(small_a.draw() == small_b.draw_dense().to_graph());

  PgmSampler big({50, 1, 1}, 3);
  CHECK_ERROR_CODE(big.draw(), ErrorCode::capacity);
  double edges = 0;
  for (int i = 0; i < 400; ++i) {
    const DenseGraph g = big.draw_dense();
    REQUIRE(g.size() == 50);
    for (std::size_t v = 0; v < 50; ++v) CHECK(g.out_degree(v) >= 1);
    edges += static_cast<double>(g.edge_count());
  }
  CHECK(std::abs(edges / 400 - 1275.0) < 5.0);
  CHECK_ERROR_CODE(PgmSampler({5000, 1, 1}, 1), ErrorCode::dimension);
  CHECK_ERROR_CODE(DenseGraph(40).to_graph(), ErrorCode::capacity);
}
