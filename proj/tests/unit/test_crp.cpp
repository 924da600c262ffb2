#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "permgraph/crp.hpp"
#include "permgraph/projection.hpp"
#include "support/chi_square.hpp"

using namespace permgraph;

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(2, 3) == 24);
  CHECK(rising_factorial(q("7/3"), 0) == 1);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(rising_factorial(1, n) == Rational(factorial(n)));
  CHECK(rising_factorial(q("1/2"), 2) == Rational(3, 4));
}

TEST_CASE("Ewens pmf") {
  for_each_permutation(4, [](const Permutation& s) { CHECK(ewens_pmf(s, 1) == Rational(1, 24)); });
  CHECK(ewens_pmf(Permutation::identity(3), 2) == Rational(1, 3));
  for (const char* a : {"1/2", "1", "7/3"}) {
    Rational total = 0;
    for_each_permutation(5, [&](const Permutation& s) { total += ewens_pmf(s, q(a)); });
    CHECK(total == 1);
  }
  CHECK_ERROR_CODE(ewens_pmf(Permutation::identity(2), 0), ErrorCode::domain);
}

TEST_CASE("partition pmf") {
  CHECK(crp_partition_pmf(parse_partition("{1 2}"), 1) == Rational(1, 2));
  CHECK(crp_partition_pmf(parse_partition("{1}{2}"), 1) == Rational(1, 2));
  Rational total = 0;
  std::size_t count = 0;
  for_each_partition(4, [&](const Partition& pi) {
    total += crp_partition_pmf(pi, 3);
    ++count;
  });
  CHECK(count == 15);
  CHECK(total == 1);
}

TEST_CASE("partition pmf is the pushforward of the permutation pmf") {
  for (const char* a : {"1/2", "3"}) {
    std::map<Partition, Rational> pushed;
    for_each_permutation(5, [&](const Permutation& s) { pushed[cycles_to_partition(s)] += ewens_pmf(s, q(a)); });
    CHECK(pushed.size() == 52);
    for (const auto& [pi, mass] : pushed) CHECK(mass == crp_partition_pmf(pi, q(a)));
  }
}

TEST_CASE("dr consistency of the Ewens family") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const char* a : {"1/2", "1", "3", "7/3"}) {
      const auto r = crp_consistency_check(n, q(a));
      CHECK(r.pass);
      CHECK(r.census_ok);
      CHECK(r.checked == static_cast<std::size_t>(factorial(n).get_ui()));
    }
  }
}

TEST_CASE("subselection breaks the Ewens family") {
  const auto r = crp_consistency_check(3, 1, ProjectionOp::subselection);
  CHECK_FALSE(r.pass);
  REQUIRE(r.first_violation.has_value());
  CHECK(r.expected != r.observed);
  CHECK_ERROR_CODE(crp_consistency_check(7, 1), ErrorCode::capacity);
}

TEST_CASE("preimage census of a permutation") {
  for_each_permutation(4, [](const Permutation& s) {
    const auto pre = permutation_dr_preimages(s);
    REQUIRE(pre.size() == 5);
    std::size_t gaining = 0;
    for (const auto& p : pre) {
      CHECK(delete_and_repair(permutation_to_graph(p)) == permutation_to_graph(s));
      if (p.cycle_count() == s.cycle_count() + 1) ++gaining;
      else CHECK(p.cycle_count() == s.cycle_count());
    }
    CHECK(gaining == 1);
    // n alpha^k + alpha^{k+1} over the next rising factorial
    const Rational a(5, 2);
    Rational mass = 0;
    for (const auto& p : pre) mass += ewens_pmf(p, a);
    CHECK(mass == ewens_pmf(s, a));
  });
}

TEST_CASE("partition form is dr consistent") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const char* a : {"1/2", "3"}) CHECK(crp_partition_consistency_check(n, q(a)));
}

TEST_CASE("Ewens sampler") {
  CrpSampler one({1, q("7/3")}, 3);
  for (int i = 0; i < 20; ++i) CHECK(one.draw_permutation() == Permutation::identity(1));

  CrpSampler a({7, q("1/2")}, 99), b({7, q("1/2")}, 99);
  for (int i = 0; i < 50; ++i) CHECK(a.draw_permutation() == b.draw_permutation());
}

TEST_CASE("Ewens sampler marginal passes chi-square at n = 4") {
  const auto perms = all_permutations(4);
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  for (const char* a : {"1/2", "7/3"}) {
    CrpSampler sampler({4, q(a)}, 2024);
    std::vector<std::uint64_t> counts(perms.size(), 0);
    for (int i = 0; i < 1000000; ++i) ++counts[index.at(sampler.draw_permutation())];
    std::vector<double> probs;
    for (const auto& s : perms) probs.push_back(ewens_pmf(s, q(a)).get_d());
    const auto r = oracle::chi_square(counts, probs);
    CHECK_MESSAGE(r.p_value > 1e-3, "chi2 = " << r.statistic << " p = " << r.p_value);
  }
}

TEST_CASE("uniform permutations") {
  Rng rng(8);
  std::map<Permutation, std::uint64_t> hits;
  for (int i = 0; i < 60000; ++i) ++hits[sample_uniform_permutation(3, rng)];
  CHECK(hits.size() == 6);
  std::vector<std::uint64_t> counts;
  for (auto& [p, c] : hits) counts.push_back(c);
  CHECK(oracle::chi_square(counts, std::vector<double>(6, 1.0 / 6)).p_value > 1e-3);
}
