#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "permgraph/consistency.hpp"
#include "permgraph/crp.hpp"
#include "permgraph/projection.hpp"

using namespace permgraph;

namespace {

std::set<DirectedGraph> as_set(const PreimageSet& s) { return {s.begin(), s.end()}; }

/// Every 5-vertex graph, projected with plain bit arithmetic.
std::set<DirectedGraph> scan_all_five_graphs(const DirectedGraph& base) {
  std::set<DirectedGraph> hits;
  std::array<std::uint32_t, 4> target{};
  for (std::size_t i = 0; i < 4; ++i) target[i] = base.row(i);
  for (std::uint32_t code = 0; code < (1u << 25); ++code) {
    std::array<std::uint32_t, 5> rows{};
    for (std::size_t i = 0; i < 5; ++i) rows[i] = (code >> (5 * i)) & 0x1F;
    bool match = true;
    for (std::size_t i = 0; i < 4 && match; ++i) {
      std::uint32_t r = rows[i] & 0xF;
      if (rows[i] & 0x10) r |= rows[4] & 0xF;
      match = r == target[i];
    }
    if (match) hits.insert(DirectedGraph::from_rows(rows));
  }
  return hits;
}

}  // namespace

TEST_CASE("subselection") {
  const auto c = read_graph_file(fixture("cycle123.txt"));
  CHECK(subselect(c) == parse_graph("2\n01\n00\n"));
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(subselect(DirectedGraph::identity(n)) == DirectedGraph::identity(n - 1));
    CHECK(subselect(DirectedGraph(n)) == DirectedGraph(n - 1));
  }
  CHECK_ERROR_CODE(subselect(DirectedGraph(1)), ErrorCode::underflow);
}

TEST_CASE("delete and repair") {
  const auto c = read_graph_file(fixture("cycle123.txt"));
  CHECK(delete_and_repair(c) == parse_graph("2\n01\n10\n"));
  for (std::size_t n = 2; n <= 6; ++n) CHECK(delete_and_repair(DirectedGraph::identity(n)) == DirectedGraph::identity(n - 1));
  // a fixed last point disappears without repairs
  const auto sigma = parse_permutation("(1 3 2)(4)");
  CHECK(delete_and_repair(permutation_to_graph(sigma)) == permutation_to_graph(parse_permutation("(1 3 2)")));
  CHECK_ERROR_CODE(delete_and_repair(DirectedGraph(1)), ErrorCode::underflow);
  CHECK(parse_projection_op("dr") == ProjectionOp::delete_and_repair);
  CHECK_ERROR_CODE(parse_projection_op("xx"), ErrorCode::invalid_argument);
}

TEST_CASE("delete and repair matches the dense oracle") {
  std::mt19937_64 gen(17);
  for (int t = 0; t < 300; ++t) {
    const auto m = oracle::random_matrix(2 + t % 9, 0.4, gen);
    CHECK(to_matrix(delete_and_repair(from_matrix(m))) == oracle::delete_and_repair(m));
  }
}

TEST_CASE("dr commutes with relabellings that fix the last vertex") {
  std::mt19937_64 gen(23);
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 5;
    const auto g = random_graph(n, 0.5, gen);
    const auto small = sample_uniform_permutation(n - 1, rng);
    std::vector<std::uint32_t> images(small.images().begin(), small.images().end());
    images.push_back(static_cast<std::uint32_t>(n - 1));
    const Permutation tau(images);
    CHECK(delete_and_repair(conjugate(g, tau)) == conjugate(delete_and_repair(g), small));
  }
}

TEST_CASE("project_vertex") {
  const auto g = read_graph_file(fixture("g1.txt"));
  CHECK(project_vertex(g, 3, ProjectionOp::delete_and_repair) == delete_and_repair(g));
  const auto c = read_graph_file(fixture("cycle123.txt"));
  // removing vertex 2 of 1->2->3->1 repairs 1->3
  CHECK(project_vertex(c, 1, ProjectionOp::delete_and_repair) == parse_graph("2\n01\n10\n"));
  CHECK_ERROR_CODE(project_vertex(c, 3, ProjectionOp::subselection), ErrorCode::dimension);
}

TEST_CASE("preimage counts") {
  CHECK(preimages_ss(DirectedGraph::identity(1)).size() == 8);
  CHECK(count_preimages(DirectedGraph::identity(1), ProjectionOp::subselection) == 8);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(count_preimages(DirectedGraph(n), ProjectionOp::subselection) == (std::uint64_t{1} << (2 * n + 1)));

  const auto g1 = read_graph_file(fixture("g1.txt"));
  const auto g2 = read_graph_file(fixture("g2.txt"));
  CHECK(count_preimages(g1, ProjectionOp::delete_and_repair) == 170);
  CHECK(count_preimages(g2, ProjectionOp::delete_and_repair) == 194);
  CHECK(count_preimages(g1, ProjectionOp::delete_and_repair, PreimageFilter::positive_degrees) == 139);
  CHECK(count_preimages(g2, ProjectionOp::delete_and_repair, PreimageFilter::positive_degrees) == 163);
  // four of the printed graphs in each family contain no permutation
  CHECK(count_preimages(g1, ProjectionOp::delete_and_repair, PreimageFilter::contains_permutation) == 135);
  CHECK(count_preimages(g2, ProjectionOp::delete_and_repair, PreimageFilter::contains_permutation) == 159);
}

TEST_CASE("every preimage projects back, up to base size 4") {
  std::mt19937_64 gen(4);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      for (auto op : {ProjectionOp::subselection, ProjectionOp::delete_and_repair}) {
        const auto pre = preimages(g, op);
        CHECK(pre.size() == count_preimages(g, op));
        CHECK(as_set(pre).size() == pre.size());
        for (const auto& h : pre) CHECK(project(h, op) == g);
      }
    }
  }
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(4, 0.6, gen);
    for (auto op : {ProjectionOp::subselection, ProjectionOp::delete_and_repair})
      for (const auto& h : preimages(g, op)) CHECK(project(h, op) == g);
  }
}

TEST_CASE("preimages are exactly the graphs that project onto the base, at level 3") {
  for (const auto& g : enumerate_graphs(2)) {
    for (auto op : {ProjectionOp::subselection, ProjectionOp::delete_and_repair}) {
      std::set<DirectedGraph> direct;
      for (const auto& h : enumerate_graphs(3))
        if (project(h, op) == g) direct.insert(h);
      CHECK(as_set(preimages(g, op)) == direct);
    }
  }
}

TEST_CASE("dr preimages of the witness graphs agree with a scan over all 2^25 graphs") {
  for (const char* name : {"g1.txt", "g2.txt"}) {
    const auto base = read_graph_file(fixture(name));
    const auto scanned = scan_all_five_graphs(base);
    CHECK(as_set(preimages_dr(base)) == scanned);
    std::set<DirectedGraph> with_perm, with_degrees;
    for (const auto& h : scanned) {
      if (oracle::ryser(to_matrix(h)) > 0) with_perm.insert(h);
      bool ok = true;
      for (std::size_t v = 0; v < 5; ++v) ok = ok && h.row(v) != 0 && h.column(v) != 0;
      if (ok) with_degrees.insert(h);
    }
    CHECK(as_set(preimages_dr(base, PreimageFilter::contains_permutation)) == with_perm);
    CHECK(as_set(preimages_dr(base, PreimageFilter::positive_degrees)) == with_degrees);
  }
}

TEST_CASE("the printed star patterns expand to the nonempty-row-and-column preimages") {
  for (auto [pattern, name, count] : {std::tuple{"g1_star.txt", "g1.txt", 139}, std::tuple{"g2_star.txt", "g2.txt", 163}}) {
    const auto base = read_graph_file(fixture(name));
    std::set<DirectedGraph> expanded;
    std::size_t with_multiplicity = 0;
    for (const auto& p : oracle::read_star_patterns(fixture(pattern))) {
      for (const auto& m : oracle::expand_stars(p)) {
        expanded.insert(from_matrix(m));
        ++with_multiplicity;
      }
    }
    CHECK(expanded.size() == static_cast<std::size_t>(count));
    // one graph is listed under two patterns
    CHECK(with_multiplicity == expanded.size() + 1);
    CHECK(expanded == as_set(preimages_dr(base, PreimageFilter::positive_degrees)));
    std::size_t lacking = 0;
    for (const auto& h : expanded) lacking += !has_permutation_subgraph(h);
    CHECK(lacking == 4);
  }
}

TEST_CASE("canonical order of the preimage stream") {
  const auto g = read_graph_file(fixture("g1.txt"));
  const auto a = preimages_dr(g);
  const auto b = preimages_dr(g);
  CHECK(a.members() == b.members());
  std::vector<DirectedGraph> visited;
  for_each_preimage(g, ProjectionOp::delete_and_repair, [&](const DirectedGraph& h) { visited.push_back(h); });
  CHECK(visited == a.members());
  // corner, last column and last row vary slowest
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto key = [](const DirectedGraph& h) { return std::tuple{h.row(4) & 0xF, h.column(4) & 0xF, h.has_edge(4, 4)}; };
    CHECK(key(a.members()[i - 1]) <= key(a.members()[i]));
  }
}

TEST_CASE("preimage limits") {
  CHECK_ERROR_CODE(preimages_dr(DirectedGraph::complete(7)), ErrorCode::capacity);
}
