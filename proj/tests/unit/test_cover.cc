#include <doctest.h>

#include <algorithm>
#include <random>

#include "brute_force.h"
#include "signlab/cover.h"
#include "signlab/error.h"
#include "signlab/generators.h"
#include "signlab/oracles.h"

using namespace signlab;

namespace {

LabeledInstance balanced(int n, int m, std::uint64_t seed) {
  return gen_two_cluster_labeling(make_random_connected_graph(n, m, seed),
                                  random_bipartition(n, seed ^ 0xabc));
}

// Star at 0 over nodes 1..leaves, plus edges from node 1 to `cut` other leaves.
SignedGraph star_with_fan(int leaves, int cut) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v, 1});
  for (int k = 0; k < cut; ++k) edges.push_back({1, 2 + k, 1});
  return build_graph(leaves + 1, edges);
}

std::vector<char> all_alive(int n) { return std::vector<char>(n, 1); }

int occurrences(const std::vector<int>& path, int e) {
  return static_cast<int>(std::count(path.begin(), path.end(), e));
}

}  // namespace

TEST_CASE("tree_partition examples") {
  SUBCASE("unreachable threshold returns the whole tree") {
    const LabeledInstance b = balanced(15, 40, 1);
    const RootedSpanningForest t = bfs_spanning_forest(b.graph);
    const auto alive = all_alive(15);
    const int j = tree_partition(b.graph, t, alive, 0, 41.0);
    CHECK(j == 0);
    CHECK_FALSE(check_tree_partition(b.graph, t, alive, 0, 41.0, j).has_value());
  }
  SUBCASE("star without extra edges") {
    const SignedGraph g = make_star_graph(6);
    const RootedSpanningForest t = bfs_spanning_forest(g);
    const auto alive = all_alive(6);
    for (double theta : {1.0, 2.0, 5.0}) CHECK(tree_partition(g, t, alive, 0, theta) == 0);
    for (int v = 0; v < 6; ++v) CHECK(subtree_cut_size(g, t, alive, v) == 0);
  }
  SUBCASE("path tree inside a 4-cycle") {
    const SignedGraph c4 = make_cycle_graph(4);
    const RootedSpanningForest t(c4, {kNoParent, 0, 1, 2});
    const auto alive = all_alive(4);
    const int j = tree_partition(c4, t, alive, 0, 1.0);
    CHECK(j == 3);
    CHECK(subtree_cut_size(c4, t, alive, 3) == 1);
    CHECK_FALSE(check_tree_partition(c4, t, alive, 0, 1.0, j).has_value());
    // With theta 1/2 the leaf already qualifies, so stopping at 1 breaks (i).
    CHECK(tree_partition(c4, t, alive, 0, 0.5) == 3);
    CHECK(check_tree_partition(c4, t, alive, 0, 0.5, 1).has_value());
  }
  SUBCASE("random trees, shrinking alive sets") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 60; ++k) {
      const LabeledInstance b = balanced(25, 70, rng());
      const RootedSpanningForest t = wilson_random_spanning_tree(b.graph, rng());
      std::vector<char> alive = all_alive(25);
      const double theta = 1.0 + static_cast<double>(rng() % 6);
      int remaining = 25;
      while (remaining > 0) {
        const int j = tree_partition(b.graph, t, alive, 0, theta);
        CHECK_FALSE(check_tree_partition(b.graph, t, alive, 0, theta, j).has_value());
        for (int u : alive_subtree(t, alive, j)) {
          alive[u] = 0;
          --remaining;
        }
      }
    }
  }
}

TEST_CASE("edge_partition") {
  auto sizes = [](const std::vector<Sheaf>& s) {
    std::vector<int> out;
    for (const Sheaf& x : s) out.push_back(static_cast<int>(x.edges.size()));
    return out;
  };
  SUBCASE("eight cut edges, rho 3") {
    const SignedGraph g = star_with_fan(9, 8);
    const RootedSpanningForest t = bfs_spanning_forest(g);
    const auto alive = all_alive(10);
    CHECK(subtree_cut_size(g, t, alive, 1) == 8);
    const auto sheaves = edge_partition(g, t, alive, 0, 1, 3, SheafPick::kFirst);
    CHECK(sizes(sheaves) == std::vector<int>{4, 4});
    for (const Sheaf& s : sheaves) CHECK(s.queried == s.edges.front());
    // Visit order follows the outside endpoints 2, 3, ..., 9.
    std::vector<int> outside;
    for (const Sheaf& s : sheaves) {
      for (int e : s.edges) outside.push_back(g.other(e, 1));
    }
    CHECK(outside == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9});
  }
  SUBCASE("nine cut edges, rho 3") {
    const SignedGraph g = star_with_fan(10, 9);
    const RootedSpanningForest t = bfs_spanning_forest(g);
    CHECK(sizes(edge_partition(g, t, all_alive(11), 0, 1, 3, SheafPick::kFirst)) ==
          std::vector<int>{4, 5});
  }
  SUBCASE("remainder can reach 2 rho + 1") {
    const SignedGraph g = star_with_fan(12, 11);
    const RootedSpanningForest t = bfs_spanning_forest(g);
    CHECK(sizes(edge_partition(g, t, all_alive(13), 0, 1, 3, SheafPick::kFirst)) ==
          std::vector<int>{4, 7});
  }
  SUBCASE("empty and undersized cuts") {
    const SignedGraph g0 = star_with_fan(5, 0);
    const RootedSpanningForest t0 = bfs_spanning_forest(g0);
    CHECK(edge_partition(g0, t0, all_alive(6), 0, 1, 3, SheafPick::kFirst).empty());
    const SignedGraph g2 = star_with_fan(5, 2);
    const RootedSpanningForest t2 = bfs_spanning_forest(g2);
    CHECK(sizes(edge_partition(g2, t2, all_alive(6), 0, 1, 3, SheafPick::kFirst)) ==
          std::vector<int>{2});
  }
  SUBCASE("random pick stays inside its sheaf") {
    const SignedGraph g = star_with_fan(14, 13);
    const RootedSpanningForest t = bfs_spanning_forest(g);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
      for (const Sheaf& s : edge_partition(g, t, all_alive(15), 0, 1, 2, SheafPick::kRandom, &rng)) {
        CHECK(std::find(s.edges.begin(), s.edges.end(), s.queried) != s.edges.end());
      }
    }
    CHECK_THROWS_AS(edge_partition(g, t, all_alive(15), 0, 1, 2, SheafPick::kRandom), ConfigError);
  }
  SUBCASE("bad arguments") {
    const SignedGraph g = star_with_fan(5, 2);
    const RootedSpanningForest t = bfs_spanning_forest(g);
    CHECK_THROWS_AS(edge_partition(g, t, all_alive(6), 0, 0, 3, SheafPick::kFirst), ConfigError);
    CHECK_THROWS_AS(edge_partition(g, t, all_alive(6), 0, 1, 0, SheafPick::kFirst), ConfigError);
  }
}

TEST_CASE("pick names") {
  CHECK(parse_sheaf_pick("first") == SheafPick::kFirst);
  CHECK(parse_sheaf_pick("random") == SheafPick::kRandom);
  CHECK_THROWS_AS(parse_sheaf_pick("best"), ConfigError);
}

TEST_CASE("scccc on a triangle") {
  const SignedGraph tri = build_graph(3, {{0, 1, 1}, {1, 2, -1}, {0, 2, -1}});
  ScccOptions opts;
  opts.rho = 1;
  opts.theta = 1.0;
  const CircuitCover cover = scccc(tri, opts);
  CHECK(cover.query_edges == std::vector<int>{0, 2});
  CHECK(cover.test_edges == std::vector<int>{1});
  REQUIRE(cover.circuits.size() == 1);
  CHECK(cover.circuits[0].kind == CircuitKind::kWithinSubtree);
  CHECK(predict_with_cover(cover, tri) == std::vector<int>{-1});
  CHECK(cover_stats(cover).max_load == 1);
  CHECK(verify_cover(cover, tri).ok);
}

TEST_CASE("scccc properties on random graphs") {
  std::mt19937_64 rng(59);
  for (int k = 0; k < 60; ++k) {
    const int n = 5 + static_cast<int>(rng() % 45);
    const int max_m = std::min(n * (n - 1) / 2, 6 * n);
    const int m = n - 1 + static_cast<int>(rng() % (max_m - n + 2));
    const LabeledInstance b = balanced(n, m, rng());
    ScccOptions opts;
    opts.rho = 1 + static_cast<int>(rng() % 4);
    if (k % 3 == 0) opts.theta = 1.0 + static_cast<double>(rng() % 5);
    opts.tree.strategy = k % 2 ? TreeStrategy::kWilson : TreeStrategy::kBfs;
    opts.tree.seed = rng();
    opts.pick = k % 4 == 0 ? SheafPick::kRandom : SheafPick::kFirst;
    opts.seed = rng();
    opts.verify_tree_partition = true;
    const CircuitCover cover = scccc(b.graph, opts);
    const CoverVerification v = verify_cover(cover, b.graph);
    CHECK_MESSAGE(v.ok, (v.violations.empty() ? "" : v.violations.front()));
    CHECK(count_mistakes(cover, predict_with_cover(cover, b.graph), b.graph) == 0);
    CHECK(cover.tree_partition_checks == cover.tree_partition_calls);
    const int excess = static_cast<int>(cover.query_edges.size()) - (n - 1);
    CHECK(static_cast<long long>(cover.test_edges.size()) >= static_cast<long long>(opts.rho) * excess);
    CHECK(cover.query_edges.size() + cover.test_edges.size() == static_cast<std::size_t>(m));
    // Determinism.
    const CircuitCover again = scccc(b.graph, opts);
    CHECK(again.query_edges == cover.query_edges);
    CHECK(again.load == cover.load);
  }
}

TEST_CASE("scccc ratio on the reference configuration") {
  const LabeledInstance b = balanced(30, 200, 61);
  ScccOptions opts;
  opts.rho = 2;
  opts.theta = std::ceil(std::sqrt(200.0 - 30 + 1));
  const CoverStats s = cover_stats(scccc(b.graph, opts));
  CHECK(s.ratio_excess >= 2.0);
}

TEST_CASE("scccc rejects bad input") {
  const SignedGraph g = build_graph(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(scccc(g, ScccOptions{}), Error);
  ScccOptions bad;
  bad.rho = 0;
  CHECK_THROWS_AS(scccc(make_cycle_graph(4), bad), ConfigError);
}

TEST_CASE("cccc") {
  SUBCASE("reference configuration") {
    const LabeledInstance b = balanced(100, 2000, 67);
    CcccOptions opts;
    opts.rho = 5;
    opts.verify_tree_partition = true;
    const CircuitCover cover = cccc(b.graph, opts);
    CHECK(verify_cover(cover, b.graph).ok);
    CHECK(cover_stats(cover).ratio_total >= 2.0 / 3.0);
    CHECK(count_mistakes(cover, predict_with_cover(cover, b.graph), b.graph) == 0);
    CHECK(cover.batches == 4);
  }
  SUBCASE("single batch equals scccc per component") {
    const LabeledInstance b = balanced(20, 80, 71);
    CcccOptions opts;
    opts.rho = 4;
    const CircuitCover c = cccc(b.graph, opts);
    ScccOptions s;
    s.rho = 4;
    s.theta = std::sqrt(80.0);
    const CircuitCover d = scccc(b.graph, s);
    CHECK(c.batches == 1);
    CHECK(c.query_edges == d.query_edges);
    CHECK(c.test_edges == d.test_edges);
    CHECK(c.load == d.load);
  }
  SUBCASE("random configurations") {
    std::mt19937_64 rng(73);
    for (int k = 0; k < 30; ++k) {
      const int n = 10 + static_cast<int>(rng() % 60);
      const int rho = 4 + static_cast<int>(rng() % 3);
      const int m = std::min(n * (n - 1) / 2, rho * n + static_cast<int>(rng() % (4 * n)));
      if (rho * n > m) continue;
      const LabeledInstance b = balanced(n, m, rng());
      CcccOptions opts;
      opts.rho = rho;
      opts.shuffle_batches = k % 2;
      opts.seed = rng();
      opts.pick = k % 3 ? SheafPick::kFirst : SheafPick::kRandom;
      opts.tree.strategy = k % 2 ? TreeStrategy::kWilson : TreeStrategy::kBfs;
      opts.verify_tree_partition = true;
      const CircuitCover cover = cccc(b.graph, opts);
      CHECK(verify_cover(cover, b.graph).ok);
      CHECK(3.0 * cover.test_edges.size() >= (rho - 3.0) * cover.query_edges.size());
      CHECK(count_mistakes(cover, predict_with_cover(cover, b.graph), b.graph) == 0);
    }
  }
  SUBCASE("parameter range") {
    const SignedGraph g = make_complete_graph(8);  // 28 edges
    CcccOptions opts;
    opts.rho = 3;
    CHECK_THROWS_AS(cccc(g, opts), ConfigError);
    opts.rho = 4;  // 4 * 8 > 28
    CHECK_THROWS_AS(cccc(g, opts), ConfigError);
    CHECK_THROWS_AS(cccc(build_graph(0, {}), CcccOptions{}), ConfigError);
  }
}

TEST_CASE("predict_with_cover") {
  SUBCASE("five negative path edges predict -1") {
    const SignedGraph c6 = make_cycle_graph(6);
    CircuitCover cover;
    cover.node_count = 6;
    cover.edge_count = 6;
    cover.circuits.push_back({5, 5, 0, {4, 3, 2, 1, 0}, 0, CircuitKind::kWithinSubtree, -1});
    const std::vector<int> labels{-1, -1, -1, -1, -1, 0};
    CHECK(predict_with_cover(cover, labels) == std::vector<int>{-1});
    const std::vector<int> positive{1, 1, 1, 1, 1, 0};
    CHECK(predict_with_cover(cover, positive) == std::vector<int>{1});
    const std::vector<int> missing{1, 1, 0, 1, 1, 0};
    CHECK_THROWS_AS(predict_with_cover(cover, missing), Error);
  }
  SUBCASE("one flipped query edge hits exactly the circuits through it") {
    const LabeledInstance b = balanced(40, 150, 79);
    ScccOptions opts;
    opts.rho = 2;
    const CircuitCover cover = scccc(b.graph, opts);
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
      const int e = cover.query_edges[rng() % cover.query_edges.size()];
      std::vector<int> s = b.graph.signs();
      s[e] = -s[e];
      const SignedGraph flipped = b.graph.with_signs(s);
      const std::vector<int> pred = predict_with_cover(cover, flipped);
      for (std::size_t c = 0; c < cover.circuits.size(); ++c) {
        const bool wrong = pred[c] != flipped.sign(cover.circuits[c].test_edge);
        CHECK(wrong == (occurrences(cover.circuits[c].path, e) % 2 == 1));
      }
    }
  }
}

TEST_CASE("flip-load bound") {
  std::mt19937_64 rng(89);
  for (int k = 0; k < 50; ++k) {
    const LabeledInstance b = balanced(30, 120, rng());
    const LabeledInstance noisy = gen_p_random(b, 0.1, rng());
    ScccOptions opts;
    opts.rho = 1 + k % 3;
    const CircuitCover cover = scccc(noisy.graph, opts);
    long long bound = 0;
    for (int e : noisy.provenance.flips) bound += cover.load[e];
    CHECK(count_mistakes(cover, predict_with_cover(cover, noisy.graph), noisy.graph) <= bound);
  }
}

TEST_CASE("cover_stats and verify_cover") {
  const LabeledInstance b = balanced(25, 80, 97);
  ScccOptions opts;
  opts.rho = 2;
  const CircuitCover cover = scccc(b.graph, opts);
  const CoverStats s = cover_stats(cover);
  CHECK(s.query_count == static_cast<int>(cover.query_edges.size()));
  CHECK(s.test_count == static_cast<int>(cover.test_edges.size()));
  int histogram_total = 0;
  for (const auto& [load, count] : s.load_histogram) histogram_total += count;
  CHECK(histogram_total == 80);
  CHECK(s.max_load == *std::max_element(cover.load.begin(), cover.load.end()));
  for (int e : cover.test_edges) CHECK(cover.load[e] == 1);

  SUBCASE("duplicated test edge") {
    CircuitCover bad = cover;
    bad.circuits.push_back(bad.circuits.front());
    CHECK_FALSE(verify_cover(bad, b.graph).ok);
  }
  SUBCASE("unqueried path edge") {
    CircuitCover bad = cover;
    const int e = bad.circuits.front().path.front();
    bad.query_edges.erase(std::find(bad.query_edges.begin(), bad.query_edges.end(), e));
    bad.test_edges.push_back(e);
    std::sort(bad.test_edges.begin(), bad.test_edges.end());
    CHECK_FALSE(verify_cover(bad, b.graph).ok);
  }
  SUBCASE("broken chain") {
    CircuitCover bad = cover;
    for (Circuit& c : bad.circuits) {
      if (c.path.size() > 1) {
        c.path.pop_back();
        break;
      }
    }
    CHECK_FALSE(verify_cover(bad, b.graph).ok);
  }
  SUBCASE("wrong load") {
    CircuitCover bad = cover;
    bad.load[bad.query_edges.front()] += 1;
    CHECK_FALSE(verify_cover(bad, b.graph).ok);
  }
}
