#include "signlab/oracles.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

#include "signlab/error.h"
#include "signlab/forest.h"

namespace signlab {
namespace {

struct BackEdge {
  int earlier = 0;
  int sign = kPositive;
};

// Edges grouped by their larger endpoint, so assigning node v settles the
// cost contribution of every edge to nodes 0..v-1.
std::vector<std::vector<BackEdge>> back_edges(const SignedGraph& g,
                                              std::span<const int> ids) {
  std::vector<std::vector<BackEdge>> out(g.node_count());
  for (int id : ids) {
    const Edge& e = g.edge(id);
    const int hi = std::max(e.u, e.v);
    const int lo = std::min(e.u, e.v);
    out[hi].push_back({lo, e.sign});
  }
  return out;
}

// Branch-and-bound over restricted-growth strings. A prefix is abandoned once
// its settled cost reaches the incumbent, so the first optimal partition in
// enumeration order is the one reported.
class PartitionSearch {
 public:
  PartitionSearch(int n, std::vector<std::vector<BackEdge>> back)
      : n_(n), back_(std::move(back)), assign_(n, 0) {}

  ClusteringCost run() {
    best_cost_ = std::numeric_limits<int>::max();
    if (n_ == 0) return {0, Partition{}};
    assign_[0] = 0;
    descend(1, 1, 0);
    return {best_cost_, Partition{best_}};
  }

 private:
  void descend(int v, int used, int cost) {
    if (v == n_) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = assign_;
      }
      return;
    }
    for (int c = 0; c <= used; ++c) {
      int add = 0;
      for (const BackEdge& b : back_[v]) {
        const bool same = assign_[b.earlier] == c;
        if (same ? b.sign == kNegative : b.sign == kPositive) ++add;
      }
      if (cost + add >= best_cost_) continue;
      assign_[v] = c;
      descend(v + 1, c == used ? used + 1 : used, cost + add);
    }
  }

  int n_;
  std::vector<std::vector<BackEdge>> back_;
  std::vector<int> assign_;
  std::vector<int> best_;
  int best_cost_ = 0;
};

void check_limit(const SignedGraph& g, int limit, const char* what) {
  if (g.node_count() > limit) {
    throw LimitError(std::string(what) + ": " + std::to_string(g.node_count()) +
                     " nodes exceeds the exact-enumeration limit of " +
                     std::to_string(limit));
  }
}

std::vector<int> all_edge_ids(const SignedGraph& g) {
  std::vector<int> ids(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) ids[i] = i;
  return ids;
}

BadCycleWitness close_cycle(const SignedGraph& g, std::vector<int> path_nodes,
                            std::vector<int> path_edges, int closing_edge) {
  BadCycleWitness w;
  w.nodes = std::move(path_nodes);
  w.edges = std::move(path_edges);
  w.edges.push_back(closing_edge);
  for (int e : w.edges) {
    if (g.sign(e) == kNegative) ++w.negative_count;
  }
  return w;
}

}  // namespace

int partition_cost(const SignedGraph& g, const Partition& f) {
  int cost = 0;
  for (const Edge& e : g.edges()) {
    const bool same = f.same_cluster(e.u, e.v);
    if (same ? e.sign == kNegative : e.sign == kPositive) ++cost;
  }
  return cost;
}

int partition_cost(const SignedGraph& g, const Partition& f,
                   std::span<const int> edge_subset) {
  int cost = 0;
  for (int id : edge_subset) {
    const Edge& e = g.edge(id);
    const bool same = f.same_cluster(e.u, e.v);
    if (same ? e.sign == kNegative : e.sign == kPositive) ++cost;
  }
  return cost;
}

int two_clustering_cost(const SignedGraph& g, const TwoClustering& x) {
  int cost = 0;
  for (const Edge& e : g.edges()) {
    if (x.side[e.u] * x.side[e.v] != e.sign) ++cost;
  }
  return cost;
}

ClusteringCost delta_exact(const SignedGraph& g, const OracleLimits& limits) {
  check_limit(g, limits.delta_max_nodes, "delta_exact");
  const std::vector<int> ids = all_edge_ids(g);
  return PartitionSearch(g.node_count(), back_edges(g, ids)).run();
}

ClusteringCost erm_partition(const SignedGraph& g,
                             std::span<const int> training_edge_ids,
                             const OracleLimits& limits) {
  check_limit(g, limits.delta_max_nodes, "erm_partition");
  std::vector<int> ids(training_edge_ids.begin(), training_edge_ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    if (id < 0 || id >= g.edge_count()) {
      throw Error(ErrorCategory::kValidation, "training edge id out of range");
    }
  }
  return PartitionSearch(g.node_count(), back_edges(g, ids)).run();
}

TwoClusteringCost delta2_exact(const SignedGraph& g,
                               const OracleLimits& limits) {
  check_limit(g, limits.delta2_max_nodes, "delta2_exact");
  const int n = g.node_count();
  TwoClusteringCost result;
  if (n == 0) return result;
  std::vector<int> side(n, kPositive);
  int cost = 0;
  for (const Edge& e : g.edges()) {
    if (e.sign == kNegative) ++cost;
  }
  result.cost = cost;
  result.witness.side = side;
  // Gray-code walk over the sides of nodes 1..n-1; node 0 stays at +1 since
  // a global flip leaves the cost unchanged.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    const int node = std::countr_zero(step) + 1;
    for (const Incidence& inc : g.neighbors(node)) {
      const bool was_ok = side[node] * side[inc.neighbor] == g.sign(inc.edge);
      cost += was_ok ? 1 : -1;
    }
    side[node] = -side[node];
    if (cost < result.cost) {
      result.cost = cost;
      result.witness.side = side;
    }
  }
  return result;
}

BalanceResult is_two_balanced(const SignedGraph& g) {
  const RootedSpanningForest t = bfs_spanning_forest(g);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (t.parity(e.u) * t.parity(e.v) == e.sign) continue;
    TreePath path = tree_path(t, e.u, e.v);
    return {false, close_cycle(g, std::move(path.nodes), std::move(path.edges), id)};
  }
  return {true, std::nullopt};
}

BalanceResult is_weakly_balanced(const SignedGraph& g) {
  const auto positive = [&g](int id) { return g.sign(id) == kPositive; };
  const Partition comps = connected_components(g, positive);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.sign != kNegative || !comps.same_cluster(e.u, e.v)) continue;
    // Shortest positive path u -> v closes the cycle through the negative edge.
    std::vector<int> via(g.node_count(), -1);
    std::vector<char> seen(g.node_count(), 0);
    std::deque<int> queue{e.u};
    seen[e.u] = 1;
    while (!queue.empty() && !seen[e.v]) {
      const int x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.neighbors(x)) {
        if (seen[inc.neighbor] || !positive(inc.edge)) continue;
        seen[inc.neighbor] = 1;
        via[inc.neighbor] = inc.edge;
        queue.push_back(inc.neighbor);
      }
    }
    std::vector<int> nodes{e.v};
    std::vector<int> edges;
    for (int x = e.v; x != e.u;) {
      edges.push_back(via[x]);
      x = g.other(via[x], x);
      nodes.push_back(x);
    }
    std::reverse(nodes.begin(), nodes.end());
    std::reverse(edges.begin(), edges.end());
    return {false, close_cycle(g, std::move(nodes), std::move(edges), id)};
  }
  return {true, std::nullopt};
}

int classify_by_partition(const Partition& f, int i, int j) {
  return f.same_cluster(i, j) ? kPositive : kNegative;
}

void for_each_partition(
    int n, const std::function<bool(std::span<const int>)>& visit) {
  std::vector<int> rgs(n, 0);
  if (n == 0) {
    visit(rgs);
    return;
  }
  // maxima[v] = largest block id among rgs[0..v-1].
  std::vector<int> maxima(n, 0);
  while (true) {
    if (!visit(rgs)) return;
    int v = n - 1;
    while (v > 0 && rgs[v] > maxima[v]) --v;
    if (v == 0) return;
    ++rgs[v];
    for (int w = v + 1; w < n; ++w) {
      rgs[w] = 0;
      maxima[w] = std::max(maxima[w - 1], rgs[w - 1]);
    }
  }
}

}  // namespace signlab
