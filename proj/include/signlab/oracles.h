#ifndef SIGNLAB_ORACLES_H_
#define SIGNLAB_ORACLES_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "signlab/graph.h"

namespace signlab {

// Exact correlation-clustering oracles. All of them enumerate, so each has a
// node-count ceiling (LimitError beyond it).
struct OracleLimits {
  int delta_max_nodes = 12;
  int delta2_max_nodes = 24;
};

struct ClusteringCost {
  int cost = 0;
  Partition witness;
};

struct TwoClusteringCost {
  int cost = 0;
  TwoClustering witness;
};

// Simple cycle given as nodes v0..v_{k-1} and edges (v0,v1),...,(v_{k-1},v0).
struct BadCycleWitness {
  std::vector<int> nodes;
  std::vector<int> edges;
  int negative_count = 0;
};

struct BalanceResult {
  bool balanced = true;
  std::optional<BadCycleWitness> witness;
};

// Negative within-cluster edges plus positive between-cluster edges. The
// second overload counts only the listed edges.
int partition_cost(const SignedGraph& g, const Partition& f);
int partition_cost(const SignedGraph& g, const Partition& f,
                   std::span<const int> edge_subset);
int two_clustering_cost(const SignedGraph& g, const TwoClustering& x);

// Minimum partition cost over all partitions of V.
ClusteringCost delta_exact(const SignedGraph& g, const OracleLimits& limits = {});

// Minimum cost over partitions into at most two clusters.
TwoClusteringCost delta2_exact(const SignedGraph& g,
                               const OracleLimits& limits = {});

// Odd-negative cycle witness on failure.
BalanceResult is_two_balanced(const SignedGraph& g);

// Weak balance (no cycle with exactly one negative edge).
BalanceResult is_weakly_balanced(const SignedGraph& g);

// Exact empirical risk minimizer over all partitions, scored on the training
// edges only. Ties resolve to the first partition in restricted-growth order.
ClusteringCost erm_partition(const SignedGraph& g,
                             std::span<const int> training_edge_ids,
                             const OracleLimits& limits = {});

int classify_by_partition(const Partition& f, int i, int j);

// Calls `visit` with every set partition of {0..n-1} as a restricted-growth
// string, in lexicographic order. Returning false stops the walk.
void for_each_partition(int n,
                        const std::function<bool(std::span<const int>)>& visit);

}  // namespace signlab

#endif  // SIGNLAB_ORACLES_H_
