#include "signlab/tree_predict.h"

#include <numeric>

#include "signlab/error.h"

namespace signlab {

TreeStrategy parse_tree_strategy(const std::string& name) {
  if (name == "bfs") return TreeStrategy::kBfs;
  if (name == "wilson" || name == "random") return TreeStrategy::kWilson;
  if (name == "best-of-k") return TreeStrategy::kBestOfK;
  throw ConfigError("unknown tree strategy '" + name + "'");
}

std::string to_string(TreeStrategy strategy) {
  switch (strategy) {
    case TreeStrategy::kBfs: return "bfs";
    case TreeStrategy::kWilson: return "wilson";
    case TreeStrategy::kBestOfK: return "best-of-k";
  }
  return "bfs";
}

RootedSpanningForest make_spanning_tree(const SignedGraph& g,
                                        const TreeOptions& options) {
  switch (options.strategy) {
    case TreeStrategy::kBfs: {
      const int root = 0;
      return bfs_spanning_forest(g, g.node_count() > 0
                                        ? std::span<const int>(&root, 1)
                                        : std::span<const int>());
    }
    case TreeStrategy::kWilson:
      return wilson_random_spanning_tree(g, options.seed);
    case TreeStrategy::kBestOfK: {
      if (options.best_of_k < 1) throw ConfigError("best-of-k needs k >= 1");
      RootedSpanningForest best = bfs_spanning_forest(g);
      Rational best_stretch = average_stretch(best, g);
      for (int k = 0; k < options.best_of_k; ++k) {
        RootedSpanningForest candidate = wilson_random_spanning_tree(
            g, options.seed * 0x9E3779B97F4A7C15ULL + static_cast<unsigned>(k) + 1);
        const Rational stretch = average_stretch(candidate, g);
        if (stretch < best_stretch) {
          best_stretch = stretch;
          best = std::move(candidate);
        }
      }
      return best;
    }
  }
  throw ConfigError("unhandled tree strategy");
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorCategory::kNumerical, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long d = std::gcd(num, den);
  return d == 0 ? Rational{0, 1} : Rational{num / d, den / d};
}

bool operator<(const Rational& a, const Rational& b) {
  __extension__ using Wide = __int128;
  return static_cast<Wide>(a.num) * b.den < static_cast<Wide>(b.num) * a.den;
}

long long total_path_length(const RootedSpanningForest& t,
                            const SignedGraph& g) {
  long long total = 0;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (t.is_tree_edge(id)) continue;
    const Edge& e = g.edge(id);
    total += tree_path(t, e.u, e.v).length();
  }
  return total;
}

Rational average_stretch(const RootedSpanningForest& t, const SignedGraph& g) {
  if (g.edge_count() == 0) return {0, 1};
  return make_rational(t.tree_edge_count() + total_path_length(t, g),
                       g.edge_count());
}

long long flip_bound_rhs(const RootedSpanningForest& t, const SignedGraph& g,
                         std::span<const int> flip_set) {
  std::vector<char> flipped(g.edge_count(), 0);
  for (int id : flip_set) flipped[id] = 1;
  long long rhs = 0;
  for (char f : flipped) rhs += f;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (t.is_tree_edge(id)) continue;
    const Edge& e = g.edge(id);
    for (int on_path : tree_path(t, e.u, e.v).edges) rhs += flipped[on_path];
  }
  return rhs;
}

TreeLearnerRun tree_learner_run(const SignedGraph& labeled,
                                const RootedSpanningForest& tree,
                                std::span<const int> flips) {
  if (!is_connected(labeled)) {
    throw Error(ErrorCategory::kValidation,
                "tree learner requires a connected graph");
  }
  TreeLearnerRun run;
  run.tree = tree.relabeled(labeled);
  run.flips.assign(flips.begin(), flips.end());
  for (int id = 0; id < labeled.edge_count(); ++id) {
    if (run.tree.is_tree_edge(id)) {
      run.query_edges.push_back(id);
      continue;
    }
    const Edge& e = labeled.edge(id);
    const int prediction = path_sign_product(run.tree, e.u, e.v);
    run.test_edges.push_back(id);
    run.predictions.push_back(prediction);
    if (prediction != e.sign) ++run.mistakes;
  }
  return run;
}

TreeLearnerRun tree_learner_run(const SignedGraph& labeled,
                                const TreeOptions& options,
                                std::span<const int> flips) {
  if (!is_connected(labeled)) {
    throw Error(ErrorCategory::kValidation,
                "tree learner requires a connected graph");
  }
  return tree_learner_run(labeled, make_spanning_tree(labeled, options), flips);
}

}  // namespace signlab
