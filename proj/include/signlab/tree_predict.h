#ifndef SIGNLAB_TREE_PREDICT_H_
#define SIGNLAB_TREE_PREDICT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signlab/forest.h"
#include "signlab/graph.h"

namespace signlab {

enum class TreeStrategy { kBfs, kWilson, kBestOfK };

TreeStrategy parse_tree_strategy(const std::string& name);
std::string to_string(TreeStrategy strategy);

struct TreeOptions {
  TreeStrategy strategy = TreeStrategy::kBfs;
  std::uint64_t seed = 0;
  int best_of_k = 16;
};

// BFS from node 0, a uniform random tree, or the lowest-stretch tree among
// the BFS tree and k random ones (ties keep the earlier candidate).
RootedSpanningForest make_spanning_tree(const SignedGraph& g,
                                        const TreeOptions& options = {});

// Exact non-negative rational, always stored in lowest terms.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);
bool operator<(const Rational& a, const Rational& b);

// (|V| - 1 + sum over non-tree edges of |Path_T(e')|) / |E|.
Rational average_stretch(const RootedSpanningForest& t, const SignedGraph& g);

// Sum of |Path_T(e')| over the non-tree edges.
long long total_path_length(const RootedSpanningForest& t, const SignedGraph& g);

// |F| + sum over non-tree e' of |Path_T(e') intersect F|.
long long flip_bound_rhs(const RootedSpanningForest& t, const SignedGraph& g,
                         std::span<const int> flip_set);

struct TreeLearnerRun {
  RootedSpanningForest tree;
  std::vector<int> query_edges;   // tree edges
  std::vector<int> test_edges;    // all other edges
  std::vector<int> predictions;   // parallel to test_edges
  int mistakes = 0;
  std::vector<int> flips;         // planted flip set when supplied
};

// Queries the tree edges of `labeled` and predicts every other edge by the
// sign product along its tree path. The tree is built from structure only.
TreeLearnerRun tree_learner_run(const SignedGraph& labeled,
                                const TreeOptions& options = {},
                                std::span<const int> flips = {});

// Same, on a caller-supplied tree over the same structure.
TreeLearnerRun tree_learner_run(const SignedGraph& labeled,
                                const RootedSpanningForest& tree,
                                std::span<const int> flips = {});

}  // namespace signlab

#endif  // SIGNLAB_TREE_PREDICT_H_
