#ifndef SIGNLAB_FOREST_H_
#define SIGNLAB_FOREST_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signlab/graph.h"

namespace signlab {

inline constexpr int kNoParent = -1;

// Spanning forest of a signed graph, rooted per component. Each node knows
// the product of edge signs on its path to the root, which turns pi_T(i,j)
// into a constant-time lookup.
class RootedSpanningForest {
 public:
  RootedSpanningForest() = default;

  // `parent_edge[v]` is the tree edge to v's parent, or kNoParent for roots.
  // Throws InvariantError when the parent links do not form a forest.
  RootedSpanningForest(const SignedGraph& g, std::vector<int> parent_edge);

  int node_count() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[v]; }
  int parent_edge(int v) const { return parent_edge_[v]; }
  int root(int v) const { return root_[v]; }
  int depth(int v) const { return depth_[v]; }
  int parity(int v) const { return parity_[v]; }
  bool is_root(int v) const { return parent_[v] == kNoParent; }

  // Children in the adjacency order of the parent.
  std::span<const int> children(int v) const {
    return {children_.data() + child_offsets_[v],
            children_.data() + child_offsets_[v + 1]};
  }

  const std::vector<int>& roots() const { return roots_; }
  bool is_tree_edge(int edge_id) const { return tree_edge_[edge_id] != 0; }
  std::vector<int> tree_edges() const;
  int tree_edge_count() const;

  // Same tree, parities recomputed from another labeling of the graph.
  RootedSpanningForest relabeled(const SignedGraph& g) const;

 private:
  std::vector<int> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> root_;
  std::vector<int> depth_;
  std::vector<int> parity_;
  std::vector<int> roots_;
  std::vector<int> child_offsets_;
  std::vector<int> children_;
  std::vector<char> tree_edge_;
};

struct TreePath {
  int from = 0;
  int to = 0;
  std::vector<int> edges;  // ordered from `from` to `to`
  std::vector<int> nodes;  // from, ..., to

  int length() const { return static_cast<int>(edges.size()); }
};

// Breadth-first forest. Without explicit roots every component is rooted at
// its smallest node.
RootedSpanningForest bfs_spanning_forest(
    const SignedGraph& g, std::span<const int> roots = {});

// Uniform spanning tree via loop-erased random walks, rooted at node 0.
// Throws Error(kValidation) on a disconnected graph.
RootedSpanningForest wilson_random_spanning_tree(const SignedGraph& g,
                                                 std::uint64_t seed);

TreePath tree_path(const RootedSpanningForest& t, int i, int j);

// Product of the labels along the i-j tree path.
int path_sign_product(const RootedSpanningForest& t, int i, int j);

// Independent structural check of a forest against its graph; returns a
// description of the first violated invariant.
std::optional<std::string> validate_forest(const SignedGraph& g,
                                           const RootedSpanningForest& t);

}  // namespace signlab

#endif  // SIGNLAB_FOREST_H_
