#include "signlab/forest.h"

#include <algorithm>
#include <deque>
#include <random>

#include "signlab/error.h"

namespace signlab {

RootedSpanningForest::RootedSpanningForest(const SignedGraph& g,
                                           std::vector<int> parent_edge)
    : parent_edge_(std::move(parent_edge)) {
  const int n = g.node_count();
  if (static_cast<int>(parent_edge_.size()) != n) {
    throw InvariantError("parent vector length does not match node count");
  }
  parent_.assign(n, kNoParent);
  tree_edge_.assign(g.edge_count(), 0);
  for (int v = 0; v < n; ++v) {
    const int e = parent_edge_[v];
    if (e == kNoParent) continue;
    if (e < 0 || e >= g.edge_count()) {
      throw InvariantError("parent edge id out of range");
    }
    const Edge& edge = g.edge(e);
    if (edge.u != v && edge.v != v) {
      throw InvariantError("parent edge not incident to its node");
    }
    if (tree_edge_[e]) throw InvariantError("edge used as parent link twice");
    tree_edge_[e] = 1;
    parent_[v] = g.other(e, v);
  }

  std::vector<int> counts(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    for (const Incidence& inc : g.neighbors(v)) {
      if (parent_edge_[inc.neighbor] == inc.edge && parent_[inc.neighbor] == v) {
        ++counts[v + 1];
      }
    }
  }
  child_offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) child_offsets_[v + 1] = child_offsets_[v] + counts[v + 1];
  children_.resize(child_offsets_[n]);
  for (int v = 0, k = 0; v < n; ++v) {
    for (const Incidence& inc : g.neighbors(v)) {
      if (parent_edge_[inc.neighbor] == inc.edge && parent_[inc.neighbor] == v) {
        children_[k++] = inc.neighbor;
      }
    }
  }

  root_.assign(n, -1);
  depth_.assign(n, 0);
  parity_.assign(n, kPositive);
  int reached = 0;
  std::vector<int> stack;
  for (int r = 0; r < n; ++r) {
    if (parent_[r] != kNoParent) continue;
    roots_.push_back(r);
    root_[r] = r;
    stack.push_back(r);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int c : children(v)) {
        root_[c] = r;
        depth_[c] = depth_[v] + 1;
        parity_[c] = parity_[v] * g.sign(parent_edge_[c]);
        stack.push_back(c);
      }
    }
  }
  if (reached != n) throw InvariantError("parent links contain a cycle");
}

std::vector<int> RootedSpanningForest::tree_edges() const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(tree_edge_.size()); ++e) {
    if (tree_edge_[e]) out.push_back(e);
  }
  return out;
}

int RootedSpanningForest::tree_edge_count() const {
  return static_cast<int>(std::count(tree_edge_.begin(), tree_edge_.end(), 1));
}

RootedSpanningForest RootedSpanningForest::relabeled(
    const SignedGraph& g) const {
  return RootedSpanningForest(g, parent_edge_);
}

RootedSpanningForest bfs_spanning_forest(const SignedGraph& g,
                                         std::span<const int> roots) {
  const int n = g.node_count();
  std::vector<int> parent_edge(n, kNoParent);
  std::vector<char> seen(n, 0);
  std::deque<int> queue;
  auto grow = [&](int r) {
    if (r < 0 || r >= n) {
      throw Error(ErrorCategory::kValidation, "BFS root out of range");
    }
    if (seen[r]) return;
    seen[r] = 1;
    queue.push_back(r);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.neighbors(v)) {
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        parent_edge[inc.neighbor] = inc.edge;
        queue.push_back(inc.neighbor);
      }
    }
  };
  for (int r : roots) grow(r);
  for (int r = 0; r < n; ++r) grow(r);
  return RootedSpanningForest(g, std::move(parent_edge));
}

RootedSpanningForest wilson_random_spanning_tree(const SignedGraph& g,
                                                 std::uint64_t seed) {
  const int n = g.node_count();
  if (!is_connected(g)) {
    throw Error(ErrorCategory::kValidation,
                "random spanning tree requires a connected graph");
  }
  std::vector<int> parent_edge(n, kNoParent);
  if (n == 0) return RootedSpanningForest(g, parent_edge);
  std::mt19937_64 rng(seed);
  std::vector<char> in_tree(n, 0);
  std::vector<int> next_edge(n, kNoParent);
  in_tree[0] = 1;
  for (int start = 1; start < n; ++start) {
    int u = start;
    while (!in_tree[u]) {
      auto nbrs = g.neighbors(u);
      std::uniform_int_distribution<int> pick(
          0, static_cast<int>(nbrs.size()) - 1);
      const Incidence& step = nbrs[pick(rng)];
      next_edge[u] = step.edge;
      u = step.neighbor;
    }
    // Retracing the walk keeps only its loop-erased part.
    u = start;
    while (!in_tree[u]) {
      in_tree[u] = 1;
      parent_edge[u] = next_edge[u];
      u = g.other(next_edge[u], u);
    }
  }
  return RootedSpanningForest(g, std::move(parent_edge));
}

TreePath tree_path(const RootedSpanningForest& t, int i, int j) {
  if (t.root(i) != t.root(j)) {
    throw Error(ErrorCategory::kValidation,
                "tree path endpoints lie in different components");
  }
  TreePath path{i, j, {}, {}};
  std::vector<int> up_i, up_j;
  std::vector<int> nodes_i{i}, nodes_j{j};
  int a = i, b = j;
  while (t.depth(a) > t.depth(b)) {
    up_i.push_back(t.parent_edge(a));
    a = t.parent(a);
    nodes_i.push_back(a);
  }
  while (t.depth(b) > t.depth(a)) {
    up_j.push_back(t.parent_edge(b));
    b = t.parent(b);
    nodes_j.push_back(b);
  }
  while (a != b) {
    up_i.push_back(t.parent_edge(a));
    a = t.parent(a);
    nodes_i.push_back(a);
    up_j.push_back(t.parent_edge(b));
    b = t.parent(b);
    nodes_j.push_back(b);
  }
  path.edges = std::move(up_i);
  path.edges.insert(path.edges.end(), up_j.rbegin(), up_j.rend());
  path.nodes = std::move(nodes_i);
  path.nodes.insert(path.nodes.end(), nodes_j.rbegin() + 1, nodes_j.rend());
  return path;
}

int path_sign_product(const RootedSpanningForest& t, int i, int j) {
  if (t.root(i) != t.root(j)) {
    throw Error(ErrorCategory::kValidation,
                "sign product endpoints lie in different components");
  }
  return t.parity(i) * t.parity(j);
}

std::optional<std::string> validate_forest(const SignedGraph& g,
                                           const RootedSpanningForest& t) {
  const int n = g.node_count();
  if (t.node_count() != n) return "node count mismatch";
  const Partition comps = connected_components(g);
  std::vector<int> roots_per_comp(comps.cluster_count(), 0);
  for (int v = 0; v < n; ++v) {
    if (t.is_root(v)) {
      ++roots_per_comp[comps.cluster[v]];
      if (t.parity(v) != kPositive) return "root parity is not +1";
      if (t.depth(v) != 0) return "root depth is not 0";
      if (t.root(v) != v) return "root does not point to itself";
      continue;
    }
    const int e = t.parent_edge(v);
    const Edge& edge = g.edge(e);
    const int p = t.parent(v);
    if (!((edge.u == v && edge.v == p) || (edge.v == v && edge.u == p))) {
      return "parent edge does not join node and parent";
    }
    if (t.parity(v) != edge.sign * t.parity(p)) return "parity recurrence broken";
    if (t.depth(v) != t.depth(p) + 1) return "depth recurrence broken";
    if (t.root(v) != t.root(p)) return "root differs from parent's root";
  }
  for (int c : roots_per_comp) {
    if (c != 1) return "component without exactly one root";
  }
  if (t.tree_edge_count() != n - comps.cluster_count()) {
    return "tree edge count is not |V| - #components";
  }
  return std::nullopt;
}

}  // namespace signlab
