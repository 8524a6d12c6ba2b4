#ifndef SIGNLAB_GRAPH_H_
#define SIGNLAB_GRAPH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace signlab {

// Edge signs are plain ints restricted to {-1, +1}.
inline constexpr int kPositive = 1;
inline constexpr int kNegative = -1;

struct Edge {
  int u = 0;
  int v = 0;
  int sign = kPositive;
};

struct Incidence {
  int neighbor = 0;
  int edge = 0;
};

// Undirected simple graph with +-1 edge labels. Immutable once built.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Throws GraphValidationError on self-loops, duplicate pairs, signs other
  // than +-1 and out-of-range endpoints.
  SignedGraph(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }
  int sign(int id) const { return edges_[id].sign; }

  std::span<const Incidence> neighbors(int v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

  // Endpoint of `edge_id` opposite to `v`.
  int other(int edge_id, int v) const {
    const Edge& e = edges_[edge_id];
    return e.u == v ? e.v : e.u;
  }

  std::optional<int> find_edge(int u, int v) const;

  std::vector<int> signs() const;
  int negative_count() const;

  // Same structure, new labels (one per edge id).
  SignedGraph with_signs(std::span<const int> signs) const;

 private:
  static std::uint64_t pair_key(int u, int v);

  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> adjacency_;
  std::unordered_map<std::uint64_t, int> edge_index_;
};

SignedGraph build_graph(int node_count, std::vector<Edge> edges);

// Dense cluster ids 0..k-1 per node.
struct Partition {
  std::vector<int> cluster;

  int size() const { return static_cast<int>(cluster.size()); }
  int cluster_count() const;
  bool same_cluster(int i, int j) const { return cluster[i] == cluster[j]; }

  // Relabels clusters in first-seen order so ids are contiguous.
  static Partition normalized(std::vector<int> labels);
};

// Side in {-1,+1} per node; one side may be empty.
struct TwoClustering {
  std::vector<int> side;

  int size() const { return static_cast<int>(side.size()); }
  Partition as_partition() const;
};

using EdgeFilter = std::function<bool(int edge_id)>;

// Component labels under the retained edges (all edges when no filter).
Partition connected_components(const SignedGraph& g,
                               const EdgeFilter& keep = nullptr);

bool is_connected(const SignedGraph& g);

}  // namespace signlab

#endif  // SIGNLAB_GRAPH_H_
