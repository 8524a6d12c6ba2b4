#include "signlab/graph.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "signlab/error.h"

namespace signlab {

std::uint64_t SignedGraph::pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

SignedGraph::SignedGraph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 0) {
    throw GraphValidationError(GraphErrorKind::kOutOfRange,
                               "negative node count");
  }
  edge_index_.reserve(edges_.size());
  std::vector<int> degree(node_count_, 0);
  for (int id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    const std::string where = "edge " + std::to_string(id) + " (" +
                              std::to_string(e.u) + "," +
                              std::to_string(e.v) + ")";
    if (e.u < 0 || e.v < 0 || e.u >= node_count_ || e.v >= node_count_) {
      throw GraphValidationError(GraphErrorKind::kOutOfRange,
                                 where + ": endpoint out of range");
    }
    if (e.u == e.v) {
      throw GraphValidationError(GraphErrorKind::kSelfLoop,
                                 where + ": self-loop");
    }
    if (e.sign != kPositive && e.sign != kNegative) {
      throw GraphValidationError(GraphErrorKind::kBadSign,
                                 where + ": sign must be +1 or -1");
    }
    if (!edge_index_.emplace(pair_key(e.u, e.v), id).second) {
      throw GraphValidationError(GraphErrorKind::kDuplicatePair,
                                 where + ": duplicate node pair");
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(node_count_ + 1, 0);
  for (int v = 0; v < node_count_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }
}

std::optional<int> SignedGraph::find_edge(int u, int v) const {
  auto it = edge_index_.find(pair_key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> SignedGraph::signs() const {
  std::vector<int> out(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) out[i] = edges_[i].sign;
  return out;
}

int SignedGraph::negative_count() const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(),
      [](const Edge& e) { return e.sign == kNegative; }));
}

SignedGraph SignedGraph::with_signs(std::span<const int> signs) const {
  if (signs.size() != edges_.size()) {
    throw GraphValidationError(GraphErrorKind::kOutOfRange,
                               "label vector length does not match edges");
  }
  std::vector<Edge> relabeled = edges_;
  for (std::size_t i = 0; i < relabeled.size(); ++i) relabeled[i].sign = signs[i];
  return SignedGraph(node_count_, std::move(relabeled));
}

SignedGraph build_graph(int node_count, std::vector<Edge> edges) {
  return SignedGraph(node_count, std::move(edges));
}

int Partition::cluster_count() const {
  if (cluster.empty()) return 0;
  return *std::max_element(cluster.begin(), cluster.end()) + 1;
}

Partition Partition::normalized(std::vector<int> labels) {
  std::unordered_map<int, int> remap;
  for (int& c : labels) {
    auto [it, inserted] = remap.emplace(c, static_cast<int>(remap.size()));
    c = it->second;
  }
  return Partition{std::move(labels)};
}

Partition TwoClustering::as_partition() const {
  std::vector<int> labels(side.begin(), side.end());
  return Partition::normalized(std::move(labels));
}

Partition connected_components(const SignedGraph& g, const EdgeFilter& keep) {
  const int n = g.node_count();
  std::vector<int> label(n, -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.neighbors(v)) {
        if (label[inc.neighbor] != -1) continue;
        if (keep && !keep(inc.edge)) continue;
        label[inc.neighbor] = next;
        stack.push_back(inc.neighbor);
      }
    }
    ++next;
  }
  return Partition{std::move(label)};
}

bool is_connected(const SignedGraph& g) {
  return g.node_count() <= 1 || connected_components(g).cluster_count() == 1;
}

}  // namespace signlab
