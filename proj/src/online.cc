#include "signlab/online.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "signlab/error.h"
#include "signlab/forest.h"

namespace signlab {

LabelMask label_mask(const SignedGraph& labeled) {
  LabelMask y = 0;
  for (int e = 0; e < labeled.edge_count(); ++e) {
    if (labeled.sign(e) == kNegative) y |= LabelMask{1} << e;
  }
  return y;
}

std::vector<int> labels_from_mask(LabelMask mask, int edge_count) {
  std::vector<int> out(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    out[e] = (mask >> e) & 1U ? kNegative : kPositive;
  }
  return out;
}

int VersionSpaceTable::max_delta() const {
  return delta.empty() ? 0 : *std::max_element(delta.begin(), delta.end());
}

VersionSpaceTable build_version_space_table(const SignedGraph& g,
                                            int max_edges,
                                            const OracleLimits& limits) {
  const int m = g.edge_count();
  if (m > max_edges || m > 31) {
    throw LimitError("version space table: " + std::to_string(m) +
                     " edges exceeds the limit of " + std::to_string(max_edges));
  }
  if (g.node_count() > limits.delta_max_nodes) {
    throw LimitError("version space table: " + std::to_string(g.node_count()) +
                     " nodes exceeds the exact-enumeration limit of " +
                     std::to_string(limits.delta_max_nodes));
  }
  // A partition only matters through the set of edges it keeps inside
  // clusters. A labeling pays for negative edges inside and positive edges
  // across, so Delta(Y) = min_W popcount(Y & W) + popcount(~Y & ~W).
  std::set<LabelMask> within_masks;
  for_each_partition(g.node_count(), [&](std::span<const int> rgs) {
    LabelMask w = 0;
    for (int e = 0; e < m; ++e) {
      if (rgs[g.edge(e).u] == rgs[g.edge(e).v]) w |= LabelMask{1} << e;
    }
    within_masks.insert(w);
    return true;
  });
  const LabelMask full = m == 0 ? 0 : static_cast<LabelMask>((std::uint64_t{1} << m) - 1);
  VersionSpaceTable table{g, std::vector<std::uint8_t>(std::size_t{1} << m, 0)};
  for (LabelMask y = 0; y <= full; ++y) {
    int best = m;
    for (LabelMask w : within_masks) {
      best = std::min(best, std::popcount(y & w) + std::popcount(~y & ~w & full));
    }
    table.delta[y] = static_cast<std::uint8_t>(best);
    if (y == full) break;
  }
  return table;
}

void Observed::reveal(int edge, int label) {
  const LabelMask bit = LabelMask{1} << edge;
  known |= bit;
  if (label == kNegative) {
    negative |= bit;
  } else {
    negative &= ~bit;
  }
}

std::uint64_t version_space_size(const VersionSpaceTable& table, int d,
                                 const Observed& observed) {
  std::uint64_t count = 0;
  for (std::size_t y = 0; y < table.delta.size(); ++y) {
    if (table.delta[y] == d && observed.consistent(static_cast<LabelMask>(y))) ++count;
  }
  return count;
}

int halving_predict(const VersionSpaceTable& table, int d,
                    const Observed& observed, int edge) {
  std::uint64_t positive = 0, negative = 0;
  const LabelMask bit = LabelMask{1} << edge;
  for (std::size_t y = 0; y < table.delta.size(); ++y) {
    if (table.delta[y] != d || !observed.consistent(static_cast<LabelMask>(y))) continue;
    if (y & bit) {
      ++negative;
    } else {
      ++positive;
    }
  }
  return negative > positive ? kNegative : kPositive;
}

std::vector<int> default_expert_pool(int edge_count) {
  std::vector<int> ds(edge_count + 1);
  std::iota(ds.begin(), ds.end(), 0);
  return ds;
}

WeightedMajorityLearner::WeightedMajorityLearner(const VersionSpaceTable& table,
                                                 std::vector<int> expert_ds,
                                                 double beta)
    : expert_ds_(std::move(expert_ds)), beta_(beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw ConfigError("beta must be in [0,1)");
  if (expert_ds_.empty()) throw ConfigError("weighted majority needs an expert");
  for (int d : expert_ds_) experts_.emplace_back(table, d);
  last_votes_.assign(experts_.size(), kPositive);
  expert_mistakes_.assign(experts_.size(), 0);
  weights_.assign(experts_.size(), 1.0);
}

int WeightedMajorityLearner::predict(int edge) {
  double plus = 0.0, minus = 0.0;
  for (std::size_t k = 0; k < experts_.size(); ++k) {
    last_votes_[k] = experts_[k].predict(edge);
    (last_votes_[k] == kPositive ? plus : minus) += weights_[k];
  }
  return minus > plus ? kNegative : kPositive;
}

void WeightedMajorityLearner::reveal(int edge, int label) {
  for (std::size_t k = 0; k < experts_.size(); ++k) {
    if (last_votes_[k] != label) {
      ++expert_mistakes_[k];
      weights_[k] *= beta_;
    }
    experts_[k].reveal(edge, label);
  }
}

TreeOnlineLearner::TreeOnlineLearner(const SignedGraph& g)
    : g_(&g), parent_(g.node_count()), parity_(g.node_count(), kPositive) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

std::pair<int, int> TreeOnlineLearner::find(int v) {
  int parity = kPositive;
  int x = v;
  while (parent_[x] != x) {
    parity *= parity_[x];
    x = parent_[x];
  }
  return {x, parity};
}

int TreeOnlineLearner::predict(int edge) {
  const Edge& e = g_->edge(edge);
  const auto [ru, pu] = find(e.u);
  const auto [rv, pv] = find(e.v);
  return ru == rv ? pu * pv : kPositive;
}

void TreeOnlineLearner::reveal(int edge, int label) {
  const Edge& e = g_->edge(edge);
  const auto [ru, pu] = find(e.u);
  const auto [rv, pv] = find(e.v);
  if (ru == rv) return;
  // parity(u) * parity(v) must equal the label once the roots are joined.
  parent_[ru] = rv;
  parity_[ru] = pu * pv * label;
}

OnlineRun run_online(OnlineLearner& learner, const SignedGraph& labeled,
                     std::span<const int> order) {
  OnlineRun run;
  if (order.empty()) {
    run.order.resize(labeled.edge_count());
    std::iota(run.order.begin(), run.order.end(), 0);
  } else {
    run.order.assign(order.begin(), order.end());
  }
  for (int e : run.order) {
    const int prediction = learner.predict(e);
    const int truth = labeled.sign(e);
    learner.reveal(e, truth);
    run.predictions.push_back(prediction);
    run.truths.push_back(truth);
    run.mistake.push_back(prediction != truth);
    if (prediction != truth) ++run.mistakes;
  }
  return run;
}

HalvingTrace run_halving_trace(const VersionSpaceTable& table, int d,
                               const SignedGraph& labeled,
                               std::span<const int> order) {
  HalvingTrace trace;
  HalvingLearner learner(table, d);
  std::vector<int> presented(order.begin(), order.end());
  if (presented.empty()) {
    presented.resize(labeled.edge_count());
    std::iota(presented.begin(), presented.end(), 0);
  }
  trace.run.order = presented;
  for (int e : presented) {
    trace.version_sizes.push_back(version_space_size(table, d, learner.observed()));
    const int prediction = learner.predict(e);
    const int truth = labeled.sign(e);
    learner.reveal(e, truth);
    trace.run.predictions.push_back(prediction);
    trace.run.truths.push_back(truth);
    trace.run.mistake.push_back(prediction != truth);
    if (prediction != truth) ++trace.run.mistakes;
  }
  trace.version_sizes.push_back(version_space_size(table, d, learner.observed()));
  return trace;
}

int WeightedMajorityRun::best_expert_mistakes() const {
  return expert_mistakes.empty()
             ? 0
             : *std::min_element(expert_mistakes.begin(), expert_mistakes.end());
}

double WeightedMajorityRun::mistake_bound() const {
  const double experts = static_cast<double>(expert_ds.size());
  const double best = best_expert_mistakes();
  const double penalty = beta > 0.0 ? std::log2(1.0 / beta)
                                    : (best > 0 ? INFINITY : 0.0);
  return (std::log2(experts) + best * penalty) / std::log2(2.0 / (1.0 + beta));
}

WeightedMajorityRun weighted_majority_run(const VersionSpaceTable& table,
                                          const SignedGraph& labeled,
                                          std::span<const int> order,
                                          double beta,
                                          std::vector<int> expert_ds) {
  if (expert_ds.empty()) expert_ds = default_expert_pool(table.edge_count());
  WeightedMajorityLearner learner(table, expert_ds, beta);
  WeightedMajorityRun out;
  out.run = run_online(learner, labeled, order);
  out.expert_ds = learner.expert_ds();
  out.expert_mistakes = learner.expert_mistakes();
  out.beta = beta;
  return out;
}

AdversaryOutcome adversary_tree_plus_k(const SignedGraph& g, int K,
                                       OnlineLearner& learner) {
  const RootedSpanningForest t = bfs_spanning_forest(g);
  std::vector<int> non_tree;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!t.is_tree_edge(e)) non_tree.push_back(e);
  }
  if (K < 0 || K > static_cast<int>(non_tree.size())) {
    throw ConfigError("adversary: K=" + std::to_string(K) + " but only " +
                      std::to_string(non_tree.size()) + " non-tree edges");
  }

  AdversaryOutcome out;
  out.K = K;
  out.final_labels.assign(g.edge_count(), kPositive);
  auto present = [&](int e, int label) {
    const int prediction = learner.predict(e);
    if (label == 0) label = -prediction;  // forced mistake
    learner.reveal(e, label);
    out.final_labels[e] = label;
    out.run.order.push_back(e);
    out.run.predictions.push_back(prediction);
    out.run.truths.push_back(label);
    out.run.mistake.push_back(prediction != label);
    if (prediction != label) ++out.run.mistakes;
  };

  // Tree edges in breadth-first discovery order.
  std::vector<int> tree_order;
  {
    std::vector<int> queue(t.roots().begin(), t.roots().end());
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int c : t.children(queue[h])) {
        tree_order.push_back(t.parent_edge(c));
        queue.push_back(c);
      }
    }
  }
  for (int e : tree_order) {
    present(e, 0);
    out.forced_edges.push_back(e);
  }

  const Partition clusters = connected_components(g, [&](int e) {
    return t.is_tree_edge(e) && out.final_labels[e] == kPositive;
  });
  for (int k = 0; k < K; ++k) {
    present(non_tree[k], 0);
    out.forced_edges.push_back(non_tree[k]);
  }
  for (std::size_t k = K; k < non_tree.size(); ++k) {
    const Edge& e = g.edge(non_tree[k]);
    present(non_tree[k], clusters.same_cluster(e.u, e.v) ? kPositive : kNegative);
  }
  return out;
}

}  // namespace signlab
