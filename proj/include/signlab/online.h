#ifndef SIGNLAB_ONLINE_H_
#define SIGNLAB_ONLINE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "signlab/graph.h"
#include "signlab/oracles.h"

namespace signlab {

// Labelings of a fixed graph are bitmasks over edge ids: bit e set means
// edge e is labeled -1.
using LabelMask = std::uint32_t;

inline constexpr int kVersionSpaceMaxEdges = 14;

LabelMask label_mask(const SignedGraph& labeled);
std::vector<int> labels_from_mask(LabelMask mask, int edge_count);

// Delta(Y) for every labeling Y of one graph structure.
struct VersionSpaceTable {
  SignedGraph graph;          // structure; its own labels are irrelevant
  std::vector<std::uint8_t> delta;  // indexed by LabelMask

  int edge_count() const { return graph.edge_count(); }
  int max_delta() const;
};

VersionSpaceTable build_version_space_table(
    const SignedGraph& g, int max_edges = kVersionSpaceMaxEdges,
    const OracleLimits& limits = {});

// Edges revealed so far.
struct Observed {
  LabelMask known = 0;
  LabelMask negative = 0;

  void reveal(int edge, int label);
  bool consistent(LabelMask y) const { return ((y ^ negative) & known) == 0; }
};

// |S_t|: labelings consistent with `observed` whose Delta equals d.
std::uint64_t version_space_size(const VersionSpaceTable& table, int d,
                                 const Observed& observed);

// Majority vote of the version space on `edge`; +1 on ties or when empty.
int halving_predict(const VersionSpaceTable& table, int d,
                    const Observed& observed, int edge);

class OnlineLearner {
 public:
  virtual ~OnlineLearner() = default;
  virtual std::string name() const = 0;
  virtual int predict(int edge) = 0;
  virtual void reveal(int edge, int label) = 0;
};

class HalvingLearner : public OnlineLearner {
 public:
  HalvingLearner(const VersionSpaceTable& table, int d)
      : table_(&table), d_(d) {}
  std::string name() const override { return "hal" + std::to_string(d_); }
  int predict(int edge) override { return halving_predict(*table_, d_, observed_, edge); }
  void reveal(int edge, int label) override { observed_.reveal(edge, label); }
  const Observed& observed() const { return observed_; }
  int d() const { return d_; }

 private:
  const VersionSpaceTable* table_;
  int d_;
  Observed observed_;
};

// Multiplicative-weights vote over HAL_d experts; a wrong expert's weight is
// scaled by beta. Ties predict +1.
class WeightedMajorityLearner : public OnlineLearner {
 public:
  WeightedMajorityLearner(const VersionSpaceTable& table,
                          std::vector<int> expert_ds, double beta = 0.5);
  std::string name() const override { return "wm"; }
  int predict(int edge) override;
  void reveal(int edge, int label) override;

  const std::vector<int>& expert_ds() const { return expert_ds_; }
  const std::vector<int>& expert_mistakes() const { return expert_mistakes_; }
  const std::vector<double>& weights() const { return weights_; }
  double beta() const { return beta_; }

 private:
  std::vector<HalvingLearner> experts_;
  std::vector<int> expert_ds_;
  std::vector<int> last_votes_;
  std::vector<int> expert_mistakes_;
  std::vector<double> weights_;
  double beta_;
};

// HAL_0 .. HAL_|E|.
std::vector<int> default_expert_pool(int edge_count);

// Sign product along the forest of revealed edges; +1 when the endpoints are
// not yet connected by revealed edges.
class TreeOnlineLearner : public OnlineLearner {
 public:
  explicit TreeOnlineLearner(const SignedGraph& g);
  std::string name() const override { return "tree"; }
  int predict(int edge) override;
  void reveal(int edge, int label) override;

 private:
  std::pair<int, int> find(int v);  // (root, parity to root)
  const SignedGraph* g_;
  std::vector<int> parent_;
  std::vector<int> parity_;
};

class ConstantLearner : public OnlineLearner {
 public:
  explicit ConstantLearner(int label) : label_(label) {}
  std::string name() const override {
    return label_ == kPositive ? "const+1" : "const-1";
  }
  int predict(int) override { return label_; }
  void reveal(int, int) override {}

 private:
  int label_;
};

struct OnlineRun {
  std::vector<int> order;
  std::vector<int> predictions;
  std::vector<int> truths;
  std::vector<char> mistake;
  int mistakes = 0;
};

// Presents the edges of `labeled` in `order` (all edges, by id, when empty).
OnlineRun run_online(OnlineLearner& learner, const SignedGraph& labeled,
                     std::span<const int> order = {});

struct HalvingTrace {
  OnlineRun run;
  std::vector<std::uint64_t> version_sizes;  // |S_t| before each step, then final
};

HalvingTrace run_halving_trace(const VersionSpaceTable& table, int d,
                               const SignedGraph& labeled,
                               std::span<const int> order = {});

struct WeightedMajorityRun {
  OnlineRun run;
  std::vector<int> expert_ds;
  std::vector<int> expert_mistakes;
  double beta = 0.5;

  int best_expert_mistakes() const;
  // (log2 N + m* log2(1/beta)) / log2(2/(1+beta))
  double mistake_bound() const;
};

WeightedMajorityRun weighted_majority_run(const VersionSpaceTable& table,
                                          const SignedGraph& labeled,
                                          std::span<const int> order = {},
                                          double beta = 0.5,
                                          std::vector<int> expert_ds = {});

// Adversary that forces a mistake on every spanning-tree edge and on K
// non-tree edges, answering all other edges consistently with the clusters
// of positive tree paths. Final labeling has Delta <= K.
struct AdversaryOutcome {
  OnlineRun run;
  std::vector<int> final_labels;   // per edge id
  std::vector<int> forced_edges;   // tree edges then the K chosen edges
  int K = 0;
};

AdversaryOutcome adversary_tree_plus_k(const SignedGraph& g, int K,
                                       OnlineLearner& learner);

}  // namespace signlab

#endif  // SIGNLAB_ONLINE_H_
