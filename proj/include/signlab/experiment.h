#ifndef SIGNLAB_EXPERIMENT_H_
#define SIGNLAB_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "signlab/cover.h"
#include "signlab/generators.h"
#include "signlab/tree_predict.h"

namespace signlab {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

enum class Algorithm { kOracle, kSpectral, kScccc, kCccc, kTree, kOnline };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm algorithm);

// How each trial's instance is produced when no input graph is given.
struct InstanceConfig {
  std::string structure = "random";   // random | clique | cycle | path | grid
  int nodes = 30;
  int edges = 0;                      // random only; 0 means 4 * nodes (capped)
  std::string labeling = "two-cluster";  // two-cluster | all-positive | clique-delta | active-lowerbound
  double p = 0.0;                     // flip rate applied on top
  int k = 0;                          // K for clique-delta / active-lowerbound
};

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kCccc;
  InstanceConfig instance;
  std::optional<SignedGraph> input;   // overrides `instance`; labels kept
  std::uint64_t seed = 1;
  int trials = 1;
  int threads = 0;                    // 0: hardware concurrency
  int rho = 4;
  std::optional<double> theta;
  TreeStrategy tree = TreeStrategy::kBfs;
  int best_of_k = 16;
  SheafPick pick = SheafPick::kFirst;
  double train_fraction = 0.5;        // spectral
  std::string learner = "wm";         // online: halving | wm | tree | const+1 | const-1
  bool adversary = false;             // online: play the tree-plus-K adversary
  double beta = 0.5;
  bool verify = false;                // run cover / TreePartition self-checks
  bool include_instances = false;     // embed edge lists in the report
};

void validate(const ExperimentConfig& config);

Json config_to_json(const ExperimentConfig& config);

// Instance for one trial; `seed` is that trial's stream seed.
LabeledInstance make_instance(const ExperimentConfig& config, std::uint64_t seed);

// Report for a single trial on a given instance.
Json run_trial(const ExperimentConfig& config, const LabeledInstance& instance,
               int trial, std::uint64_t seed);

// Runs config.trials trials, concurrently when allowed, and aggregates. The
// output is a pure function of the config apart from "wall_time_seconds".
Json run_experiment(const ExperimentConfig& config);

// One CSV row per trial with the scalar fields of the trial records.
std::string report_to_csv(const Json& report);

Json cover_to_json(const CircuitCover& cover);
Json graph_stats(const SignedGraph& g);

}  // namespace signlab

#endif  // SIGNLAB_EXPERIMENT_H_
