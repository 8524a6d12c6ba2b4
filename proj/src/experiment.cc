#include "signlab/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "signlab/edge_list.h"
#include "signlab/error.h"
#include "signlab/online.h"
#include "signlab/oracles.h"
#include "signlab/spectral.h"

namespace signlab {
namespace {

constexpr int kOracleNodeLimit = OracleLimits{}.delta_max_nodes;
constexpr int kOracle2NodeLimit = OracleLimits{}.delta2_max_nodes;

Json cycle_json(const BadCycleWitness& w) {
  return Json{{"nodes", w.nodes}, {"edges", w.edges}, {"negative_count", w.negative_count}};
}

std::vector<int> shuffled_ids(int count, std::mt19937_64& rng) {
  std::vector<int> ids(count);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  return ids;
}

void add_oracle_fields(Json& j, const SignedGraph& g) {
  const BalanceResult two = is_two_balanced(g);
  const BalanceResult weak = is_weakly_balanced(g);
  j["two_balanced"] = two.balanced;
  j["weakly_balanced"] = weak.balanced;
  if (two.witness) j["odd_cycle"] = cycle_json(*two.witness);
  if (weak.witness) j["bad_cycle"] = cycle_json(*weak.witness);
  if (g.node_count() <= kOracleNodeLimit) {
    const ClusteringCost d = delta_exact(g);
    j["delta"] = d.cost;
    j["delta_witness"] = d.witness.cluster;
  } else {
    j["delta"] = nullptr;
  }
  if (g.node_count() <= kOracle2NodeLimit) {
    const TwoClusteringCost d2 = delta2_exact(g);
    j["delta2"] = d2.cost;
    j["delta2_witness"] = d2.witness.side;
  } else {
    j["delta2"] = nullptr;
  }
}

void run_spectral(Json& j, const ExperimentConfig& config,
                  const SignedGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 7));
  std::vector<int> ids = shuffled_ids(g.edge_count(), rng);
  const int train = static_cast<int>(std::lround(config.train_fraction * g.edge_count()));
  ids.resize(train);
  std::sort(ids.begin(), ids.end());
  std::vector<int> labels;
  for (int e : ids) labels.push_back(g.sign(e));
  const SpectralPrediction pred = least_eigen_classifier(g, ids, labels);
  int mistakes = 0;
  for (std::size_t k = 0; k < pred.test_edges.size(); ++k) {
    mistakes += pred.predictions[k] != g.sign(pred.test_edges[k]);
  }
  const EigenResult full = min_eigenpair(signed_laplacian(g));
  j["queries"] = train;
  j["tests"] = pred.test_edges.size();
  j["mistakes"] = mistakes;
  j["lambda_min"] = full.value;
  j["eigen_residual"] = full.residual;
  j["training_eigenvalue"] = pred.eigenvalue;
  j["degenerate"] = pred.degenerate;
  Json bounds = Json::object();
  if (g.node_count() <= kBooleanQuadraticMaxNodes) {
    bounds["boolean_min_quadratic"] = boolean_min_quadratic(g).value;
  }
  if (g.node_count() <= kOracle2NodeLimit && g.node_count() > 0) {
    const int d2 = delta2_exact(g).cost;
    bounds["four_delta2"] = 4 * d2;
    bounds["lambda_upper"] = 4.0 * d2 / g.node_count();
  }
  j["bounds"] = bounds;
}

void run_cover(Json& j, const ExperimentConfig& config,
               const LabeledInstance& instance, std::uint64_t seed) {
  const SignedGraph& g = instance.graph;
  TreeOptions tree{config.tree, derive_seed(seed, 11), config.best_of_k};
  CircuitCover cover;
  double guarantee = 0.0;
  if (config.algorithm == Algorithm::kScccc) {
    ScccOptions opts;
    opts.rho = config.rho;
    opts.theta = config.theta;
    opts.tree = tree;
    opts.pick = config.pick;
    opts.seed = derive_seed(seed, 13);
    opts.verify_tree_partition = config.verify;
    cover = scccc(g, opts);
    guarantee = config.rho;
  } else {
    CcccOptions opts;
    opts.rho = config.rho;
    opts.tree = tree;
    opts.pick = config.pick;
    opts.seed = derive_seed(seed, 13);
    opts.verify_tree_partition = config.verify;
    cover = cccc(g, opts);
    guarantee = (config.rho - 3) / 3.0;
  }
  const std::vector<int> predictions = predict_with_cover(cover, g);
  const CoverStats stats = cover_stats(cover);
  long long flip_load = 0;
  for (int e : instance.provenance.flips) flip_load += cover.load[e];

  j["queries"] = stats.query_count;
  j["tests"] = stats.test_count;
  j["mistakes"] = count_mistakes(cover, predictions, g);
  j["load"] = Json{{"max", stats.max_load}, {"mean_query", stats.mean_query_load}};
  j["ratios"] = Json{
      {"test_per_excess_query",
       std::isinf(stats.ratio_excess) ? Json(nullptr) : Json(stats.ratio_excess)},
      {"test_per_query", stats.ratio_total}};
  j["bounds"] = Json{{"ratio_guarantee", guarantee},
                     {"flip_load", flip_load},
                     {"flips", instance.provenance.flips.size()}};
  j["structure"] = Json{{"tree_queries", cover.tree_query_count},
                        {"sheaves", cover.sheaf_count},
                        {"epochs", cover.epochs.size()},
                        {"runs", cover.runs},
                        {"batches", cover.batches},
                        {"tree_partition_calls", cover.tree_partition_calls},
                        {"tree_partition_checks", cover.tree_partition_checks}};
  if (config.verify) {
    const CoverVerification v = verify_cover(cover, g);
    j["cover_valid"] = v.ok;
    if (!v.ok) j["cover_violations"] = v.violations;
  }
}

void run_tree(Json& j, const ExperimentConfig& config,
              const LabeledInstance& instance, std::uint64_t seed) {
  const SignedGraph& g = instance.graph;
  const TreeOptions opts{config.tree, derive_seed(seed, 11), config.best_of_k};
  const TreeLearnerRun run = tree_learner_run(g, opts, instance.provenance.flips);
  const Rational stretch = average_stretch(run.tree, g);
  const long long paths = total_path_length(run.tree, g);
  const double p = instance.provenance.parameters.value("p", 0.0);
  j["queries"] = run.query_edges.size();
  j["tests"] = run.test_edges.size();
  j["mistakes"] = run.mistakes;
  j["average_stretch"] = stretch.value();
  j["average_stretch_exact"] = std::to_string(stretch.num) + "/" + std::to_string(stretch.den);
  j["bounds"] = Json{
      {"flip_bound_rhs", flip_bound_rhs(run.tree, g, instance.provenance.flips)},
      {"flips", instance.provenance.flips.size()},
      {"expected_mistakes_bound", p * (g.edge_count() + static_cast<double>(paths))}};
}

std::unique_ptr<OnlineLearner> make_learner(const std::string& name,
                                            const VersionSpaceTable& table,
                                            const SignedGraph& g, int delta,
                                            double beta) {
  if (name == "halving") return std::make_unique<HalvingLearner>(table, delta);
  if (name == "wm") {
    return std::make_unique<WeightedMajorityLearner>(
        table, default_expert_pool(table.edge_count()), beta);
  }
  if (name == "tree") return std::make_unique<TreeOnlineLearner>(g);
  if (name == "const+1") return std::make_unique<ConstantLearner>(kPositive);
  if (name == "const-1") return std::make_unique<ConstantLearner>(kNegative);
  throw ConfigError("unknown learner '" + name + "'");
}

void run_online_trial(Json& j, const ExperimentConfig& config,
                      const SignedGraph& g, std::uint64_t seed) {
  const VersionSpaceTable table = build_version_space_table(g);
  if (config.adversary) {
    auto learner = make_learner(config.learner, table, g, 0, config.beta);
    const AdversaryOutcome out = adversary_tree_plus_k(g, config.instance.k, *learner);
    const LabelMask final_mask = [&] {
      LabelMask y = 0;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (out.final_labels[e] == kNegative) y |= LabelMask{1} << e;
      }
      return y;
    }();
    const int components = connected_components(g).cluster_count();
    j["learner"] = learner->name();
    j["order"] = out.run.order;
    j["mistakes"] = out.run.mistakes;
    j["final_labels"] = out.final_labels;
    j["bounds"] = Json{{"forced_lower_bound", g.node_count() - components + out.K},
                       {"K", out.K},
                       {"final_delta", table.delta[final_mask]}};
    return;
  }
  const int delta = table.delta[label_mask(g)];
  std::mt19937_64 rng(derive_seed(seed, 17));
  const std::vector<int> order = shuffled_ids(g.edge_count(), rng);
  j["delta"] = delta;
  j["order"] = order;
  if (config.learner == "wm") {
    const WeightedMajorityRun run = weighted_majority_run(table, g, order, config.beta);
    j["learner"] = "wm";
    j["mistakes"] = run.run.mistakes;
    j["expert_ds"] = run.expert_ds;
    j["expert_mistakes"] = run.expert_mistakes;
    j["bounds"] = Json{{"best_expert_mistakes", run.best_expert_mistakes()},
                       {"weighted_majority", run.mistake_bound()}};
  } else if (config.learner == "halving") {
    const HalvingTrace trace = run_halving_trace(table, delta, g, order);
    j["learner"] = "hal" + std::to_string(delta);
    j["mistakes"] = trace.run.mistakes;
    j["version_sizes"] = trace.version_sizes;
    j["bounds"] = Json{{"log2_version_space",
                        std::log2(static_cast<double>(trace.version_sizes.front()))}};
  } else {
    auto learner = make_learner(config.learner, table, g, delta, config.beta);
    const OnlineRun run = run_online(*learner, g, order);
    j["learner"] = learner->name();
    j["mistakes"] = run.mistakes;
  }
}

Json summarize(const std::vector<Json>& trials) {
  Json s = Json::object();
  auto aggregate = [&](const char* key) {
    std::vector<double> xs;
    for (const Json& t : trials) {
      if (t.contains(key) && t[key].is_number()) xs.push_back(t[key].get<double>());
    }
    if (xs.empty()) return;
    const double n = static_cast<double>(xs.size());
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sd = xs.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
    s[key] = Json{{"mean", mean},
                  {"stddev", sd},
                  {"stderr", sd / std::sqrt(n)},
                  {"min", *std::min_element(xs.begin(), xs.end())},
                  {"max", *std::max_element(xs.begin(), xs.end())}};
  };
  aggregate("mistakes");
  aggregate("queries");
  aggregate("tests");
  aggregate("average_stretch");
  aggregate("lambda_min");
  aggregate("delta");
  aggregate("delta2");
  return s;
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else if (it->is_primitive()) {
      out.emplace_back(key, it->is_string() ? it->get<std::string>() : it->dump());
    }
  }
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  if (name == "oracle") return Algorithm::kOracle;
  if (name == "spectral") return Algorithm::kSpectral;
  if (name == "scccc") return Algorithm::kScccc;
  if (name == "cccc") return Algorithm::kCccc;
  if (name == "tree") return Algorithm::kTree;
  if (name == "online") return Algorithm::kOnline;
  throw ConfigError("unknown algorithm '" + name + "'");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kOracle: return "oracle";
    case Algorithm::kSpectral: return "spectral";
    case Algorithm::kScccc: return "scccc";
    case Algorithm::kCccc: return "cccc";
    case Algorithm::kTree: return "tree";
    case Algorithm::kOnline: return "online";
  }
  return "?";
}

void validate(const ExperimentConfig& c) {
  if (c.trials < 1) throw ConfigError("trials must be at least 1");
  if (c.threads < 0) throw ConfigError("threads must be non-negative");
  if (!(c.instance.p >= 0.0 && c.instance.p < 1.0)) throw ConfigError("p must lie in [0, 1)");
  if (c.instance.k < 0) throw ConfigError("k must be non-negative");
  if (c.best_of_k < 1) throw ConfigError("best-of-k needs k >= 1");
  if (!(c.train_fraction >= 0.0 && c.train_fraction <= 1.0)) {
    throw ConfigError("train fraction must lie in [0, 1]");
  }
  if (!(c.beta >= 0.0 && c.beta < 1.0)) throw ConfigError("beta must lie in [0, 1)");
  if (c.theta && !(*c.theta > 0.0)) throw ConfigError("theta must be positive");
  if (c.algorithm == Algorithm::kScccc && c.rho < 1) throw ConfigError("scccc needs rho >= 1");
  if (c.algorithm == Algorithm::kCccc && c.rho <= 3) throw ConfigError("cccc needs rho > 3");
  if (!c.input && c.instance.nodes < 1) throw ConfigError("nodes must be positive");
}

Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["algorithm"] = to_string(c.algorithm);
  if (c.input) {
    j["input"] = Json{{"nodes", c.input->node_count()}, {"edges", c.input->edge_count()}};
  } else {
    j["instance"] = Json{{"structure", c.instance.structure},
                         {"nodes", c.instance.nodes},
                         {"edges", c.instance.edges},
                         {"labeling", c.instance.labeling}};
  }
  j["p"] = c.instance.p;
  j["k"] = c.instance.k;
  j["trials"] = c.trials;
  switch (c.algorithm) {
    case Algorithm::kScccc:
      j["theta"] = c.theta ? Json(*c.theta) : Json(nullptr);
      [[fallthrough]];
    case Algorithm::kCccc:
      j["rho"] = c.rho;
      j["pick"] = to_string(c.pick);
      [[fallthrough]];
    case Algorithm::kTree:
      j["tree"] = to_string(c.tree);
      if (c.tree == TreeStrategy::kBestOfK) j["best_of_k"] = c.best_of_k;
      break;
    case Algorithm::kSpectral:
      j["train_fraction"] = c.train_fraction;
      break;
    case Algorithm::kOnline:
      j["learner"] = c.learner;
      j["adversary"] = c.adversary;
      j["beta"] = c.beta;
      break;
    case Algorithm::kOracle:
      break;
  }
  j["verify"] = c.verify;
  return j;
}

LabeledInstance make_instance(const ExperimentConfig& config, std::uint64_t seed) {
  const InstanceConfig& ic = config.instance;
  LabeledInstance base;
  if (config.input) {
    base.graph = *config.input;
    base.provenance.generator = "input";
  } else if (ic.labeling == "clique-delta") {
    base = gen_clique_delta(ic.nodes, ic.k, derive_seed(seed, 1));
  } else {
    SignedGraph structure;
    const int n = ic.nodes;
    if (ic.structure == "random") {
      const long long cap = static_cast<long long>(n) * (n - 1) / 2;
      long long m = ic.edges > 0 ? ic.edges : 4LL * n;
      m = std::min(m, cap);
      m = std::max<long long>(m, n - 1);
      structure = make_random_connected_graph(n, static_cast<int>(m), derive_seed(seed, 2));
    } else if (ic.structure == "clique") {
      structure = make_complete_graph(n);
    } else if (ic.structure == "cycle") {
      structure = make_cycle_graph(n);
    } else if (ic.structure == "path") {
      structure = make_path_graph(n);
    } else if (ic.structure == "star") {
      structure = make_star_graph(n);
    } else {
      throw ConfigError("unknown structure '" + ic.structure + "'");
    }
    if (ic.labeling == "two-cluster") {
      base = gen_two_cluster_labeling(structure, random_bipartition(n, derive_seed(seed, 3)));
    } else if (ic.labeling == "all-positive") {
      base.graph = structure;
      base.provenance.generator = "all-positive";
    } else if (ic.labeling == "active-lowerbound") {
      base = gen_active_lowerbound_labeling(structure, ic.k, derive_seed(seed, 4));
    } else {
      throw ConfigError("unknown labeling '" + ic.labeling + "'");
    }
    base.provenance.parameters["structure"] = ic.structure;
    base.provenance.parameters["nodes"] = n;
    base.provenance.parameters["edges"] = structure.edge_count();
  }
  base.provenance.seed = seed;
  if (ic.p > 0.0) return gen_p_random(base, ic.p, derive_seed(seed, 5));
  return base;
}

Json graph_stats(const SignedGraph& g) {
  const Partition comps = connected_components(g);
  return Json{{"nodes", g.node_count()},
              {"edges", g.edge_count()},
              {"negative_edges", g.negative_count()},
              {"components", comps.cluster_count()}};
}

Json run_trial(const ExperimentConfig& config, const LabeledInstance& instance,
               int trial, std::uint64_t seed) {
  Json j;
  j["trial"] = trial;
  j["seed"] = seed;
  j["graph"] = graph_stats(instance.graph);
  j["provenance"] = provenance_to_json(instance.provenance);
  if (config.include_instances) {
    std::ostringstream edges;
    write_edge_list(edges, instance.graph);
    j["edge_list"] = edges.str();
  }
  switch (config.algorithm) {
    case Algorithm::kOracle: add_oracle_fields(j, instance.graph); break;
    case Algorithm::kSpectral: run_spectral(j, config, instance.graph, seed); break;
    case Algorithm::kScccc:
    case Algorithm::kCccc: run_cover(j, config, instance, seed); break;
    case Algorithm::kTree: run_tree(j, config, instance, seed); break;
    case Algorithm::kOnline: run_online_trial(j, config, instance.graph, seed); break;
  }
  return j;
}

Json run_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  std::vector<Json> trials(config.trials);
  std::vector<std::exception_ptr> errors(config.trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < config.trials; t = next++) {
      try {
        const std::uint64_t seed = config.trials == 1 ? config.seed
                                                      : derive_seed(config.seed, t);
        trials[t] = run_trial(config, make_instance(config, seed), t, seed);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, config.trials);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["algorithm"] = to_string(config.algorithm);
  report["parameters"] = config_to_json(config);
  report["seed"] = config.seed;
  report["summary"] = summarize(trials);
  report["trials"] = trials;
  report["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_to_csv(const Json& report) {
  std::vector<std::string> columns;
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const Json& t : report.at("trials")) {
    Json scalars = t;
    scalars.erase("provenance");
    scalars.erase("edge_list");
    auto& row = rows.emplace_back();
    flatten(scalars, "", row);
    for (const auto& [key, value] : row) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) {
        columns.push_back(key);
      }
    }
  }
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ',';
      for (const auto& [key, value] : row) {
        if (key == columns[c]) {
          out << value;
          break;
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

Json cover_to_json(const CircuitCover& cover) {
  Json circuits = Json::array();
  for (const Circuit& c : cover.circuits) {
    circuits.push_back(Json{{"test_edge", c.test_edge},
                            {"path", c.path},
                            {"kind", c.kind == CircuitKind::kSheaf ? "sheaf" : "subtree"},
                            {"epoch", c.epoch}});
  }
  return Json{{"node_count", cover.node_count},
              {"edge_count", cover.edge_count},
              {"query_edges", cover.query_edges},
              {"test_edges", cover.test_edges},
              {"load", cover.load},
              {"circuits", circuits}};
}

}  // namespace signlab
