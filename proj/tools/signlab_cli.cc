#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "signlab/edge_list.h"
#include "signlab/error.h"
#include "signlab/experiment.h"
#include "signlab/generators.h"

using namespace signlab;

namespace {

struct Common {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string input;
  bool allow_duplicates = false;
  int trials = 1;
  int threads = 0;
  bool include_instances = false;
};

void add_common(CLI::App* cmd, Common& c, ExperimentConfig& cfg) {
  cmd->add_option("--seed", c.seed, "master seed");
  cmd->add_option("--out", c.out, "output file (default stdout)");
  cmd->add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--input", c.input, "edge-list file; replaces the generator");
  cmd->add_flag("--allow-duplicates", c.allow_duplicates,
                "merge repeated pairs with equal signs");
  cmd->add_option("--trials", c.trials, "independent trials");
  cmd->add_option("--threads", c.threads, "worker threads (0: all cores)");
  cmd->add_flag("--include-instances", c.include_instances,
                "embed each trial's edge list in the report");
  cmd->add_option("--structure", cfg.instance.structure, "random|clique|cycle|path|star")
      ->check(CLI::IsMember({"random", "clique", "cycle", "path", "star"}));
  cmd->add_option("--nodes,-n", cfg.instance.nodes, "node count");
  cmd->add_option("--edges,-m", cfg.instance.edges, "edge count for random graphs");
  cmd->add_option("--labeling", cfg.instance.labeling,
                  "two-cluster|all-positive|clique-delta|active-lowerbound")
      ->check(CLI::IsMember({"two-cluster", "all-positive", "clique-delta", "active-lowerbound"}));
  cmd->add_option("--p", cfg.instance.p, "independent flip probability");
  cmd->add_option("--k", cfg.instance.k, "K for clique-delta, active-lowerbound, adversary");
}

void add_tree_flags(CLI::App* cmd, std::string& tree, int& best_of_k) {
  cmd->add_option("--tree", tree, "spanning tree strategy")
      ->check(CLI::IsMember({"bfs", "wilson", "best-of-k"}));
  cmd->add_option("--best-of", best_of_k, "candidate trees for best-of-k");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

std::string render(const Json& report, const std::string& format) {
  return format == "csv" ? report_to_csv(report) : report.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link classification experiments on signed graphs"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  Common common;
  std::string tree = "bfs", pick = "first", cover_algo = "cccc";
  std::optional<double> theta;
  std::string dump_cover;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a labeled instance as an edge list");
  std::string provenance_path;
  add_common(gen, common, cfg);
  gen->add_option("--provenance", provenance_path, "write the provenance record here");

  // analysis commands
  auto* oracle = app.add_subcommand("oracle", "exact Delta, Delta2, balance witnesses");
  add_common(oracle, common, cfg);

  auto* spectral = app.add_subcommand("spectral", "signed Laplacian and least-eigenvalue classifier");
  add_common(spectral, common, cfg);
  spectral->add_option("--train", cfg.train_fraction, "training edge fraction");

  auto* cover = app.add_subcommand("cover", "circuit-cover active learners");
  add_common(cover, common, cfg);
  add_tree_flags(cover, tree, cfg.best_of_k);
  cover->add_option("--algorithm", cover_algo, "scccc or cccc")
      ->check(CLI::IsMember({"scccc", "cccc"}));
  cover->add_option("--rho", cfg.rho, "sheaf parameter");
  cover->add_option("--theta", theta, "TreePartition threshold (scccc)");
  cover->add_option("--pick", pick, "queried edge within a sheaf")
      ->check(CLI::IsMember({"first", "random"}));
  cover->add_flag("--verify", cfg.verify, "self-check covers and TreePartition calls");
  cover->add_option("--dump-cover", dump_cover, "write the cover of trial 0 as JSON");

  auto* treecmd = app.add_subcommand("tree", "spanning-tree predictor");
  add_common(treecmd, common, cfg);
  add_tree_flags(treecmd, tree, cfg.best_of_k);

  auto* online = app.add_subcommand("online", "online learners on small graphs");
  add_common(online, common, cfg);
  online->add_option("--learner", cfg.learner, "halving|wm|tree|const+1|const-1")
      ->check(CLI::IsMember({"halving", "wm", "tree", "const+1", "const-1"}));
  online->add_flag("--adversary", cfg.adversary, "play the tree-plus-K adversary");
  online->add_option("--beta", cfg.beta, "weighted majority discount");

  auto* bench = app.add_subcommand("bench", "time the cover and tree learners");
  add_common(bench, common, cfg);
  bench->add_option("--rho", cfg.rho, "sheaf parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorCategory::kConfig);
  }

  try {
    cfg.seed = common.seed;
    cfg.trials = common.trials;
    cfg.threads = common.threads;
    cfg.include_instances = common.include_instances;
    cfg.tree = parse_tree_strategy(tree);
    cfg.pick = parse_sheaf_pick(pick);
    cfg.theta = theta;
    if (!common.input.empty()) {
      cfg.input = load_edge_list(common.input, common.allow_duplicates).graph;
    }

    if (gen->parsed()) {
      validate(cfg);
      const LabeledInstance inst = make_instance(cfg, cfg.seed);
      std::ostringstream edges;
      write_edge_list(edges, inst.graph);
      emit(edges.str(), common.out);
      const std::string prov = provenance_to_json(inst.provenance).dump(2) + "\n";
      if (!provenance_path.empty()) {
        emit(prov, provenance_path);
      } else if (!common.out.empty() && common.out != "-") {
        emit(prov, common.out + ".json");
      }
      return 0;
    }

    if (bench->parsed()) {
      if (cfg.instance.nodes == 30 && cfg.instance.edges == 0) {
        cfg.instance.nodes = 2000;
        cfg.instance.edges = 40000;
      }
      Json report;
      report["schema_version"] = kReportSchemaVersion;
      report["benchmark"] = Json::array();
      for (Algorithm a : {Algorithm::kCccc, Algorithm::kScccc, Algorithm::kTree}) {
        ExperimentConfig c = cfg;
        c.algorithm = a;
        if (a == Algorithm::kScccc) c.rho = std::max(1, std::min(cfg.rho, 4));
        const Json r = run_experiment(c);
        Json row;
        row["algorithm"] = to_string(a);
        row["parameters"] = r["parameters"];
        row["summary"] = r["summary"];
        row["wall_time_seconds"] = r["wall_time_seconds"];
        report["benchmark"].push_back(row);
      }
      emit(report.dump(2) + "\n", common.out);
      return 0;
    }

    if (oracle->parsed()) cfg.algorithm = Algorithm::kOracle;
    if (spectral->parsed()) cfg.algorithm = Algorithm::kSpectral;
    if (cover->parsed()) cfg.algorithm = parse_algorithm(cover_algo);
    if (treecmd->parsed()) cfg.algorithm = Algorithm::kTree;
    if (online->parsed()) cfg.algorithm = Algorithm::kOnline;
    if (online->parsed() && !cfg.input && cfg.instance.nodes == 30 && cfg.instance.edges == 0) {
      cfg.instance.nodes = 6;
      cfg.instance.edges = 9;
    }

    const Json report = run_experiment(cfg);
    emit(render(report, common.format), common.out);

    if (!dump_cover.empty()) {
      // Rebuild trial 0's cover; construction is deterministic.
      const std::uint64_t seed = cfg.trials == 1 ? cfg.seed : derive_seed(cfg.seed, 0);
      const LabeledInstance inst = make_instance(cfg, seed);
      const TreeOptions t{cfg.tree, derive_seed(seed, 11), cfg.best_of_k};
      CircuitCover c;
      if (cfg.algorithm == Algorithm::kScccc) {
        ScccOptions o;
        o.rho = cfg.rho;
        o.theta = cfg.theta;
        o.tree = t;
        o.pick = cfg.pick;
        o.seed = derive_seed(seed, 13);
        c = scccc(inst.graph, o);
      } else {
        CcccOptions o;
        o.rho = cfg.rho;
        o.tree = t;
        o.pick = cfg.pick;
        o.seed = derive_seed(seed, 13);
        c = cccc(inst.graph, o);
      }
      emit(cover_to_json(c).dump() + "\n", dump_cover);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
