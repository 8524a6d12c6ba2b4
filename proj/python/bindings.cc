#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "signlab/cover.h"
#include "signlab/edge_list.h"
#include "signlab/error.h"
#include "signlab/experiment.h"
#include "signlab/generators.h"
#include "signlab/online.h"
#include "signlab/oracles.h"
#include "signlab/spectral.h"
#include "signlab/tree_predict.h"

namespace py = pybind11;
using namespace signlab;

namespace {

using EdgeTuple = std::tuple<int, int, int>;

SignedGraph make_graph(int n, const std::vector<EdgeTuple>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v, s] : edges) out.push_back({u, v, s});
  return SignedGraph(n, std::move(out));
}

std::vector<EdgeTuple> edge_tuples(const SignedGraph& g) {
  std::vector<EdgeTuple> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.sign);
  return out;
}

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict witness_dict(const BalanceResult& r) {
  py::dict d;
  d["balanced"] = r.balanced;
  if (r.witness) {
    d["cycle_nodes"] = r.witness->nodes;
    d["cycle_edges"] = r.witness->edges;
    d["negative_count"] = r.witness->negative_count;
  }
  return d;
}

py::dict instance_dict(const LabeledInstance& inst) {
  py::dict d;
  d["graph"] = inst.graph;
  d["provenance"] = to_python(provenance_to_json(inst.provenance));
  return d;
}

ExperimentConfig config_from(const py::dict& kw) {
  const Json j = Json::parse(py::str(py::module_::import("json").attr("dumps")(kw)).cast<std::string>());
  ExperimentConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const Json& v = it.value();
    if (k == "algorithm") c.algorithm = parse_algorithm(v.get<std::string>());
    else if (k == "structure") c.instance.structure = v.get<std::string>();
    else if (k == "nodes") c.instance.nodes = v.get<int>();
    else if (k == "edges") c.instance.edges = v.get<int>();
    else if (k == "labeling") c.instance.labeling = v.get<std::string>();
    else if (k == "p") c.instance.p = v.get<double>();
    else if (k == "k") c.instance.k = v.get<int>();
    else if (k == "seed") c.seed = v.get<std::uint64_t>();
    else if (k == "trials") c.trials = v.get<int>();
    else if (k == "threads") c.threads = v.get<int>();
    else if (k == "rho") c.rho = v.get<int>();
    else if (k == "theta") { if (!v.is_null()) c.theta = v.get<double>(); }
    else if (k == "tree") c.tree = parse_tree_strategy(v.get<std::string>());
    else if (k == "best_of_k") c.best_of_k = v.get<int>();
    else if (k == "pick") c.pick = parse_sheaf_pick(v.get<std::string>());
    else if (k == "train_fraction") c.train_fraction = v.get<double>();
    else if (k == "learner") c.learner = v.get<std::string>();
    else if (k == "adversary") c.adversary = v.get<bool>();
    else if (k == "beta") c.beta = v.get<double>();
    else if (k == "verify") c.verify = v.get<bool>();
    else if (k == "include_instances") c.include_instances = v.get<bool>();
    else throw ConfigError("unknown experiment option '" + k + "'");
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed-graph link classification: oracles, spectral, tree and circuit-cover learners";

  static py::exception<Error> base(m, "SignlabError");
  static py::exception<LimitError> limit(m, "LimitError", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<GraphValidationError> invalid(m, "GraphValidationError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LimitError& e) {
      py::set_error(limit, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const GraphValidationError& e) {
      py::set_error(invalid, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<SignedGraph>(m, "SignedGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("node_count", &SignedGraph::node_count)
      .def_property_readonly("edge_count", &SignedGraph::edge_count)
      .def_property_readonly("edges", &edge_tuples)
      .def("signs", &SignedGraph::signs)
      .def("negative_count", &SignedGraph::negative_count)
      .def("find_edge", &SignedGraph::find_edge)
      .def("with_signs", [](const SignedGraph& g, const std::vector<int>& s) { return g.with_signs(s); })
      .def("__repr__", [](const SignedGraph& g) {
        return "SignedGraph(n=" + std::to_string(g.node_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("delta_exact", [](const SignedGraph& g) {
    const ClusteringCost c = delta_exact(g);
    return py::make_tuple(c.cost, c.witness.cluster);
  });
  m.def("delta2_exact", [](const SignedGraph& g) {
    const TwoClusteringCost c = delta2_exact(g);
    return py::make_tuple(c.cost, c.witness.side);
  });
  m.def("is_two_balanced", [](const SignedGraph& g) { return witness_dict(is_two_balanced(g)); });
  m.def("is_weakly_balanced", [](const SignedGraph& g) { return witness_dict(is_weakly_balanced(g)); });
  m.def("erm_partition", [](const SignedGraph& g, const std::vector<int>& train) {
    const ClusteringCost c = erm_partition(g, train);
    return py::make_tuple(c.cost, c.witness.cluster);
  });

  m.def("boolean_min_quadratic", [](const SignedGraph& g) {
    const BooleanMinimum b = boolean_min_quadratic(g);
    return py::make_tuple(b.value, b.argmin.side);
  });
  m.def("min_eigenpair", [](const SignedGraph& g, double tol) {
    const EigenResult r = min_eigenpair(signed_laplacian(g), tol);
    std::vector<double> v(r.vector.data(), r.vector.data() + r.vector.size());
    return py::make_tuple(r.value, v, r.residual);
  }, py::arg("graph"), py::arg("tol") = 1e-10);
  m.def("least_eigen_classifier",
        [](const SignedGraph& g, const std::vector<int>& train, const std::vector<int>& labels) {
          const SpectralPrediction p = least_eigen_classifier(g, train, labels);
          return py::make_tuple(p.test_edges, p.predictions);
        });

  m.def("tree_learner_run", [](const SignedGraph& g, const std::string& tree, std::uint64_t seed,
                               const std::vector<int>& flips) {
    const TreeLearnerRun r = tree_learner_run(g, TreeOptions{parse_tree_strategy(tree), seed, 16}, flips);
    const Rational s = average_stretch(r.tree, g);
    py::dict d;
    d["query_edges"] = r.query_edges;
    d["test_edges"] = r.test_edges;
    d["predictions"] = r.predictions;
    d["mistakes"] = r.mistakes;
    d["average_stretch"] = py::make_tuple(s.num, s.den);
    d["flip_bound_rhs"] = flip_bound_rhs(r.tree, g, flips);
    return d;
  }, py::arg("graph"), py::arg("tree") = "bfs", py::arg("seed") = 0,
     py::arg("flips") = std::vector<int>{});

  m.def("scccc", [](const SignedGraph& g, int rho, std::optional<double> theta,
                    const std::string& tree, const std::string& pick, std::uint64_t seed) {
    ScccOptions o;
    o.rho = rho;
    o.theta = theta;
    o.tree = TreeOptions{parse_tree_strategy(tree), seed, 16};
    o.pick = parse_sheaf_pick(pick);
    o.seed = seed;
    const CircuitCover c = scccc(g, o);
    Json j = cover_to_json(c);
    j["predictions"] = predict_with_cover(c, g);
    j["mistakes"] = count_mistakes(c, predict_with_cover(c, g), g);
    return to_python(j);
  }, py::arg("graph"), py::arg("rho") = 1, py::arg("theta") = py::none(),
     py::arg("tree") = "bfs", py::arg("pick") = "first", py::arg("seed") = 0);

  m.def("cccc", [](const SignedGraph& g, int rho, const std::string& tree,
                   const std::string& pick, std::uint64_t seed) {
    CcccOptions o;
    o.rho = rho;
    o.tree = TreeOptions{parse_tree_strategy(tree), seed, 16};
    o.pick = parse_sheaf_pick(pick);
    o.seed = seed;
    const CircuitCover c = cccc(g, o);
    Json j = cover_to_json(c);
    j["predictions"] = predict_with_cover(c, g);
    j["mistakes"] = count_mistakes(c, predict_with_cover(c, g), g);
    return to_python(j);
  }, py::arg("graph"), py::arg("rho") = 4, py::arg("tree") = "bfs",
     py::arg("pick") = "first", py::arg("seed") = 0);

  m.def("weighted_majority_run", [](const SignedGraph& g, const std::vector<int>& order, double beta) {
    const VersionSpaceTable t = build_version_space_table(g);
    const WeightedMajorityRun r = weighted_majority_run(t, g, order, beta);
    return py::make_tuple(r.run.mistakes, r.mistake_bound());
  }, py::arg("graph"), py::arg("order") = std::vector<int>{}, py::arg("beta") = 0.5);

  m.def("random_connected_graph", &make_random_connected_graph,
        py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("two_cluster_labeling", [](const SignedGraph& g, const std::vector<int>& side) {
    return instance_dict(gen_two_cluster_labeling(g, TwoClustering{side}));
  });
  m.def("p_random", [](const SignedGraph& balanced, double p, std::uint64_t seed) {
    return instance_dict(gen_p_random(LabeledInstance{balanced, {}}, p, seed));
  });
  m.def("clique_delta", [](int n, int k, std::uint64_t seed) {
    return instance_dict(gen_clique_delta(n, k, seed));
  });
  m.def("active_lowerbound_labeling", [](const SignedGraph& g, int k, std::uint64_t seed) {
    return instance_dict(gen_active_lowerbound_labeling(g, k, seed));
  });

  m.def("parse_edge_list", [](const std::string& text) {
    const EdgeListGraph e = parse_edge_list_string(text);
    return py::make_tuple(e.graph, e.node_names);
  });
  m.def("load_edge_list", [](const std::string& path) {
    const EdgeListGraph e = load_edge_list(path);
    return py::make_tuple(e.graph, e.node_names);
  });
  m.def("save_edge_list", [](const SignedGraph& g, const std::string& path,
                             const std::vector<std::string>& names) { save_edge_list(g, path, names); },
        py::arg("graph"), py::arg("path"), py::arg("names") = std::vector<std::string>{});

  m.def("run_experiment", [](py::kwargs kw) {
    const ExperimentConfig c = config_from(kw);
    Json report;
    {
      py::gil_scoped_release release;
      report = run_experiment(c);
    }
    return to_python(report);
  });
}
