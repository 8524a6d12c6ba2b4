#ifndef SIGNLAB_GENERATORS_H_
#define SIGNLAB_GENERATORS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "signlab/graph.h"

namespace signlab {

// Where an instance came from, including the structure it was planted with.
struct Provenance {
  std::string generator;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  std::optional<TwoClustering> bipartition;
  std::vector<int> flips;                        // edge ids
  std::vector<std::array<int, 3>> triangles;     // node triples
  std::vector<int> randomized_edges;             // active lower-bound pool
};

struct LabeledInstance {
  SignedGraph graph;
  Provenance provenance;
};

nlohmann::ordered_json provenance_to_json(const Provenance& p);

// Structure generators (all edges +1).
SignedGraph make_path_graph(int n);
SignedGraph make_cycle_graph(int n);
SignedGraph make_complete_graph(int n);
SignedGraph make_star_graph(int n);  // center 0
// Connected graph: uniform random labelled tree plus distinct random extra
// edges until `edge_count` edges exist.
SignedGraph make_random_connected_graph(int n, int edge_count,
                                        std::uint64_t seed);
// G(n, p) style graph, possibly disconnected.
SignedGraph make_random_graph(int n, double density, std::uint64_t seed);

TwoClustering random_bipartition(int n, std::uint64_t seed);

// Y_ij = +1 iff i and j are on the same side.
LabeledInstance gen_two_cluster_labeling(const SignedGraph& g,
                                         const TwoClustering& bipartition);

// Flips every edge of a balanced instance independently with probability p.
LabeledInstance gen_p_random(const LabeledInstance& balanced, double p,
                             std::uint64_t seed);

// Clique on n nodes with K edge-disjoint triangles, one negative edge each.
// Requires 0 <= K <= (n-3)(n-4)/6.
LabeledInstance gen_clique_delta(int n, int K, std::uint64_t seed,
                                 int max_attempts = 64);

// All +1 except K uniformly chosen edges with uniform random signs.
LabeledInstance gen_active_lowerbound_labeling(const SignedGraph& g, int K,
                                               std::uint64_t seed);

// Derives an independent stream seed for (master seed, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace signlab

#endif  // SIGNLAB_GENERATORS_H_
