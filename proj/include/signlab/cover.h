#ifndef SIGNLAB_COVER_H_
#define SIGNLAB_COVER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "signlab/forest.h"
#include "signlab/graph.h"
#include "signlab/tree_predict.h"

namespace signlab {

// ---------------------------------------------------------------------------
// Subtree primitives. A "current tree" T' is the set of alive nodes of a
// rooted spanning tree t; it always contains the root of t and is closed
// under taking parents, so the alive descendants of any alive node form the
// subtree T'_v.
// ---------------------------------------------------------------------------

// Alive descendants of v (v included), in depth-first preorder.
std::vector<int> alive_subtree(const RootedSpanningForest& t,
                               std::span<const char> alive, int v);

// |E_G(T'_v, T')|: non-tree edges joining T'_v to the rest of T'.
int subtree_cut_size(const SignedGraph& g, const RootedSpanningForest& t,
                     std::span<const char> alive, int v);

// Depth-first record propagation: returns the first node j, in post-order,
// whose record R_j = E_G(T'_j, T') reaches `theta`, or `root` if none does.
int tree_partition(const SignedGraph& g, const RootedSpanningForest& t,
                   std::span<const char> alive, int root, double theta);

// Exhaustively recomputes every cut inside T'_j and checks
// (i) |E_G(T'_v,T')| <= theta for v != j in T'_j and
// (ii) |E_G(T'_j,T')| >= theta unless j is the root.
std::optional<std::string> check_tree_partition(const SignedGraph& g,
                                                const RootedSpanningForest& t,
                                                std::span<const char> alive,
                                                int root, double theta, int j);

enum class SheafPick { kFirst, kRandom };

SheafPick parse_sheaf_pick(const std::string& name);
std::string to_string(SheafPick pick);

struct Sheaf {
  std::vector<int> edges;  // cut edges in visit order
  int queried = -1;        // member edge whose label is queried
};

// Splits E_G(T'_q, T') into runs of rho+1 edges, ordered by the depth-first
// first visit (from the root, outside T'_q) of each edge's outside endpoint;
// edges at one node keep adjacency order. A remainder joins the last sheaf;
// a cut smaller than rho+1 forms a single sheaf.
std::vector<Sheaf> edge_partition(const SignedGraph& g,
                                  const RootedSpanningForest& t,
                                  std::span<const char> alive, int root, int q,
                                  int rho, SheafPick pick,
                                  std::mt19937_64* rng = nullptr);

// ---------------------------------------------------------------------------
// Circuit covers.
// ---------------------------------------------------------------------------

enum class CircuitKind { kWithinSubtree, kSheaf };

struct Circuit {
  int test_edge = -1;
  int start = -1;          // path runs start -> end, the test edge's endpoints
  int end = -1;
  std::vector<int> path;   // queried edges closing the cycle
  int epoch = -1;          // index into CircuitCover::epochs
  CircuitKind kind = CircuitKind::kWithinSubtree;
  int sheaf_query = -1;    // the sheaf's queried edge (kSheaf only)
};

// One TreePartition round: the detached subtree T_q.
struct Epoch {
  int run = 0;             // scccc invocation this epoch belongs to
  int subtree_root = -1;
  std::vector<int> subtree_nodes;
};

struct CircuitCover {
  int node_count = 0;
  int edge_count = 0;
  std::vector<Circuit> circuits;
  std::vector<int> query_edges;  // sorted
  std::vector<int> test_edges;   // sorted
  std::vector<int> load;         // per edge id
  std::vector<Epoch> epochs;
  int tree_query_count = 0;      // spanning-forest edges among the queries
  int sheaf_count = 0;
  int runs = 0;                  // scccc invocations
  int batches = 0;               // cccc edge batches (1 for scccc)
  int tree_partition_calls = 0;
  int tree_partition_checks = 0;
};

struct ScccOptions {
  int rho = 1;
  std::optional<double> theta;  // default sqrt(|E| - |V| + 1), at least 1
  TreeOptions tree;
  SheafPick pick = SheafPick::kFirst;
  std::uint64_t seed = 0;
  // Run check_tree_partition after every TreePartition call; a failure
  // throws InvariantError.
  bool verify_tree_partition = false;
};

struct CcccOptions {
  int rho = 4;
  TreeOptions tree;
  SheafPick pick = SheafPick::kFirst;
  std::uint64_t seed = 0;
  bool shuffle_batches = false;  // default: batches in stored edge order
  bool verify_tree_partition = false;
};

// Threshold actually handed to TreePartition: max(theta, rho + 1), so every
// cut that gets split holds at least one full sheaf.
double scccc_threshold(int rho, double theta);

// Requires a connected graph. Only the structure of g is used.
CircuitCover scccc(const SignedGraph& g, const ScccOptions& options);

// Requires 3 < rho and rho * |V| <= |E|.
CircuitCover cccc(const SignedGraph& g, const CcccOptions& options);

// Prediction per circuit (same order as cover.circuits): the product of the
// labels along its path. `labels[e]` is 0 for unknown; a path through an
// unknown label throws.
std::vector<int> predict_with_cover(const CircuitCover& cover,
                                    std::span<const int> labels);
std::vector<int> predict_with_cover(const CircuitCover& cover,
                                    const SignedGraph& labeled);

int count_mistakes(const CircuitCover& cover, std::span<const int> predictions,
                   const SignedGraph& labeled);

struct CoverStats {
  int max_load = 0;
  double mean_query_load = 0.0;
  std::map<int, int> load_histogram;  // load -> number of edges
  int query_count = 0;
  int test_count = 0;
  int tree_query_count = 0;
  // test / (Q - tree queries); +inf when every query is a tree edge.
  double ratio_excess = 0.0;
  // test / Q
  double ratio_total = 0.0;
};

CoverStats cover_stats(const CircuitCover& cover);

struct CoverVerification {
  bool ok = true;
  std::vector<std::string> violations;
};

CoverVerification verify_cover(const CircuitCover& cover, const SignedGraph& g);

}  // namespace signlab

#endif  // SIGNLAB_COVER_H_
