#include "signlab/cover.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "signlab/error.h"

namespace signlab {
namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void require_root(const RootedSpanningForest& t, std::span<const char> alive,
                  int root) {
  if (root < 0 || root >= t.node_count() || !t.is_root(root) || !alive[root]) {
    throw Error(ErrorCategory::kValidation,
                "current tree must contain the root of the spanning tree");
  }
}

int find_set(std::vector<int>& dsu, int x) {
  while (dsu[x] != x) {
    dsu[x] = dsu[dsu[x]];
    x = dsu[x];
  }
  return x;
}

// Accumulates circuits from one or more scccc runs, in global ids.
class CoverBuilder {
 public:
  CoverBuilder(int node_count, int edge_count) : is_query_(edge_count, 0) {
    cover_.node_count = node_count;
    cover_.edge_count = edge_count;
  }

  void query(int e) { is_query_[e] = 1; }
  CircuitCover& cover() { return cover_; }

  CircuitCover finish() {
    std::vector<char> is_test(cover_.edge_count, 0);
    for (const Circuit& c : cover_.circuits) {
      cover_.test_edges.push_back(c.test_edge);
      is_test[c.test_edge] = 1;
    }
    std::sort(cover_.test_edges.begin(), cover_.test_edges.end());
    for (int e = 0; e < cover_.edge_count; ++e) {
      if (is_query_[e]) cover_.query_edges.push_back(e);
    }
    cover_.load.assign(cover_.edge_count, 0);
    for (const Circuit& c : cover_.circuits) {
      ++cover_.load[c.test_edge];
      for (int e : c.path) ++cover_.load[e];
    }
    return std::move(cover_);
  }

 private:
  std::vector<char> is_query_;
  CircuitCover cover_;
};

struct RunContext {
  const SignedGraph& g;             // local graph of this run
  std::span<const int> node_map;    // local -> global
  std::span<const int> edge_map;
  int rho;
  double threshold;
  TreeOptions tree;
  SheafPick pick;
  std::uint64_t seed;
  bool verify;
};

std::vector<int> map_ids(std::span<const int> ids, std::span<const int> map) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(map[id]);
  return out;
}

void run_scccc(const RunContext& ctx, CoverBuilder& builder) {
  const SignedGraph& g = ctx.g;
  const int n = g.node_count();
  CircuitCover& cover = builder.cover();
  const int run_id = cover.runs++;
  if (n == 0) return;

  const RootedSpanningForest t = make_spanning_tree(g, ctx.tree);
  for (int e : t.tree_edges()) {
    builder.query(ctx.edge_map[e]);
    ++cover.tree_query_count;
  }
  std::mt19937_64 rng(mix_seed(ctx.seed, 0x5eaf, static_cast<unsigned>(run_id)));

  const int root = t.roots().front();
  std::vector<char> alive(n, 1);
  std::vector<char> in_sub(n, 0);
  int remaining = n;
  while (remaining > 0) {
    const int j = tree_partition(g, t, alive, root, ctx.threshold);
    ++cover.tree_partition_calls;
    if (ctx.verify) {
      if (auto bad = check_tree_partition(g, t, alive, root, ctx.threshold, j)) {
        throw InvariantError("TreePartition postcondition violated: " + *bad);
      }
      ++cover.tree_partition_checks;
    }
    const std::vector<int> sub = alive_subtree(t, alive, j);
    for (int u : sub) in_sub[u] = 1;

    const int epoch_id = static_cast<int>(cover.epochs.size());
    cover.epochs.push_back({run_id, ctx.node_map[j], map_ids(sub, ctx.node_map)});

    // Non-tree edges inside T_q are predicted through their tree path.
    for (int u : sub) {
      for (const Incidence& inc : g.neighbors(u)) {
        if (t.is_tree_edge(inc.edge) || !in_sub[inc.neighbor] || inc.neighbor < u) {
          continue;
        }
        const TreePath path = tree_path(t, u, inc.neighbor);
        cover.circuits.push_back({ctx.edge_map[inc.edge], ctx.node_map[u],
                                  ctx.node_map[inc.neighbor],
                                  map_ids(path.edges, ctx.edge_map), epoch_id,
                                  CircuitKind::kWithinSubtree, -1});
      }
    }

    if (j != root) {
      const std::vector<Sheaf> sheaves =
          edge_partition(g, t, alive, root, j, ctx.rho, ctx.pick, &rng);
      for (const Sheaf& sheaf : sheaves) {
        ++cover.sheaf_count;
        const int q = sheaf.queried;
        builder.query(ctx.edge_map[q]);
        const Edge& qe = g.edge(q);
        const int q_in = in_sub[qe.u] ? qe.u : qe.v;
        const int q_out = g.other(q, q_in);
        for (int e : sheaf.edges) {
          if (e == q) continue;
          const Edge& te = g.edge(e);
          const int t_in = in_sub[te.u] ? te.u : te.v;
          const int t_out = g.other(e, t_in);
          // Path_T(i', i) -> (i, j) -> Path_T(j, j')
          std::vector<int> path = tree_path(t, t_in, q_in).edges;
          path.push_back(q);
          const std::vector<int> tail = tree_path(t, q_out, t_out).edges;
          path.insert(path.end(), tail.begin(), tail.end());
          cover.circuits.push_back({ctx.edge_map[e], ctx.node_map[t_in],
                                    ctx.node_map[t_out],
                                    map_ids(path, ctx.edge_map), epoch_id,
                                    CircuitKind::kSheaf, ctx.edge_map[q]});
        }
      }
    }

    for (int u : sub) {
      alive[u] = 0;
      in_sub[u] = 0;
    }
    remaining -= static_cast<int>(sub.size());
  }
}

}  // namespace

std::vector<int> alive_subtree(const RootedSpanningForest& t,
                               std::span<const char> alive, int v) {
  std::vector<int> out;
  if (!alive[v]) return out;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    auto kids = t.children(x);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (alive[*it]) stack.push_back(*it);
    }
  }
  return out;
}

int subtree_cut_size(const SignedGraph& g, const RootedSpanningForest& t,
                     std::span<const char> alive, int v) {
  const std::vector<int> sub = alive_subtree(t, alive, v);
  std::vector<char> mark(g.node_count(), 0);
  for (int u : sub) mark[u] = 1;
  int cut = 0;
  for (int u : sub) {
    for (const Incidence& inc : g.neighbors(u)) {
      if (t.is_tree_edge(inc.edge)) continue;
      if (alive[inc.neighbor] && !mark[inc.neighbor]) ++cut;
    }
  }
  return cut;
}

int tree_partition(const SignedGraph& g, const RootedSpanningForest& t,
                   std::span<const char> alive, int root, double theta) {
  require_root(t, alive, root);
  const int n = g.node_count();
  // record[v] ends up as |R_v|: the sum of the children's records, plus v's
  // own non-tree edges into T', minus twice the edges whose endpoints meet
  // first at v (they join two parts of T'_v and leave no record).
  std::vector<int> record(n, 0);
  std::vector<int> meets_at(n, 0);
  std::vector<int> dsu(n), top(n);
  std::vector<char> finished(n, 0);

  struct Frame {
    int node;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{root, 0}};
  dsu[root] = top[root] = root;
  while (!stack.empty()) {
    const int v = stack.back().node;
    auto kids = t.children(v);
    std::size_t& next = stack.back().next_child;
    while (next < kids.size() && !alive[kids[next]]) ++next;
    if (next < kids.size()) {
      const int c = kids[next++];
      dsu[c] = top[c] = c;
      stack.push_back({c, 0});
      continue;
    }
    stack.pop_back();

    finished[v] = 1;
    int own = 0;
    for (const Incidence& inc : g.neighbors(v)) {
      const int x = inc.neighbor;
      if (t.is_tree_edge(inc.edge) || !alive[x]) continue;
      ++own;
      // Offline LCA: x finished earlier, so its set's top is where v and x meet.
      if (finished[x]) ++meets_at[top[find_set(dsu, x)]];
    }
    record[v] += own - 2 * meets_at[v];
    if (v == root || record[v] >= theta) return v;

    const int p = t.parent(v);
    record[p] += record[v];
    dsu[find_set(dsu, v)] = find_set(dsu, p);
    top[find_set(dsu, p)] = p;
  }
  return root;
}

std::optional<std::string> check_tree_partition(const SignedGraph& g,
                                                const RootedSpanningForest& t,
                                                std::span<const char> alive,
                                                int root, double theta, int j) {
  if (j < 0 || j >= g.node_count() || !alive[j]) {
    return "returned node is not in the current tree";
  }
  for (int v : alive_subtree(t, alive, j)) {
    if (v == j) continue;
    const int cut = subtree_cut_size(g, t, alive, v);
    if (cut > theta) {
      return "node " + std::to_string(v) + " below the returned root has cut " +
             std::to_string(cut) + " > theta";
    }
  }
  if (j != root) {
    const int cut = subtree_cut_size(g, t, alive, j);
    if (cut < theta) {
      return "returned subtree has cut " + std::to_string(cut) + " < theta";
    }
  }
  return std::nullopt;
}

SheafPick parse_sheaf_pick(const std::string& name) {
  if (name == "first") return SheafPick::kFirst;
  if (name == "random") return SheafPick::kRandom;
  throw ConfigError("unknown sheaf pick '" + name + "'");
}

std::string to_string(SheafPick pick) {
  return pick == SheafPick::kFirst ? "first" : "random";
}

std::vector<Sheaf> edge_partition(const SignedGraph& g,
                                  const RootedSpanningForest& t,
                                  std::span<const char> alive, int root, int q,
                                  int rho, SheafPick pick,
                                  std::mt19937_64* rng) {
  require_root(t, alive, root);
  if (rho < 1) throw ConfigError("rho must be a positive integer");
  if (q == root) throw ConfigError("edge_partition needs a proper subtree");
  if (pick == SheafPick::kRandom && rng == nullptr) {
    throw ConfigError("random sheaf pick needs a random generator");
  }
  std::vector<char> in_sub(g.node_count(), 0);
  for (int u : alive_subtree(t, alive, q)) in_sub[u] = 1;

  // Depth-first first-visit order of T' \ T'_q from the root.
  std::vector<int> ordered;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int w = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.neighbors(w)) {
      if (in_sub[inc.neighbor] && !t.is_tree_edge(inc.edge)) {
        ordered.push_back(inc.edge);
      }
    }
    auto kids = t.children(w);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (alive[*it] && !in_sub[*it]) stack.push_back(*it);
    }
  }

  std::vector<Sheaf> sheaves;
  const int m = static_cast<int>(ordered.size());
  if (m == 0) return sheaves;
  const int full = std::max(1, m / (rho + 1));
  for (int k = 0; k < full; ++k) {
    const int begin = k * (rho + 1);
    const int end = (k + 1 == full) ? m : begin + rho + 1;
    Sheaf sheaf;
    sheaf.edges.assign(ordered.begin() + begin, ordered.begin() + end);
    if (pick == SheafPick::kFirst) {
      sheaf.queried = sheaf.edges.front();
    } else {
      std::uniform_int_distribution<int> uniform(
          0, static_cast<int>(sheaf.edges.size()) - 1);
      sheaf.queried = sheaf.edges[uniform(*rng)];
    }
    sheaves.push_back(std::move(sheaf));
  }
  return sheaves;
}

double scccc_threshold(int rho, double theta) {
  return std::max(theta, static_cast<double>(rho) + 1.0);
}

CircuitCover scccc(const SignedGraph& g, const ScccOptions& options) {
  if (options.rho < 1) throw ConfigError("scccc: rho must be >= 1");
  if (!is_connected(g)) {
    throw Error(ErrorCategory::kValidation, "scccc requires a connected graph");
  }
  const double cyclomatic =
      static_cast<double>(g.edge_count()) - g.node_count() + 1;
  const double theta = options.theta.value_or(std::sqrt(std::max(1.0, cyclomatic)));
  if (!(theta >= 1.0)) throw ConfigError("scccc: theta must be >= 1");

  std::vector<int> nodes(g.node_count()), edges(g.edge_count());
  std::iota(nodes.begin(), nodes.end(), 0);
  std::iota(edges.begin(), edges.end(), 0);
  CoverBuilder builder(g.node_count(), g.edge_count());
  TreeOptions tree = options.tree;
  tree.seed = mix_seed(options.seed, 0x7233, tree.seed);
  run_scccc({g, nodes, edges, options.rho, scccc_threshold(options.rho, theta),
             tree, options.pick, options.seed, options.verify_tree_partition},
            builder);
  builder.cover().batches = 1;
  return builder.finish();
}

CircuitCover cccc(const SignedGraph& g, const CcccOptions& options) {
  const int n = g.node_count();
  const int m = g.edge_count();
  if (m == 0 || n == 0) throw ConfigError("cccc: empty graph");
  if (options.rho <= 3 || static_cast<long long>(options.rho) * n > m) {
    throw ConfigError("cccc: rho must satisfy 3 < rho <= |E|/|V| (rho=" +
                      std::to_string(options.rho) + ", |E|/|V|=" +
                      std::to_string(static_cast<double>(m) / n) + ")");
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (options.shuffle_batches) {
    std::mt19937_64 rng(mix_seed(options.seed, 0xba7c, 0));
    std::shuffle(order.begin(), order.end(), rng);
  }

  CoverBuilder builder(n, m);
  const int batch_size = options.rho * n;
  int batch = 0;
  for (int pos = 0; pos < m; pos += batch_size, ++batch) {
    const int size = std::min(m - pos, batch_size);
    const double theta = std::sqrt(static_cast<double>(size));
    std::vector<Edge> batch_edges;
    batch_edges.reserve(size);
    for (int k = 0; k < size; ++k) batch_edges.push_back(g.edge(order[pos + k]));
    const SignedGraph batch_graph(n, std::move(batch_edges));
    const Partition comps = connected_components(batch_graph);

    std::vector<std::vector<int>> comp_nodes(comps.cluster_count());
    for (int v = 0; v < n; ++v) comp_nodes[comps.cluster[v]].push_back(v);
    std::vector<std::vector<int>> comp_edges(comps.cluster_count());
    for (int k = 0; k < size; ++k) {
      comp_edges[comps.cluster[batch_graph.edge(k).u]].push_back(k);
    }
    std::vector<int> local(n, -1);
    for (int c = 0; c < comps.cluster_count(); ++c) {
      if (comp_edges[c].empty()) continue;
      for (int i = 0; i < static_cast<int>(comp_nodes[c].size()); ++i) {
        local[comp_nodes[c][i]] = i;
      }
      std::vector<Edge> sub_edges;
      std::vector<int> edge_map;
      for (int k : comp_edges[c]) {
        const Edge& e = batch_graph.edge(k);
        sub_edges.push_back({local[e.u], local[e.v], e.sign});
        edge_map.push_back(order[pos + k]);
      }
      const SignedGraph sub(static_cast<int>(comp_nodes[c].size()),
                            std::move(sub_edges));
      TreeOptions tree = options.tree;
      tree.seed = mix_seed(options.seed, static_cast<unsigned>(batch) + 1,
                           static_cast<unsigned>(c));
      run_scccc({sub, comp_nodes[c], edge_map, options.rho,
                 scccc_threshold(options.rho, theta), tree, options.pick,
                 mix_seed(options.seed, 0xcccc, static_cast<unsigned>(batch)),
                 options.verify_tree_partition},
                builder);
    }
  }
  builder.cover().batches = batch;
  return builder.finish();
}

std::vector<int> predict_with_cover(const CircuitCover& cover,
                                    std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != cover.edge_count) {
    throw Error(ErrorCategory::kValidation, "label vector length mismatch");
  }
  std::vector<int> out;
  out.reserve(cover.circuits.size());
  for (const Circuit& c : cover.circuits) {
    int product = kPositive;
    for (int e : c.path) {
      if (labels[e] != kPositive && labels[e] != kNegative) {
        throw Error(ErrorCategory::kValidation,
                    "missing label for queried edge " + std::to_string(e));
      }
      product *= labels[e];
    }
    out.push_back(product);
  }
  return out;
}

std::vector<int> predict_with_cover(const CircuitCover& cover,
                                    const SignedGraph& labeled) {
  const std::vector<int> labels = labeled.signs();
  return predict_with_cover(cover, labels);
}

int count_mistakes(const CircuitCover& cover, std::span<const int> predictions,
                   const SignedGraph& labeled) {
  int mistakes = 0;
  for (std::size_t k = 0; k < cover.circuits.size(); ++k) {
    if (predictions[k] != labeled.sign(cover.circuits[k].test_edge)) ++mistakes;
  }
  return mistakes;
}

CoverStats cover_stats(const CircuitCover& cover) {
  CoverStats s;
  s.query_count = static_cast<int>(cover.query_edges.size());
  s.test_count = static_cast<int>(cover.test_edges.size());
  s.tree_query_count = cover.tree_query_count;
  for (int l : cover.load) {
    s.max_load = std::max(s.max_load, l);
    ++s.load_histogram[l];
  }
  long long query_load = 0;
  for (int e : cover.query_edges) query_load += cover.load[e];
  s.mean_query_load =
      s.query_count ? static_cast<double>(query_load) / s.query_count : 0.0;
  const int extra = s.query_count - s.tree_query_count;
  s.ratio_excess = extra > 0 ? static_cast<double>(s.test_count) / extra
                             : std::numeric_limits<double>::infinity();
  s.ratio_total = s.query_count > 0
                      ? static_cast<double>(s.test_count) / s.query_count
                      : std::numeric_limits<double>::infinity();
  return s;
}

CoverVerification verify_cover(const CircuitCover& cover, const SignedGraph& g) {
  CoverVerification out;
  auto fail = [&out](std::string what) {
    out.ok = false;
    out.violations.push_back(std::move(what));
  };
  const int m = g.edge_count();
  if (cover.edge_count != m || cover.node_count != g.node_count()) {
    fail("cover size does not match graph");
    return out;
  }

  std::vector<int> role(m, 0);  // 1 query, 2 test
  for (int e : cover.query_edges) {
    if (e < 0 || e >= m) {
      fail("query edge id out of range");
      continue;
    }
    if (role[e]) fail("edge " + std::to_string(e) + " listed twice");
    role[e] = 1;
  }
  for (int e : cover.test_edges) {
    if (e < 0 || e >= m) {
      fail("test edge id out of range");
      continue;
    }
    if (role[e]) fail("edge " + std::to_string(e) + " is both query and test");
    role[e] = 2;
  }
  for (int e = 0; e < m; ++e) {
    if (!role[e]) fail("edge " + std::to_string(e) + " is neither query nor test");
  }

  // Node -> removal epoch, per run, to check sheaf paths stay outside T_q.
  std::unordered_map<long long, int> removed_at;
  auto key = [](int run, int node) {
    return (static_cast<long long>(run) << 32) | static_cast<unsigned>(node);
  };
  for (int k = 0; k < static_cast<int>(cover.epochs.size()); ++k) {
    for (int v : cover.epochs[k].subtree_nodes) {
      removed_at[key(cover.epochs[k].run, v)] = k;
    }
  }

  std::vector<int> recount(m, 0);
  std::vector<int> test_seen(m, 0);
  for (std::size_t ci = 0; ci < cover.circuits.size(); ++ci) {
    const Circuit& c = cover.circuits[ci];
    const std::string tag = "circuit " + std::to_string(ci);
    if (c.test_edge < 0 || c.test_edge >= m) {
      fail(tag + ": test edge out of range");
      continue;
    }
    if (test_seen[c.test_edge]++) {
      fail(tag + ": duplicated test edge " + std::to_string(c.test_edge));
    }
    if (role[c.test_edge] != 2) fail(tag + ": test edge not in the test set");
    const Edge& te = g.edge(c.test_edge);
    if (!((te.u == c.start && te.v == c.end) || (te.v == c.start && te.u == c.end))) {
      fail(tag + ": endpoints do not match the test edge");
    }

    std::unordered_set<int> edges_in{c.test_edge};
    std::vector<int> nodes{c.start};
    int at = c.start;
    bool chained = true;
    for (int e : c.path) {
      if (e < 0 || e >= m) {
        chained = false;
        break;
      }
      if (role[e] != 1) fail(tag + ": path edge " + std::to_string(e) + " is not queried");
      if (e == c.test_edge) fail(tag + ": path repeats the test edge");
      const Edge& pe = g.edge(e);
      if (pe.u != at && pe.v != at) {
        chained = false;
        break;
      }
      at = g.other(e, at);
      nodes.push_back(at);
      edges_in.insert(e);
    }
    if (!chained || at != c.end) {
      fail(tag + ": path does not close the circuit");
      continue;
    }
    for (int e : edges_in) ++recount[e];

    if (c.epoch < 0 || c.epoch >= static_cast<int>(cover.epochs.size())) {
      fail(tag + ": epoch out of range");
      continue;
    }
    const Epoch& ep = cover.epochs[c.epoch];
    const std::unordered_set<int> sub(ep.subtree_nodes.begin(), ep.subtree_nodes.end());
    if (c.kind == CircuitKind::kWithinSubtree) {
      for (int v : nodes) {
        if (!sub.count(v)) {
          fail(tag + ": within-subtree path leaves its epoch's subtree");
          break;
        }
      }
    } else {
      auto crossing = std::find(c.path.begin(), c.path.end(), c.sheaf_query);
      if (crossing == c.path.end()) {
        fail(tag + ": sheaf path misses its queried edge");
        continue;
      }
      const std::size_t split = static_cast<std::size_t>(crossing - c.path.begin());
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        const bool inside = sub.count(nodes[k]) > 0;
        if (k <= split && !inside) {
          fail(tag + ": sheaf path leaves the subtree before crossing");
          break;
        }
        if (k > split) {
          auto it = removed_at.find(key(ep.run, nodes[k]));
          if (inside || it == removed_at.end() || it->second <= c.epoch) {
            fail(tag + ": sheaf path uses a node outside the remaining tree");
            break;
          }
        }
      }
    }
  }
  for (int e = 0; e < m; ++e) {
    if (role[e] == 2 && test_seen[e] == 0) {
      fail("test edge " + std::to_string(e) + " has no circuit");
    }
  }
  if (static_cast<int>(cover.load.size()) != m) {
    fail("load ledger size mismatch");
  } else {
    for (int e = 0; e < m; ++e) {
      if (cover.load[e] != recount[e]) {
        fail("load of edge " + std::to_string(e) + " is " +
             std::to_string(cover.load[e]) + ", recount gives " +
             std::to_string(recount[e]));
      }
      if (role[e] == 2 && cover.load[e] != 1) {
        fail("test edge " + std::to_string(e) + " has load != 1");
      }
    }
  }
  return out;
}

}  // namespace signlab
