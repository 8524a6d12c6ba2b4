#include "signlab/generators.h"

#include <algorithm>
#include <random>
#include <set>

#include "signlab/error.h"

namespace signlab {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over a combined state.
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

nlohmann::ordered_json provenance_to_json(const Provenance& p) {
  nlohmann::ordered_json j;
  j["generator"] = p.generator;
  j["parameters"] = p.parameters;
  j["seed"] = p.seed;
  if (p.bipartition) j["bipartition"] = p.bipartition->side;
  if (!p.flips.empty()) j["flips"] = p.flips;
  if (!p.triangles.empty()) j["triangles"] = p.triangles;
  if (!p.randomized_edges.empty()) j["randomized_edges"] = p.randomized_edges;
  return j;
}

SignedGraph make_path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, kPositive});
  return SignedGraph(n, std::move(edges));
}

SignedGraph make_cycle_graph(int n) {
  if (n < 3) throw ConfigError("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, kPositive});
  return SignedGraph(n, std::move(edges));
}

SignedGraph make_complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, kPositive});
  }
  return SignedGraph(n, std::move(edges));
}

SignedGraph make_star_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i, kPositive});
  return SignedGraph(n, std::move(edges));
}

SignedGraph make_random_connected_graph(int n, int edge_count,
                                        std::uint64_t seed) {
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || edge_count < n - 1 || edge_count > max_edges) {
    throw ConfigError("random connected graph: need n-1 <= |E| <= n(n-1)/2");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<int, int>> used;
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (!used.emplace(a, b).second) return false;
    edges.push_back({a, b, kPositive});
    return true;
  };
  for (int k = 1; k < n; ++k) {
    std::uniform_int_distribution<int> earlier(0, k - 1);
    add(perm[k], perm[earlier(rng)]);
  }
  if (edge_count > max_edges / 2) {
    // Dense: sample the missing pairs from the full list.
    std::vector<std::pair<int, int>> rest;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!used.count({a, b})) rest.emplace_back(a, b);
      }
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    for (std::size_t k = 0; static_cast<int>(edges.size()) < edge_count; ++k) {
      add(rest[k].first, rest[k].second);
    }
  } else {
    std::uniform_int_distribution<int> node(0, n - 1);
    while (static_cast<int>(edges.size()) < edge_count) {
      const int a = node(rng), b = node(rng);
      if (a != b) add(a, b);
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return SignedGraph(n, std::move(edges));
}

SignedGraph make_random_graph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j, kPositive});
    }
  }
  return SignedGraph(n, std::move(edges));
}

TwoClustering random_bipartition(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  TwoClustering x;
  x.side.resize(n);
  for (int& s : x.side) s = coin(rng) ? kPositive : kNegative;
  return x;
}

LabeledInstance gen_two_cluster_labeling(const SignedGraph& g,
                                         const TwoClustering& bipartition) {
  if (bipartition.size() != g.node_count()) {
    throw ConfigError("bipartition size does not match the graph");
  }
  std::vector<int> labels(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    labels[e] = bipartition.side[edge.u] == bipartition.side[edge.v] ? kPositive
                                                                     : kNegative;
  }
  LabeledInstance out{g.with_signs(labels), {}};
  out.provenance.generator = "two-cluster";
  out.provenance.bipartition = bipartition;
  return out;
}

LabeledInstance gen_p_random(const LabeledInstance& balanced, double p,
                             std::uint64_t seed) {
  if (!(p >= 0.0 && p < 1.0)) throw ConfigError("p must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(p);
  std::vector<int> labels = balanced.graph.signs();
  LabeledInstance out;
  out.provenance = balanced.provenance;
  out.provenance.generator = "p-random";
  out.provenance.parameters["p"] = p;
  out.provenance.parameters["base"] = balanced.provenance.generator;
  out.provenance.seed = seed;
  out.provenance.flips.clear();
  for (int e = 0; e < static_cast<int>(labels.size()); ++e) {
    if (flip(rng)) {
      labels[e] = -labels[e];
      out.provenance.flips.push_back(e);
    }
  }
  out.graph = balanced.graph.with_signs(labels);
  return out;
}

LabeledInstance gen_clique_delta(int n, int K, std::uint64_t seed,
                                 int max_attempts) {
  if (n < 0 || K < 0 || 6LL * K > static_cast<long long>(n - 3) * (n - 4) ||
      (K > 0 && n < 5)) {
    throw ConfigError("clique Delta: K=" + std::to_string(K) +
                      " outside 0 <= K <= (n-3)(n-4)/6 for n=" + std::to_string(n));
  }
  const SignedGraph clique = make_complete_graph(n);
  std::vector<std::array<int, 3>> all;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
    }
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<char> used(clique.edge_count(), 0);
    std::vector<std::array<int, 3>> picked;
    for (const auto& tri : all) {
      if (static_cast<int>(picked.size()) == K) break;
      const int e0 = *clique.find_edge(tri[0], tri[1]);
      const int e1 = *clique.find_edge(tri[1], tri[2]);
      const int e2 = *clique.find_edge(tri[0], tri[2]);
      if (used[e0] || used[e1] || used[e2]) continue;
      used[e0] = used[e1] = used[e2] = 1;
      picked.push_back(tri);
    }
    if (static_cast<int>(picked.size()) < K) continue;
    std::vector<int> labels(clique.edge_count(), kPositive);
    std::uniform_int_distribution<int> which(0, 2);
    for (const auto& tri : picked) {
      const int k = which(rng);
      labels[*clique.find_edge(tri[k], tri[(k + 1) % 3])] = kNegative;
    }
    LabeledInstance out{clique.with_signs(labels), {}};
    out.provenance.generator = "clique-delta";
    out.provenance.parameters["n"] = n;
    out.provenance.parameters["K"] = K;
    out.provenance.parameters["attempts"] = attempt + 1;
    out.provenance.seed = seed;
    out.provenance.triangles = std::move(picked);
    return out;
  }
  throw LimitError("clique Delta: no " + std::to_string(K) +
                   " edge-disjoint triangles found after " +
                   std::to_string(max_attempts) + " attempts");
}

LabeledInstance gen_active_lowerbound_labeling(const SignedGraph& g, int K,
                                               std::uint64_t seed) {
  if (K < 0 || K > g.edge_count()) {
    throw ConfigError("active lower bound: K must lie in [0, |E|]");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> ids(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) ids[e] = e;
  // Partial Fisher-Yates: the first K entries are a uniform K-subset.
  for (int k = 0; k < K; ++k) {
    std::uniform_int_distribution<int> pick(k, g.edge_count() - 1);
    std::swap(ids[k], ids[pick(rng)]);
  }
  std::vector<int> labels(g.edge_count(), kPositive);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> pool(ids.begin(), ids.begin() + K);
  std::sort(pool.begin(), pool.end());
  for (int e : pool) labels[e] = coin(rng) ? kPositive : kNegative;
  LabeledInstance out{g.with_signs(labels), {}};
  out.provenance.generator = "active-lowerbound";
  out.provenance.parameters["K"] = K;
  out.provenance.seed = seed;
  out.provenance.randomized_edges = std::move(pool);
  return out;
}

}  // namespace signlab
