#include "signlab/edge_list.h"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "signlab/error.h"

namespace signlab {
namespace {

std::optional<int> parse_sign(const std::string& token) {
  if (token == "+1" || token == "1" || token == "+") return kPositive;
  if (token == "-1" || token == "-") return kNegative;
  return std::nullopt;
}

}  // namespace

EdgeListGraph parse_edge_list(std::istream& in, bool allow_duplicates) {
  EdgeListGraph out;
  std::unordered_map<std::string, int> ids;
  std::unordered_map<std::uint64_t, std::pair<int, int>> seen;  // key -> (edge, line)
  std::vector<Edge> edges;
  auto id_of = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<int>(out.node_names.size()));
    if (inserted) out.node_names.push_back(token);
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, s, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b >> s)) throw ParseError(line_no, "expected `u v sign`");
    if (fields >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    const auto sign = parse_sign(s);
    if (!sign) throw ParseError(line_no, "invalid sign token '" + s + "'");
    if (a == b) throw ParseError(line_no, "self-loop on node '" + a + "'");
    const int u = id_of(a), v = id_of(b);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint32_t>(std::max(u, v));
    if (auto it = seen.find(key); it != seen.end()) {
      const auto [prior, prior_line] = it->second;
      if (!allow_duplicates) {
        throw ParseError(line_no, "duplicate pair (" + a + ", " + b +
                                      ") first seen on line " +
                                      std::to_string(prior_line));
      }
      if (edges[prior].sign != *sign) {
        throw ParseError(line_no, "conflicting signs for pair (" + a + ", " + b + ")");
      }
      continue;
    }
    seen.emplace(key, std::make_pair(static_cast<int>(edges.size()), line_no));
    edges.push_back({u, v, *sign});
  }
  out.graph = SignedGraph(static_cast<int>(out.node_names.size()), std::move(edges));
  return out;
}

EdgeListGraph parse_edge_list_string(const std::string& text, bool allow_duplicates) {
  std::istringstream in(text);
  return parse_edge_list(in, allow_duplicates);
}

EdgeListGraph load_edge_list(const std::string& path, bool allow_duplicates) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open edge list '" + path + "'");
  return parse_edge_list(in, allow_duplicates);
}

void write_edge_list(std::ostream& out, const SignedGraph& g,
                     const std::vector<std::string>& node_names) {
  if (!node_names.empty() && static_cast<int>(node_names.size()) != g.node_count()) {
    throw ConfigError("node name count does not match the graph");
  }
  auto name = [&](int v) {
    return node_names.empty() ? std::to_string(v) : node_names[v];
  };
  for (const Edge& e : g.edges()) {
    out << name(e.u) << ' ' << name(e.v) << ' '
        << (e.sign == kPositive ? "+1" : "-1") << '\n';
  }
}

void save_edge_list(const SignedGraph& g, const std::string& path,
                    const std::vector<std::string>& node_names) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write edge list '" + path + "'");
  write_edge_list(out, g, node_names);
  if (!out) throw ConfigError("write failed for '" + path + "'");
}

}  // namespace signlab
