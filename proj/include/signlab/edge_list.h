#ifndef SIGNLAB_EDGE_LIST_H_
#define SIGNLAB_EDGE_LIST_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "signlab/graph.h"

namespace signlab {

// One edge per line: `u v s` with s in {+1, 1, -1, +, -}. `#` starts a
// comment. Node tokens are arbitrary strings given dense ids in first-seen
// order.
struct EdgeListGraph {
  SignedGraph graph;
  std::vector<std::string> node_names;  // id -> token
};

EdgeListGraph parse_edge_list(std::istream& in, bool allow_duplicates = false);
EdgeListGraph parse_edge_list_string(const std::string& text,
                                     bool allow_duplicates = false);
EdgeListGraph load_edge_list(const std::string& path,
                             bool allow_duplicates = false);

// Names default to the decimal node ids. Isolated nodes cannot be expressed
// in the format and are dropped on reload.
void write_edge_list(std::ostream& out, const SignedGraph& g,
                     const std::vector<std::string>& node_names = {});
void save_edge_list(const SignedGraph& g, const std::string& path,
                    const std::vector<std::string>& node_names = {});

}  // namespace signlab

#endif  // SIGNLAB_EDGE_LIST_H_
