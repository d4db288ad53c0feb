#include "cqa/dot.hpp"

#include "cqa/query_parser.hpp"

namespace cqa {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string nodes(const Query& q) {
  std::string out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + quoted(render(q[i])) + "];\n";
  }
  return out;
}

}  // namespace

std::string to_dot(const AttackGraph& graph) {
  std::string out = "digraph attack_graph {\n  node [shape=box];\n" + nodes(graph.query());
  for (const AttackEdge& e : graph.edges()) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to);
    out += e.strength == AttackStrength::Strong ? " [style=bold, color=red];\n" : " [style=solid];\n";
  }
  return out + "}\n";
}

std::string to_dot(const JoinTree& tree) {
  std::string out = "graph join_tree {\n  node [shape=box];\n" + nodes(tree.query());
  for (const JoinTreeEdge& e : tree.edges()) {
    std::string label = "{";
    bool first = true;
    for (const Symbol& v : e.label) {
      if (!first) label += ",";
      label += v;
      first = false;
    }
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b) + " [label=" + quoted(label + "}") + "];\n";
  }
  return out + "}\n";
}

}  // namespace cqa
