#pragma once

#include <string>

#include "cqa/attack_graph.hpp"
#include "cqa/join_tree.hpp"

namespace cqa {

/// Graphviz digraph: one node per atom labelled with its text, weak
/// attacks solid, strong attacks bold red.
std::string to_dot(const AttackGraph& graph);

/// Graphviz graph of the tree with each edge labelled by its variables.
std::string to_dot(const JoinTree& tree);

}  // namespace cqa
