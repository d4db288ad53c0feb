#pragma once

#include <cstddef>
#include <vector>

namespace cqa {

/// Adjacency-list digraph over vertices 0..n-1.
using Adjacency = std::vector<std::vector<std::size_t>>;

/// Tarjan's algorithm, iterative. Returns the component id of every vertex;
/// ids are in reverse topological order of the condensation.
std::vector<std::size_t> strongly_connected_components(const Adjacency& graph,
                                                       std::size_t* component_count = nullptr);

}  // namespace cqa
