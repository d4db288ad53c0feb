#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cqa/cycle_query.hpp"
#include "cqa/database.hpp"
#include "cqa/digraph.hpp"

namespace cqa {

/// Directed graph of an AC_k instance. Vertex v stands for the constant
/// `vertices[v].second` in position `vertices[v].first` (0-based), so equal
/// constants in different positions are different vertices. Every R_i-fact
/// R_i(a;b) is an edge (i,a) -> (i+1 mod k, b).
struct CycleInstanceGraph {
  std::size_t k = 0;
  std::vector<std::pair<std::size_t, Symbol>> vertices;
  Adjacency successors;
  /// The fact behind edge (v, successors[v][j]) is edge_facts[v][j].
  std::vector<std::vector<Fact>> edge_facts;
  /// Each S_k-fact as the vertex sequence of its k-cycle, starting in position 0.
  std::set<std::vector<std::size_t>> forbidden_cycles;

  std::size_t vertex_count() const { return vertices.size(); }
  /// Vertex id of (position, constant), if present.
  std::optional<std::size_t> find(std::size_t position, const Symbol& constant) const;

 private:
  friend CycleInstanceGraph build_cycle_instance_graph(const UncertainDatabase&, const Query&,
                                                       const CycleQueryMatch&);
  std::map<std::pair<std::size_t, Symbol>, std::size_t> index_;
};

/// Builds the graph from the facts of the query's relations. Edge targets
/// without outgoing edges still get a vertex. Forbidden cycles whose
/// vertices are missing are dropped, since no repair can contain them.
CycleInstanceGraph build_cycle_instance_graph(const UncertainDatabase& db, const Query& q,
                                              const CycleQueryMatch& match);

}  // namespace cqa
