#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cqa/digraph.hpp"
#include "cqa/join_tree.hpp"
#include "cqa/query.hpp"

namespace cqa {

enum class AttackStrength { Weak, Strong };

struct AttackEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  AttackStrength strength = AttackStrength::Weak;

  bool operator==(const AttackEdge&) const = default;
};

/// Directed attack graph over the atoms of a query (vertex i is `query()[i]`).
class AttackGraph {
 public:
  AttackGraph(Query q, std::vector<AttackEdge> edges);

  const Query& query() const { return query_; }
  std::size_t vertex_count() const { return query_.size(); }
  /// Sorted by (from, to).
  const std::vector<AttackEdge>& edges() const { return edges_; }

  bool attacks(std::size_t from, std::size_t to) const;
  std::optional<AttackStrength> strength(std::size_t from, std::size_t to) const;
  const std::vector<std::size_t>& successors(std::size_t v) const { return successors_[v]; }
  std::size_t indegree(std::size_t v) const { return indegree_[v]; }
  const Adjacency& adjacency() const { return successors_; }

  bool has_cycle() const;

  bool operator==(const AttackGraph& other) const { return edges_ == other.edges_; }

 private:
  Query query_;
  std::vector<AttackEdge> edges_;
  std::vector<std::vector<int>> matrix_;  // -1 none, else AttackStrength
  Adjacency successors_;
  std::vector<std::size_t> indegree_;
};

/// Builds the attack graph from the join tree produced by build_join_tree.
/// Throws SelfJoinError or CyclicQueryError.
AttackGraph attack_graph(const Query& q);

/// Builds the attack graph from a caller-supplied join tree.
AttackGraph attack_graph(const JoinTree& tree);

/// A 2-cycle whose edge `strong_from -> strong_to` is strong.
struct StrongTwoCycle {
  std::size_t strong_from = 0;
  std::size_t strong_to = 0;

  bool operator==(const StrongTwoCycle&) const = default;
};

/// First strong 2-cycle in vertex order, if any. Any strong cycle in an
/// attack graph implies a strong 2-cycle, so empty means no strong cycle.
std::optional<StrongTwoCycle> find_strong_two_cycle(const AttackGraph& g);

/// True iff no cycle contains a strong edge and every cycle is terminal
/// (no edge leaves the vertex set of the cycle). Vacuous on acyclic graphs.
bool all_cycles_weak_and_terminal(const AttackGraph& g);

}  // namespace cqa
