#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "cqa/query.hpp"

namespace cqa {

struct JoinTreeEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  VarSet label;  // vars(a) ∩ vars(b)

  bool operator==(const JoinTreeEdge&) const = default;
};

/// Undirected tree over the atoms of a query. Nodes are atom indices into
/// `query().atoms()`.
class JoinTree {
 public:
  /// Throws std::invalid_argument unless `edges` form a spanning tree over
  /// the atoms of `q`. The Connectedness Condition is not checked here.
  JoinTree(Query q, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  const Query& query() const { return query_; }
  std::size_t node_count() const { return query_.size(); }
  const std::vector<JoinTreeEdge>& edges() const { return edges_; }

  /// Node sequence of the unique path from `from` to `to`, both included.
  std::vector<std::size_t> path(std::size_t from, std::size_t to) const;
  /// Edge labels along the unique path, in path order.
  std::vector<VarSet> path_labels(std::size_t from, std::size_t to) const;

 private:
  const VarSet& label_between(std::size_t u, std::size_t v) const;

  Query query_;
  std::vector<JoinTreeEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;  // neighbor -> edge index
  std::vector<std::vector<std::size_t>> adjacent_edges_;
};

struct CyclicQuery {
  bool operator==(const CyclicQuery&) const = default;
};

/// GYO ear removal; ears and witnesses are taken in canonical atom order, so
/// the result is deterministic. Atoms sharing no variable with the rest get
/// an empty-labelled edge.
std::variant<JoinTree, CyclicQuery> build_join_tree(const Query& q);

bool is_acyclic(const Query& q);

/// Throws std::invalid_argument when either atom is not a node of `tree`.
std::vector<VarSet> path_labels(const JoinTree& tree, const Atom& from, const Atom& to);

}  // namespace cqa
