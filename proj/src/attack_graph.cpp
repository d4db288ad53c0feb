#include "cqa/attack_graph.hpp"

#include <algorithm>
#include <variant>

#include "cqa/errors.hpp"
#include "cqa/functional_dependency.hpp"

namespace cqa {

AttackGraph::AttackGraph(Query q, std::vector<AttackEdge> edges)
    : query_(std::move(q)), edges_(std::move(edges)) {
  const std::size_t n = query_.size();
  std::sort(edges_.begin(), edges_.end(), [](const AttackEdge& a, const AttackEdge& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  matrix_.assign(n, std::vector<int>(n, -1));
  successors_.assign(n, {});
  indegree_.assign(n, 0);
  for (const AttackEdge& e : edges_) {
    matrix_[e.from][e.to] = static_cast<int>(e.strength);
    successors_[e.from].push_back(e.to);
    ++indegree_[e.to];
  }
}

bool AttackGraph::attacks(std::size_t from, std::size_t to) const { return matrix_[from][to] >= 0; }

std::optional<AttackStrength> AttackGraph::strength(std::size_t from, std::size_t to) const {
  if (matrix_[from][to] < 0) return std::nullopt;
  return static_cast<AttackStrength>(matrix_[from][to]);
}

bool AttackGraph::has_cycle() const {
  std::size_t count = 0;
  strongly_connected_components(successors_, &count);
  return count < vertex_count();
}

AttackGraph attack_graph(const JoinTree& tree) {
  const Query& q = tree.query();
  if (has_self_join(q)) throw SelfJoinError();
  const std::size_t n = q.size();

  std::vector<VarSet> closure(n), closure_plus(n), keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    closure[i] = key_closure(q[i], q);
    closure_plus[i] = key_closure_plus(q[i], q);
    keys[i] = q[i].key_vars();
  }

  std::vector<AttackEdge> edges;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (f == g) continue;
      std::vector<VarSet> labels = tree.path_labels(f, g);
      bool attack = std::none_of(labels.begin(), labels.end(),
                                 [&](const VarSet& label) { return is_subset(label, closure[f]); });
      if (!attack) continue;
      AttackStrength s = is_subset(keys[g], closure_plus[f]) ? AttackStrength::Weak : AttackStrength::Strong;
      edges.push_back({f, g, s});
    }
  }
  return AttackGraph(q, std::move(edges));
}

AttackGraph attack_graph(const Query& q) {
  if (has_self_join(q)) throw SelfJoinError();
  auto tree = build_join_tree(q);
  if (std::holds_alternative<CyclicQuery>(tree)) throw CyclicQueryError();
  return attack_graph(std::get<JoinTree>(tree));
}

std::optional<StrongTwoCycle> find_strong_two_cycle(const AttackGraph& g) {
  for (const AttackEdge& e : g.edges()) {
    if (e.strength == AttackStrength::Strong && g.attacks(e.to, e.from)) {
      return StrongTwoCycle{e.from, e.to};
    }
  }
  return std::nullopt;
}

// A cycle is terminal only if it spans its whole strong component and that
// component has no outgoing edge; such a component is a chordless simple
// cycle, so every member has exactly one successor.
bool all_cycles_weak_and_terminal(const AttackGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp = strongly_connected_components(g.adjacency());
  std::vector<std::size_t> size(n, 0);
  for (std::size_t v = 0; v < n; ++v) ++size[comp[v]];

  for (std::size_t v = 0; v < n; ++v) {
    if (size[comp[v]] < 2) continue;
    if (g.successors(v).size() != 1) return false;
    std::size_t w = g.successors(v).front();
    if (comp[w] != comp[v]) return false;
    if (g.strength(v, w) == AttackStrength::Strong) return false;
  }
  return true;
}

}  // namespace cqa
