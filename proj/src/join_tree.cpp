#include "cqa/join_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cqa/query_parser.hpp"

namespace cqa {

JoinTree::JoinTree(Query q, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : query_(std::move(q)) {
  const std::size_t n = query_.size();
  if (n > 0 && edges.size() != n - 1) throw std::invalid_argument("join tree needs |atoms|-1 edges");
  if (n == 0 && !edges.empty()) throw std::invalid_argument("empty query has no join tree edges");

  adjacency_.resize(n);
  adjacent_edges_.resize(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n || a == b) throw std::invalid_argument("bad join tree edge");
    adjacency_[a].push_back(b);
    adjacent_edges_[a].push_back(edges_.size());
    adjacency_[b].push_back(a);
    adjacent_edges_[b].push_back(edges_.size());
    edges_.push_back({a, b, set_intersection(query_[a].vars(), query_[b].vars())});
  }

  // n-1 edges plus connectivity gives a tree.
  if (n > 0) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adjacency_[u]) {
        if (!seen[v]) {
          seen[v] = true;
          ++count;
          stack.push_back(v);
        }
      }
    }
    if (count != n) throw std::invalid_argument("join tree edges do not connect all atoms");
  }
}

std::vector<std::size_t> JoinTree::path(std::size_t from, std::size_t to) const {
  const std::size_t n = node_count();
  if (from >= n || to >= n) throw std::invalid_argument("node out of range");
  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    if (u == to) break;
    for (std::size_t v : adjacency_[u]) {
      if (parent[v] == n) {
        parent[v] = u;
        stack.push_back(v);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t u = to; u != from; u = parent[u]) out.push_back(u);
  out.push_back(from);
  std::reverse(out.begin(), out.end());
  return out;
}

const VarSet& JoinTree::label_between(std::size_t u, std::size_t v) const {
  for (std::size_t i = 0; i < adjacency_[u].size(); ++i) {
    if (adjacency_[u][i] == v) return edges_[adjacent_edges_[u][i]].label;
  }
  throw std::logic_error("nodes are not adjacent");
}

std::vector<VarSet> JoinTree::path_labels(std::size_t from, std::size_t to) const {
  std::vector<std::size_t> nodes = path(from, to);
  std::vector<VarSet> labels;
  labels.reserve(nodes.size());
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) labels.push_back(label_between(nodes[i], nodes[i + 1]));
  return labels;
}

std::variant<JoinTree, CyclicQuery> build_join_tree(const Query& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return q[a] < q[b]; });

  std::vector<VarSet> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = q[i].vars();

  std::vector<std::size_t> remaining = order;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (remaining.size() > 1) {
    bool removed = false;
    for (std::size_t pos = 0; pos < remaining.size() && !removed; ++pos) {
      std::size_t ear = remaining[pos];
      VarSet elsewhere;
      for (std::size_t other : remaining) {
        if (other != ear) elsewhere.insert(vars[other].begin(), vars[other].end());
      }
      VarSet shared = set_intersection(vars[ear], elsewhere);
      for (std::size_t witness : remaining) {
        if (witness == ear || !is_subset(shared, vars[witness])) continue;
        edges.emplace_back(ear, witness);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
        removed = true;
        break;
      }
    }
    if (!removed) return CyclicQuery{};
  }
  return JoinTree(q, edges);
}

bool is_acyclic(const Query& q) { return std::holds_alternative<JoinTree>(build_join_tree(q)); }

std::vector<VarSet> path_labels(const JoinTree& tree, const Atom& from, const Atom& to) {
  auto a = tree.query().index_of(from);
  auto b = tree.query().index_of(to);
  if (!a || !b) throw std::invalid_argument("atom is not a node of the join tree");
  if (*a == *b) throw std::invalid_argument("path endpoints must be distinct");
  return tree.path_labels(*a, *b);
}

}  // namespace cqa
