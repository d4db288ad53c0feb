#include "cqa/cycle_query.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cqa {
namespace {

bool is_binary_edge(const Atom& a) {
  const auto& t = a.terms();
  return a.key_length() == 1 && t.size() == 2 && t[0].is_variable() && t[1].is_variable() &&
         t[0].name != t[1].name;
}

}  // namespace

std::optional<CycleQueryMatch> match_cycle_query(const Query& q) {
  if (has_self_join(q)) return std::nullopt;

  std::vector<std::size_t> edges;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < q.size(); ++i) {
    (is_binary_edge(q[i]) ? edges : others).push_back(i);
  }
  const std::size_t k = edges.size();
  if (k < 2 || others.size() > 1) return std::nullopt;

  // Every variable must be the key of exactly one edge and the target of
  // exactly one edge.
  std::map<Symbol, std::size_t> out_edge;
  std::map<Symbol, std::size_t> in_count;
  for (std::size_t e : edges) {
    const auto& t = q[e].terms();
    if (!out_edge.emplace(t[0].name, e).second) return std::nullopt;
    ++in_count[t[1].name];
  }
  if (out_edge.size() != k || in_count.size() != k) return std::nullopt;
  for (const auto& [v, c] : in_count) {
    if (c != 1 || !out_edge.count(v)) return std::nullopt;
  }

  CycleQueryMatch m;
  m.k = k;

  Symbol start;
  if (!others.empty()) {
    const Atom& s = q[others.front()];
    if (!s.signature().all_key() || s.terms().size() != k) return std::nullopt;
    VarSet seen;
    for (const Term& t : s.terms()) {
      if (!t.is_variable() || !out_edge.count(t.name) || !seen.insert(t.name).second) return std::nullopt;
    }
    m.all_key_atom = others.front();
    start = s.terms().front().name;
  } else {
    auto first = std::min_element(edges.begin(), edges.end(),
                                  [&](std::size_t a, std::size_t b) { return q[a] < q[b]; });
    start = q[*first].terms()[0].name;
  }

  Symbol v = start;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t e = out_edge.at(v);
    m.cycle_atoms.push_back(e);
    m.variables.push_back(v);
    v = q[e].terms()[1].name;
    if (v == start && i + 1 < k) return std::nullopt;  // more than one cycle
  }
  if (v != start) return std::nullopt;

  if (m.all_key_atom) {
    for (const Term& t : q[*m.all_key_atom].terms()) {
      auto pos = std::find(m.variables.begin(), m.variables.end(), t.name) - m.variables.begin();
      m.all_key_order.push_back(static_cast<std::size_t>(pos));
    }
  }
  return m;
}

Query make_cycle_query(std::size_t k, bool all_key) {
  if (k < 2) throw std::invalid_argument("cycle queries need k >= 2");
  std::vector<Atom> atoms;
  auto var = [](std::size_t i) { return Term::variable("x" + std::to_string(i)); };
  for (std::size_t i = 1; i <= k; ++i) {
    atoms.emplace_back("R" + std::to_string(i), std::vector<Term>{var(i)},
                       std::vector<Term>{var(i == k ? 1 : i + 1)});
  }
  if (all_key) {
    std::vector<Term> key;
    for (std::size_t i = 1; i <= k; ++i) key.push_back(var(i));
    atoms.emplace_back("S" + std::to_string(k), std::move(key), std::vector<Term>{});
  }
  return Query(std::move(atoms));
}

}  // namespace cqa
