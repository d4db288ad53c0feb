// CERTAINTY(AC_k) as a marking problem on the instance graph: the database
// is not certain iff one outgoing edge per vertex can be chosen without
// choosing every edge of an S_k-cycle. Each strong component needs a chosen
// cycle that is either a k-cycle outside C or an elementary cycle longer
// than k; the remaining vertices then point along shortest paths to it.

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "cqa/cycle_instance_graph.hpp"
#include "cqa/errors.hpp"
#include "cqa/purification.hpp"
#include "cqa/query_parser.hpp"
#include "cqa/solvers.hpp"
#include "cqa/digraph.hpp"

namespace cqa {

std::optional<std::size_t> CycleInstanceGraph::find(std::size_t position, const Symbol& constant) const {
  auto it = index_.find({position, constant});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CycleInstanceGraph build_cycle_instance_graph(const UncertainDatabase& db, const Query& q,
                                              const CycleQueryMatch& match) {
  CycleInstanceGraph g;
  g.k = match.k;
  auto vertex = [&](std::size_t position, const Symbol& c) {
    auto [it, inserted] = g.index_.emplace(std::make_pair(position, c), g.vertices.size());
    if (inserted) {
      g.vertices.emplace_back(position, c);
      g.successors.emplace_back();
      g.edge_facts.emplace_back();
    }
    return it->second;
  };

  std::map<Symbol, std::size_t> position_of;
  for (std::size_t i = 0; i < match.k; ++i) position_of[q[match.cycle_atoms[i]].relation()] = i;

  for (const Fact& f : db.facts()) {
    auto it = position_of.find(f.relation);
    if (it == position_of.end()) continue;
    const std::size_t i = it->second;
    std::size_t from = vertex(i, f.values[0]);
    std::size_t to = vertex((i + 1) % match.k, f.values[1]);
    g.successors[from].push_back(to);
    g.edge_facts[from].push_back(f);
  }

  if (match.all_key_atom) {
    const Symbol& s = q[*match.all_key_atom].relation();
    for (const Fact& f : db.facts()) {
      if (f.relation != s) continue;
      std::vector<Symbol> by_position(match.k);
      for (std::size_t p = 0; p < match.k; ++p) by_position[match.all_key_order[p]] = f.values[p];
      std::vector<std::size_t> cycle;
      for (std::size_t i = 0; i < match.k; ++i) {
        auto v = g.find(i, by_position[i]);
        if (!v) break;
        cycle.push_back(*v);
      }
      if (cycle.size() == match.k) g.forbidden_cycles.insert(std::move(cycle));
    }
  }
  return g;
}

namespace {

void check_schema(const UncertainDatabase& db, const Query& q) {
  for (const auto& [name, sig] : q.signatures()) {
    auto it = db.schema().find(name);
    if (it != db.schema().end() && it->second != sig) {
      throw SchemaMismatch("relation " + name + " has signature ⟨" + std::to_string(it->second.arity) + "," +
                           std::to_string(it->second.key_length) + "⟩ in the database but ⟨" +
                           std::to_string(sig.arity) + "," + std::to_string(sig.key_length) +
                           "⟩ in the query");
    }
  }
}

class Marking {
 public:
  explicit Marking(const CycleInstanceGraph& g) : g_(g), choice_(g.vertex_count(), kNone) {}

  // Returns false when some strong component admits no acceptable cycle,
  // i.e. every repair satisfies the query.
  bool mark_components() {
    std::size_t count = 0;
    std::vector<std::size_t> component = strongly_connected_components(g_.successors, &count);
    std::vector<std::vector<std::size_t>> members(count);
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) members[component[v]].push_back(v);
    component_ = std::move(component);

    for (std::size_t c = 0; c < count; ++c) {
      if (!mark_foreign_k_cycle(c, members[c]) && !mark_long_cycle(c, members[c])) return false;
    }
    return true;
  }

  // Every unmarked vertex follows a shortest path to a marked vertex.
  void complete() {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> predecessors(g_.vertex_count());
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      for (std::size_t j = 0; j < g_.successors[v].size(); ++j) {
        predecessors[g_.successors[v][j]].emplace_back(v, j);
      }
    }
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (choice_[v] != kNone) queue.push_back(v);
    }
    while (!queue.empty()) {
      std::size_t w = queue.front();
      queue.pop_front();
      for (auto [v, j] : predecessors[w]) {
        if (choice_[v] != kNone) continue;
        choice_[v] = j;
        queue.push_back(v);
      }
    }
  }

  std::vector<Fact> chosen_facts() const {
    std::vector<Fact> out;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (choice_[v] != kNone) out.push_back(g_.edge_facts[v][choice_[v]]);
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool in_component(std::size_t v, std::size_t c) const { return component_[v] == c; }

  void mark_cycle(const std::vector<std::size_t>& cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t v = cycle[i];
      std::size_t next = cycle[(i + 1) % cycle.size()];
      const auto& succ = g_.successors[v];
      choice_[v] = static_cast<std::size_t>(std::find(succ.begin(), succ.end(), next) - succ.begin());
    }
  }

  // Case 1: a k-cycle that is not one of the S_k-cycles.
  bool mark_foreign_k_cycle(std::size_t c, const std::vector<std::size_t>& members) {
    std::vector<std::size_t> path;
    std::function<bool(std::size_t)> extend = [&](std::size_t v) {
      path.push_back(v);
      if (path.size() == g_.k) {
        const auto& succ = g_.successors[v];
        if (std::find(succ.begin(), succ.end(), path.front()) != succ.end() &&
            !g_.forbidden_cycles.count(path)) {
          return true;
        }
      } else {
        for (std::size_t w : g_.successors[v]) {
          if (in_component(w, c) && extend(w)) return true;
        }
      }
      path.pop_back();
      return false;
    };
    for (std::size_t start : members) {
      if (g_.vertices[start].first != 0) continue;
      path.clear();
      if (extend(start)) {
        mark_cycle(path);
        return true;
      }
    }
    return false;
  }

  // Case 2: a path a1..a(k+1) with a(k+1) != a1 and a path back from a(k+1)
  // to a1 that uses no edge leaving a1..ak. Together they form an
  // elementary cycle longer than k.
  bool mark_long_cycle(std::size_t c, const std::vector<std::size_t>& members) {
    std::vector<std::size_t> prefix;
    std::function<bool(std::size_t)> extend = [&](std::size_t v) {
      prefix.push_back(v);
      if (prefix.size() == g_.k) {
        std::vector<std::size_t> back_parent = reach_back(prefix);
        for (std::size_t w : g_.successors[v]) {
          if (w == prefix.front() || !in_component(w, c) || back_parent[w] == kUnreached) continue;
          std::vector<std::size_t> cycle = prefix;
          for (std::size_t u = w; u != prefix.front(); u = back_parent[u]) cycle.push_back(u);
          mark_cycle(cycle);
          return true;
        }
      } else {
        for (std::size_t w : g_.successors[v]) {
          if (in_component(w, c) && extend(w)) return true;
        }
      }
      prefix.pop_back();
      return false;
    };
    for (std::size_t start : members) {
      prefix.clear();
      if (extend(start)) return true;
    }
    return false;
  }

  static constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

  // Backward BFS from prefix[0] in the graph without the out-edges of the
  // prefix vertices. Result[u] is u's next vertex on a shortest path to
  // prefix[0], kUnreached when there is none.
  std::vector<std::size_t> reach_back(const std::vector<std::size_t>& prefix) {
    if (predecessors_.empty()) {
      predecessors_.resize(g_.vertex_count());
      for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
        for (std::size_t w : g_.successors[v]) predecessors_[w].push_back(v);
      }
    }
    std::set<std::size_t> blocked(prefix.begin(), prefix.end());
    std::vector<std::size_t> next(g_.vertex_count(), kUnreached);
    const std::size_t target = prefix.front();
    next[target] = target;
    std::deque<std::size_t> queue{target};
    while (!queue.empty()) {
      std::size_t w = queue.front();
      queue.pop_front();
      for (std::size_t v : predecessors_[w]) {
        if (blocked.count(v) || next[v] != kUnreached) continue;
        next[v] = w;
        queue.push_back(v);
      }
    }
    return next;
  }

  const CycleInstanceGraph& g_;
  std::vector<std::size_t> choice_;
  std::vector<std::size_t> component_;
  Adjacency predecessors_;
};

Query canonical_query(std::size_t k, bool all_key) {
  if (k < 2) throw std::invalid_argument("cycle queries need k >= 2");
  return make_cycle_query(k, all_key);
}

}  // namespace

CertainAnswer certain_cycle_query(const UncertainDatabase& db, const Query& q, const CycleQueryMatch& match,
                                  const SolverOptions& options) {
  if (!match.has_all_key_atom()) throw PreconditionViolated("query has no all-key atom; not AC_k");
  check_schema(db, q);

  PurificationResult purified = purify_with_trace(db, q);
  CertainAnswer answer{true, SolveMethod::CycleQuery, std::nullopt};
  if (purified.db.empty()) {
    answer.certain = false;
    if (options.recover_witness) answer.witness = lift_repair({}, purified);
    return answer;
  }

  CycleInstanceGraph graph = build_cycle_instance_graph(purified.db, q, match);
  Marking marking(graph);
  if (!marking.mark_components()) return answer;

  answer.certain = false;
  marking.complete();
  Repair repair = marking.chosen_facts();
  const Symbol& s = q[*match.all_key_atom].relation();
  for (const Fact& f : purified.db.facts()) {
    if (f.relation == s) repair.push_back(f);
  }
  answer.witness = lift_repair(repair, purified);
  return answer;
}

CertainAnswer certain_cycle_query(const UncertainDatabase& db, std::size_t k, const SolverOptions& options) {
  Query q = canonical_query(k, true);
  return certain_cycle_query(db, q, *match_cycle_query(q), options);
}

std::pair<UncertainDatabase, Query> augment_cycle_instance(const UncertainDatabase& db, const Query& q,
                                                           const CycleQueryMatch& match,
                                                           const SolverOptions& options) {
  if (match.has_all_key_atom()) throw PreconditionViolated("query already has an all-key atom");
  check_schema(db, q);

  std::set<Symbol> cycle_relations;
  for (std::size_t i : match.cycle_atoms) cycle_relations.insert(q[i].relation());
  std::vector<Symbol> domain;
  {
    std::set<Symbol> d;
    for (const Fact& f : db.facts()) {
      if (cycle_relations.count(f.relation)) d.insert(f.values.begin(), f.values.end());
    }
    domain.assign(d.begin(), d.end());
  }

  const std::size_t k = match.k;
  double power = 1;
  for (std::size_t i = 0; i < k; ++i) power *= static_cast<double>(domain.size());
  if (power > static_cast<double>(options.domain_power_limit)) {
    throw ResourceLimitExceeded("adding all-key facts needs |D|^k = " + std::to_string(domain.size()) + "^" +
                                std::to_string(k) + " tuples, above the limit of " +
                                std::to_string(options.domain_power_limit));
  }

  Symbol s = "S" + std::to_string(k);
  while (q.signatures().count(s) || db.schema().count(s)) s += "_";

  std::vector<Atom> atoms = q.atoms();
  std::vector<Term> key;
  for (const Symbol& v : match.variables) key.push_back(Term::variable(v));
  atoms.emplace_back(s, std::move(key), std::vector<Term>{});
  Query augmented(std::move(atoms));

  std::map<Symbol, Signature> schema = db.schema();
  schema[s] = Signature{k, k};
  std::vector<Fact> facts = db.facts();
  if (!domain.empty()) {
    std::vector<std::size_t> digits(k, 0);
    while (true) {
      Fact f{s, {}, k};
      for (std::size_t d : digits) f.values.push_back(domain[d]);
      facts.push_back(std::move(f));
      std::size_t i = k;
      while (i > 0 && ++digits[i - 1] == domain.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return {UncertainDatabase(std::move(schema), std::move(facts)), std::move(augmented)};
}

CertainAnswer certain_ck(const UncertainDatabase& db, const Query& q, const CycleQueryMatch& match,
                         const SolverOptions& options) {
  auto [augmented_db, augmented_q] = augment_cycle_instance(db, q, match, options);
  CertainAnswer answer = certain_cycle_query(augmented_db, augmented_q, *match_cycle_query(augmented_q), options);
  if (answer.witness) {
    const Symbol& s = augmented_q[*match_cycle_query(augmented_q)->all_key_atom].relation();
    std::erase_if(*answer.witness, [&](const Fact& f) { return f.relation == s; });
  }
  return answer;
}

CertainAnswer certain_ck(const UncertainDatabase& db, std::size_t k, const SolverOptions& options) {
  Query q = canonical_query(k, false);
  return certain_ck(db, q, *match_cycle_query(q), options);
}

}  // namespace cqa
