// Decision procedure for queries whose attack cycles are all weak and
// terminal. Each call purifies first. With an unattacked atom F it branches
// on the key value of F and then on every matching F-fact; without one the
// attack graph is a set of disjoint weak 2-cycles and the answer comes from
// the certain partitions of each pair.

#include <map>
#include <set>

#include "cqa/attack_graph.hpp"
#include "cqa/errors.hpp"
#include "cqa/evaluation.hpp"
#include "cqa/purification.hpp"
#include "cqa/query_parser.hpp"
#include "cqa/solvers.hpp"
#include "solver_internal.hpp"

namespace cqa {
namespace {

Valuation restrict_to(const Valuation& theta, const VarSet& vars) {
  Valuation out;
  for (const Symbol& v : vars) {
    auto it = theta.find(v);
    if (it != theta.end()) out.emplace(v, it->second);
  }
  return out;
}

class TerminalWeakSolver {
 public:
  explicit TerminalWeakSolver(const SolverOptions& options) : options_(options) {}

  bool certain(const UncertainDatabase& input, const Query& q) {
    if (q.empty()) return true;
    UncertainDatabase db = purify(input, q);
    if (db.empty()) return false;

    AttackGraph graph = attack_graph(q);
    if (!all_cycles_weak_and_terminal(graph)) {
      throw PreconditionViolated("attack graph of " + render(q) + " has a strong or nonterminal cycle");
    }
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      if (graph.indegree(v) == 0) return unattacked_step(db, q, v);
    }
    return weak_pairs(db, q, graph);
  }

 private:
  // db ∈ CERTAINTY(q) iff for some key value ā of F, after purifying w.r.t.
  // q[x̄→ā] the database is nonempty and every F-fact F[x̄ȳ→āb̄] leaves a
  // certain instance of (q \ F)[x̄ȳ→āb̄]. Only key values carried by
  // F-facts can yield a nonempty purification.
  bool unattacked_step(const UncertainDatabase& db, const Query& q, std::size_t f_index) {
    const Atom& f = q[f_index];
    const VarSet key = f.key_vars();

    std::set<Valuation> key_values;
    FactIndex index(db.facts());
    for (const Fact* fact : index.relation(f.relation())) {
      Valuation theta;
      if (unify(f, *fact, theta)) key_values.insert(restrict_to(theta, key));
    }

    for (const Valuation& a : key_values) {
      Query qa = q.substitute(a);
      Atom fa = f.substitute(a);
      std::size_t fa_index = *qa.index_of(fa);
      UncertainDatabase dba = purify(db, qa);
      if (dba.empty()) continue;

      bool all_certain = true;
      FactIndex dba_index(dba.facts());
      for (const Fact* fact : dba_index.relation(fa.relation())) {
        Valuation b;
        if (!unify(fa, *fact, b)) continue;
        if (!certain(dba, qa.without(fa_index).substitute(b))) {
          all_certain = false;
          break;
        }
      }
      if (all_certain) return true;
    }
    return false;
  }

  // Every atom sits in exactly one weak terminal 2-cycle {F_i, G_i}.
  bool weak_pairs(const UncertainDatabase& db, const Query& q, const AttackGraph& graph) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      std::size_t w = graph.successors(v).front();
      if (v < w) pairs.emplace_back(v, w);
    }

    std::vector<Fact> clean;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [fi, gi] = pairs[i];
      Query pair_query({q[fi], q[gi]});

      VarSet elsewhere;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (j == i) continue;
        for (std::size_t atom : {pairs[j].first, pairs[j].second}) {
          VarSet vs = q[atom].vars();
          elsewhere.insert(vs.begin(), vs.end());
        }
      }
      const VarSet shared = set_intersection(pair_query.vars(), elsewhere);

      // Partition the pair's facts by the values they give the shared variables.
      std::map<Valuation, std::vector<Fact>> partitions;
      for (const Fact& fact : db.facts()) {
        for (std::size_t atom : {fi, gi}) {
          Valuation theta;
          if (fact.relation != q[atom].relation() || !unify(q[atom], fact, theta)) continue;
          partitions[restrict_to(theta, shared)].push_back(fact);
        }
      }
      for (auto& [vector, facts] : partitions) {
        UncertainDatabase part = db.with_facts(facts);
        if (certain_bruteforce(part, pair_query, options_).certain) {
          clean.insert(clean.end(), facts.begin(), facts.end());
        }
      }
    }
    return satisfies(clean, q);
  }

  const SolverOptions& options_;
};

}  // namespace

CertainAnswer certain_terminal_weak(const UncertainDatabase& db, const Query& q, const SolverOptions& options) {
  if (has_self_join(q)) throw SelfJoinError();
  if (!is_acyclic(q)) throw CyclicQueryError();
  if (!all_cycles_weak_and_terminal(attack_graph(q))) {
    throw PreconditionViolated("attack graph has a strong or nonterminal cycle");
  }

  TerminalWeakSolver solver(options);
  CertainAnswer answer{solver.certain(db, q), SolveMethod::TerminalWeak, std::nullopt};
  if (!answer.certain && options.recover_witness) {
    PurificationResult purified = purify_with_trace(db, q);
    Repair narrowed = detail::recover_witness(
        purified.db, [&](const UncertainDatabase& candidate) { return solver.certain(candidate, q); });
    answer.witness = lift_repair(narrowed, purified);
  }
  return answer;
}

}  // namespace cqa
