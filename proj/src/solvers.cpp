#include "cqa/solvers.hpp"

#include <cstdlib>
#include <string>

#include "cqa/attack_graph.hpp"
#include "cqa/classification.hpp"
#include "cqa/errors.hpp"
#include "cqa/evaluation.hpp"
#include "cqa/join_tree.hpp"
#include "solver_internal.hpp"

namespace cqa {

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::Auto:
      return "auto";
    case SolveMethod::BruteForce:
      return "bruteforce";
    case SolveMethod::TerminalWeak:
      return "terminal_weak";
    case SolveMethod::CycleQuery:
      return "cycle_query";
  }
  return "unknown";
}

std::optional<SolveMethod> solve_method_from_string(std::string_view s) {
  if (s == "auto") return SolveMethod::Auto;
  if (s == "bruteforce" || s == "brute-force") return SolveMethod::BruteForce;
  if (s == "terminal-weak" || s == "terminal_weak") return SolveMethod::TerminalWeak;
  if (s == "cycle" || s == "cycle_query" || s == "cycle-query") return SolveMethod::CycleQuery;
  return std::nullopt;
}

SolverOptions SolverOptions::from_environment() {
  SolverOptions options;
  if (const char* env = std::getenv("CQA_REPAIR_LIMIT"); env && *env) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0') options.repair_limit = value;
  }
  return options;
}

namespace detail {

void check_repair_limit(const UncertainDatabase& db, const SolverOptions& options) {
  BigInt count = repair_count(db);
  if (count > options.repair_limit) {
    throw ResourceLimitExceeded("database has " + count.str() + " repairs, above the limit of " +
                                std::to_string(options.repair_limit));
  }
}

Repair recover_witness(const UncertainDatabase& db, const std::function<bool(const UncertainDatabase&)>& certain) {
  UncertainDatabase current = db;
  for (std::size_t b = 0; b < current.blocks().size(); ++b) {
    if (current.blocks()[b].size() < 2) continue;
    const Block block = current.blocks()[b];
    bool narrowed = false;
    for (const Fact& keep : block) {
      std::vector<Fact> facts;
      for (const Fact& f : current.facts()) {
        if (!f.key_equal(keep) || f == keep) facts.push_back(f);
      }
      UncertainDatabase candidate = current.with_facts(std::move(facts));
      if (!certain(candidate)) {
        current = std::move(candidate);
        narrowed = true;
        break;
      }
    }
    // Some fact of the block is in a falsifying repair, so a choice exists
    // whenever the decision procedure is correct.
    if (!narrowed) throw std::logic_error("witness recovery found no falsifying choice");
  }
  return current.facts();
}

}  // namespace detail

CertainAnswer certain_bruteforce(const UncertainDatabase& db, const Query& q, const SolverOptions& options) {
  detail::check_repair_limit(db, options);
  CertainAnswer answer{true, SolveMethod::BruteForce, std::nullopt};
  for_each_repair(db, [&](const Repair& r) {
    if (satisfies(r, q)) return true;
    answer.certain = false;
    answer.witness = r;
    return false;
  });
  return answer;
}

BigInt count_satisfying_repairs(const UncertainDatabase& db, const Query& q, const SolverOptions& options) {
  detail::check_repair_limit(db, options);
  BigInt count = 0;
  for_each_repair(db, [&](const Repair& r) {
    if (satisfies(r, q)) ++count;
    return true;
  });
  return count;
}

CertainAnswer solve(const UncertainDatabase& db, const Query& q, SolveMethod method, const SolverOptions& options) {
  if (method == SolveMethod::Auto) {
    ComplexityVerdict verdict = classify_complexity(q);
    switch (verdict.complexity) {
      case ComplexityClass::FoRewritable:
      case ComplexityClass::PtimeTerminalWeak:
        return certain_terminal_weak(db, q, options);
      case ComplexityClass::PtimeCycleQuery:
        return verdict.cycle_query->has_all_key_atom() ? certain_cycle_query(db, q, *verdict.cycle_query, options)
                                                       : certain_ck(db, q, *verdict.cycle_query, options);
      default:
        return certain_bruteforce(db, q, options);
    }
  }
  switch (method) {
    case SolveMethod::BruteForce:
      return certain_bruteforce(db, q, options);
    case SolveMethod::TerminalWeak:
      return certain_terminal_weak(db, q, options);
    case SolveMethod::CycleQuery: {
      auto match = match_cycle_query(q);
      if (!match) throw PreconditionViolated("query is not a cycle query C_k or AC_k");
      return match->has_all_key_atom() ? certain_cycle_query(db, q, *match, options)
                                       : certain_ck(db, q, *match, options);
    }
    case SolveMethod::Auto:
      break;
  }
  throw std::logic_error("unreachable");
}

}  // namespace cqa
