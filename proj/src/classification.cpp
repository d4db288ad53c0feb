#include "cqa/classification.hpp"

#include <array>
#include <utility>

#include "cqa/join_tree.hpp"

namespace cqa {

ComplexityVerdict classify_complexity(const Query& q) {
  ComplexityVerdict v;
  if (has_self_join(q)) {
    v.complexity = ComplexityClass::UnsupportedSelfJoin;
    return v;
  }
  if (!is_acyclic(q)) {
    auto match = match_cycle_query(q);
    if (match && !match->has_all_key_atom() && match->k >= 3) {
      v.complexity = ComplexityClass::PtimeCycleQuery;
      v.cycle_query = std::move(match);
    } else {
      v.complexity = ComplexityClass::UnsupportedCyclicQuery;
    }
    return v;
  }

  v.graph = attack_graph(q);
  if (!v.graph->has_cycle()) {
    v.complexity = ComplexityClass::FoRewritable;
  } else if (auto pair = find_strong_two_cycle(*v.graph)) {
    v.complexity = ComplexityClass::ConpComplete;
    v.strong_cycle = pair;
  } else if (all_cycles_weak_and_terminal(*v.graph)) {
    v.complexity = ComplexityClass::PtimeTerminalWeak;
  } else if (auto match = match_cycle_query(q); match && match->has_all_key_atom()) {
    v.complexity = ComplexityClass::PtimeCycleQuery;
    v.cycle_query = std::move(match);
  } else {
    v.complexity = ComplexityClass::OpenNonterminalWeak;
  }
  return v;
}

namespace {

constexpr std::array<std::pair<ComplexityClass, std::string_view>, 7> kNames{{
    {ComplexityClass::FoRewritable, "FO_REWRITABLE"},
    {ComplexityClass::PtimeTerminalWeak, "PTIME_TERMINAL_WEAK"},
    {ComplexityClass::PtimeCycleQuery, "PTIME_CYCLE_QUERY"},
    {ComplexityClass::ConpComplete, "CONP_COMPLETE"},
    {ComplexityClass::OpenNonterminalWeak, "OPEN_NONTERMINAL_WEAK"},
    {ComplexityClass::UnsupportedSelfJoin, "UNSUPPORTED_SELF_JOIN"},
    {ComplexityClass::UnsupportedCyclicQuery, "UNSUPPORTED_CYCLIC_QUERY"},
}};

}  // namespace

std::string_view to_string(ComplexityClass c) {
  for (const auto& [cls, name] : kNames) {
    if (cls == c) return name;
  }
  return "UNKNOWN";
}

std::optional<ComplexityClass> complexity_class_from_string(std::string_view s) {
  for (const auto& [cls, name] : kNames) {
    if (name == s) return cls;
  }
  return std::nullopt;
}

std::string describe(const ComplexityVerdict& v, const Query& q) {
  switch (v.complexity) {
    case ComplexityClass::FoRewritable:
      return v.graph && v.graph->edges().empty() ? "FO-rewritable (empty attack graph)"
                                                 : "FO-rewritable (acyclic attack graph)";
    case ComplexityClass::PtimeTerminalWeak:
      return "PTIME (all attack cycles weak and terminal)";
    case ComplexityClass::PtimeCycleQuery:
      return "PTIME (cycle query, k=" + std::to_string(v.cycle_query->k) + ")";
    case ComplexityClass::ConpComplete:
      return "coNP-complete (strong 2-cycle: " + q[v.strong_cycle->strong_from].relation() + "↔" +
             q[v.strong_cycle->strong_to].relation() + ")";
    case ComplexityClass::OpenNonterminalWeak:
      return "open (weak nonterminal attack cycle, no known polynomial algorithm)";
    case ComplexityClass::UnsupportedSelfJoin:
      return "unsupported (query has a self-join)";
    case ComplexityClass::UnsupportedCyclicQuery:
      return "unsupported (cyclic query)";
  }
  return "unknown";
}

}  // namespace cqa
