#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cqa/attack_graph.hpp"
#include "cqa/cycle_query.hpp"
#include "cqa/query.hpp"

namespace cqa {

enum class ComplexityClass {
  FoRewritable,
  PtimeTerminalWeak,
  PtimeCycleQuery,
  ConpComplete,
  OpenNonterminalWeak,
  UnsupportedSelfJoin,
  UnsupportedCyclicQuery,
};

/// Outcome of classify_complexity plus the evidence for the rule that fired.
struct ComplexityVerdict {
  ComplexityClass complexity = ComplexityClass::FoRewritable;
  /// Set for ConpComplete.
  std::optional<StrongTwoCycle> strong_cycle;
  /// Set for PtimeCycleQuery.
  std::optional<CycleQueryMatch> cycle_query;
  /// Set whenever the query is acyclic and self-join-free.
  std::optional<AttackGraph> graph;
};

/// Rule order: self-join, hypergraph cyclicity (C_k for k >= 3), acyclic
/// attack graph, strong cycle, weak terminal cycles, AC_k, open.
ComplexityVerdict classify_complexity(const Query& q);

/// Stable identifier such as "CONP_COMPLETE".
std::string_view to_string(ComplexityClass c);
std::optional<ComplexityClass> complexity_class_from_string(std::string_view s);

/// One-line human summary, e.g. "coNP-complete (strong 2-cycle: S↔R)".
std::string describe(const ComplexityVerdict& verdict, const Query& q);

}  // namespace cqa
