#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cqa/query.hpp"

namespace cqa {

/// One rule application ("SE1" to "SE4") to `subquery` at recursion depth
/// `depth`. Subqueries to which no rule applies leave no step.
struct SafetyStep {
  std::string rule;
  Query subquery;
  std::string detail;
  std::size_t depth = 0;
};

struct SafetyTrace {
  bool safe = false;
  /// Pre-order: a step is followed by the steps of its recursive calls.
  std::vector<SafetyStep> steps;
};

/// The safety test for self-join-free queries. The first applicable rule
/// fires: SE1 single ground atom; SE2 split into connected components of
/// shared variables; SE3 substitute the smallest variable common to all
/// keys; SE4 substitute the smallest variable of the first atom whose key
/// has no variable but whose other positions do. Substituted constants are
/// fresh. Throws SelfJoinError.
SafetyTrace is_safe(const Query& q);

/// Indented multi-line rendering of the trace.
std::string render(const SafetyTrace& trace);

}  // namespace cqa
