#pragma once

#include <vector>

#include "cqa/database.hpp"
#include "cqa/query.hpp"
#include "cqa/repairs.hpp"

namespace cqa {

/// One block removal: `trigger` admitted no embedding when its block went.
struct PurificationStep {
  Fact trigger;
  Block removed;
};

struct PurificationResult {
  UncertainDatabase db;
  std::vector<PurificationStep> steps;
};

/// Repeatedly removes the whole block of any fact A for which no valuation θ
/// has A ∈ θ(q) ⊆ db, until every remaining fact embeds. The result is
/// CERTAINTY-equivalent to the input.
PurificationResult purify_with_trace(const UncertainDatabase& db, const Query& q);
UncertainDatabase purify(const UncertainDatabase& db, const Query& q);

bool is_purified(const UncertainDatabase& db, const Query& q);

/// Turns a falsifying repair of the purified database into a falsifying
/// repair of the original by adding back each removed block's trigger fact.
Repair lift_repair(const Repair& repair, const PurificationResult& purification);

}  // namespace cqa
