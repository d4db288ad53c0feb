#pragma once

#include <functional>

#include "cqa/database.hpp"
#include "cqa/repairs.hpp"
#include "cqa/solvers.hpp"

namespace cqa::detail {

void check_repair_limit(const UncertainDatabase& db, const SolverOptions& options);

/// Self-reduction: narrows one block at a time to a single fact while the
/// database stays uncertain, using `certain` as the decision procedure.
/// Precondition: `certain(db)` is false.
Repair recover_witness(const UncertainDatabase& db, const std::function<bool(const UncertainDatabase&)>& certain);

}  // namespace cqa::detail
