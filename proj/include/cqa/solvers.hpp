#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "cqa/cycle_query.hpp"
#include "cqa/database.hpp"
#include "cqa/query.hpp"
#include "cqa/repairs.hpp"

namespace cqa {

enum class SolveMethod { Auto, BruteForce, TerminalWeak, CycleQuery };

std::string_view to_string(SolveMethod m);
/// Accepts "auto", "bruteforce", "terminal-weak"/"terminal_weak", "cycle"/"cycle_query".
std::optional<SolveMethod> solve_method_from_string(std::string_view s);

struct SolverOptions {
  /// Brute-force enumeration refuses databases with more repairs than this.
  std::uint64_t repair_limit = std::uint64_t{1} << 24;
  /// Bound on |D|^k when adding all-key facts for C_k.
  std::uint64_t domain_power_limit = 10'000'000;
  /// Produce a falsifying repair for polynomial methods that do not yield
  /// one directly.
  bool recover_witness = true;

  /// Defaults, with CQA_REPAIR_LIMIT overriding `repair_limit` when set.
  static SolverOptions from_environment();
};

struct CertainAnswer {
  bool certain = false;
  SolveMethod method = SolveMethod::BruteForce;
  /// A repair of the input database falsifying the query, when available.
  std::optional<Repair> witness;
};

/// Enumerates repairs, stopping at the first falsifying one.
/// Throws ResourceLimitExceeded beyond `options.repair_limit` repairs.
CertainAnswer certain_bruteforce(const UncertainDatabase& db, const Query& q, const SolverOptions& options = {});

/// Number of repairs satisfying q (full enumeration, same guard).
BigInt count_satisfying_repairs(const UncertainDatabase& db, const Query& q, const SolverOptions& options = {});

/// Polynomial algorithm for acyclic self-join-free queries whose attack
/// cycles are all weak and terminal. Throws PreconditionViolated otherwise.
CertainAnswer certain_terminal_weak(const UncertainDatabase& db, const Query& q, const SolverOptions& options = {});

/// Graph algorithm for AC_k; `match` must describe `q` with an all-key atom.
/// Throws SchemaMismatch when the database declares a query relation with a
/// different signature.
CertainAnswer certain_cycle_query(const UncertainDatabase& db, const Query& q, const CycleQueryMatch& match,
                                  const SolverOptions& options = {});
/// Canonical AC_k over R1..Rk, Sk.
CertainAnswer certain_cycle_query(const UncertainDatabase& db, std::size_t k, const SolverOptions& options = {});

/// C_k via reduction to AC_k: adds every all-key tuple over the active domain.
CertainAnswer certain_ck(const UncertainDatabase& db, const Query& q, const CycleQueryMatch& match,
                         const SolverOptions& options = {});
/// Canonical C_k over R1..Rk.
CertainAnswer certain_ck(const UncertainDatabase& db, std::size_t k, const SolverOptions& options = {});

/// The all-key augmentation used by certain_ck: `db` plus S(ā) for every ā
/// in D^k under a relation name unused by `q`. Returns the augmented
/// database and the AC_k query.
std::pair<UncertainDatabase, Query> augment_cycle_instance(const UncertainDatabase& db, const Query& q,
                                                           const CycleQueryMatch& match,
                                                           const SolverOptions& options = {});

/// Dispatches to the best applicable method; an explicit method is checked
/// against its precondition first.
CertainAnswer solve(const UncertainDatabase& db, const Query& q, SolveMethod method = SolveMethod::Auto,
                    const SolverOptions& options = {});

}  // namespace cqa
