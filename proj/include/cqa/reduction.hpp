#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cqa/database.hpp"
#include "cqa/query.hpp"
#include "cqa/repairs.hpp"

namespace cqa {

/// Where a variable u sits relative to K(F,q), K(G,q) and K+(F,q), and
/// hence which value rv(θ) gives it.
enum class Region {
  KeyBoth = 1,      // K(F) ∩ K(G)            -> d
  KeyFOnly = 2,     // K(F) \ K(G)            -> θ(x)
  KeyGOutside = 3,  // K(G) \ K+(F)           -> ⟨θ(y),θ(z)⟩
  KeyGInside = 4,   // (K(G) ∩ K+(F)) \ K(F)  -> θ(y)
  PlusOnly = 5,     // K+(F) \ (K(F) ∪ K(G))  -> ⟨θ(x),θ(y)⟩
  Outside = 6,      // neither K+(F) nor K(G) -> ⟨θ(x),θ(y),θ(z)⟩
};

struct RegionAssignment {
  std::map<Symbol, Region> region;

  Region of(const Symbol& u) const { return region.at(u); }
};

/// The regions of vars(q) for atoms q[f] and q[g].
RegionAssignment region_assignment(const Query& q, std::size_t f, std::size_t g);

/// Injective flat name for a sequence of constants: a single value stays
/// as is, longer sequences become p2(a,b) or p3(a,b,c) with '\\', ',', '('
/// and ')' inside components escaped by a backslash.
std::string composite_constant(std::span<const Symbol> components);
/// The fixed constant of region 1.
inline const Symbol kRegionOneConstant = "d";

/// rv(θ) for θ over {x,y,z}.
Valuation rv_valuation(const Valuation& theta, const RegionAssignment& regions);
/// Same, checking that q[f] -> q[g] is a strong attack inside a 2-cycle.
/// Throws PreconditionViolated otherwise.
Valuation rv_valuation(const Valuation& theta, const Query& q, std::size_t f, std::size_t g);

/// q0 = {R0(x;y), S0(y,z;x)}.
Query strong_cycle_source_query();

struct ReductionContext {
  Query q;
  /// Oriented so that q[f] -> q[g] is the strong attack.
  std::size_t f = 0;
  std::size_t g = 0;
  RegionAssignment regions;
  /// db0 purified relative to q0.
  UncertainDatabase db0;
  /// Every θ over {x,y,z} with θ(q0) ⊆ db0, sorted.
  std::vector<Valuation> embeddings;
  std::vector<Fact> db_f;
  std::vector<Fact> db_g;
  std::vector<Fact> db_rest;
  UncertainDatabase output;
};

/// Builds {rv(θ)(H) | H ∈ q, θ ∈ V}. `f` and `g` must form a 2-cycle with
/// at least one strong edge; the orientation is normalized. Throws
/// SchemaMismatch when db0 uses relations other than R0⟨2,1⟩ and S0⟨3,2⟩.
ReductionContext strong_cycle_reduce(const UncertainDatabase& db0, const Query& q, std::size_t f, std::size_t g);
/// Uses the strong 2-cycle found in the attack graph of q.
ReductionContext strong_cycle_reduce(const UncertainDatabase& db0, const Query& q);

/// map(r0): the F-facts and G-facts of the embeddings whose F0/G0 image is
/// in r0, plus db_rest. Throws PreconditionViolated when r0 is not a repair
/// of the purified db0.
Repair map_repair(const Repair& r0, const ReductionContext& context);

}  // namespace cqa
