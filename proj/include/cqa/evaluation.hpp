#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cqa/database.hpp"
#include "cqa/query.hpp"

namespace cqa {

/// Facts grouped by relation name. Does not own the facts.
class FactIndex {
 public:
  explicit FactIndex(std::span<const Fact> facts);

  std::span<const Fact* const> relation(const Symbol& name) const;

 private:
  std::map<Symbol, std::vector<const Fact*>> by_relation_;
};

/// Extends `theta` so that `atom` maps onto `fact`. Returns false (leaving
/// `theta` in an unspecified extended state) on a clash.
bool unify(const Atom& atom, const Fact& fact, Valuation& theta);

/// Some valuation θ over vars(q) extending `seed` with θ(q) ⊆ world.
std::optional<Valuation> find_embedding(const FactIndex& world, const Query& q, const Valuation& seed = {});
std::optional<Valuation> find_embedding(std::span<const Fact> world, const Query& q);

bool satisfies(std::span<const Fact> world, const Query& q);
bool satisfies(const FactIndex& world, const Query& q);

/// Is there θ with `fact` ∈ θ(q) ⊆ world?
bool embeddable(const Fact& fact, const FactIndex& world, const Query& q);

/// Every valuation over vars(q) embedding q into the world, in search order.
void for_each_embedding(const FactIndex& world, const Query& q,
                        const std::function<bool(const Valuation&)>& visit);

}  // namespace cqa
