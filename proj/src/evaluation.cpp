#include "cqa/evaluation.hpp"

#include <algorithm>

namespace cqa {

FactIndex::FactIndex(std::span<const Fact> facts) {
  for (const Fact& f : facts) by_relation_[f.relation].push_back(&f);
}

std::span<const Fact* const> FactIndex::relation(const Symbol& name) const {
  auto it = by_relation_.find(name);
  if (it == by_relation_.end()) return {};
  return it->second;
}

bool unify(const Atom& atom, const Fact& fact, Valuation& theta) {
  if (atom.relation() != fact.relation || atom.terms().size() != fact.values.size() ||
      atom.key_length() != fact.key_length) {
    return false;
  }
  const auto& terms = atom.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    const Symbol& value = fact.values[i];
    if (t.is_constant()) {
      if (t.name != value) return false;
      continue;
    }
    auto [it, inserted] = theta.emplace(t.name, value);
    if (!inserted && it->second != value) return false;
  }
  return true;
}

namespace {

class Search {
 public:
  Search(const FactIndex& world, const Query& q, const std::function<bool(const Valuation&)>& visit)
      : world_(world), q_(q), visit_(visit), used_(q.size(), false) {}

  // Returns false when the visitor asked to stop.
  bool run(Valuation& theta, std::size_t placed) {
    if (placed == q_.size()) return visit_(theta);
    std::size_t next = pick(theta);
    used_[next] = true;
    for (const Fact* f : world_.relation(q_[next].relation())) {
      Valuation extended = theta;
      if (!unify(q_[next], *f, extended)) continue;
      if (!run(extended, placed + 1)) {
        used_[next] = false;
        return false;
      }
    }
    used_[next] = false;
    return true;
  }

 private:
  // Most-constrained atom first: fewest candidate facts, then most bound terms.
  std::size_t pick(const Valuation& theta) const {
    std::size_t best = q_.size();
    std::pair<std::size_t, std::size_t> best_score{};
    for (std::size_t i = 0; i < q_.size(); ++i) {
      if (used_[i]) continue;
      std::size_t free = 0;
      for (const Term& t : q_[i].terms()) {
        if (t.is_variable() && !theta.count(t.name)) ++free;
      }
      std::pair<std::size_t, std::size_t> score{free, world_.relation(q_[i].relation()).size()};
      if (best == q_.size() || score < best_score) {
        best = i;
        best_score = score;
      }
    }
    return best;
  }

  const FactIndex& world_;
  const Query& q_;
  const std::function<bool(const Valuation&)>& visit_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_embedding(const FactIndex& world, const Query& q,
                        const std::function<bool(const Valuation&)>& visit) {
  Valuation theta;
  Search(world, q, visit).run(theta, 0);
}

std::optional<Valuation> find_embedding(const FactIndex& world, const Query& q, const Valuation& seed) {
  std::optional<Valuation> found;
  std::function<bool(const Valuation&)> visit = [&](const Valuation& theta) {
    found = theta;
    return false;
  };
  Valuation theta = seed;
  Search(world, q, visit).run(theta, 0);
  return found;
}

std::optional<Valuation> find_embedding(std::span<const Fact> world, const Query& q) {
  return find_embedding(FactIndex(world), q);
}

bool satisfies(const FactIndex& world, const Query& q) { return find_embedding(world, q).has_value(); }

bool satisfies(std::span<const Fact> world, const Query& q) { return satisfies(FactIndex(world), q); }

bool embeddable(const Fact& fact, const FactIndex& world, const Query& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    Valuation seed;
    if (!unify(q[i], fact, seed)) continue;
    if (find_embedding(world, q, seed)) return true;
  }
  return false;
}

}  // namespace cqa
