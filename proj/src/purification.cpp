#include "cqa/purification.hpp"

#include <algorithm>
#include <set>

#include "cqa/evaluation.hpp"

namespace cqa {

PurificationResult purify_with_trace(const UncertainDatabase& db, const Query& q) {
  PurificationResult result{db, {}};
  while (true) {
    const UncertainDatabase& current = result.db;
    FactIndex index(current.facts());
    // Embeddability only shrinks as facts go, so every non-embeddable fact
    // found in this pass can be removed together.
    std::set<std::size_t> doomed;
    for (const Fact& f : current.facts()) {
      std::size_t block = *current.block_of(f);
      if (doomed.count(block)) continue;
      if (!embeddable(f, index, q)) {
        doomed.insert(block);
        result.steps.push_back({f, current.blocks()[block]});
      }
    }
    if (doomed.empty()) return result;

    std::vector<Fact> kept;
    for (std::size_t b = 0; b < current.blocks().size(); ++b) {
      if (doomed.count(b)) continue;
      const Block& block = current.blocks()[b];
      kept.insert(kept.end(), block.begin(), block.end());
    }
    result.db = current.with_facts(std::move(kept));
  }
}

UncertainDatabase purify(const UncertainDatabase& db, const Query& q) { return purify_with_trace(db, q).db; }

bool is_purified(const UncertainDatabase& db, const Query& q) {
  FactIndex index(db.facts());
  return std::all_of(db.facts().begin(), db.facts().end(),
                     [&](const Fact& f) { return embeddable(f, index, q); });
}

Repair lift_repair(const Repair& repair, const PurificationResult& purification) {
  Repair out = repair;
  for (const PurificationStep& step : purification.steps) out.push_back(step.trigger);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cqa
