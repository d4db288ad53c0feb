#include "cqa/repairs.hpp"

#include <algorithm>

namespace cqa {

BigInt repair_count(const UncertainDatabase& db) {
  BigInt count = 1;
  for (const Block& b : db.blocks()) count *= b.size();
  return count;
}

RepairCursor::RepairCursor(const UncertainDatabase& db) : db_(&db), digits_(db.blocks().size(), 0) {}

void RepairCursor::next() {
  const auto& blocks = db_->blocks();
  for (std::size_t i = blocks.size(); i-- > 0;) {
    if (++digits_[i] < blocks[i].size()) return;
    digits_[i] = 0;
  }
  done_ = true;
}

Repair RepairCursor::current() const {
  Repair out;
  out.reserve(digits_.size());
  const auto& blocks = db_->blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) out.push_back(blocks[i][digits_[i]]);
  return out;
}

bool for_each_repair(const UncertainDatabase& db, const std::function<bool(const Repair&)>& visit) {
  for (RepairCursor cursor(db); !cursor.done(); cursor.next()) {
    if (!visit(cursor.current())) return false;
  }
  return true;
}

bool is_repair_of(const std::vector<Fact>& candidate, const UncertainDatabase& db) {
  std::vector<Fact> sorted = candidate;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.size() != db.blocks().size()) return false;
  std::vector<bool> hit(db.blocks().size(), false);
  for (const Fact& f : sorted) {
    if (!db.contains(f)) return false;
    std::size_t b = *db.block_of(f);
    if (hit[b]) return false;
    hit[b] = true;
  }
  return true;
}

}  // namespace cqa
