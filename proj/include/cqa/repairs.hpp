#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cqa/database.hpp"

namespace cqa {

using BigInt = boost::multiprecision::cpp_int;

/// A maximal consistent subset of a database: one fact per block, sorted.
using Repair = std::vector<Fact>;

/// Product of the block sizes; 1 for the empty database.
BigInt repair_count(const UncertainDatabase& db);

/// Lazy mixed-radix enumeration of repairs over `db.blocks()`; the first
/// block is the most significant digit. Holds a reference to `db`.
class RepairCursor {
 public:
  explicit RepairCursor(const UncertainDatabase& db);

  bool done() const { return done_; }
  void next();

  /// Chosen fact index within each block.
  const std::vector<std::size_t>& choice() const { return digits_; }
  Repair current() const;

 private:
  const UncertainDatabase* db_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

/// Calls `visit` on every repair in cursor order until it returns false.
/// Returns false iff enumeration was stopped early.
bool for_each_repair(const UncertainDatabase& db, const std::function<bool(const Repair&)>& visit);

/// True iff `candidate` contains exactly one fact of every block of `db` and
/// nothing else.
bool is_repair_of(const std::vector<Fact>& candidate, const UncertainDatabase& db);

}  // namespace cqa
