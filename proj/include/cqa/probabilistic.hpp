#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cqa/database.hpp"
#include "cqa/query.hpp"
#include "cqa/solvers.hpp"

namespace cqa {

using Rational = boost::multiprecision::cpp_rational;

/// Block-independent-disjoint probabilistic database: facts of one block
/// are mutually exclusive, blocks are independent.
class BIDDatabase {
 public:
  BIDDatabase() = default;
  /// Throws std::invalid_argument when a fact lacks a probability, a
  /// probability lies outside [0,1], or a block sums to more than 1.
  BIDDatabase(UncertainDatabase base, std::map<Fact, Rational> probability);

  const UncertainDatabase& base() const { return base_; }
  const Rational& probability(const Fact& f) const { return probability_.at(f); }
  Rational block_mass(const Block& block) const;

 private:
  UncertainDatabase base_;
  std::map<Fact, Rational> probability_;
};

/// Database format with an optional `: p/q` suffix per fact (also `: 1`,
/// `: 0.25`). Facts without a suffix share what their block has left
/// equally, which is 1/blocksize when no fact of the block has a suffix.
/// Throws FormatError with the offending line.
BIDDatabase parse_bid(std::string_view text);
BIDDatabase load_bid(const std::filesystem::path& path);
std::string format_bid(const BIDDatabase& pdb);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Pr(q) by summing the probabilities of the satisfying possible worlds.
/// Guarded by `options.repair_limit` on the number of worlds.
Rational prob_bruteforce(const BIDDatabase& pdb, const Query& q, const SolverOptions& options = {});

/// Sum of the probabilities of all possible worlds; 1 for every valid input.
Rational world_probability_sum(const BIDDatabase& pdb, const SolverOptions& options = {});

/// The blocks whose probabilities sum to exactly 1, without their
/// zero-probability facts (those occur in no world of positive probability).
UncertainDatabase certain_blocks_restrict(const BIDDatabase& pdb);

/// Pr(q) = 1, decided through CERTAINTY on the restricted database.
bool prob_is_one(const BIDDatabase& pdb, const Query& q, const SolverOptions& options = {});

}  // namespace cqa
