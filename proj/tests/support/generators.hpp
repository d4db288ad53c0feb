#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "cqa/database.hpp"
#include "cqa/probabilistic.hpp"
#include "cqa/query.hpp"

namespace cqa::testing {

using Rng = std::mt19937_64;

struct QueryShape {
  std::size_t max_atoms = 5;
  std::size_t max_arity = 3;
  std::size_t variable_pool = 5;
  /// Chance that a term is a constant instead of a variable.
  double constant_rate = 0.05;
};

/// Self-join-free query with relations R0, R1, ... Not necessarily acyclic.
Query random_query(Rng& rng, const QueryShape& shape = {});

/// Retries random_query until the result is acyclic.
Query random_acyclic_query(Rng& rng, const QueryShape& shape = {});

/// Random facts over the query's relations. Values come from {a, b, c, ...}
/// (`domain` of them); constants in the query are added to the pool so
/// embeddings are possible.
UncertainDatabase random_database(Rng& rng, const Query& q, std::size_t max_facts, std::size_t domain);

/// Database built by instantiating q under a few random valuations and
/// adding some noise facts; far more likely to have embeddings.
UncertainDatabase random_embedding_database(Rng& rng, const Query& q, std::size_t max_facts, std::size_t domain);

/// Random probabilities on a random database: per block either sums to 1,
/// or to less than 1, with occasional zero-probability facts.
BIDDatabase random_bid(Rng& rng, const Query& q, std::size_t max_facts, std::size_t domain);

}  // namespace cqa::testing
