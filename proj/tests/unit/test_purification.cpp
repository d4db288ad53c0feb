#include <doctest.h>

#include "cqa/evaluation.hpp"
#include "cqa/purification.hpp"
#include "cqa/repairs.hpp"
#include "cqa/solvers.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace cqa;
using testing::fact;

TEST_CASE("worked example purifies to nothing") {
  Query q = parse_query("R(x;y) & S(y;x)");
  UncertainDatabase db = make_database(q, {fact("R", {"a", "b"}, 1), fact("S", {"b", "a"}, 1), fact("S", {"b", "c"}, 1)});
  CHECK_FALSE(is_purified(db, q));
  PurificationResult result = purify_with_trace(db, q);
  CHECK(result.db.empty());
  CHECK(result.steps.size() == 2);
}

TEST_CASE("conference database purifies to nothing") {
  // C(PODS,2016;Paris) and R(KDD;B) embed nowhere; removing their blocks
  // strands the remaining facts.
  UncertainDatabase db = testing::conference_db();
  Query q = testing::q_rome();
  CHECK(purify(db, q).empty());
  CHECK(certain_bruteforce(db, q).certain == certain_bruteforce(purify(db, q), q).certain);
}

TEST_CASE("purified databases are fixed points") {
  Query q = parse_query("R1(x;y) & R2(y;x)");
  UncertainDatabase db =
      make_database(q, {fact("R1", {"a", "b"}, 1), fact("R1", {"a", "c"}, 1), fact("R2", {"b", "a"}, 1),
                        fact("R2", {"c", "a"}, 1)});
  CHECK(is_purified(db, q));
  CHECK(purify(db, q) == db);
}

TEST_CASE("purification preserves certainty and lifting yields repairs") {
  testing::Rng rng(17);
  for (int n = 0; n < 300; ++n) {
    Query q = testing::random_acyclic_query(rng, {3, 3, 4, 0.05});
    UncertainDatabase db = testing::random_embedding_database(rng, q, 10, 3);
    PurificationResult result = purify_with_trace(db, q);
    CHECK(is_purified(result.db, q));
    CHECK(purify(result.db, q) == result.db);
    CertainAnswer before = certain_bruteforce(db, q);
    CertainAnswer after = certain_bruteforce(result.db, q);
    CHECK(before.certain == after.certain);
    if (!after.certain) {
      Repair lifted = lift_repair(*after.witness, result);
      CHECK(is_repair_of(lifted, db));
      CHECK_FALSE(satisfies(lifted, q));
    }
  }
}
