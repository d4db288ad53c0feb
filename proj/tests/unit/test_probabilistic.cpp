#include <doctest.h>

#include "cqa/errors.hpp"
#include "cqa/probabilistic.hpp"
#include "cqa/repairs.hpp"
#include "cqa/solvers.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace cqa;
using testing::fact;

namespace {

BIDDatabase conference_uniform() { return load_bid(CQA_TEST_DATA_DIR "/conference_uniform.bid"); }

}  // namespace

TEST_CASE("conference database with uniform blocks") {
  BIDDatabase pdb = conference_uniform();
  CHECK(prob_bruteforce(pdb, testing::q_rome()) == Rational(3, 4));
  CHECK(prob_bruteforce(pdb, Query{}) == 1);
  CHECK(world_probability_sum(pdb) == 1);
  CHECK(certain_blocks_restrict(pdb).blocks().size() == 4);
  CHECK_FALSE(prob_is_one(pdb, testing::q_rome()));
}

TEST_CASE("unannotated facts share the block") {
  BIDDatabase pdb = parse_bid("@relation R 2 1\nR a 1\nR a 2\nR b 1 : 1/3\nR b 2\nR b 3\n");
  CHECK(pdb.probability(fact("R", {"a", "1"}, 1)) == Rational(1, 2));
  CHECK(pdb.probability(fact("R", {"b", "1"}, 1)) == Rational(1, 3));
  CHECK(pdb.probability(fact("R", {"b", "3"}, 1)) == Rational(1, 3));
  BIDDatabase dec = parse_bid("@relation R 2 1\nR a 1 : 0.25\nR a 2 : 3/4\n");
  CHECK(dec.probability(fact("R", {"a", "1"}, 1)) == Rational(1, 4));
  CHECK(parse_bid(format_bid(dec)).probability(fact("R", {"a", "2"}, 1)) == Rational(3, 4));
}

TEST_CASE("malformed probabilities") {
  CHECK_THROWS_AS(parse_bid("@relation R 2 1\nR a 1 : 3/2\n"), FormatError);
  CHECK_THROWS_AS(parse_bid("@relation R 2 1\nR a 1 : 2/3\nR a 2 : 2/3\n"), FormatError);
  CHECK_THROWS_AS(parse_bid("@relation R 2 1\nR a 1 : x\n"), FormatError);
  CHECK_THROWS_AS(parse_bid("@relation R 2 1\nR a 1 : 1/2\nR a 1 : 1/3\n"), FormatError);
}

TEST_CASE("to_string") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(1)) == "1");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("partial block mass") {
  Query q = parse_query("A(x;y) & B(y;z)");
  UncertainDatabase db = make_database(q, {fact("A", {"a", "b"}, 1), fact("B", {"b", "c"}, 1)});
  BIDDatabase pdb(db, {{fact("A", {"a", "b"}, 1), Rational(3, 5)}, {fact("B", {"b", "c"}, 1), Rational(1)}});
  CHECK(prob_bruteforce(pdb, q) == Rational(3, 5));
  CHECK(world_probability_sum(pdb) == 1);
  CHECK(certain_blocks_restrict(pdb).size() == 1);
  CHECK_FALSE(prob_is_one(pdb, q));
}

TEST_CASE("restriction") {
  Query q = parse_query("A(x;y)");
  UncertainDatabase db = make_database(q, {fact("A", {"a", "1"}, 1), fact("A", {"a", "2"}, 1), fact("A", {"b", "1"}, 1)});
  BIDDatabase almost(db, {{fact("A", {"a", "1"}, 1), Rational(49, 100)},
                          {fact("A", {"a", "2"}, 1), Rational(1, 2)},
                          {fact("A", {"b", "1"}, 1), Rational(1)}});
  CHECK(certain_blocks_restrict(almost).facts() == std::vector<Fact>{fact("A", {"b", "1"}, 1)});
  BIDDatabase low(db, {{fact("A", {"a", "1"}, 1), Rational(1, 2)},
                       {fact("A", {"a", "2"}, 1), Rational(0)},
                       {fact("A", {"b", "1"}, 1), Rational(1, 2)}});
  CHECK(certain_blocks_restrict(low).empty());
  BIDDatabase zero(db, {{fact("A", {"a", "1"}, 1), Rational(1)},
                        {fact("A", {"a", "2"}, 1), Rational(0)},
                        {fact("A", {"b", "1"}, 1), Rational(1)}});
  CHECK(certain_blocks_restrict(zero).size() == 2);
  CHECK(prob_is_one(zero, parse_query("A('a';'1')")));
}

TEST_CASE("consistent certain pdb") {
  Query q = testing::q_rome();
  UncertainDatabase db = make_database(q, {fact("C", {"a", "b", "Rome"}, 2), fact("R", {"a", "A"}, 1)});
  BIDDatabase pdb(db, {{db.facts()[0], Rational(1)}, {db.facts()[1], Rational(1)}});
  CHECK(prob_is_one(pdb, q));
  CHECK(prob_bruteforce(pdb, q) == 1);
}

TEST_CASE("constructor validation") {
  Query q = parse_query("A(x;y)");
  UncertainDatabase db = make_database(q, {fact("A", {"a", "1"}, 1), fact("A", {"a", "2"}, 1)});
  CHECK_THROWS_AS(BIDDatabase(db, {{fact("A", {"a", "1"}, 1), Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(BIDDatabase(db, {{fact("A", {"a", "1"}, 1), Rational(2, 3)}, {fact("A", {"a", "2"}, 1), Rational(2, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BIDDatabase(db, {{fact("A", {"a", "1"}, 1), Rational(-1, 3)}, {fact("A", {"a", "2"}, 1), Rational(0)}}),
                  std::invalid_argument);
}

TEST_CASE("probability one iff certain on the restriction") {
  testing::Rng rng(53);
  for (int n = 0; n < 80; ++n) {
    Query q = testing::random_acyclic_query(rng, {3, 3, 4, 0.05});
    BIDDatabase pdb = testing::random_bid(rng, q, 8, 3);
    CHECK(world_probability_sum(pdb) == 1);
    CHECK(prob_is_one(pdb, q) == (prob_bruteforce(pdb, q) == 1));
  }
}
