#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "cqa/errors.hpp"
#include "cqa/evaluation.hpp"
#include "cqa/repairs.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cqa;
using testing::fact;

TEST_CASE("conference database: blocks and repairs") {
  UncertainDatabase db = testing::conference_db();
  CHECK(db.size() == 6);
  REQUIRE(db.blocks().size() == 4);
  std::multiset<std::size_t> sizes;
  for (const Block& b : db.blocks()) sizes.insert(b.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 2, 2});
  CHECK_FALSE(db.consistent());
  CHECK(repair_count(db) == 4);

  std::set<Repair> seen;
  for_each_repair(db, [&](const Repair& r) {
    CHECK(is_repair_of(r, db));
    seen.insert(r);
    return true;
  });
  CHECK(seen.size() == 4);

  Repair falsifying{fact("C", {"KDD", "2017", "Rome"}, 2), fact("C", {"PODS", "2016", "Paris"}, 2),
                    fact("R", {"KDD", "B"}, 1), fact("R", {"PODS", "A"}, 1)};
  CHECK(is_repair_of(falsifying, db));
  CHECK_FALSE(satisfies(falsifying, testing::q_rome()));
  CHECK(std::count_if(seen.begin(), seen.end(), [](const Repair& r) { return satisfies(r, testing::q_rome()); }) == 3);
}

TEST_CASE("repairs match an independent enumeration") {
  testing::Rng rng(3);
  for (int n = 0; n < 200; ++n) {
    Query q = testing::random_query(rng, {3, 3, 4, 0.1});
    UncertainDatabase db = testing::random_database(rng, q, 10, 3);
    std::set<Repair> mine;
    for_each_repair(db, [&](const Repair& r) {
      mine.insert(r);
      return true;
    });
    std::set<Repair> theirs;
    for (auto r : testing::oracle_repairs(db)) {
      std::sort(r.begin(), r.end());
      theirs.insert(r);
    }
    CHECK(mine == theirs);
    CHECK(repair_count(db) == theirs.size());
  }
}

TEST_CASE("block partition ignores insertion order") {
  testing::Rng rng(5);
  Query q = testing::q1();
  UncertainDatabase db = testing::random_database(rng, q, 12, 3);
  std::vector<Fact> shuffled = db.facts();
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(make_database(q, shuffled).blocks() == db.blocks());
}

TEST_CASE("empty database has one empty repair") {
  UncertainDatabase db = make_database(testing::q1(), {});
  CHECK(repair_count(db) == 1);
  int calls = 0;
  for_each_repair(db, [&](const Repair& r) {
    CHECK(r.empty());
    ++calls;
    return true;
  });
  CHECK(calls == 1);
}

TEST_CASE("parse and format round trip") {
  UncertainDatabase db = testing::conference_db();
  std::string text = format_database(db);
  CHECK(text.rfind("@relation C 3 2\n@relation R 2 1\n", 0) == 0);
  CHECK(parse_database(text) == db);
  auto path = std::filesystem::temp_directory_path() / "cqa_roundtrip.db";
  save_database(db, path);
  CHECK(load_database(path) == db);
  std::filesystem::remove(path);
}

TEST_CASE("format errors report lines") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_database(text);
    } catch (const FormatError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK_THROWS_AS(parse_database("@relation R 2 1\nR a\n"), ArityMismatch);
  CHECK_THROWS_AS(parse_database("@relation R 2 1\nS a b\n"), UnknownRelation);
  CHECK(line_of("# comment\n@relation R 2 1\n\nR a\n") == 4);
  CHECK(line_of("@relation R 2 3\n") == 1);
  CHECK(line_of("@relation R 2 1\n@relation R 3 1\n") == 2);
  CHECK_THROWS_AS(load_database("/nonexistent/file.db"), FileError);
}

TEST_CASE("database validation against the schema") {
  CHECK_THROWS_AS(make_database(testing::q1(), {fact("R", {"a"}, 2)}), ArityMismatch);
  CHECK_THROWS_AS(make_database(testing::q1(), {fact("Z", {"a"}, 1)}), UnknownRelation);
}

TEST_CASE("satisfaction agrees with a naive matcher") {
  testing::Rng rng(13);
  for (int n = 0; n < 400; ++n) {
    Query q = testing::random_query(rng, {4, 3, 4, 0.1});
    UncertainDatabase db = testing::random_embedding_database(rng, q, 10, 3);
    CHECK(satisfies(db.facts(), q) == testing::oracle_satisfies(db.facts(), q));
    if (auto theta = find_embedding(db.facts(), q)) {
      for (const Atom& a : q.atoms()) CHECK(db.contains(to_fact(a.substitute(*theta))));
    }
  }
}
