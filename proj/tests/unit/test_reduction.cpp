#include <doctest.h>

#include <set>

#include "cqa/attack_graph.hpp"
#include "cqa/errors.hpp"
#include "cqa/functional_dependency.hpp"
#include "cqa/evaluation.hpp"
#include "cqa/reduction.hpp"
#include "cqa/repairs.hpp"
#include "cqa/solvers.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cqa;
using testing::fact;

namespace {

std::string p2(const char* a, const char* b) {
  std::vector<Symbol> v{a, b};
  return composite_constant(v);
}

UncertainDatabase db0_of(std::vector<Fact> facts) { return make_database(strong_cycle_source_query(), std::move(facts)); }

}  // namespace

TEST_CASE("composite constants") {
  CHECK(p2("2", "3") == "p2(2,3)");
  std::vector<Symbol> one{"7"};
  CHECK(composite_constant(one) == "7");
  std::vector<Symbol> three{"a", "b", "c"};
  CHECK(composite_constant(three) == "p3(a,b,c)");
  // Escaping keeps distinct sequences apart.
  std::vector<Symbol> tricky1{"a,b", "c"};
  std::vector<Symbol> tricky2{"a", "b,c"};
  CHECK(composite_constant(tricky1) != composite_constant(tricky2));
  std::vector<Symbol> nested{"p2(a", "b)"};
  CHECK(composite_constant(nested) != p2("a", "b"));
}

TEST_CASE("regions and rv on q1") {
  Query q = testing::q1();
  const std::size_t f = testing::atom_of(q, "S");
  const std::size_t g = testing::atom_of(q, "R");
  RegionAssignment regions = region_assignment(q, f, g);
  CHECK(regions.of("u") == Region::KeyGOutside);
  CHECK(regions.of("x") == Region::PlusOnly);
  CHECK(regions.of("y") == Region::KeyFOnly);
  CHECK(regions.of("z") == Region::PlusOnly);

  Valuation theta{{"x", "1"}, {"y", "2"}, {"z", "3"}};
  Valuation rv = rv_valuation(theta, q, f, g);
  CHECK(rv.at("u") == p2("2", "3"));
  CHECK(rv.at("x") == p2("1", "2"));
  CHECK(rv.at("y") == "1");
  CHECK(rv.at("z") == p2("1", "2"));

  CHECK_THROWS_AS(rv_valuation(theta, q, g, f), PreconditionViolated);
}

TEST_CASE("region one maps to d") {
  // Both keys contain k, so k lies in K(F) and K(G).
  Query q = parse_query("A(k,x;y) & B(k,y,z;x)");
  auto cycle = find_strong_two_cycle(attack_graph(q));
  REQUIRE(cycle);
  RegionAssignment regions = region_assignment(q, cycle->strong_from, cycle->strong_to);
  REQUIRE(regions.of("k") == Region::KeyBoth);
  for (const char* v : {"1", "2"}) {
    Valuation theta{{"x", v}, {"y", "3"}, {"z", "4"}};
    CHECK(rv_valuation(theta, regions).at("k") == kRegionOneConstant);
  }
}

TEST_CASE("rv agrees on K+(F) when x and y agree") {
  Query q = testing::q1();
  const std::size_t f = testing::atom_of(q, "S");
  const std::size_t g = testing::atom_of(q, "R");
  RegionAssignment regions = region_assignment(q, f, g);
  const VarSet plus = key_closure_plus(q[f], q);
  for (const char* z1 : {"1", "2", "3"}) {
    for (const char* z2 : {"1", "2", "3"}) {
      Valuation a = rv_valuation({{"x", "1"}, {"y", "2"}, {"z", z1}}, regions);
      Valuation b = rv_valuation({{"x", "1"}, {"y", "2"}, {"z", z2}}, regions);
      for (const Symbol& v : plus) CHECK(a.at(v) == b.at(v));
    }
  }
}

TEST_CASE("singleton db0") {
  UncertainDatabase db0 = db0_of({fact("R0", {"1", "2"}, 1), fact("S0", {"2", "3", "1"}, 2)});
  Query q = testing::q1();
  ReductionContext ctx = strong_cycle_reduce(db0, q);
  CHECK(ctx.output.size() == 4);
  CHECK(ctx.embeddings.size() == 1);
  CHECK(q[ctx.f].relation() == "S");
  CHECK(q[ctx.g].relation() == "R");
  Repair image = map_repair(db0.facts(), ctx);
  CHECK(image == ctx.output.facts());
  // Passing the pair the other way round normalizes to the same thing.
  ReductionContext swapped = strong_cycle_reduce(db0, q, testing::atom_of(q, "R"), testing::atom_of(q, "S"));
  CHECK(swapped.output.facts() == ctx.output.facts());
}

TEST_CASE("reduction preconditions") {
  Query q = testing::q1();
  UncertainDatabase wrong = parse_database("@relation R0 2 2\nR0 1 2\n");
  CHECK_THROWS_AS(strong_cycle_reduce(wrong, q), SchemaMismatch);
  CHECK_THROWS_AS(strong_cycle_reduce(db0_of({}), parse_query("R(x;y) & S(y;x)")), PreconditionViolated);
  UncertainDatabase db0 = db0_of({fact("R0", {"1", "2"}, 1), fact("S0", {"2", "3", "1"}, 2)});
  ReductionContext ctx = strong_cycle_reduce(db0, q);
  CHECK_THROWS_AS(map_repair({fact("R0", {"9", "9"}, 1)}, ctx), PreconditionViolated);
}

TEST_CASE("reduction preserves certainty and repairs") {
  testing::Rng rng(41);
  Query q0 = strong_cycle_source_query();
  Query q = testing::q1();
  for (int n = 0; n < 60; ++n) {
    UncertainDatabase db0 = testing::random_database(rng, q0, 8, 3);
    ReductionContext ctx = strong_cycle_reduce(db0, q);
    CHECK(testing::oracle_certain(ctx.db0, q0) == testing::oracle_certain(ctx.output, q));
    CHECK(repair_count(ctx.db0) == repair_count(ctx.output));
    std::set<Repair> images;
    for (const auto& r0 : testing::oracle_repairs(ctx.db0)) {
      Repair image = map_repair(r0, ctx);
      CHECK(is_repair_of(image, ctx.output));
      CHECK(satisfies(r0, q0) == satisfies(image, q));
      std::sort(image.begin(), image.end());
      images.insert(image);
    }
    CHECK(BigInt(images.size()) == repair_count(ctx.output));
  }
}
