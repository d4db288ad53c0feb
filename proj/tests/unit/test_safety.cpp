#include <doctest.h>

#include "cqa/errors.hpp"
#include "cqa/safety.hpp"
#include "fixtures.hpp"

using namespace cqa;

namespace {

std::vector<std::string> rules(const SafetyTrace& t) {
  std::vector<std::string> out;
  for (const auto& s : t.steps) out.push_back(s.rule);
  return out;
}

}  // namespace

TEST_CASE("single atom is safe") {
  SafetyTrace t = is_safe(parse_query("R(x;y)"));
  CHECK(t.safe);
  CHECK(rules(t) == std::vector<std::string>{"SE3", "SE4", "SE1"});
  CHECK(t.steps[0].depth == 0);
  CHECK(t.steps[2].depth == 2);
}

TEST_CASE("q0 is unsafe with no applicable rule") {
  SafetyTrace t = is_safe(testing::q0());
  CHECK_FALSE(t.safe);
  CHECK(t.steps.empty());
}

TEST_CASE("shared key then split") {
  SafetyTrace t = is_safe(parse_query("R(x;y) & S(x;z)"));
  CHECK(t.safe);
  REQUIRE(t.steps.size() >= 2);
  CHECK(t.steps[0].rule == "SE3");
  CHECK(t.steps[1].rule == "SE2");
  std::size_t se1 = 0;
  for (const auto& s : t.steps) se1 += s.rule == "SE1";
  CHECK(se1 == 2);
}

TEST_CASE("ground and empty queries") {
  CHECK(is_safe(parse_query("R('a';'b')")).safe);
  CHECK_FALSE(is_safe(Query{}).safe);
  CHECK_FALSE(is_safe(parse_query("R(x;y) & S(y;x)")).safe);
  CHECK_THROWS_AS(is_safe(parse_query("R(x;y) & R(y;x)")), SelfJoinError);
}

TEST_CASE("fresh constants avoid query constants") {
  SafetyTrace t = is_safe(parse_query("R(x;'_k0')"));
  CHECK(t.safe);
  for (const auto& s : t.steps) {
    if (s.rule == "SE1") CHECK(s.subquery.size() == 1);
  }
  CHECK(render(t).find("SE3") != std::string::npos);
}
