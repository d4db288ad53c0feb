#include <doctest.h>

#include <algorithm>

#include "cqa/attack_graph.hpp"
#include "cqa/dot.hpp"
#include "cqa/join_tree.hpp"
#include "cqa/report.hpp"
#include "fixtures.hpp"

using namespace cqa;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("attack graph DOT for q1") {
  std::string dot = to_dot(attack_graph(testing::q1()));
  CHECK(dot.rfind("digraph attack_graph", 0) == 0);
  CHECK(count(dot, "->") == 7);
  CHECK(count(dot, "color=red") == 1);
}

TEST_CASE("join tree DOT") {
  std::string dot = to_dot(std::get<JoinTree>(build_join_tree(testing::q1())));
  CHECK(dot.rfind("graph join_tree", 0) == 0);
  CHECK(count(dot, "--") == 3);
}

TEST_CASE("report round trip") {
  RunReport r;
  r.command = "solve";
  r.inputs = {{"query", "R(x;y)"}, {"database", "db.txt"}};
  r.verdict = "NOT CERTAIN";
  r.method = "bruteforce";
  r.details = {{"repairs", "4"}};
  r.witness = std::vector<std::string>{"R('a';'b')"};
  r.timings = {{"solve", 0.5}};
  CHECK(report_from_json(to_json(r, true)) == r);
  RunReport no_timings = report_from_json(to_json(r));
  CHECK(no_timings.timings.empty());
  RunReport bare;
  bare.command = "classify";
  bare.verdict = "FO_REWRITABLE";
  CHECK(report_from_json(to_json(bare)) == bare);
  CHECK_THROWS_AS(report_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json("[1]"), std::invalid_argument);
}
