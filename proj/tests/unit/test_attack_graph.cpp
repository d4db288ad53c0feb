#include <doctest.h>

#include <set>

#include "cqa/attack_graph.hpp"
#include "cqa/classification.hpp"
#include "cqa/cycle_query.hpp"
#include "cqa/errors.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cqa;

namespace {

using Edge = std::tuple<std::string, std::string, AttackStrength>;

std::set<Edge> named_edges(const AttackGraph& g) {
  std::set<Edge> out;
  for (const AttackEdge& e : g.edges()) out.emplace(g.query()[e.from].relation(), g.query()[e.to].relation(), e.strength);
  return out;
}

}  // namespace

TEST_CASE("attack graph of q1") {
  AttackGraph g = attack_graph(testing::q1());
  const auto W = AttackStrength::Weak;
  // F = R, G = S, H = T, I = P.
  std::set<Edge> expected{{"R", "S", W}, {"R", "T", W}, {"R", "P", W}, {"S", "R", AttackStrength::Strong},
                          {"S", "T", W}, {"S", "P", W}, {"T", "S", W}};
  CHECK(named_edges(g) == expected);
  CHECK(g.has_cycle());
  CHECK_FALSE(all_cycles_weak_and_terminal(g));
  auto cycle = find_strong_two_cycle(g);
  REQUIRE(cycle);
  CHECK(std::set<std::string>{g.query()[cycle->strong_from].relation(), g.query()[cycle->strong_to].relation()} ==
        std::set<std::string>{"R", "S"});
  CHECK(g.strength(cycle->strong_from, cycle->strong_to) == AttackStrength::Strong);
}

TEST_CASE("attack graph of q0") {
  Query q = testing::q0();
  AttackGraph g = attack_graph(q);
  const std::size_t f0 = testing::atom_of(q, "R0"), g0 = testing::atom_of(q, "S0");
  CHECK(g.strength(f0, g0) == AttackStrength::Strong);
  CHECK(g.strength(g0, f0) == AttackStrength::Weak);
}

TEST_CASE("weak terminal cycles") {
  CHECK(all_cycles_weak_and_terminal(attack_graph(testing::q_six_atom())));
  AttackGraph ac3 = attack_graph(make_cycle_query(3, true));
  CHECK_FALSE(all_cycles_weak_and_terminal(ac3));
  CHECK_FALSE(find_strong_two_cycle(ac3));
  CHECK(all_cycles_weak_and_terminal(attack_graph(testing::q_rome())));
  CHECK_FALSE(attack_graph(testing::q_rome()).has_cycle());
}

TEST_CASE("attack graph of AC_k: each R_i attacks every other atom") {
  for (std::size_t k = 2; k <= 4; ++k) {
    Query q = make_cycle_query(k, true);
    AttackGraph g = attack_graph(q);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        if (i == j) continue;
        const bool is_r = q[i].relation().front() == 'R';
        CHECK(g.attacks(i, j) == is_r);
      }
    }
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(attack_graph(parse_query("R(x;y) & R(y;x)")), SelfJoinError);
  CHECK_THROWS_AS(attack_graph(make_cycle_query(3, false)), CyclicQueryError);
}

TEST_CASE("edges match the definition on every join tree") {
  testing::Rng rng(23);
  for (int n = 0; n < 300; ++n) {
    Query q = testing::random_acyclic_query(rng, {4, 3, 5, 0.05});
    AttackGraph g = attack_graph(q);
    for (const auto& tree : testing::all_join_trees(q)) {
      for (std::size_t f = 0; f < q.size(); ++f) {
        for (std::size_t h = 0; h < q.size(); ++h) CHECK(g.attacks(f, h) == testing::oracle_attacks(q, tree, f, h));
      }
      CHECK(attack_graph(JoinTree(q, tree)) == g);
    }
    CHECK(all_cycles_weak_and_terminal(g) == testing::oracle_all_cycles_weak_and_terminal(g));
  }
}

TEST_CASE("classification") {
  auto cls = [](const char* text) { return classify_complexity(parse_query(text)).complexity; };
  CHECK(cls("{}") == ComplexityClass::FoRewritable);
  CHECK(cls("C(x,y;'Rome') & R(x;'A')") == ComplexityClass::FoRewritable);
  CHECK(cls("R(u,'a';x) & S(y;x,z) & T(x;y) & P(x;z)") == ComplexityClass::ConpComplete);
  CHECK(cls("R0(x;y) & S0(y,z;x)") == ComplexityClass::ConpComplete);
  CHECK(classify_complexity(testing::q_six_atom()).complexity == ComplexityClass::PtimeTerminalWeak);
  CHECK(cls("R1(x;y) & R2(y;x)") == ComplexityClass::PtimeTerminalWeak);
  CHECK(classify_complexity(make_cycle_query(3, true)).complexity == ComplexityClass::PtimeCycleQuery);
  CHECK(classify_complexity(make_cycle_query(2, true)).complexity == ComplexityClass::PtimeCycleQuery);
  CHECK(classify_complexity(make_cycle_query(4, false)).complexity == ComplexityClass::PtimeCycleQuery);
  CHECK(cls("R(x;y) & R(y;x)") == ComplexityClass::UnsupportedSelfJoin);
  CHECK(cls("A(x;y) & B(y;z) & C(z;x) & D(x;w)") == ComplexityClass::UnsupportedCyclicQuery);
  // AC_3 plus an atom attacked by everything: weak nonterminal cycles, not AC_k.
  CHECK(cls("R1(x1;x2) & R2(x2;x3) & R3(x3;x1) & S3(x1,x2,x3) & T(x1,x2,x3;w)") ==
        ComplexityClass::OpenNonterminalWeak);
}

TEST_CASE("describe strings") {
  Query q = testing::q1();
  CHECK(describe(classify_complexity(q), q) == "coNP-complete (strong 2-cycle: S↔R)");
  Query ac3 = make_cycle_query(3, true);
  CHECK(describe(classify_complexity(ac3), ac3) == "PTIME (cycle query, k=3)");
  Query empty;
  CHECK(describe(classify_complexity(empty), empty) == "FO-rewritable (empty attack graph)");
  for (auto c : {ComplexityClass::FoRewritable, ComplexityClass::ConpComplete, ComplexityClass::OpenNonterminalWeak,
                 ComplexityClass::UnsupportedCyclicQuery}) {
    CHECK(complexity_class_from_string(to_string(c)) == c);
  }
  CHECK(to_string(ComplexityClass::ConpComplete) == "CONP_COMPLETE");
}

TEST_CASE("cycle query recognition") {
  auto m = match_cycle_query(parse_query("B(q;p) & A(p;q) & S(q,p)"));
  REQUIRE(m);
  CHECK(m->k == 2);
  CHECK(m->has_all_key_atom());
  CHECK(m->variables.front() == "q");
  CHECK_FALSE(match_cycle_query(parse_query("A(p;q) & B(q;r) & C(r;p) & S(p,q)")));
  CHECK_FALSE(match_cycle_query(parse_query("A(p;q) & B(q;p) & C(r;s) & D(s;r)")));
  CHECK_FALSE(match_cycle_query(parse_query("A(p;q) & B(q;'c')")));
  auto c3 = match_cycle_query(make_cycle_query(3, false));
  REQUIRE(c3);
  CHECK_FALSE(c3->has_all_key_atom());
}
