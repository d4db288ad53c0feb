#include <doctest.h>

#include "cqa/functional_dependency.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cqa;

TEST_CASE("K and K+ of q1") {
  Query q = testing::q1();
  const Atom& f = q[testing::atom_of(q, "R")];
  const Atom& g = q[testing::atom_of(q, "S")];
  const Atom& h = q[testing::atom_of(q, "T")];
  const Atom& i = q[testing::atom_of(q, "P")];
  CHECK(key_closure(f, q) == VarSet{"u"});
  CHECK(key_closure(g, q) == VarSet{"y"});
  CHECK(key_closure(h, q) == VarSet{"x", "z"});
  CHECK(key_closure(i, q) == VarSet{"x", "y", "z"});
  CHECK(key_closure_plus(f, q) == VarSet{"u", "x", "y", "z"});
  for (const Atom* a : {&g, &h, &i}) CHECK(key_closure_plus(*a, q) == VarSet{"x", "y", "z"});
}

TEST_CASE("FD set of q0") {
  FunctionalDependencySet fds = cqa::fd_set(testing::q0());
  REQUIRE(fds.size() == 2);
  CHECK(attribute_closure({"x"}, fds) == VarSet{"x", "y"});
  CHECK(attribute_closure({"y", "z"}, fds) == VarSet{"x", "y", "z"});
  CHECK(attribute_closure({}, fds).empty());
}

TEST_CASE("key_closure rejects a foreign atom") {
  CHECK_THROWS_AS(key_closure(parse_query("Z(w)")[0], testing::q1()), std::invalid_argument);
}

TEST_CASE("closures agree with the closed-set oracle") {
  testing::Rng rng(7);
  for (int n = 0; n < 300; ++n) {
    Query q = testing::random_query(rng);
    for (std::size_t f = 0; f < q.size(); ++f) {
      CHECK(key_closure(q[f], q) == testing::oracle_key_closure(q, f));
      CHECK(key_closure_plus(q[f], q) == testing::oracle_key_closure_plus(q, f));
    }
  }
}
