#pragma once

#include <string>

#include "cqa/database.hpp"
#include "cqa/query.hpp"
#include "cqa/query_parser.hpp"

namespace cqa::testing {

inline Query q1() { return parse_query("R(u,'a';x) & S(y;x,z) & T(x;y) & P(x;z)"); }
inline Query q0() { return parse_query("R0(x;y) & S0(y,z;x)"); }
inline Query q_rome() { return parse_query("C(x,y;'Rome') & R(x;'A')"); }
inline Query q_six_atom() {
  return parse_query(
      "R1(x,u1;u2,z) & R2(x,u2;u1,z) & R3(x,y,u3;u4) & R4(x,y,u4;u3) & R5(y,u5;u6) & R6(y,u6;u5)");
}

inline UncertainDatabase conference_db() {
  return parse_database(
      "@relation C 3 2\n@relation R 2 1\n"
      "C PODS 2016 Rome\nC PODS 2016 Paris\nC KDD 2017 Rome\n"
      "R PODS A\nR KDD A\nR KDD B\n");
}

/// Index of the atom over `relation`.
inline std::size_t atom_of(const Query& q, const std::string& relation) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].relation() == relation) return i;
  }
  throw std::out_of_range("no atom over " + relation);
}

inline Fact fact(const std::string& relation, std::vector<Symbol> values, std::size_t key_length) {
  return Fact{relation, std::move(values), key_length};
}

}  // namespace cqa::testing
