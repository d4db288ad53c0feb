#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cqa/query.hpp"

namespace cqa {

/// Recognition of the cycle queries
///   C_k  = {R_1(x_1;x_2), ..., R_k(x_k;x_1)}
///   AC_k = C_k plus one all-key atom S_k over exactly x_1..x_k
/// up to renaming of relations and variables. Column order inside the
/// all-key atom is free; `all_key_order` records it.
struct CycleQueryMatch {
  std::size_t k = 0;
  /// Query index of the atom playing R_i (i = 0..k-1), so that
  /// `cycle_atoms[i]` is R(variables[i]; variables[(i+1) % k]).
  std::vector<std::size_t> cycle_atoms;
  std::vector<Symbol> variables;
  /// Present for AC_k.
  std::optional<std::size_t> all_key_atom;
  /// Term p of the all-key atom is variables[all_key_order[p]].
  std::vector<std::size_t> all_key_order;

  bool has_all_key_atom() const { return all_key_atom.has_value(); }
  bool operator==(const CycleQueryMatch&) const = default;
};

std::optional<CycleQueryMatch> match_cycle_query(const Query& q);

/// The canonical C_k (`all_key = false`) or AC_k over relations R1..Rk, Sk
/// and variables x1..xk.
Query make_cycle_query(std::size_t k, bool all_key);

}  // namespace cqa
