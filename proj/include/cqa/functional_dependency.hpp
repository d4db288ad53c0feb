#pragma once

#include <vector>

#include "cqa/query.hpp"

namespace cqa {

struct FunctionalDependency {
  VarSet lhs;
  VarSet rhs;

  auto operator<=>(const FunctionalDependency&) const = default;
};

/// Set semantics: sorted, no duplicates.
class FunctionalDependencySet {
 public:
  FunctionalDependencySet() = default;
  explicit FunctionalDependencySet(std::vector<FunctionalDependency> deps);

  const std::vector<FunctionalDependency>& dependencies() const { return deps_; }
  std::size_t size() const { return deps_.size(); }
  bool empty() const { return deps_.empty(); }

  bool operator==(const FunctionalDependencySet&) const = default;

 private:
  std::vector<FunctionalDependency> deps_;
};

/// key(F) -> vars(F) for every atom F of q.
FunctionalDependencySet fd_set(const Query& q);

/// Least superset of `x` closed under `sigma`.
VarSet attribute_closure(const VarSet& x, const FunctionalDependencySet& sigma);

/// Closure of key(F) under the dependencies of q \ {F}, restricted to vars(q).
/// Throws std::invalid_argument when `f` is not an atom of q.
VarSet key_closure(const Atom& f, const Query& q);

/// Closure of key(F) under the dependencies of all of q.
VarSet key_closure_plus(const Atom& f, const Query& q);

}  // namespace cqa
