#include "cqa/functional_dependency.hpp"

#include <algorithm>
#include <stdexcept>

#include "cqa/query_parser.hpp"

namespace cqa {

FunctionalDependencySet::FunctionalDependencySet(std::vector<FunctionalDependency> deps)
    : deps_(std::move(deps)) {
  std::sort(deps_.begin(), deps_.end());
  deps_.erase(std::unique(deps_.begin(), deps_.end()), deps_.end());
}

FunctionalDependencySet fd_set(const Query& q) {
  std::vector<FunctionalDependency> deps;
  deps.reserve(q.size());
  for (const Atom& a : q.atoms()) deps.push_back({a.key_vars(), a.vars()});
  return FunctionalDependencySet(std::move(deps));
}

// Linear-pass variant of the classic closure algorithm: each dependency
// fires at most once.
VarSet attribute_closure(const VarSet& x, const FunctionalDependencySet& sigma) {
  VarSet closure = x;
  std::vector<bool> fired(sigma.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (fired[i]) continue;
      const FunctionalDependency& fd = sigma.dependencies()[i];
      if (!is_subset(fd.lhs, closure)) continue;
      fired[i] = true;
      for (const Symbol& v : fd.rhs) changed |= closure.insert(v).second;
    }
  }
  return closure;
}

namespace {

std::size_t require_atom(const Atom& f, const Query& q) {
  auto idx = q.index_of(f);
  if (!idx) throw std::invalid_argument("atom " + render(f) + " is not in the query");
  return *idx;
}

}  // namespace

VarSet key_closure(const Atom& f, const Query& q) {
  std::size_t idx = require_atom(f, q);
  return set_intersection(attribute_closure(f.key_vars(), fd_set(q.without(idx))), q.vars());
}

VarSet key_closure_plus(const Atom& f, const Query& q) {
  require_atom(f, q);
  return attribute_closure(f.key_vars(), fd_set(q));
}

}  // namespace cqa
