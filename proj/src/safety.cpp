#include "cqa/safety.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cqa/errors.hpp"
#include "cqa/query_parser.hpp"

namespace cqa {
namespace {

class SafetyTest {
 public:
  explicit SafetyTest(const Query& q) {
    for (const Atom& a : q.atoms()) {
      for (const Term& t : a.terms()) {
        if (!t.is_variable()) used_constants_.insert(t.name);
      }
    }
  }

  bool run(const Query& q, std::size_t depth) {
    // SE1
    if (q.size() == 1 && q.vars().empty()) {
      record("SE1", q, "single atom without variables", depth);
      return true;
    }

    // SE2
    std::vector<Query> components = connected_components(q);
    if (components.size() >= 2) {
      record("SE2", q, std::to_string(components.size()) + " components", depth);
      bool safe = true;
      for (const Query& c : components) safe = run(c, depth + 1) && safe;
      return safe;
    }

    // SE3
    if (!q.empty()) {
      VarSet common = q[0].key_vars();
      for (const Atom& a : q.atoms()) common = set_intersection(common, a.key_vars());
      if (!common.empty()) {
        const Symbol& x = *common.begin();
        Symbol a = fresh_constant();
        record("SE3", q, x + " := " + a, depth);
        return run(q.substitute({{x, a}}), depth + 1);
      }
    }

    // SE4
    for (const Atom& f : q.atoms()) {
      if (f.key_vars().empty() && !f.vars().empty()) {
        const Symbol x = *f.vars().begin();
        Symbol a = fresh_constant();
        record("SE4", q, render(f) + ", " + x + " := " + a, depth);
        return run(q.substitute({{x, a}}), depth + 1);
      }
    }

    return false;
  }

  std::vector<SafetyStep> steps;

 private:
  void record(std::string rule, const Query& q, std::string detail, std::size_t depth) {
    steps.push_back({std::move(rule), q, std::move(detail), depth});
  }

  Symbol fresh_constant() {
    while (true) {
      Symbol c = "_k" + std::to_string(next_++);
      if (!used_constants_.count(c)) return c;
    }
  }

  // Atoms linked when they share a variable; each ground atom is alone.
  static std::vector<Query> connected_components(const Query& q) {
    std::vector<std::size_t> parent(q.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        if (!set_intersection(q[i].vars(), q[j].vars()).empty()) parent[find(i)] = find(j);
      }
    }
    std::vector<std::vector<Atom>> groups;
    std::vector<std::size_t> group_of(q.size(), q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      std::size_t root = find(i);
      if (group_of[root] == q.size()) {
        group_of[root] = groups.size();
        groups.emplace_back();
      }
      groups[group_of[root]].push_back(q[i]);
    }
    std::vector<Query> out;
    for (auto& g : groups) out.emplace_back(std::move(g));
    return out;
  }

  std::set<Symbol> used_constants_;
  std::size_t next_ = 0;
};

}  // namespace

SafetyTrace is_safe(const Query& q) {
  if (has_self_join(q)) throw SelfJoinError();
  SafetyTest test(q);
  bool safe = test.run(q, 0);
  return {safe, std::move(test.steps)};
}

std::string render(const SafetyTrace& trace) {
  std::string out;
  for (const SafetyStep& s : trace.steps) {
    out += std::string(2 * s.depth, ' ') + s.rule + " on " + render(s.subquery) + ": " + s.detail + "\n";
  }
  return out;
}

}  // namespace cqa
