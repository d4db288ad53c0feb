#include "cqa/reduction.hpp"

#include <algorithm>
#include <array>

#include "cqa/attack_graph.hpp"
#include "cqa/errors.hpp"
#include "cqa/evaluation.hpp"
#include "cqa/functional_dependency.hpp"
#include "cqa/purification.hpp"
#include "cqa/query_parser.hpp"

namespace cqa {
namespace {

std::string escape_component(const Symbol& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == ',' || c == '(' || c == ')') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

// Orients {f, g} so that f -> g is strong, or throws.
std::pair<std::size_t, std::size_t> orient(const Query& q, std::size_t f, std::size_t g) {
  if (f >= q.size() || g >= q.size() || f == g) throw PreconditionViolated("atom indices do not name two atoms of q");
  AttackGraph graph = attack_graph(q);
  auto fg = graph.strength(f, g);
  auto gf = graph.strength(g, f);
  if (!fg || !gf) throw PreconditionViolated("atoms " + render(q[f]) + " and " + render(q[g]) + " do not attack each other");
  if (*fg == AttackStrength::Strong) return {f, g};
  if (*gf == AttackStrength::Strong) return {g, f};
  throw PreconditionViolated("the 2-cycle between " + render(q[f]) + " and " + render(q[g]) + " is weak");
}

const Symbol& at(const Valuation& theta, const char* v) {
  auto it = theta.find(v);
  if (it == theta.end()) throw PreconditionViolated(std::string("valuation does not bind ") + v);
  return it->second;
}

}  // namespace

RegionAssignment region_assignment(const Query& q, std::size_t f, std::size_t g) {
  const VarSet kf = key_closure(q[f], q);
  const VarSet kg = key_closure(q[g], q);
  const VarSet kf_plus = key_closure_plus(q[f], q);
  RegionAssignment out;
  for (const Symbol& u : q.vars()) {
    const bool in_f = kf.count(u) > 0;
    const bool in_g = kg.count(u) > 0;
    const bool in_plus = kf_plus.count(u) > 0;
    Region r;
    if (in_f && in_g) r = Region::KeyBoth;
    else if (in_f) r = Region::KeyFOnly;
    else if (in_g && !in_plus) r = Region::KeyGOutside;
    else if (in_g) r = Region::KeyGInside;
    else if (in_plus) r = Region::PlusOnly;
    else r = Region::Outside;
    out.region.emplace(u, r);
  }
  return out;
}

std::string composite_constant(std::span<const Symbol> components) {
  if (components.size() == 1) return components.front();
  std::string out = "p" + std::to_string(components.size()) + "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ",";
    out += escape_component(components[i]);
  }
  return out + ")";
}

Valuation rv_valuation(const Valuation& theta, const RegionAssignment& regions) {
  const Symbol& x = at(theta, "x");
  const Symbol& y = at(theta, "y");
  const Symbol& z = at(theta, "z");
  Valuation out;
  for (const auto& [u, r] : regions.region) {
    switch (r) {
      case Region::KeyBoth:
        out[u] = kRegionOneConstant;
        break;
      case Region::KeyFOnly:
        out[u] = x;
        break;
      case Region::KeyGOutside:
        out[u] = composite_constant(std::array{y, z});
        break;
      case Region::KeyGInside:
        out[u] = y;
        break;
      case Region::PlusOnly:
        out[u] = composite_constant(std::array{x, y});
        break;
      case Region::Outside:
        out[u] = composite_constant(std::array{x, y, z});
        break;
    }
  }
  return out;
}

Valuation rv_valuation(const Valuation& theta, const Query& q, std::size_t f, std::size_t g) {
  auto [from, to] = orient(q, f, g);
  if (from != f) throw PreconditionViolated("the attack from " + render(q[f]) + " to " + render(q[g]) + " is weak");
  return rv_valuation(theta, region_assignment(q, f, g));
}

Query strong_cycle_source_query() {
  return Query({Atom("R0", {Term::variable("x")}, {Term::variable("y")}),
                Atom("S0", {Term::variable("y"), Term::variable("z")}, {Term::variable("x")})});
}

ReductionContext strong_cycle_reduce(const UncertainDatabase& db0, const Query& q, std::size_t f, std::size_t g) {
  const Query q0 = strong_cycle_source_query();
  for (const auto& [name, sig] : db0.schema()) {
    auto it = q0.signatures().find(name);
    if (it == q0.signatures().end() || it->second != sig) {
      throw SchemaMismatch("source database must use only R0 ⟨2,1⟩ and S0 ⟨3,2⟩; found " + name);
    }
  }

  ReductionContext ctx;
  ctx.q = q;
  std::tie(ctx.f, ctx.g) = orient(q, f, g);
  ctx.regions = region_assignment(q, ctx.f, ctx.g);
  ctx.db0 = purify(db0, q0);

  FactIndex index(ctx.db0.facts());
  for_each_embedding(index, q0, [&](const Valuation& theta) {
    ctx.embeddings.push_back(theta);
    return true;
  });
  std::sort(ctx.embeddings.begin(), ctx.embeddings.end());
  ctx.embeddings.erase(std::unique(ctx.embeddings.begin(), ctx.embeddings.end()), ctx.embeddings.end());

  std::vector<Fact> all;
  for (const Valuation& theta : ctx.embeddings) {
    Valuation rv = rv_valuation(theta, ctx.regions);
    for (std::size_t h = 0; h < q.size(); ++h) {
      Fact fact = to_fact(q[h].substitute(rv));
      (h == ctx.f ? ctx.db_f : h == ctx.g ? ctx.db_g : ctx.db_rest).push_back(fact);
      all.push_back(std::move(fact));
    }
  }
  for (auto* part : {&ctx.db_f, &ctx.db_g, &ctx.db_rest}) {
    std::sort(part->begin(), part->end());
    part->erase(std::unique(part->begin(), part->end()), part->end());
  }
  ctx.output = make_database(q, std::move(all));
  return ctx;
}

ReductionContext strong_cycle_reduce(const UncertainDatabase& db0, const Query& q) {
  auto cycle = find_strong_two_cycle(attack_graph(q));
  if (!cycle) throw PreconditionViolated("attack graph of " + render(q) + " has no strong cycle");
  return strong_cycle_reduce(db0, q, cycle->strong_from, cycle->strong_to);
}

Repair map_repair(const Repair& r0, const ReductionContext& context) {
  if (!is_repair_of(r0, context.db0)) throw PreconditionViolated("not a repair of the purified source database");
  const Query q0 = strong_cycle_source_query();
  std::vector<Fact> sorted_r0 = r0;
  std::sort(sorted_r0.begin(), sorted_r0.end());
  auto in_r0 = [&](const Fact& f) { return std::binary_search(sorted_r0.begin(), sorted_r0.end(), f); };

  Repair out = context.db_rest;
  for (const Valuation& theta : context.embeddings) {
    Valuation rv = rv_valuation(theta, context.regions);
    if (in_r0(to_fact(q0[0].substitute(theta)))) out.push_back(to_fact(context.q[context.f].substitute(rv)));
    if (in_r0(to_fact(q0[1].substitute(theta)))) out.push_back(to_fact(context.q[context.g].substitute(rv)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cqa
