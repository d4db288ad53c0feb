#include "cqa/query.hpp"

#include <algorithm>
#include <iterator>

#include "cqa/errors.hpp"

namespace cqa {

Atom::Atom(Symbol relation, std::vector<Term> key_terms, std::vector<Term> nonkey_terms)
    : relation_(std::move(relation)), key_length_(key_terms.size()) {
  terms_ = std::move(key_terms);
  terms_.insert(terms_.end(), std::make_move_iterator(nonkey_terms.begin()),
                std::make_move_iterator(nonkey_terms.end()));
}

VarSet Atom::key_vars() const {
  VarSet out;
  for (const Term& t : key_terms()) {
    if (t.is_variable()) out.insert(t.name);
  }
  return out;
}

VarSet Atom::vars() const {
  VarSet out;
  for (const Term& t : terms_) {
    if (t.is_variable()) out.insert(t.name);
  }
  return out;
}

bool Atom::ground() const {
  return std::none_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.is_variable(); });
}

Atom Atom::substitute(const Valuation& theta) const {
  Atom out = *this;
  for (Term& t : out.terms_) {
    if (!t.is_variable()) continue;
    auto it = theta.find(t.name);
    if (it != theta.end()) t = Term::constant(it->second);
  }
  return out;
}

Query::Query(std::vector<Atom> atoms) {
  for (Atom& atom : atoms) {
    Signature sig = atom.signature();
    auto [it, inserted] = signatures_.emplace(atom.relation(), sig);
    if (!inserted && it->second != sig) {
      throw SignatureConflict("relation " + atom.relation() + " used with signature <" +
                              std::to_string(sig.arity) + "," + std::to_string(sig.key_length) +
                              "> and <" + std::to_string(it->second.arity) + "," +
                              std::to_string(it->second.key_length) + ">");
    }
    if (std::find(atoms_.begin(), atoms_.end(), atom) == atoms_.end()) {
      atoms_.push_back(std::move(atom));
    }
  }
}

VarSet Query::vars() const {
  VarSet out;
  for (const Atom& a : atoms_) {
    VarSet v = a.vars();
    out.insert(v.begin(), v.end());
  }
  return out;
}

std::optional<std::size_t> Query::index_of(const Atom& atom) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

Query Query::without(std::size_t index) const {
  std::vector<Atom> rest;
  rest.reserve(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i != index) rest.push_back(atoms_[i]);
  }
  return Query(std::move(rest));
}

Query Query::substitute(const Valuation& theta) const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back(a.substitute(theta));
  return Query(std::move(out));
}

bool Query::same_atoms(const Query& other) const {
  std::vector<Atom> a = atoms_, b = other.atoms_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool has_self_join(const Query& q) {
  std::set<Symbol> seen;
  for (const Atom& a : q.atoms()) {
    if (!seen.insert(a.relation()).second) return true;
  }
  return false;
}

bool is_subset(const VarSet& a, const VarSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VarSet set_intersection(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

VarSet set_difference(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace cqa
