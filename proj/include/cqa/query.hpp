#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cqa {

using Symbol = std::string;
using VarSet = std::set<Symbol>;

/// Total mapping from variable names to constants.
using Valuation = std::map<Symbol, Symbol>;

struct Term {
  enum class Kind { Variable, Constant };

  Kind kind = Kind::Variable;
  Symbol name;

  static Term variable(Symbol name) { return {Kind::Variable, std::move(name)}; }
  static Term constant(Symbol name) { return {Kind::Constant, std::move(name)}; }

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_constant() const { return kind == Kind::Constant; }

  auto operator<=>(const Term&) const = default;
};

/// Relation signature <arity, key_length> with 1 <= key_length <= arity.
struct Signature {
  std::size_t arity = 1;
  std::size_t key_length = 1;

  bool all_key() const { return arity == key_length; }
  bool valid() const { return key_length >= 1 && key_length <= arity; }

  auto operator<=>(const Signature&) const = default;
};

class Atom {
 public:
  Atom() = default;
  Atom(Symbol relation, std::vector<Term> key_terms, std::vector<Term> nonkey_terms);

  const Symbol& relation() const { return relation_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t key_length() const { return key_length_; }
  Signature signature() const { return {terms_.size(), key_length_}; }

  std::span<const Term> key_terms() const { return {terms_.data(), key_length_}; }
  std::span<const Term> nonkey_terms() const {
    return {terms_.data() + key_length_, terms_.size() - key_length_};
  }

  /// Variables among the key terms.
  VarSet key_vars() const;
  /// Variables among all terms.
  VarSet vars() const;
  bool ground() const;

  /// Replaces variables bound in `theta`; unbound variables are kept.
  Atom substitute(const Valuation& theta) const;

  auto operator<=>(const Atom&) const = default;

 private:
  Symbol relation_;
  std::vector<Term> terms_;
  std::size_t key_length_ = 0;
};

/// A Boolean conjunctive query: a set of atoms, kept in first-occurrence
/// order, plus the relation signatures they use.
class Query {
 public:
  Query() = default;
  /// Deduplicates atoms and infers signatures; throws SignatureConflict when
  /// a relation is used with two different shapes.
  explicit Query(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::map<Symbol, Signature>& signatures() const { return signatures_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }

  VarSet vars() const;
  std::optional<std::size_t> index_of(const Atom& atom) const;
  bool contains(const Atom& atom) const { return index_of(atom).has_value(); }

  Query without(std::size_t index) const;
  Query substitute(const Valuation& theta) const;

  /// Atoms as a set: order-insensitive comparison.
  bool same_atoms(const Query& other) const;

 private:
  std::vector<Atom> atoms_;
  std::map<Symbol, Signature> signatures_;
};

bool has_self_join(const Query& q);

bool is_subset(const VarSet& a, const VarSet& b);
VarSet set_union(const VarSet& a, const VarSet& b);
VarSet set_intersection(const VarSet& a, const VarSet& b);
VarSet set_difference(const VarSet& a, const VarSet& b);

}  // namespace cqa
