#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqa/query.hpp"

namespace cqa {

struct Fact {
  Symbol relation;
  std::vector<Symbol> values;
  std::size_t key_length = 1;

  std::span<const Symbol> key_values() const { return {values.data(), key_length}; }
  std::span<const Symbol> nonkey_values() const {
    return {values.data() + key_length, values.size() - key_length};
  }

  /// Same relation and same key values.
  bool key_equal(const Fact& other) const;

  auto operator<=>(const Fact&) const = default;
};

/// Converts a ground atom into a fact. Throws std::invalid_argument when the
/// atom contains a variable.
Fact to_fact(const Atom& ground_atom);

/// `R(a,b;c)` style rendering, matching the query syntax.
std::string render(const Fact& fact);

/// Facts of one relation sharing a key value, sorted.
using Block = std::vector<Fact>;

/// A finite set of facts over a schema; primary keys need not hold.
/// Immutable after construction.
class UncertainDatabase {
 public:
  UncertainDatabase() = default;
  /// Throws UnknownRelation or ArityMismatch when a fact does not fit the
  /// schema (line number 0).
  UncertainDatabase(std::map<Symbol, Signature> schema, std::vector<Fact> facts);

  const std::map<Symbol, Signature>& schema() const { return schema_; }
  /// Sorted, duplicate-free.
  const std::vector<Fact>& facts() const { return facts_; }
  std::size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }

  /// Blocks sorted by (relation, key); each block sorted.
  const std::vector<Block>& blocks() const { return blocks_; }
  bool consistent() const;
  bool contains(const Fact& f) const;
  /// Index into blocks() of the block holding `f`'s key.
  std::optional<std::size_t> block_of(const Fact& f) const;

  std::set<Symbol> active_domain() const;

  /// Same schema, different facts.
  UncertainDatabase with_facts(std::vector<Fact> facts) const;

  bool operator==(const UncertainDatabase& other) const {
    return schema_ == other.schema_ && facts_ == other.facts_;
  }

 private:
  std::map<Symbol, Signature> schema_;
  std::vector<Fact> facts_;
  std::vector<Block> blocks_;
};

/// Schema taken from the signatures of `q`.
UncertainDatabase make_database(const Query& q, std::vector<Fact> facts);

/// Text format:
///   # comment
///   @relation NAME ARITY KEYLEN
///   NAME v1 v2 ... vn
/// Values are opaque whitespace-free tokens. Throws FormatError and its
/// subclasses with 1-based line numbers.
UncertainDatabase parse_database(std::string_view text);
UncertainDatabase load_database(const std::filesystem::path& path);

/// Canonical form: schema lines alphabetically, then facts sorted.
std::string format_database(const UncertainDatabase& db);
void save_database(const UncertainDatabase& db, const std::filesystem::path& path);

namespace detail {

struct ParsedLine {
  Fact fact;
  std::optional<std::string> annotation;  // text after ':' if present
  std::size_t line = 0;
};

struct ParsedDatabase {
  std::map<Symbol, Signature> schema;
  std::vector<ParsedLine> facts;
};

ParsedDatabase parse_database_text(std::string_view text, bool allow_annotations);
std::string read_file(const std::filesystem::path& path);

}  // namespace detail
}  // namespace cqa
