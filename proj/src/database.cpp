#include "cqa/database.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cqa/errors.hpp"
#include "cqa/query_parser.hpp"

namespace cqa {

bool Fact::key_equal(const Fact& other) const {
  return relation == other.relation && key_length == other.key_length &&
         std::equal(key_values().begin(), key_values().end(), other.key_values().begin(),
                    other.key_values().end());
}

Fact to_fact(const Atom& atom) {
  Fact f{atom.relation(), {}, atom.key_length()};
  for (const Term& t : atom.terms()) {
    if (t.is_variable()) throw std::invalid_argument("atom " + render(atom) + " is not ground");
    f.values.push_back(t.name);
  }
  return f;
}

std::string render(const Fact& fact) {
  std::vector<Term> key, rest;
  for (std::size_t i = 0; i < fact.values.size(); ++i) {
    (i < fact.key_length ? key : rest).push_back(Term::constant(fact.values[i]));
  }
  return render(Atom(fact.relation, std::move(key), std::move(rest)));
}

UncertainDatabase::UncertainDatabase(std::map<Symbol, Signature> schema, std::vector<Fact> facts)
    : schema_(std::move(schema)), facts_(std::move(facts)) {
  for (const auto& [name, sig] : schema_) {
    if (!sig.valid()) throw FormatError(0, "invalid signature for relation " + name);
  }
  for (const Fact& f : facts_) {
    auto it = schema_.find(f.relation);
    if (it == schema_.end()) throw UnknownRelation(0, "unknown relation " + f.relation);
    if (it->second.arity != f.values.size() || it->second.key_length != f.key_length) {
      throw ArityMismatch(0, "fact " + render(f) + " does not match the signature of " + f.relation);
    }
  }
  std::sort(facts_.begin(), facts_.end());
  facts_.erase(std::unique(facts_.begin(), facts_.end()), facts_.end());

  for (const Fact& f : facts_) {
    if (blocks_.empty() || !blocks_.back().front().key_equal(f)) blocks_.emplace_back();
    blocks_.back().push_back(f);
  }
}

bool UncertainDatabase::consistent() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.size() == 1; });
}

bool UncertainDatabase::contains(const Fact& f) const {
  return std::binary_search(facts_.begin(), facts_.end(), f);
}

std::optional<std::size_t> UncertainDatabase::block_of(const Fact& f) const {
  // Facts sort by relation then values, so key-equal facts are contiguous and
  // blocks are ordered like their first facts.
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), f, [](const Block& b, const Fact& x) {
    const Fact& head = b.front();
    if (head.relation != x.relation) return head.relation < x.relation;
    return std::lexicographical_compare(head.key_values().begin(), head.key_values().end(),
                                        x.key_values().begin(), x.key_values().end());
  });
  if (it == blocks_.end() || !it->front().key_equal(f)) return std::nullopt;
  return static_cast<std::size_t>(it - blocks_.begin());
}

std::set<Symbol> UncertainDatabase::active_domain() const {
  std::set<Symbol> out;
  for (const Fact& f : facts_) out.insert(f.values.begin(), f.values.end());
  return out;
}

UncertainDatabase UncertainDatabase::with_facts(std::vector<Fact> facts) const {
  return UncertainDatabase(schema_, std::move(facts));
}

UncertainDatabase make_database(const Query& q, std::vector<Fact> facts) {
  return UncertainDatabase(q.signatures(), std::move(facts));
}

namespace detail {
namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError(line, std::string("invalid ") + what + " '" + tok + "'");
  }
  return value;
}

}  // namespace

ParsedDatabase parse_database_text(std::string_view text, bool allow_annotations) {
  ParsedDatabase out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto first = line.find_first_not_of(" \t"); first != std::string_view::npos && line[first] == '#') {
      if (start > text.size()) break;
      continue;
    }

    std::optional<std::string> annotation;
    std::string_view body = line;
    if (allow_annotations) {
      if (auto colon = line.find(':'); colon != std::string_view::npos) {
        body = line.substr(0, colon);
        auto ann = split_ws(line.substr(colon + 1));
        if (ann.size() != 1) throw FormatError(line_no, "expected one value after ':'");
        annotation = ann.front();
      }
    }
    std::vector<std::string> tokens = split_ws(body);
    if (tokens.empty()) {
      if (annotation) throw FormatError(line_no, "annotation without a fact");
      if (start > text.size()) break;
      continue;
    }
    if (tokens.front() == "@relation") {
      if (annotation) throw FormatError(line_no, "annotation on a schema line");
      if (tokens.size() != 4) throw FormatError(line_no, "expected '@relation NAME ARITY KEYLEN'");
      Signature sig{parse_count(tokens[2], line_no, "arity"), parse_count(tokens[3], line_no, "key length")};
      if (!sig.valid()) throw FormatError(line_no, "signature needs 1 <= KEYLEN <= ARITY");
      auto [it, inserted] = out.schema.emplace(tokens[1], sig);
      if (!inserted && it->second != sig) {
        throw FormatError(line_no, "conflicting declaration of relation " + tokens[1]);
      }
      continue;
    }
    const std::string& name = tokens.front();
    auto it = out.schema.find(name);
    if (it == out.schema.end()) throw UnknownRelation(line_no, "unknown relation " + name);
    if (tokens.size() - 1 != it->second.arity) {
      throw ArityMismatch(line_no, "relation " + name + " expects " + std::to_string(it->second.arity) +
                                       " values, got " + std::to_string(tokens.size() - 1));
    }
    Fact f{name, std::vector<Symbol>(tokens.begin() + 1, tokens.end()), it->second.key_length};
    out.facts.push_back({std::move(f), std::move(annotation), line_no});
    if (start > text.size()) break;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

UncertainDatabase parse_database(std::string_view text) {
  detail::ParsedDatabase parsed = detail::parse_database_text(text, false);
  std::vector<Fact> facts;
  facts.reserve(parsed.facts.size());
  for (auto& line : parsed.facts) facts.push_back(std::move(line.fact));
  return UncertainDatabase(std::move(parsed.schema), std::move(facts));
}

UncertainDatabase load_database(const std::filesystem::path& path) {
  return parse_database(detail::read_file(path));
}

std::string format_database(const UncertainDatabase& db) {
  std::string out;
  for (const auto& [name, sig] : db.schema()) {
    out += "@relation " + name + " " + std::to_string(sig.arity) + " " + std::to_string(sig.key_length) + "\n";
  }
  for (const Fact& f : db.facts()) {
    out += f.relation;
    for (const Symbol& v : f.values) out += " " + v;
    out += "\n";
  }
  return out;
}

void save_database(const UncertainDatabase& db, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_database(db);
}

}  // namespace cqa
