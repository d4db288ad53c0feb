#include "cqa/query_parser.hpp"

#include <algorithm>
#include <cctype>

#include "cqa/errors.hpp"

namespace cqa {
namespace {

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_numeral(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i == digits) return false;
  if (i == s.size()) return true;
  if (s[i] != '.') return false;
  std::size_t frac = ++i;
  while (i < s.size() && is_digit(s[i])) ++i;
  return i > frac && i == s.size();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Query parse() {
    std::vector<Atom> atoms;
    skip_ws();
    bool braced = accept('{');
    skip_ws();
    bool closed_early = braced && accept('}');
    if (!closed_early && !at_end()) {
      atoms.push_back(atom());
      skip_ws();
      while (accept('&')) {
        skip_ws();
        atoms.push_back(atom());
        skip_ws();
      }
      if (braced) expect('}', "expected '}'");
    }
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return Query(std::move(atoms));
  }

 private:
  Atom atom() {
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected relation name");
    }
    while (!at_end() && is_ident_char(peek())) ++pos_;
    Symbol relation(text_.substr(start, pos_ - start));
    skip_ws();
    expect('(', "expected '(' after relation name");
    std::vector<Term> key = term_list("key");
    std::vector<Term> nonkey;
    if (accept(';')) {
      skip_ws();
      if (!at_end() && peek() == ')') {
        fail("empty non-key list; write an all-key atom without ';'");
      }
      nonkey = term_list("non-key");
    }
    expect(')', "expected ')'");
    return Atom(std::move(relation), std::move(key), std::move(nonkey));
  }

  std::vector<Term> term_list(const char* what) {
    std::vector<Term> out;
    skip_ws();
    if (!at_end() && (peek() == ';' || peek() == ')')) fail(std::string("empty ") + what + " list");
    out.push_back(term());
    skip_ws();
    while (accept(',')) {
      skip_ws();
      out.push_back(term());
      skip_ws();
    }
    return out;
  }

  Term term() {
    if (at_end()) fail("expected term");
    char c = peek();
    if (c == '\'') return quoted();
    if (is_digit(c) || c == '-') {
      std::size_t start = pos_;
      ++pos_;
      while (!at_end() && (is_digit(peek()) || peek() == '.')) ++pos_;
      std::string_view tok = text_.substr(start, pos_ - start);
      if (!is_numeral(tok)) fail_at(start, "malformed numeral");
      return Term::constant(Symbol(tok));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && is_ident_char(peek())) ++pos_;
      return Term::variable(Symbol(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      fail("bare identifiers must start with a lowercase letter; quote constants");
    }
    fail(std::string("unexpected character '") + c + "' in term position");
  }

  Term quoted() {
    std::size_t start = pos_;
    ++pos_;
    std::string value;
    while (true) {
      if (at_end()) fail_at(start, "unterminated quoted constant");
      char c = text_[pos_++];
      if (c == '\'') break;
      if (c == '\\') {
        if (at_end()) fail_at(start, "unterminated quoted constant");
        char e = text_[pos_++];
        if (e != '\\' && e != '\'') fail_at(pos_ - 2, "unknown escape");
        value.push_back(e);
      } else {
        value.push_back(c);
      }
    }
    if (value.empty()) fail_at(start, "empty constant");
    return Term::constant(std::move(value));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool accept(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* message) {
    skip_ws();
    if (!accept(c)) fail(message);
  }
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw SyntaxError(pos, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Query parse_query(std::string_view text) { return Parser(text).parse(); }

std::string render(const Term& term) {
  if (term.is_variable()) return term.name;
  if (is_numeral(term.name)) return term.name;
  std::string out = "'";
  for (char c : term.name) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

std::string render(const Atom& atom) {
  std::string out = atom.relation() + "(";
  const auto& terms = atom.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += (i == atom.key_length()) ? ";" : ",";
    out += render(terms[i]);
  }
  out += ")";
  return out;
}

std::string render(const Query& q) {
  if (q.empty()) return "{}";
  std::vector<Atom> atoms = q.atoms();
  std::sort(atoms.begin(), atoms.end());
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += " & ";
    out += render(atoms[i]);
  }
  return out;
}

}  // namespace cqa
