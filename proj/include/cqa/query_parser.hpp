#pragma once

#include <string>
#include <string_view>

#include "cqa/query.hpp"

namespace cqa {

/// Parses query text such as `R(u,'a';x) & S(y;x,z)`.
///
/// Atoms are joined by `&`, optionally wrapped in `{ }`; `{}` or blank text is
/// the empty query. Inside an atom the key terms come first, then `;` and
/// the non-key terms. Without `;` the atom is all-key. Variables match
/// `[a-z][A-Za-z0-9_]*`; constants are single-quoted strings (with `\'` and
/// `\\` escapes) or bare numerals.
///
/// Throws SyntaxError or SignatureConflict.
Query parse_query(std::string_view text);

/// Canonical text: atoms sorted, key terms, `;`, non-key terms.
std::string render(const Query& q);
std::string render(const Atom& atom);
std::string render(const Term& term);

}  // namespace cqa
