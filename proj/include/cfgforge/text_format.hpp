#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "cfgforge/grammar.hpp"

namespace cfgforge {

struct SourceSpan {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
};

class SyntaxError : public Error {
 public:
  SyntaxError(SourceSpan at, const std::string& message);
  const SourceSpan& where() const { return at_; }

 private:
  SourceSpan at_;
};

/// Unvalidated parse result. `spans` maps declared symbol names and rule
/// texts (as printed by to_string(Rule)) to their first source position.
struct ParsedText {
  RawGrammar raw;
  std::map<std::string, SourceSpan> spans;
};

/// Grammar file syntax:
///
///     # comment
///     terminals: a b
///     nonterminals: S A
///     start: S
///     rules:
///     S -> a S | b
///     A -> eps
///
/// Sections appear once each, in this order. `eps` alone is an empty
/// alternative. A `#` opens a comment when it starts a token and is followed
/// by whitespace, end of line or another `#`; otherwise it is part of a
/// generated name such as `#E`.
ParsedText parse_text(std::string_view text);

struct GrammarDocument {
  std::string source;
  Grammar grammar;
  std::map<std::string, SourceSpan> spans;
};

/// Parses and validates. Throws SyntaxError or ValidationError.
GrammarDocument parse_document(std::string text);

Grammar parse_grammar(std::string_view text);

/// Canonical text: sorted alphabets, one line per left-hand side with
/// alternatives joined by `|`.
std::string serialize_grammar(const Grammar& g);

}  // namespace cfgforge
