#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfgforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SymbolKind : std::uint8_t { NonTerminal, Terminal };

/// A grammar symbol. Ordering is by (kind, name) with nonterminals first.
struct Symbol {
  SymbolKind kind = SymbolKind::NonTerminal;
  std::string name;

  static Symbol nonterminal(std::string name) { return {SymbolKind::NonTerminal, std::move(name)}; }
  static Symbol terminal(std::string name) { return {SymbolKind::Terminal, std::move(name)}; }

  bool is_terminal() const { return kind == SymbolKind::Terminal; }
  bool is_nonterminal() const { return kind == SymbolKind::NonTerminal; }

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;
};

using SententialForm = std::vector<Symbol>;

/// A terminal-only string, stored as terminal names.
using Sentence = std::vector<std::string>;

SententialForm terminal_lift(const Sentence& sentence);

/// The sentence spelled by `form`, or nothing when it still contains a nonterminal.
std::optional<Sentence> as_sentence(const SententialForm& form);

struct Rule {
  std::string lhs;
  SententialForm rhs;

  bool is_empty() const { return rhs.empty(); }
  bool is_unit() const { return rhs.size() == 1 && rhs.front().is_nonterminal(); }

  auto operator<=>(const Rule&) const = default;
  bool operator==(const Rule&) const = default;
};

std::string to_string(const SententialForm& form);
std::string to_string(const Sentence& sentence);
std::string to_string(const Rule& rule);

/// Unchecked grammar data, as read from a file or assembled by a transform.
struct RawGrammar {
  std::vector<std::string> nonterminals;
  std::vector<std::string> terminals;
  std::string start;
  std::vector<Rule> rules;
};

/// Whether names may carry the characters reserved for generated symbols (`#`, `:`).
enum class NamePolicy { AllowGenerated, UserOnly };

struct Violation {
  std::string code;
  std::string message;
  std::string item;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

bool is_valid_name(std::string_view name, NamePolicy policy);

ValidationReport validate(const RawGrammar& raw, NamePolicy policy = NamePolicy::AllowGenerated);

/// An immutable, validated context-free grammar. Alphabets and rules are
/// kept in canonical sorted order.
class Grammar {
 public:
  /// Validates and canonicalizes `raw`. Throws ValidationError on failure.
  static Grammar build(RawGrammar raw);

  /// Like build(), but merges duplicate rules and duplicate alphabet entries
  /// first. Transforms use this since they may produce the same rule twice.
  static Grammar build_merged(RawGrammar raw);

  const std::vector<std::string>& nonterminals() const { return data_.nonterminals; }
  const std::vector<std::string>& terminals() const { return data_.terminals; }
  const std::string& start() const { return data_.start; }
  const std::vector<Rule>& rules() const { return data_.rules; }
  const RawGrammar& raw() const { return data_; }

  bool is_nonterminal(std::string_view name) const;
  bool is_terminal(std::string_view name) const;
  bool declares(const Symbol& s) const;
  bool has_rule(const Rule& rule) const;

  /// Rules whose left-hand side is `lhs`, in canonical order.
  std::span<const Rule> rules_for(std::string_view lhs) const;

  bool operator==(const Grammar& other) const;

 private:
  explicit Grammar(RawGrammar data) : data_(std::move(data)) {}
  RawGrammar data_;
};

ValidationReport validate(const Grammar& g, NamePolicy policy = NamePolicy::AllowGenerated);

/// Returns `base` if it is not in `taken`, otherwise base1, base2, ...
std::string fresh_name(const std::string& base, std::span<const std::string> taken);

}  // namespace cfgforge
