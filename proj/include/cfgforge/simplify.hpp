#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfgforge/grammar.hpp"

namespace cfgforge {

class EmptyLanguage : public Error {
 public:
  EmptyLanguage() : Error("empty language: the start symbol derives no terminal string") {}
};

class VariantExplosion : public Error {
 public:
  using Error::Error;
};

/// Maximum number of nullable occurrences in one right-hand side before
/// empty-rule elimination refuses to expand it.
inline constexpr std::size_t kMaxNullableOccurrences = 16;

/// Nonterminals N with N =>* eps.
struct NullableSet {
  std::set<std::string> members;
  bool contains(const std::string& n) const { return members.contains(n); }
};

/// Pairs (a, b) with a =>+ b through single-nonterminal rules.
struct UnitRelation {
  std::set<std::pair<std::string, std::string>> pairs;
  bool contains(const std::string& a, const std::string& b) const { return pairs.contains({a, b}); }
};

/// Symbols deriving some terminal string. Every declared terminal is a member.
struct UsefulSet {
  std::set<Symbol> members;
  bool contains(const Symbol& s) const { return members.contains(s); }
};

/// Symbols occurring in some form derivable from the start symbol.
struct AccessibleSet {
  std::set<Symbol> members;
  bool contains(const Symbol& s) const { return members.contains(s); }
};

NullableSet nullable_set(const Grammar& g);
UnitRelation unit_pairs(const Grammar& g);
UsefulSet useful_set(const Grammar& g);
AccessibleSet accessible_set(const Grammar& g);

/// Drops empty rules and adds every variant of each remaining rule with some
/// nullable occurrences deleted (never producing an empty right-hand side).
/// The result generates L(g) minus the empty sentence.
Grammar eliminate_empty_core(const Grammar& g);

/// eliminate_empty_core() under a fresh start #E with #E -> S, plus #E -> eps
/// exactly when g generates the empty sentence.
Grammar eliminate_empty(const Grammar& g);

Grammar eliminate_unit(const Grammar& g);

/// Throws EmptyLanguage when the start symbol is useless.
Grammar eliminate_useless(const Grammar& g);

Grammar eliminate_inaccessible(const Grammar& g);

enum class SimplifyStep { Empty, Unit, Useless, Inaccessible };

inline constexpr SimplifyStep kDefaultSteps[] = {SimplifyStep::Empty, SimplifyStep::Unit,
                                                 SimplifyStep::Useless, SimplifyStep::Inaccessible};

std::string to_string(SimplifyStep step);

/// Applies the given transforms in order.
Grammar simplify(const Grammar& g, std::span<const SimplifyStep> steps);

/// Empty, unit, useless, inaccessible elimination in that order. Throws
/// EmptyLanguage when L(g) is empty.
Grammar simplify_all(const Grammar& g);

struct PredicateReport {
  bool has_no_empty_rules = false;
  /// The start symbol has an empty rule and no other rule is empty.
  bool has_one_empty_rule = false;
  bool has_no_unit_rules = false;
  bool has_no_useless_symbols = false;
  bool has_no_inaccessible_symbols = false;

  bool operator==(const PredicateReport&) const = default;
};

PredicateReport check_predicates(const Grammar& g);

/// `name=true|false` lines in a fixed order.
std::vector<std::pair<std::string, bool>> predicate_lines(const PredicateReport& report);

}  // namespace cfgforge
