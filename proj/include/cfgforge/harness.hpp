#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cfgforge/derivation.hpp"
#include "cfgforge/grammar.hpp"

namespace cfgforge {

class BoundTooLarge : public Error {
 public:
  using Error::Error;
};

/// Largest sentence length accepted by enumerate/member/equiv_bounded.
inline constexpr std::size_t kMaxLenCap = 12;

/// Orders sentences by length, then lexicographically by terminal name.
bool sentence_less(const Sentence& a, const Sentence& b);

/// All sentences of L(g) with length <= max_len, in sentence_less order.
struct BoundedLanguage {
  std::size_t max_len = 0;
  std::vector<Sentence> sentences;

  bool contains(const Sentence& s) const;
  bool operator==(const BoundedLanguage&) const = default;
};

BoundedLanguage enumerate(const Grammar& g, std::size_t max_len);

struct Membership {
  bool accepted = false;
  /// When accepted: a derivation from [start] to the sentence that replays on
  /// the queried grammar itself.
  std::optional<DerivationTrace> trace;
};

Membership member(const Grammar& g, const Sentence& w);

enum class Side { LeftOnly, RightOnly };

struct EquivVerdict {
  bool equivalent = true;
  std::size_t max_len = 0;
  /// Shortest, then lexicographically least, sentence in exactly one language.
  std::optional<std::pair<Sentence, Side>> counterexample;
};

EquivVerdict equiv_bounded(const Grammar& g1, const Grammar& g2, std::size_t max_len);

struct GenParams {
  std::uint64_t seed = 0;
  std::size_t max_nonterminals = 5;
  std::size_t max_terminals = 3;
  std::size_t max_rules = 8;
  std::size_t max_rhs_len = 4;
  double empty_rule_prob = 0.15;
  double unit_rule_prob = 0.15;
};

/// Deterministic in `params`. Nonterminals are drawn from S, A, B, C, D
/// (start S) and terminals from a, b, c. Throws std::invalid_argument when
/// a bound is out of range.
Grammar random_grammar(const GenParams& params);

}  // namespace cfgforge
