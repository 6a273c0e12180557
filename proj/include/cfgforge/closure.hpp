#pragma once

#include <string>

#include "cfgforge/grammar.hpp"

namespace cfgforge {

class InvalidOperand : public Error {
 public:
  using Error::Error;
};

/// Namespace tag for lifted nonterminals. Left and Right are the two
/// operands of union/concat, Sole the operand of star.
enum class LiftTag { Left, Right, Sole };

/// "u1:", "u2:" or "k:".
std::string lift_prefix(LiftTag tag);

std::string lift_name(const std::string& nonterminal, LiftTag tag);

/// Renames every nonterminal with the tag prefix. Terminals are shared
/// by name across operands and pass through unchanged.
SententialForm lift_form(const SententialForm& form, LiftTag tag);

/// Grammar for L(g1) ∪ L(g2): #S -> u1:S1 | u2:S2 plus the lifted rules.
Grammar union_of(const Grammar& g1, const Grammar& g2);

/// Grammar for L(g1)L(g2): #S -> u1:S1 u2:S2 plus the lifted rules.
Grammar concat(const Grammar& g1, const Grammar& g2);

/// Grammar for L(g)*: #S -> #S k:S0 | eps plus the lifted rules.
Grammar star(const Grammar& g);

}  // namespace cfgforge
