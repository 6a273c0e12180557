#pragma once

#include <cstddef>
#include <vector>

#include "cfgforge/grammar.hpp"

namespace cfgforge {

class PositionMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownRule : public Error {
 public:
  using Error::Error;
};

class TraceInvalid : public Error {
 public:
  using Error::Error;
};

class FormMismatch : public Error {
 public:
  using Error::Error;
};

/// One rewrite: the occurrence of `rule.lhs` at `position` (0-based) is
/// replaced by `rule.rhs`.
struct DerivationStep {
  Rule rule;
  std::size_t position = 0;

  bool operator==(const DerivationStep&) const = default;
};

/// A constructive witness that `start_form` derives `end_form`.
struct DerivationTrace {
  SententialForm start_form;
  std::vector<DerivationStep> steps;
  SententialForm end_form;

  bool operator==(const DerivationTrace&) const = default;
};

/// Zero-step trace from `form` to itself.
DerivationTrace trivial_trace(SententialForm form);

SententialForm apply_rule(const Grammar& g, const SententialForm& form, const Rule& rule,
                          std::size_t position);

/// Replays every step of `trace` and checks the final form. Throws TraceInvalid.
SententialForm replay(const Grammar& g, const DerivationTrace& trace);

/// The forms visited by a trace, starting with start_form. Throws TraceInvalid.
std::vector<SententialForm> replay_forms(const Grammar& g, const DerivationTrace& trace);

DerivationTrace compose(const DerivationTrace& first, const DerivationTrace& second);

/// Places `trace` inside prefix ... suffix, shifting every position by |prefix|.
DerivationTrace embed(const DerivationTrace& trace, const SententialForm& prefix,
                      const SententialForm& suffix);

}  // namespace cfgforge
