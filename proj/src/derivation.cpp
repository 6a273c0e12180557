#include "cfgforge/derivation.hpp"

#include <string>

namespace cfgforge {

DerivationTrace trivial_trace(SententialForm form) {
  DerivationTrace t;
  t.start_form = form;
  t.end_form = std::move(form);
  return t;
}

SententialForm apply_rule(const Grammar& g, const SententialForm& form, const Rule& rule,
                          std::size_t position) {
  if (!g.has_rule(rule)) throw UnknownRule("rule not in grammar: " + to_string(rule));
  if (position >= form.size())
    throw PositionMismatch("position " + std::to_string(position) + " is outside a form of length " +
                           std::to_string(form.size()));
  const Symbol& at = form[position];
  if (!at.is_nonterminal() || at.name != rule.lhs)
    throw PositionMismatch("symbol at position " + std::to_string(position) + " is " + at.name +
                           ", rule expects " + rule.lhs);

  SententialForm out;
  out.reserve(form.size() - 1 + rule.rhs.size());
  out.insert(out.end(), form.begin(), form.begin() + static_cast<std::ptrdiff_t>(position));
  out.insert(out.end(), rule.rhs.begin(), rule.rhs.end());
  out.insert(out.end(), form.begin() + static_cast<std::ptrdiff_t>(position) + 1, form.end());
  return out;
}

std::vector<SententialForm> replay_forms(const Grammar& g, const DerivationTrace& trace) {
  std::vector<SententialForm> forms{trace.start_form};
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    try {
      forms.push_back(apply_rule(g, forms.back(), step.rule, step.position));
    } catch (const Error& e) {
      throw TraceInvalid("step " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (forms.back() != trace.end_form)
    throw TraceInvalid("replay ends in '" + to_string(forms.back()) + "', trace claims '" +
                       to_string(trace.end_form) + "'");
  return forms;
}

SententialForm replay(const Grammar& g, const DerivationTrace& trace) {
  return std::move(replay_forms(g, trace).back());
}

DerivationTrace compose(const DerivationTrace& first, const DerivationTrace& second) {
  if (first.end_form != second.start_form)
    throw FormMismatch("cannot compose: '" + to_string(first.end_form) + "' vs '" +
                       to_string(second.start_form) + "'");
  DerivationTrace out;
  out.start_form = first.start_form;
  out.steps = first.steps;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  out.end_form = second.end_form;
  return out;
}

DerivationTrace embed(const DerivationTrace& trace, const SententialForm& prefix,
                      const SententialForm& suffix) {
  auto wrap = [&](const SententialForm& mid) {
    SententialForm f = prefix;
    f.insert(f.end(), mid.begin(), mid.end());
    f.insert(f.end(), suffix.begin(), suffix.end());
    return f;
  };
  DerivationTrace out;
  out.start_form = wrap(trace.start_form);
  out.end_form = wrap(trace.end_form);
  out.steps.reserve(trace.steps.size());
  for (const auto& step : trace.steps) out.steps.push_back({step.rule, step.position + prefix.size()});
  return out;
}

}  // namespace cfgforge
