#include "cfgforge/closure.hpp"

#include <algorithm>
#include <vector>

namespace cfgforge {

std::string lift_prefix(LiftTag tag) {
  switch (tag) {
    case LiftTag::Left:
      return "u1:";
    case LiftTag::Right:
      return "u2:";
    case LiftTag::Sole:
      return "k:";
  }
  return {};
}

std::string lift_name(const std::string& nonterminal, LiftTag tag) {
  return lift_prefix(tag) + nonterminal;
}

SententialForm lift_form(const SententialForm& form, LiftTag tag) {
  SententialForm out;
  out.reserve(form.size());
  for (const auto& s : form)
    out.push_back(s.is_nonterminal() ? Symbol::nonterminal(lift_name(s.name, tag)) : s);
  return out;
}

namespace {

void require_valid(const Grammar& g, const char* which) {
  auto report = validate(g);
  if (!report.ok()) throw InvalidOperand(std::string(which) + " operand: " + report.summary());
}

void add_lifted(RawGrammar& out, const Grammar& g, LiftTag tag) {
  for (const auto& n : g.nonterminals()) out.nonterminals.push_back(lift_name(n, tag));
  out.terminals.insert(out.terminals.end(), g.terminals().begin(), g.terminals().end());
  for (const auto& r : g.rules()) out.rules.push_back({lift_name(r.lhs, tag), lift_form(r.rhs, tag)});
}

// Lifted names all carry a "u1:"/"u2:"/"k:" prefix, so "#S" is normally
// free; the suffix search only matters if a terminal is named "#S".
std::string fresh_start(const RawGrammar& out) {
  std::vector<std::string> taken = out.nonterminals;
  taken.insert(taken.end(), out.terminals.begin(), out.terminals.end());
  return fresh_name("#S", taken);
}

Grammar finish(RawGrammar out) {
  try {
    return Grammar::build_merged(std::move(out));
  } catch (const ValidationError& e) {
    throw InvalidOperand(std::string("operands cannot be combined: ") + e.what());
  }
}

}  // namespace

Grammar union_of(const Grammar& g1, const Grammar& g2) {
  require_valid(g1, "left");
  require_valid(g2, "right");
  RawGrammar out;
  add_lifted(out, g1, LiftTag::Left);
  add_lifted(out, g2, LiftTag::Right);
  out.start = fresh_start(out);
  out.nonterminals.push_back(out.start);
  out.rules.push_back({out.start, {Symbol::nonterminal(lift_name(g1.start(), LiftTag::Left))}});
  out.rules.push_back({out.start, {Symbol::nonterminal(lift_name(g2.start(), LiftTag::Right))}});
  return finish(std::move(out));
}

Grammar concat(const Grammar& g1, const Grammar& g2) {
  require_valid(g1, "left");
  require_valid(g2, "right");
  RawGrammar out;
  add_lifted(out, g1, LiftTag::Left);
  add_lifted(out, g2, LiftTag::Right);
  out.start = fresh_start(out);
  out.nonterminals.push_back(out.start);
  out.rules.push_back({out.start,
                       {Symbol::nonterminal(lift_name(g1.start(), LiftTag::Left)),
                        Symbol::nonterminal(lift_name(g2.start(), LiftTag::Right))}});
  return finish(std::move(out));
}

Grammar star(const Grammar& g) {
  require_valid(g, "sole");
  RawGrammar out;
  add_lifted(out, g, LiftTag::Sole);
  out.start = fresh_start(out);
  out.nonterminals.push_back(out.start);
  out.rules.push_back(
      {out.start, {Symbol::nonterminal(out.start), Symbol::nonterminal(lift_name(g.start(), LiftTag::Sole))}});
  out.rules.push_back({out.start, {}});
  return finish(std::move(out));
}

}  // namespace cfgforge
