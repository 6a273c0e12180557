#include "cfgforge/grammar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cfgforge {

SententialForm terminal_lift(const Sentence& sentence) {
  SententialForm form;
  form.reserve(sentence.size());
  for (const auto& t : sentence) form.push_back(Symbol::terminal(t));
  return form;
}

std::optional<Sentence> as_sentence(const SententialForm& form) {
  Sentence out;
  out.reserve(form.size());
  for (const auto& s : form) {
    if (!s.is_terminal()) return std::nullopt;
    out.push_back(s.name);
  }
  return out;
}

std::string to_string(const SententialForm& form) {
  if (form.empty()) return "eps";
  std::string out;
  for (const auto& s : form) {
    if (!out.empty()) out += ' ';
    out += s.name;
  }
  return out;
}

std::string to_string(const Sentence& sentence) {
  if (sentence.empty()) return "eps";
  std::string out;
  for (const auto& t : sentence) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::string to_string(const Rule& rule) { return rule.lhs + " -> " + to_string(rule.rhs); }

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << '\n';
    os << violations[i].code << ": " << violations[i].message;
  }
  return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : Error("invalid grammar: " + report.summary()), report_(std::move(report)) {}

bool is_valid_name(std::string_view name, NamePolicy policy) {
  if (name.empty() || name == "eps") return false;
  return std::all_of(name.begin(), name.end(), [policy](char c) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
        c == '\'')
      return true;
    return policy == NamePolicy::AllowGenerated && (c == '#' || c == ':');
  });
}

namespace {

void check_name(const std::string& name, NamePolicy policy, ValidationReport& report) {
  if (name.empty()) {
    report.violations.push_back({"empty-name", "symbol name is empty", name});
    return;
  }
  if (is_valid_name(name, policy)) return;
  if (name == "eps") {
    report.violations.push_back({"reserved-name", "'eps' is a reserved keyword", name});
  } else if (is_valid_name(name, NamePolicy::AllowGenerated)) {
    report.violations.push_back(
        {"reserved-name", "name '" + name + "' uses a character reserved for generated symbols", name});
  } else {
    report.violations.push_back({"bad-name", "invalid symbol name '" + name + "'", name});
  }
}

}  // namespace

ValidationReport validate(const RawGrammar& raw, NamePolicy policy) {
  ValidationReport report;
  std::set<std::string> nts, ts;
  for (const auto& n : raw.nonterminals) {
    check_name(n, policy, report);
    if (!nts.insert(n).second)
      report.violations.push_back({"duplicate-symbol", "nonterminal " + n + " declared twice", n});
  }
  for (const auto& t : raw.terminals) {
    check_name(t, policy, report);
    if (!ts.insert(t).second)
      report.violations.push_back({"duplicate-symbol", "terminal " + t + " declared twice", t});
    if (nts.contains(t))
      report.violations.push_back(
          {"overlap", "symbol " + t + " declared as both terminal and nonterminal", t});
  }
  if (!nts.contains(raw.start))
    report.violations.push_back({"start-undeclared", "start not declared: " + raw.start, raw.start});

  std::set<Rule> seen;
  for (const auto& rule : raw.rules) {
    const std::string text = to_string(rule);
    if (!nts.contains(rule.lhs))
      report.violations.push_back(
          {"lhs-undeclared", "undeclared nonterminal " + rule.lhs + " in rule " + text, text});
    for (const auto& s : rule.rhs) {
      if (s.is_terminal() && !ts.contains(s.name))
        report.violations.push_back(
            {"undeclared-symbol", "undeclared terminal " + s.name + " in rule " + text, text});
      if (s.is_nonterminal() && !nts.contains(s.name))
        report.violations.push_back(
            {"undeclared-symbol", "undeclared nonterminal " + s.name + " in rule " + text, text});
    }
    if (!seen.insert(rule).second)
      report.violations.push_back({"duplicate-rule", "duplicate rule " + text, text});
  }
  return report;
}

ValidationReport validate(const Grammar& g, NamePolicy policy) { return validate(g.raw(), policy); }

Grammar Grammar::build(RawGrammar raw) {
  auto report = validate(raw, NamePolicy::AllowGenerated);
  if (!report.ok()) throw ValidationError(std::move(report));
  std::sort(raw.nonterminals.begin(), raw.nonterminals.end());
  std::sort(raw.terminals.begin(), raw.terminals.end());
  std::sort(raw.rules.begin(), raw.rules.end());
  return Grammar(std::move(raw));
}

Grammar Grammar::build_merged(RawGrammar raw) {
  auto dedupe = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(raw.nonterminals);
  dedupe(raw.terminals);
  dedupe(raw.rules);
  return build(std::move(raw));
}

bool Grammar::is_nonterminal(std::string_view name) const {
  return std::binary_search(data_.nonterminals.begin(), data_.nonterminals.end(), name);
}

bool Grammar::is_terminal(std::string_view name) const {
  return std::binary_search(data_.terminals.begin(), data_.terminals.end(), name);
}

bool Grammar::declares(const Symbol& s) const {
  return s.is_terminal() ? is_terminal(s.name) : is_nonterminal(s.name);
}

bool Grammar::has_rule(const Rule& rule) const {
  return std::binary_search(data_.rules.begin(), data_.rules.end(), rule);
}

std::span<const Rule> Grammar::rules_for(std::string_view lhs) const {
  auto lo = std::lower_bound(data_.rules.begin(), data_.rules.end(), lhs,
                             [](const Rule& r, std::string_view key) { return r.lhs < key; });
  auto hi = std::upper_bound(lo, data_.rules.end(), lhs,
                             [](std::string_view key, const Rule& r) { return key < r.lhs; });
  return {lo, hi};
}

bool Grammar::operator==(const Grammar& other) const {
  return data_.nonterminals == other.data_.nonterminals &&
         data_.terminals == other.data_.terminals && data_.start == other.data_.start &&
         data_.rules == other.data_.rules;
}

std::string fresh_name(const std::string& base, std::span<const std::string> taken) {
  auto used = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  if (!used(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!used(candidate)) return candidate;
  }
}

}  // namespace cfgforge
