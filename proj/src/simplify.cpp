#include "cfgforge/simplify.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cfgforge {

namespace {

// Least fixpoint of "lhs is marked once every rhs symbol satisfies `ready`",
// where nonterminals become ready when marked. Each rule keeps a count of
// pending nonterminal occurrences; marking a nonterminal decrements the
// counts of the rules it occurs in.
template <class TerminalReady>
std::set<std::string> rule_fixpoint(const Grammar& g, TerminalReady terminal_ready) {
  const auto& rules = g.rules();
  std::vector<std::size_t> pending(rules.size(), 0);
  std::vector<bool> blocked(rules.size(), false);
  std::map<std::string, std::vector<std::size_t>> occurs_in;

  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (const auto& s : rules[i].rhs) {
      if (s.is_terminal()) {
        if (!terminal_ready(s)) blocked[i] = true;
      } else {
        ++pending[i];
        occurs_in[s.name].push_back(i);
      }
    }
  }

  std::set<std::string> marked;
  std::deque<std::string> work;
  auto mark = [&](const std::string& n) {
    if (marked.insert(n).second) work.push_back(n);
  };
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (!blocked[i] && pending[i] == 0) mark(rules[i].lhs);

  while (!work.empty()) {
    std::string n = std::move(work.front());
    work.pop_front();
    auto it = occurs_in.find(n);
    if (it == occurs_in.end()) continue;
    for (std::size_t i : it->second) {
      if (--pending[i] == 0 && !blocked[i]) mark(rules[i].lhs);
    }
  }
  return marked;
}

RawGrammar copy_header(const Grammar& g) {
  RawGrammar out;
  out.nonterminals = g.nonterminals();
  out.terminals = g.terminals();
  out.start = g.start();
  return out;
}

}  // namespace

NullableSet nullable_set(const Grammar& g) {
  return {rule_fixpoint(g, [](const Symbol&) { return false; })};
}

UsefulSet useful_set(const Grammar& g) {
  UsefulSet out;
  for (const auto& t : g.terminals()) out.members.insert(Symbol::terminal(t));
  for (auto& n : rule_fixpoint(g, [](const Symbol&) { return true; }))
    out.members.insert(Symbol::nonterminal(n));
  return out;
}

AccessibleSet accessible_set(const Grammar& g) {
  AccessibleSet out;
  std::deque<std::string> work{g.start()};
  out.members.insert(Symbol::nonterminal(g.start()));
  while (!work.empty()) {
    std::string n = std::move(work.front());
    work.pop_front();
    for (const auto& r : g.rules_for(n)) {
      for (const auto& s : r.rhs) {
        if (out.members.insert(s).second && s.is_nonterminal()) work.push_back(s.name);
      }
    }
  }
  return out;
}

UnitRelation unit_pairs(const Grammar& g) {
  std::map<std::string, std::vector<std::string>> edges;
  for (const auto& r : g.rules())
    if (r.is_unit()) edges[r.lhs].push_back(r.rhs.front().name);

  UnitRelation out;
  for (const auto& [from, direct] : edges) {
    std::set<std::string> reached;
    std::deque<std::string> work(direct.begin(), direct.end());
    while (!work.empty()) {
      std::string n = std::move(work.front());
      work.pop_front();
      if (!reached.insert(n).second) continue;
      if (auto it = edges.find(n); it != edges.end())
        work.insert(work.end(), it->second.begin(), it->second.end());
    }
    for (const auto& to : reached) out.pairs.emplace(from, to);
  }
  return out;
}

Grammar eliminate_empty_core(const Grammar& g) {
  const NullableSet nullable = nullable_set(g);
  RawGrammar out = copy_header(g);

  for (const auto& rule : g.rules()) {
    if (rule.is_empty()) continue;
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < rule.rhs.size(); ++i)
      if (rule.rhs[i].is_nonterminal() && nullable.contains(rule.rhs[i].name)) slots.push_back(i);
    if (slots.size() > kMaxNullableOccurrences)
      throw VariantExplosion("rule " + to_string(rule) + " has " + std::to_string(slots.size()) +
                             " nullable occurrences (limit " +
                             std::to_string(kMaxNullableOccurrences) + ")");

    // Bit k of `mask` set means the k-th nullable occurrence is deleted.
    const std::uint32_t variants = 1u << slots.size();
    for (std::uint32_t mask = 0; mask < variants; ++mask) {
      SententialForm rhs;
      std::size_t k = 0;
      for (std::size_t i = 0; i < rule.rhs.size(); ++i) {
        if (k < slots.size() && slots[k] == i) {
          if (!(mask >> k & 1u)) rhs.push_back(rule.rhs[i]);
          ++k;
        } else {
          rhs.push_back(rule.rhs[i]);
        }
      }
      if (!rhs.empty()) out.rules.push_back({rule.lhs, std::move(rhs)});
    }
  }
  return Grammar::build_merged(std::move(out));
}

Grammar eliminate_empty(const Grammar& g) {
  const bool generates_empty = nullable_set(g).contains(g.start());
  Grammar core = eliminate_empty_core(g);

  RawGrammar out = core.raw();
  std::vector<std::string> taken = out.nonterminals;
  taken.insert(taken.end(), out.terminals.begin(), out.terminals.end());
  const std::string start = fresh_name("#E", taken);
  out.nonterminals.push_back(start);
  out.rules.push_back({start, {Symbol::nonterminal(g.start())}});
  if (generates_empty) out.rules.push_back({start, {}});
  out.start = start;
  return Grammar::build_merged(std::move(out));
}

Grammar eliminate_unit(const Grammar& g) {
  const UnitRelation units = unit_pairs(g);
  RawGrammar out = copy_header(g);
  for (const auto& r : g.rules())
    if (!r.is_unit()) out.rules.push_back(r);
  for (const auto& [a, b] : units.pairs) {
    for (const auto& r : g.rules_for(b))
      if (!r.is_unit()) out.rules.push_back({a, r.rhs});
  }
  return Grammar::build_merged(std::move(out));
}

Grammar eliminate_useless(const Grammar& g) {
  const UsefulSet useful = useful_set(g);
  if (!useful.contains(Symbol::nonterminal(g.start()))) throw EmptyLanguage();

  RawGrammar out = copy_header(g);
  out.nonterminals.clear();
  for (const auto& n : g.nonterminals())
    if (useful.contains(Symbol::nonterminal(n))) out.nonterminals.push_back(n);
  for (const auto& r : g.rules()) {
    if (!useful.contains(Symbol::nonterminal(r.lhs))) continue;
    if (std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) { return useful.contains(s); }))
      out.rules.push_back(r);
  }
  return Grammar::build(std::move(out));
}

Grammar eliminate_inaccessible(const Grammar& g) {
  const AccessibleSet accessible = accessible_set(g);
  RawGrammar out;
  out.start = g.start();
  for (const auto& n : g.nonterminals())
    if (accessible.contains(Symbol::nonterminal(n))) out.nonterminals.push_back(n);
  for (const auto& t : g.terminals())
    if (accessible.contains(Symbol::terminal(t))) out.terminals.push_back(t);
  for (const auto& r : g.rules())
    if (accessible.contains(Symbol::nonterminal(r.lhs))) out.rules.push_back(r);
  return Grammar::build(std::move(out));
}

std::string to_string(SimplifyStep step) {
  switch (step) {
    case SimplifyStep::Empty:
      return "empty";
    case SimplifyStep::Unit:
      return "unit";
    case SimplifyStep::Useless:
      return "useless";
    case SimplifyStep::Inaccessible:
      return "inaccessible";
  }
  return {};
}

Grammar simplify(const Grammar& g, std::span<const SimplifyStep> steps) {
  Grammar current = g;
  for (SimplifyStep step : steps) {
    switch (step) {
      case SimplifyStep::Empty:
        current = eliminate_empty(current);
        break;
      case SimplifyStep::Unit:
        current = eliminate_unit(current);
        break;
      case SimplifyStep::Useless:
        current = eliminate_useless(current);
        break;
      case SimplifyStep::Inaccessible:
        current = eliminate_inaccessible(current);
        break;
    }
  }
  return current;
}

Grammar simplify_all(const Grammar& g) {
  if (!useful_set(g).contains(Symbol::nonterminal(g.start()))) throw EmptyLanguage();
  return simplify(g, kDefaultSteps);
}

PredicateReport check_predicates(const Grammar& g) {
  PredicateReport p;
  std::size_t empty_rules = 0;
  bool start_empty = false;
  bool unit = false;
  for (const auto& r : g.rules()) {
    if (r.is_empty()) {
      ++empty_rules;
      if (r.lhs == g.start()) start_empty = true;
    }
    if (r.is_unit()) unit = true;
  }
  p.has_no_empty_rules = empty_rules == 0;
  p.has_one_empty_rule = empty_rules == 1 && start_empty;
  p.has_no_unit_rules = !unit;

  const UsefulSet useful = useful_set(g);
  const AccessibleSet accessible = accessible_set(g);
  p.has_no_useless_symbols = true;
  p.has_no_inaccessible_symbols = true;
  auto check = [&](const Symbol& s) {
    if (!useful.contains(s)) p.has_no_useless_symbols = false;
    if (!accessible.contains(s)) p.has_no_inaccessible_symbols = false;
  };
  for (const auto& n : g.nonterminals()) check(Symbol::nonterminal(n));
  for (const auto& t : g.terminals()) check(Symbol::terminal(t));
  return p;
}

std::vector<std::pair<std::string, bool>> predicate_lines(const PredicateReport& p) {
  return {{"has_no_empty_rules", p.has_no_empty_rules},
          {"has_one_empty_rule", p.has_one_empty_rule},
          {"has_no_unit_rules", p.has_no_unit_rules},
          {"has_no_useless_symbols", p.has_no_useless_symbols},
          {"has_no_inaccessible_symbols", p.has_no_inaccessible_symbols}};
}

}  // namespace cfgforge
