#include "cfgforge/harness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cfgforge/simplify.hpp"

namespace cfgforge {

bool sentence_less(const Sentence& a, const Sentence& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool BoundedLanguage::contains(const Sentence& s) const {
  return std::binary_search(sentences.begin(), sentences.end(), s, sentence_less);
}

namespace {

void check_bound(std::size_t n) {
  if (n > kMaxLenCap)
    throw BoundTooLarge("length bound " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxLenCap));
}

// Symbol codes: nonterminal i -> i, terminal j -> -(j + 1).
using Code = std::int32_t;
using CodedForm = std::vector<Code>;

struct CodedFormHash {
  std::size_t operator()(const CodedForm& f) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Code c : f) {
      h ^= static_cast<std::uint32_t>(c);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct CodedAlt {
  const Rule* rule;
  CodedForm rhs;
};

// The empty- and unit-free form of a grammar, integer coded, with rules
// mentioning useless symbols dropped. Every remaining rule either has a
// right-hand side of length >= 2 or a single terminal, so each derivation
// step strictly increases (form length + terminal count).
class Normalized {
 public:
  explicit Normalized(const Grammar& g)
      : core_(eliminate_empty_core(g)), grammar_(eliminate_unit(core_)) {
    const UsefulSet useful = useful_set(grammar_);
    const auto& nts = grammar_.nonterminals();
    const auto& ts = grammar_.terminals();
    alts_.resize(nts.size());
    start_ = index_of(nts, grammar_.start());
    start_useful_ = useful.contains(Symbol::nonterminal(grammar_.start()));
    for (const auto& r : grammar_.rules()) {
      if (!useful.contains(Symbol::nonterminal(r.lhs))) continue;
      if (!std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) { return useful.contains(s); }))
        continue;
      CodedForm rhs;
      for (const auto& s : r.rhs)
        rhs.push_back(s.is_terminal() ? -(index_of(ts, s.name) + 1) : index_of(nts, s.name));
      alts_[static_cast<std::size_t>(index_of(nts, r.lhs))].push_back({&r, std::move(rhs)});
    }
  }

  Normalized(const Normalized&) = delete;
  Normalized& operator=(const Normalized&) = delete;

  const Grammar& core() const { return core_; }
  const Grammar& grammar() const { return grammar_; }
  Code start() const { return start_; }
  bool start_useful() const { return start_useful_; }
  const std::vector<CodedAlt>& alts(Code nt) const { return alts_[static_cast<std::size_t>(nt)]; }

  std::optional<Code> terminal_code(const std::string& name) const {
    const auto& ts = grammar_.terminals();
    auto it = std::lower_bound(ts.begin(), ts.end(), name);
    if (it == ts.end() || *it != name) return std::nullopt;
    return -static_cast<Code>(it - ts.begin()) - 1;
  }

  Sentence decode(const CodedForm& f) const {
    Sentence out;
    out.reserve(f.size());
    for (Code c : f) out.push_back(grammar_.terminals()[static_cast<std::size_t>(-c - 1)]);
    return out;
  }

 private:
  static Code index_of(const std::vector<std::string>& sorted, const std::string& name) {
    return static_cast<Code>(std::lower_bound(sorted.begin(), sorted.end(), name) - sorted.begin());
  }

  Grammar core_;
  Grammar grammar_;
  std::vector<std::vector<CodedAlt>> alts_;
  Code start_ = 0;
  bool start_useful_ = false;
};

std::size_t first_nonterminal(const CodedForm& f) {
  return static_cast<std::size_t>(std::find_if(f.begin(), f.end(), [](Code c) { return c >= 0; }) -
                                  f.begin());
}

CodedForm splice(const CodedForm& f, std::size_t pos, const CodedForm& rhs) {
  CodedForm out;
  out.reserve(f.size() - 1 + rhs.size());
  out.insert(out.end(), f.begin(), f.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), rhs.begin(), rhs.end());
  out.insert(out.end(), f.begin() + static_cast<std::ptrdiff_t>(pos) + 1, f.end());
  return out;
}

// Rewrites derivation steps of the normalized grammar into steps of the
// original grammar: deleted nullable occurrences are derived to eps and
// anticipated unit chains are replayed explicitly.
class TraceLifter {
 public:
  TraceLifter(const Grammar& g, const Normalized& norm) : g_(g), norm_(norm) {
    // A nullable nonterminal's witness rule only mentions nonterminals that
    // already had a witness, so derive_empty() terminates.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : g.rules()) {
        if (witness_.contains(r.lhs)) continue;
        bool all = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const Symbol& s) {
          return s.is_nonterminal() && witness_.contains(s.name);
        });
        if (all) {
          witness_.emplace(r.lhs, &r);
          changed = true;
        }
      }
    }
  }

  void derive_empty(const std::string& n, std::size_t pos, std::vector<DerivationStep>& out) const {
    const Rule& w = *witness_.at(n);
    out.push_back({w, pos});
    for (std::size_t j = w.rhs.size(); j-- > 0;) derive_empty(w.rhs[j].name, pos + j, out);
  }

  void expand_normalized(const Rule& rule, std::size_t pos, std::vector<DerivationStep>& out) const {
    const Grammar& core = norm_.core();
    if (core.has_rule(rule)) {
      expand_core(rule, pos, out);
      return;
    }
    // rule = (a, rhs) came from a unit pair (a, b) and core rule b -> rhs.
    std::map<std::string, const Rule*> via;
    std::deque<std::string> work{rule.lhs};
    std::set<std::string> seen{rule.lhs};
    while (!work.empty()) {
      std::string n = std::move(work.front());
      work.pop_front();
      for (const auto& r : core.rules_for(n)) {
        if (!r.is_unit()) continue;
        const std::string& b = r.rhs.front().name;
        if (!seen.insert(b).second) continue;
        via[b] = &r;
        if (core.has_rule({b, rule.rhs})) {
          std::vector<const Rule*> chain;
          std::string at = b;
          do {
            const Rule* u = via.at(at);
            chain.push_back(u);
            at = u->lhs;
          } while (at != rule.lhs);
          for (auto it = chain.rbegin(); it != chain.rend(); ++it) expand_core(**it, pos, out);
          expand_core({b, rule.rhs}, pos, out);
          return;
        }
        work.push_back(b);
      }
    }
    throw Error("internal: no unit chain for normalized rule " + to_string(rule));
  }

 private:
  void expand_core(const Rule& rule, std::size_t pos, std::vector<DerivationStep>& out) const {
    for (const auto& orig : g_.rules_for(rule.lhs)) {
      if (orig.rhs.empty() || orig.rhs.size() < rule.rhs.size()) continue;
      // Greedy subsequence match; every skipped symbol must be nullable.
      std::vector<std::size_t> deleted;
      std::size_t k = 0;
      bool ok = true;
      for (std::size_t i = 0; i < orig.rhs.size(); ++i) {
        if (k < rule.rhs.size() && orig.rhs[i] == rule.rhs[k]) {
          ++k;
        } else if (orig.rhs[i].is_nonterminal() && witness_.contains(orig.rhs[i].name)) {
          deleted.push_back(i);
        } else {
          ok = false;
          break;
        }
      }
      if (!ok || k != rule.rhs.size()) continue;
      out.push_back({orig, pos});
      for (auto it = deleted.rbegin(); it != deleted.rend(); ++it)
        derive_empty(orig.rhs[*it].name, pos + *it, out);
      return;
    }
    throw Error("internal: no source rule for " + to_string(rule));
  }

  const Grammar& g_;
  const Normalized& norm_;
  std::map<std::string, const Rule*> witness_;
};

}  // namespace

BoundedLanguage enumerate(const Grammar& g, std::size_t max_len) {
  check_bound(max_len);
  BoundedLanguage out;
  out.max_len = max_len;
  if (nullable_set(g).contains(g.start())) out.sentences.push_back({});
  if (max_len == 0) return out;

  const Normalized norm(g);
  if (!norm.start_useful()) return out;

  // Leftmost derivations only; every sentence has one. Forms never shrink,
  // so anything longer than max_len is dead.
  std::unordered_set<CodedForm, CodedFormHash> visited;
  std::vector<CodedForm> stack{{norm.start()}};
  visited.insert(stack.back());
  std::vector<CodedForm> found;
  while (!stack.empty()) {
    CodedForm f = std::move(stack.back());
    stack.pop_back();
    const std::size_t p = first_nonterminal(f);
    if (p == f.size()) {
      found.push_back(std::move(f));
      continue;
    }
    for (const auto& alt : norm.alts(f[p])) {
      if (f.size() - 1 + alt.rhs.size() > max_len) continue;
      CodedForm next = splice(f, p, alt.rhs);
      if (visited.insert(next).second) stack.push_back(std::move(next));
    }
  }
  for (const auto& f : found) out.sentences.push_back(norm.decode(f));
  std::sort(out.sentences.begin(), out.sentences.end(), sentence_less);
  return out;
}

Membership member(const Grammar& g, const Sentence& w) {
  check_bound(w.size());
  Membership result;
  const SententialForm start_form{Symbol::nonterminal(g.start())};

  if (w.empty()) {
    if (!nullable_set(g).contains(g.start())) return result;
    const Normalized norm(g);
    TraceLifter lifter(g, norm);
    DerivationTrace t;
    t.start_form = start_form;
    lifter.derive_empty(g.start(), 0, t.steps);
    result.accepted = true;
    result.trace = std::move(t);
    return result;
  }

  const Normalized norm(g);
  if (!norm.start_useful()) return result;
  CodedForm target;
  for (const auto& t : w) {
    auto c = norm.terminal_code(t);
    if (!c) return result;
    target.push_back(*c);
  }

  // Breadth-first over leftmost forms whose terminal prefix agrees with w.
  struct Parent {
    CodedForm form;
    const CodedAlt* alt;
    std::size_t pos;
  };
  std::unordered_map<CodedForm, Parent, CodedFormHash> parent;
  std::deque<CodedForm> queue{{norm.start()}};
  parent.emplace(queue.front(), Parent{{}, nullptr, 0});
  bool found = false;
  while (!queue.empty() && !found) {
    CodedForm f = std::move(queue.front());
    queue.pop_front();
    const std::size_t p = first_nonterminal(f);
    for (const auto& alt : norm.alts(f[p])) {
      if (f.size() - 1 + alt.rhs.size() > target.size()) continue;
      CodedForm next = splice(f, p, alt.rhs);
      const std::size_t q = first_nonterminal(next);
      if (!std::equal(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(q), target.begin()))
        continue;
      if (parent.contains(next)) continue;
      parent.emplace(next, Parent{f, &alt, p});
      if (next == target) {
        found = true;
        break;
      }
      if (q < next.size()) queue.push_back(std::move(next));
    }
  }
  if (!found) return result;

  std::vector<std::pair<const Rule*, std::size_t>> normalized_steps;
  for (CodedForm at = target;;) {
    const Parent& pr = parent.at(at);
    if (!pr.alt) break;
    normalized_steps.emplace_back(pr.alt->rule, pr.pos);
    at = pr.form;
  }
  std::reverse(normalized_steps.begin(), normalized_steps.end());

  TraceLifter lifter(g, norm);
  DerivationTrace t;
  t.start_form = start_form;
  t.end_form = terminal_lift(w);
  for (const auto& [rule, pos] : normalized_steps) lifter.expand_normalized(*rule, pos, t.steps);
  result.accepted = true;
  result.trace = std::move(t);
  return result;
}

EquivVerdict equiv_bounded(const Grammar& g1, const Grammar& g2, std::size_t max_len) {
  check_bound(max_len);
  const BoundedLanguage l1 = enumerate(g1, max_len);
  const BoundedLanguage l2 = enumerate(g2, max_len);
  EquivVerdict v;
  v.max_len = max_len;
  auto a = l1.sentences.begin();
  auto b = l2.sentences.begin();
  while (a != l1.sentences.end() || b != l2.sentences.end()) {
    if (b == l2.sentences.end() || (a != l1.sentences.end() && sentence_less(*a, *b))) {
      v.counterexample.emplace(*a, Side::LeftOnly);
      break;
    }
    if (a == l1.sentences.end() || sentence_less(*b, *a)) {
      v.counterexample.emplace(*b, Side::RightOnly);
      break;
    }
    ++a;
    ++b;
  }
  v.equivalent = !v.counterexample.has_value();
  return v;
}

Grammar random_grammar(const GenParams& p) {
  static const std::vector<std::string> kNonterminals{"S", "A", "B", "C", "D"};
  static const std::vector<std::string> kTerminals{"a", "b", "c"};
  if (p.max_nonterminals < 1 || p.max_nonterminals > 5)
    throw std::invalid_argument("max_nonterminals must be in [1, 5]");
  if (p.max_terminals < 1 || p.max_terminals > 3)
    throw std::invalid_argument("max_terminals must be in [1, 3]");
  if (p.max_rules < 1 || p.max_rules > 8) throw std::invalid_argument("max_rules must be in [1, 8]");
  if (p.max_rhs_len < 1 || p.max_rhs_len > 4)
    throw std::invalid_argument("max_rhs_len must be in [1, 4]");
  if (!(p.empty_rule_prob >= 0.0 && p.empty_rule_prob <= 1.0) ||
      !(p.unit_rule_prob >= 0.0 && p.unit_rule_prob <= 1.0))
    throw std::invalid_argument("probabilities must be in [0, 1]");

  // mt19937_64 output is fully specified; reduce it by hand rather than
  // through the library distributions, whose algorithms are not.
  std::mt19937_64 rng(p.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto chance = [&](double prob) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < prob; };

  RawGrammar raw;
  const std::size_t n_nt = 1 + pick(p.max_nonterminals);
  const std::size_t n_t = 1 + pick(p.max_terminals);
  const std::size_t n_rules = 1 + pick(p.max_rules);
  raw.nonterminals.assign(kNonterminals.begin(), kNonterminals.begin() + static_cast<std::ptrdiff_t>(n_nt));
  raw.terminals.assign(kTerminals.begin(), kTerminals.begin() + static_cast<std::ptrdiff_t>(n_t));
  raw.start = "S";

  auto any_symbol = [&] {
    std::size_t i = pick(n_nt + n_t);
    return i < n_nt ? Symbol::nonterminal(raw.nonterminals[i]) : Symbol::terminal(raw.terminals[i - n_nt]);
  };
  for (std::size_t r = 0; r < n_rules; ++r) {
    Rule rule;
    rule.lhs = r == 0 ? raw.start : raw.nonterminals[pick(n_nt)];
    if (chance(p.empty_rule_prob)) {
      // empty rhs
    } else if (chance(p.unit_rule_prob)) {
      rule.rhs.push_back(Symbol::nonterminal(raw.nonterminals[pick(n_nt)]));
    } else {
      const std::size_t len = 1 + pick(p.max_rhs_len);
      if (len == 1) {
        rule.rhs.push_back(Symbol::terminal(raw.terminals[pick(n_t)]));
      } else {
        for (std::size_t i = 0; i < len; ++i) rule.rhs.push_back(any_symbol());
      }
    }
    raw.rules.push_back(std::move(rule));
  }
  return Grammar::build_merged(std::move(raw));
}

}  // namespace cfgforge
