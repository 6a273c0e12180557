#pragma once

// Test-only reference implementations. Nothing here calls the simplify or
// harness code it is used to check.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cfgforge/grammar.hpp"
#include "cfgforge/text_format.hpp"

namespace oracle {

using cfgforge::Grammar;
using cfgforge::Rule;
using cfgforge::Sentence;
using cfgforge::Symbol;

inline Grammar grammar(const std::string& text) { return cfgforge::parse_grammar(text); }

/// ({S,A,B},{a,b},{S->aS, S->b},S): generates a*b.
inline Grammar a_star_b() {
  return grammar("terminals: a b\nnonterminals: S A B\nstart: S\nrules:\nS -> a S | b\n");
}

inline Sentence words(const std::string& spaced) {
  Sentence w;
  std::string cur;
  for (char c : spaced + " ") {
    if (c == ' ') {
      if (!cur.empty()) w.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return w;
}

/// Every string over `terminals` with length <= n.
inline std::vector<Sentence> all_words(const std::vector<std::string>& terminals, std::size_t n) {
  std::vector<Sentence> out{{}};
  std::vector<Sentence> layer{{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Sentence> next;
    for (const auto& w : layer)
      for (const auto& t : terminals) {
        Sentence x = w;
        x.push_back(t);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Chart recognizer computed as a fixpoint over substrings, handling empty
/// and unit rules directly on the unmodified grammar.
inline bool chart_member(const Grammar& g, const Sentence& w) {
  const std::size_t n = w.size();
  std::map<std::string, std::vector<std::vector<bool>>> derives;
  for (const auto& nt : g.nonterminals())
    derives[nt].assign(n + 1, std::vector<bool>(n + 1, false));

  auto symbol_derives = [&](const Symbol& s, std::size_t i, std::size_t j) {
    if (s.is_terminal()) return j == i + 1 && w[i] == s.name;
    return static_cast<bool>(derives[s.name][i][j]);
  };
  // Can rhs[m..] derive w[i..j)?
  auto matches = [&](auto&& self, const std::vector<Symbol>& rhs, std::size_t m, std::size_t i,
                     std::size_t j) -> bool {
    if (m == rhs.size()) return i == j;
    for (std::size_t p = i; p <= j; ++p)
      if (symbol_derives(rhs[m], i, p) && self(self, rhs, m + 1, p, j)) return true;
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules())
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
          if (derives[r.lhs][i][j]) continue;
          if (matches(matches, r.rhs, 0, i, j)) {
            derives[r.lhs][i][j] = true;
            changed = true;
          }
        }
  }
  return derives[g.start()][0][n];
}

inline bool sentence_less(const Sentence& a, const Sentence& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// L(g) restricted to length <= n, sorted by (length, lexicographic).
inline std::vector<Sentence> language(const Grammar& g, std::size_t n) {
  std::vector<Sentence> out;
  for (auto& w : all_words(g.terminals(), n))
    if (chart_member(g, w)) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), sentence_less);
  return out;
}

inline std::vector<Sentence> sorted(std::set<Sentence> s) {
  std::vector<Sentence> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), sentence_less);
  return out;
}

inline std::vector<Sentence> union_oracle(const std::vector<Sentence>& a, const std::vector<Sentence>& b) {
  std::set<Sentence> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return sorted(std::move(s));
}

inline std::vector<Sentence> concat_oracle(const std::vector<Sentence>& a, const std::vector<Sentence>& b,
                                           std::size_t n) {
  std::set<Sentence> s;
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.size() + y.size() <= n) {
        Sentence xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        s.insert(xy);
      }
  return sorted(std::move(s));
}

/// Every concatenation of words of `a` with total length <= n, including eps.
inline std::vector<Sentence> star_oracle(const std::vector<Sentence>& a, std::size_t n) {
  std::set<Sentence> s{{}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : std::vector<Sentence>(s.begin(), s.end()))
      for (const auto& w : a)
        if (!w.empty() && r.size() + w.size() <= n) {
          Sentence rw = r;
          rw.insert(rw.end(), w.begin(), w.end());
          changed |= s.insert(rw).second;
        }
  }
  return sorted(std::move(s));
}

// Derivation search. Rewriting is context-free and terminals are inert, so a
// sentential form is tracked as the multiset of its nonterminals (plus
// whether a wanted terminal has appeared). A step rewrites one occurrence.
// Search depth is bounded by 2 * |alphabet| * max_rhs.
inline std::size_t step_bound(const Grammar& g) {
  std::size_t max_rhs = 1;
  for (const auto& r : g.rules()) max_rhs = std::max(max_rhs, r.rhs.size());
  return 2 * (g.nonterminals().size() + g.terminals().size()) * max_rhs;
}

using Multiset = std::vector<int>;

inline std::size_t nt_index(const Grammar& g, const std::string& n) {
  return static_cast<std::size_t>(std::find(g.nonterminals().begin(), g.nonterminals().end(), n) -
                                  g.nonterminals().begin());
}

enum class Goal { Empty, TerminalString };

/// Does [n] derive eps (Goal::Empty) or some terminal string, within the step bound?
inline bool brute_derives(const Grammar& g, const std::string& n, Goal goal) {
  const std::size_t k = step_bound(g);
  const std::size_t nn = g.nonterminals().size();
  Multiset init(nn, 0);
  init[nt_index(g, n)] = 1;
  std::set<Multiset> seen{init};
  std::vector<Multiset> layer{init};
  for (std::size_t depth = 0; depth < k && !layer.empty(); ++depth) {
    std::vector<Multiset> next;
    const std::size_t remaining = k - depth - 1;
    for (const auto& m : layer) {
      for (std::size_t i = 0; i < nn; ++i) {
        if (m[i] == 0) continue;
        for (const auto& r : g.rules_for(g.nonterminals()[i])) {
          if (goal == Goal::Empty &&
              std::any_of(r.rhs.begin(), r.rhs.end(), [](const Symbol& s) { return s.is_terminal(); }))
            continue;
          Multiset x = m;
          --x[i];
          for (const auto& s : r.rhs)
            if (s.is_nonterminal()) ++x[nt_index(g, s.name)];
          int total = 0;
          for (int c : x) total += c;
          if (total == 0) return true;
          if (static_cast<std::size_t>(total) > remaining) continue;
          if (seen.insert(x).second) next.push_back(std::move(x));
        }
      }
    }
    layer = std::move(next);
  }
  return false;
}

inline std::set<std::string> brute_nullable(const Grammar& g) {
  std::set<std::string> out;
  for (const auto& n : g.nonterminals())
    if (brute_derives(g, n, Goal::Empty)) out.insert(n);
  return out;
}

/// Nonterminals deriving a terminal string (terminals are useful trivially).
inline std::set<std::string> brute_useful(const Grammar& g) {
  std::set<std::string> out;
  for (const auto& n : g.nonterminals())
    if (brute_derives(g, n, Goal::TerminalString)) out.insert(n);
  return out;
}

/// Symbols occurring in some form derivable from [start] within the step bound.
inline std::set<Symbol> brute_accessible(const Grammar& g) {
  const std::size_t k = step_bound(g);
  const std::size_t nn = g.nonterminals().size();
  std::set<Symbol> out{Symbol::nonterminal(g.start())};
  Multiset init(nn, 0);
  init[nt_index(g, g.start())] = 1;
  std::set<Multiset> seen{init};
  std::vector<Multiset> layer{init};
  for (std::size_t depth = 0; depth < k && !layer.empty(); ++depth) {
    std::vector<Multiset> next;
    for (const auto& m : layer) {
      for (std::size_t i = 0; i < nn; ++i) {
        if (m[i] == 0) continue;
        for (const auto& r : g.rules_for(g.nonterminals()[i])) {
          Multiset x = m;
          --x[i];
          for (const auto& s : r.rhs) {
            out.insert(s);
            if (s.is_nonterminal()) ++x[nt_index(g, s.name)];
          }
          if (seen.insert(x).second) next.push_back(std::move(x));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Transitive closure of the direct unit edges by repeated boolean matrix
/// products: R_{k+1} = R_k ∨ (R_k · R_1).
inline std::set<std::pair<std::string, std::string>> unit_closure_by_powering(const Grammar& g) {
  const auto& nts = g.nonterminals();
  const std::size_t n = nts.size();
  std::vector<std::vector<bool>> one(n, std::vector<bool>(n, false));
  for (const auto& r : g.rules())
    if (r.is_unit()) one[nt_index(g, r.lhs)][nt_index(g, r.rhs[0].name)] = true;
  auto acc = one;
  for (std::size_t step = 0; step < n; ++step) {
    auto next = acc;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n && !next[i][j]; ++m)
          if (acc[i][m] && one[m][j]) next[i][j] = true;
    acc = std::move(next);
  }
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (acc[i][j]) out.emplace(nts[i], nts[j]);
  return out;
}

}  // namespace oracle
