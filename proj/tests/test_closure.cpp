#include "doctest.h"

#include "cfgforge/closure.hpp"
#include "cfgforge/harness.hpp"
#include "oracles.hpp"

using namespace cfgforge;
using oracle::grammar;
using oracle::words;

namespace {

Symbol nt(const char* n) { return Symbol::nonterminal(n); }
Symbol t(const char* n) { return Symbol::terminal(n); }

Grammar just(const char* terminal, const char* start = "S") {
  return grammar(std::string("terminals: ") + terminal + "\nnonterminals: " + start + "\nstart: " + start +
                 "\nrules:\n" + start + " -> " + terminal + "\n");
}

bool occurs_on_rhs(const Grammar& g, const std::string& n, const Rule* except = nullptr) {
  for (const auto& r : g.rules()) {
    if (except && r == *except) continue;
    for (const auto& s : r.rhs)
      if (s.is_nonterminal() && s.name == n) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("lift_form") {
  CHECK(lift_form({t("a"), nt("S")}, LiftTag::Left) == SententialForm{t("a"), nt("u1:S")});
  CHECK(lift_form({}, LiftTag::Right).empty());
  CHECK(lift_form({nt("A"), t("b"), nt("C")}, LiftTag::Sole) ==
        SententialForm{nt("k:A"), t("b"), nt("k:C")});
}

TEST_CASE("union") {
  Grammar g1 = oracle::a_star_b();
  Grammar g2 = grammar("terminals: c\nnonterminals: T\nstart: T\nrules:\nT -> c\n");
  Grammar u = union_of(g1, g2);

  const auto expected = oracle::union_oracle(oracle::language(g1, 2), oracle::language(g2, 2));
  CHECK(expected.size() == 3);
  CHECK(enumerate(u, 2).sentences == expected);
  CHECK(u.rules().size() == g1.rules().size() + g2.rules().size() + 2);
  CHECK(u.start() == "#S");
  CHECK(u.has_rule({"#S", {nt("u1:S")}}));
  CHECK(u.has_rule({"#S", {nt("u2:T")}}));
  CHECK_FALSE(occurs_on_rhs(u, u.start()));
  CHECK(u.terminals() == std::vector<std::string>{"a", "b", "c"});

  CHECK(enumerate(union_of(g1, g1), 5).sentences == enumerate(g1, 5).sentences);
}

TEST_CASE("lifted namespaces are disjoint") {
  Grammar g = oracle::a_star_b();
  Grammar u = union_of(g, g);
  for (const auto& n : u.nonterminals()) {
    const bool left = n.starts_with("u1:"), right = n.starts_with("u2:");
    CHECK((left + right + (n == u.start())) == 1);
  }
}

TEST_CASE("concat") {
  Grammar c = concat(just("b"), just("c", "T"));
  CHECK(enumerate(c, 2).sentences == std::vector<Sentence>{words("b c")});
  CHECK(c.rules().size() == 3);
  CHECK(c.has_rule({"#S", {nt("u1:S"), nt("u2:T")}}));

  Grammar empty_lang = grammar("terminals: a\nnonterminals: S\nstart: S\nrules:\nS -> a S\n");
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(enumerate(concat(empty_lang, oracle::a_star_b()), n).sentences.empty());
    CHECK(enumerate(concat(oracle::a_star_b(), empty_lang), n).sentences.empty());
  }
}

TEST_CASE("star") {
  Grammar s = star(just("a"));
  CHECK(enumerate(s, 2).sentences == std::vector<Sentence>{{}, words("a"), words("a a")});
  CHECK(s.has_rule({"#S", {}}));
  const Rule seed{"#S", {nt("#S"), nt("k:S")}};
  CHECK(s.has_rule(seed));
  CHECK_FALSE(occurs_on_rhs(s, s.start(), &seed));

  Grammar ab = grammar("terminals: a b\nnonterminals: S\nstart: S\nrules:\nS -> b | a S\n");
  const auto base = oracle::language(ab, 3);
  CHECK(base == std::vector<Sentence>{words("b"), words("a b"), words("a a b")});
  const auto expected = oracle::star_oracle(base, 3);
  CHECK(enumerate(star(ab), 3).sentences == expected);
  // eps, b, bb, ab, bbb, aab, abb, bab
  CHECK(expected.size() == 8);

  for (std::uint64_t seed_value = 0; seed_value < 50; ++seed_value)
    CHECK(member(star(random_grammar({.seed = seed_value})), {}).accepted);
}

TEST_CASE("nested constructions compound prefixes") {
  Grammar nested = union_of(star(oracle::a_star_b()), just("c"));
  CHECK(nested.is_nonterminal("u1:k:S"));
  CHECK(nested.is_nonterminal("u1:#S"));
  CHECK(nested.start() == "#S");
  const auto expected = oracle::union_oracle(
      oracle::star_oracle(oracle::language(oracle::a_star_b(), 4), 4), std::vector<Sentence>{words("c")});
  CHECK(enumerate(nested, 4).sentences == expected);
}

TEST_CASE("a terminal named like a generated start forces a suffix") {
  Grammar odd = Grammar::build({{"S"}, {"#S"}, "S", {{"S", {t("#S")}}}});
  Grammar u = union_of(odd, odd);
  CHECK(u.start() == "#S1");
  CHECK(enumerate(u, 1).sentences == std::vector<Sentence>{{"#S"}});
}
