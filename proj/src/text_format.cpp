#include "cfgforge/text_format.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace cfgforge {

SyntaxError::SyntaxError(SourceSpan at, const std::string& message)
    : Error("line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " +
            message),
      at_(at) {}

namespace {

struct Token {
  std::string text;
  SourceSpan at;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#' && (i + 1 == line.size() || is_space(line[i + 1]) || line[i + 1] == '#'))
      break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    out.push_back({std::string(line.substr(i, j - i)), {line_no, i + 1}});
    i = j;
  }
  return out;
}

enum class Section { None, Terminals, Nonterminals, Start, Rules };

const char* header_of(Section s) {
  switch (s) {
    case Section::Terminals:
      return "terminals:";
    case Section::Nonterminals:
      return "nonterminals:";
    case Section::Start:
      return "start:";
    case Section::Rules:
      return "rules:";
    case Section::None:
      break;
  }
  return "";
}

Section header_section(const std::string& tok) {
  for (Section s : {Section::Terminals, Section::Nonterminals, Section::Start, Section::Rules})
    if (tok == header_of(s)) return s;
  return Section::None;
}

}  // namespace

ParsedText parse_text(std::string_view text) {
  ParsedText out;
  Section section = Section::None;
  bool start_seen = false;
  std::set<std::string> terminals;
  struct PendingRule {
    Token lhs;
    std::vector<Token> rhs;
  };
  std::vector<PendingRule> pending;

  auto remember = [&](const std::string& key, SourceSpan at) { out.spans.emplace(key, at); };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    std::vector<Token> toks = tokenize(line, line_no);
    if (toks.empty()) continue;

    std::size_t first = 0;
    if (Section s = header_section(toks[0].text); s != Section::None) {
      if (static_cast<int>(s) != static_cast<int>(section) + 1)
        throw SyntaxError(toks[0].at, "unexpected section header '" + toks[0].text + "' (expected '" +
                                          header_of(static_cast<Section>(static_cast<int>(section) + 1)) +
                                          "')");
      section = s;
      first = 1;
    }

    switch (section) {
      case Section::None:
        throw SyntaxError(toks[0].at, "expected 'terminals:' section header");
      case Section::Terminals:
        for (std::size_t i = first; i < toks.size(); ++i) {
          out.raw.terminals.push_back(toks[i].text);
          terminals.insert(toks[i].text);
          remember(toks[i].text, toks[i].at);
        }
        break;
      case Section::Nonterminals:
        for (std::size_t i = first; i < toks.size(); ++i) {
          out.raw.nonterminals.push_back(toks[i].text);
          remember(toks[i].text, toks[i].at);
        }
        break;
      case Section::Start:
        for (std::size_t i = first; i < toks.size(); ++i) {
          if (start_seen) throw SyntaxError(toks[i].at, "only one start symbol is allowed");
          out.raw.start = toks[i].text;
          start_seen = true;
        }
        break;
      case Section::Rules: {
        if (first == 1) {
          if (toks.size() > 1) throw SyntaxError(toks[1].at, "rules start on the line after 'rules:'");
          break;
        }
        if (toks.size() < 2 || toks[1].text != "->")
          throw SyntaxError(toks.size() < 2 ? toks[0].at : toks[1].at, "expected 'LHS -> ...'");
        if (toks[0].text == "|" || toks[0].text == "eps")
          throw SyntaxError(toks[0].at, "invalid left-hand side '" + toks[0].text + "'");
        std::vector<Token> alt;
        SourceSpan alt_at = toks[1].at;
        auto flush = [&](SourceSpan at) {
          if (alt.empty()) throw SyntaxError(at, "empty alternative (write 'eps' for an empty rule)");
          if (alt.size() > 1) {
            for (const auto& t : alt)
              if (t.text == "eps") throw SyntaxError(t.at, "'eps' must stand alone");
          }
          if (alt.size() == 1 && alt[0].text == "eps") alt.clear();
          pending.push_back({toks[0], std::move(alt)});
          alt.clear();
        };
        for (std::size_t i = 2; i < toks.size(); ++i) {
          if (toks[i].text == "|") {
            flush(toks[i].at);
            alt_at = toks[i].at;
          } else if (toks[i].text == "->") {
            throw SyntaxError(toks[i].at, "unexpected '->'");
          } else {
            alt.push_back(toks[i]);
          }
        }
        flush(alt_at);
        break;
      }
    }
  }

  if (section != Section::Rules) {
    Section missing = static_cast<Section>(static_cast<int>(section) + 1);
    throw SyntaxError({line_no, 1}, std::string("missing section '") + header_of(missing) + "'");
  }
  if (!start_seen) throw SyntaxError({line_no, 1}, "missing start symbol");

  for (const auto& p : pending) {
    Rule rule;
    rule.lhs = p.lhs.text;
    for (const auto& t : p.rhs)
      rule.rhs.push_back(terminals.contains(t.text) ? Symbol::terminal(t.text)
                                                    : Symbol::nonterminal(t.text));
    remember(to_string(rule), p.lhs.at);
    out.raw.rules.push_back(std::move(rule));
  }
  return out;
}

GrammarDocument parse_document(std::string text) {
  ParsedText parsed = parse_text(text);
  Grammar g = Grammar::build(std::move(parsed.raw));
  return {std::move(text), std::move(g), std::move(parsed.spans)};
}

Grammar parse_grammar(std::string_view text) { return Grammar::build(parse_text(text).raw); }

std::string serialize_grammar(const Grammar& g) {
  std::string out = "terminals:";
  for (const auto& t : g.terminals()) out += ' ' + t;
  out += "\nnonterminals:";
  for (const auto& n : g.nonterminals()) out += ' ' + n;
  out += "\nstart: " + g.start() + "\nrules:\n";
  const auto& rules = g.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (i == 0 || rules[i].lhs != rules[i - 1].lhs) {
      if (i) out += '\n';
      out += rules[i].lhs + " ->";
    } else {
      out += " |";
    }
    out += ' ' + to_string(rules[i].rhs);
  }
  if (!rules.empty()) out += '\n';
  return out;
}

}  // namespace cfgforge
