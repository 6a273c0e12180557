#include "cfgforge/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cfgforge/closure.hpp"
#include "cfgforge/harness.hpp"
#include "cfgforge/simplify.hpp"
#include "cfgforge/text_format.hpp"

namespace cfgforge::cli {

std::size_t effective_max_len_cap() {
  const char* env = std::getenv("CFG_FORGE_MAXLEN");
  if (!env) return kMaxLenCap;
  std::string_view s(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return kMaxLenCap;
  return std::min(value, kMaxLenCap);
}

namespace {

// Thrown after a diagnostic has been written; carries the exit code.
struct Failed {
  int code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": cannot open file\n";
    throw Failed{kUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string where(const std::string& path, SourceSpan at) {
  return path + ":" + std::to_string(at.line) + ":" + std::to_string(at.column);
}

// Returns the report instead of throwing so `validate` can print every violation.
std::pair<ParsedText, ValidationReport> load_raw(const std::string& path, NamePolicy policy,
                                                 std::ostream& err) {
  const std::string text = read_file(path, err);
  try {
    ParsedText parsed = parse_text(text);
    ValidationReport report = validate(parsed.raw, policy);
    return {std::move(parsed), std::move(report)};
  } catch (const SyntaxError& e) {
    err << where(path, e.where()) << ": syntax error: " << e.what() << '\n';
    throw Failed{kUsage};
  }
}

void print_violations(const std::string& path, const ParsedText& parsed,
                      const ValidationReport& report, std::ostream& err) {
  for (const auto& v : report.violations) {
    auto it = parsed.spans.find(v.item);
    err << (it != parsed.spans.end() ? where(path, it->second) : path) << ": " << v.code << ": "
        << v.message << '\n';
  }
}

Grammar load(const std::string& path, std::ostream& err) {
  auto [parsed, report] = load_raw(path, NamePolicy::AllowGenerated, err);
  if (!report.ok()) {
    print_violations(path, parsed, report, err);
    throw Failed{kUsage};
  }
  return Grammar::build(std::move(parsed.raw));
}

void emit(const Grammar& g, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const std::string text = serialize_grammar(g);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f || !(f << text)) {
    err << out_path << ": cannot write file\n";
    throw Failed{kUsage};
  }
}

void check_len(std::size_t n, std::ostream& err) {
  const std::size_t cap = effective_max_len_cap();
  if (n > cap) {
    err << "bound too large: " << n << " exceeds the max-len cap of " << cap << '\n';
    throw Failed{kPrecondition};
  }
}

Sentence parse_word(const std::string& word) {
  Sentence w;
  std::istringstream ss(word);
  for (std::string t; ss >> t;) w.push_back(t);
  if (w.size() == 1 && w[0] == "eps") w.clear();
  return w;
}

std::vector<SimplifyStep> parse_steps(const std::string& spec, std::ostream& err) {
  std::vector<SimplifyStep> steps;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    bool known = false;
    for (SimplifyStep s : kDefaultSteps) {
      if (to_string(s) == item) {
        steps.push_back(s);
        known = true;
      }
    }
    if (!known) {
      err << "unknown simplification step '" << item
          << "' (expected empty, unit, useless or inaccessible)\n";
      throw Failed{kUsage};
    }
  }
  return steps;
}

void print_trace(const Grammar& g, const DerivationTrace& t, std::ostream& out) {
  const auto forms = replay_forms(g, t);
  out << "   " << to_string(forms.front()) << '\n';
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    out << "=> " << to_string(forms[i + 1]) << "    [" << to_string(t.steps[i].rule) << " @ "
        << t.steps[i].position << "]\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Context-free grammar simplification and closure toolkit", "cfgforge"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, steps_spec, word;
  std::size_t max_len = 0;
  bool strict = false, trace = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a grammar file");
  validate_cmd->add_option("FILE", file)->required();
  validate_cmd->add_flag("--strict", strict, "Reject generated names containing '#' or ':'");

  auto* simplify_cmd = app.add_subcommand("simplify", "Eliminate empty/unit rules and useless/inaccessible symbols");
  simplify_cmd->add_option("FILE", file)->required();
  simplify_cmd->add_option("--steps", steps_spec, "Comma-separated steps, applied in order");
  simplify_cmd->add_option("-o,--output", out_path);

  auto* union_cmd = app.add_subcommand("union", "Grammar for the union of two languages");
  union_cmd->add_option("A", file)->required();
  union_cmd->add_option("B", file_b)->required();
  union_cmd->add_option("-o,--output", out_path)->required();

  auto* concat_cmd = app.add_subcommand("concat", "Grammar for the concatenation of two languages");
  concat_cmd->add_option("A", file)->required();
  concat_cmd->add_option("B", file_b)->required();
  concat_cmd->add_option("-o,--output", out_path)->required();

  auto* star_cmd = app.add_subcommand("star", "Grammar for the Kleene closure of a language");
  star_cmd->add_option("A", file)->required();
  star_cmd->add_option("-o,--output", out_path)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every sentence up to a length");
  enumerate_cmd->add_option("FILE", file)->required();
  enumerate_cmd->add_option("--max-len", max_len)->required();

  auto* member_cmd = app.add_subcommand("member", "Test whether a word is generated");
  member_cmd->add_option("FILE", file)->required();
  member_cmd->add_option("--word", word, "Space-separated terminals")->required();
  member_cmd->add_flag("--trace", trace, "Print a derivation");

  auto* equiv_cmd = app.add_subcommand("equiv", "Compare two languages up to a length");
  equiv_cmd->add_option("A", file)->required();
  equiv_cmd->add_option("B", file_b)->required();
  equiv_cmd->add_option("--max-len", max_len)->required();

  auto* predicates_cmd = app.add_subcommand("predicates", "Report the simplification predicates");
  predicates_cmd->add_option("FILE", file)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*validate_cmd) {
      auto [parsed, report] = load_raw(file, strict ? NamePolicy::UserOnly : NamePolicy::AllowGenerated, err);
      if (!report.ok()) {
        print_violations(file, parsed, report, err);
        return kUsage;
      }
      out << "ok\n";
    } else if (*simplify_cmd) {
      const Grammar g = load(file, err);
      const Grammar result = steps_spec.empty() ? simplify_all(g) : simplify(g, parse_steps(steps_spec, err));
      emit(result, out_path, out, err);
    } else if (*union_cmd) {
      emit(union_of(load(file, err), load(file_b, err)), out_path, out, err);
    } else if (*concat_cmd) {
      emit(concat(load(file, err), load(file_b, err)), out_path, out, err);
    } else if (*star_cmd) {
      emit(star(load(file, err)), out_path, out, err);
    } else if (*enumerate_cmd) {
      check_len(max_len, err);
      const Grammar g = load(file, err);
      for (const auto& s : enumerate(g, max_len).sentences) out << to_string(s) << '\n';
    } else if (*member_cmd) {
      const Sentence w = parse_word(word);
      check_len(w.size(), err);
      const Grammar g = load(file, err);
      for (const auto& t : w)
        if (!g.is_terminal(t)) err << "note: '" << t << "' is not a terminal of " << file << '\n';
      const Membership m = member(g, w);
      if (!m.accepted) {
        out << "rejected\n";
        return kNegative;
      }
      out << "accepted\n";
      if (trace) print_trace(g, *m.trace, out);
    } else if (*equiv_cmd) {
      check_len(max_len, err);
      const Grammar a = load(file, err);
      const Grammar b = load(file_b, err);
      const EquivVerdict v = equiv_bounded(a, b, max_len);
      if (v.equivalent) {
        out << "equivalent up to length " << max_len << '\n';
        return kOk;
      }
      const auto& [sentence, side] = *v.counterexample;
      out << "not equivalent up to length " << max_len << ": \"" << to_string(sentence)
          << "\" is generated only by " << (side == Side::LeftOnly ? file : file_b) << '\n';
      return kNegative;
    } else if (*predicates_cmd) {
      for (const auto& [name, value] : predicate_lines(check_predicates(load(file, err))))
        out << name << '=' << (value ? "true" : "false") << '\n';
    }
  } catch (const Failed& f) {
    return f.code;
  } catch (const EmptyLanguage&) {
    err << "empty language: the start symbol derives no terminal string\n";
    return kPrecondition;
  } catch (const VariantExplosion& e) {
    err << "variant explosion: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BoundTooLarge& e) {
    err << "bound too large: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const InvalidOperand& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace cfgforge::cli
