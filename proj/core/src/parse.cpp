#include "reldp/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace reldp {

namespace {

enum class Tok { LParen, RParen, Comma, Arrow, ArrowEq, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

bool ident_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  return std::string_view("_#'!?+*=%$@^<>:/").find(c) != std::string_view::npos;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t tl = line, tc = col;
    if (c == '(') {
      out.push_back({Tok::LParen, "(", tl, tc});
      advance(1);
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", tl, tc});
      advance(1);
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", tl, tc});
      advance(1);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      if (i + 2 < text.size() && text[i + 2] == '=') {
        out.push_back({Tok::ArrowEq, "->=", tl, tc});
        advance(3);
      } else {
        out.push_back({Tok::Arrow, "->", tl, tc});
        advance(2);
      }
    } else if (ident_char(c) || c == '-') {
      std::size_t j = i;
      while (j < text.size() &&
             (ident_char(text[j]) ||
              (text[j] == '-' && !(j + 1 < text.size() && text[j + 1] == '>'))))
        ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), tl, tc});
      advance(j - i);
    } else {
      throw parse_error(tl, tc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct Parser {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  std::set<std::string> variables;
  std::map<std::string, std::size_t> arities;

  const Token& peek() const { return tokens[pos]; }
  Token next() { return tokens[pos++]; }

  [[noreturn]] void error(const Token& t, const std::string& message) const {
    throw parse_error(t.line, t.col, message);
  }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) error(peek(), "expected " + what);
    return next();
  }

  Term parse_term() {
    Token id = expect(Tok::Ident, "an identifier");
    bool has_args = peek().kind == Tok::LParen;
    if (variables.contains(id.text)) {
      if (has_args) error(id, "variable " + id.text + " used as function symbol");
      return Term::var(id.text);
    }
    std::vector<Term> args;
    if (has_args) {
      next();
      if (peek().kind != Tok::RParen) {
        args.push_back(parse_term());
        while (peek().kind == Tok::Comma) {
          next();
          args.push_back(parse_term());
        }
      }
      expect(Tok::RParen, "')'");
    }
    auto [it, fresh] = arities.emplace(id.text, args.size());
    if (!fresh && it->second != args.size())
      error(id, "symbol " + id.text + " used with arity " +
                    std::to_string(args.size()) + " but declared with arity " +
                    std::to_string(it->second));
    return Term::fun(id.text, std::move(args));
  }

  // Parses one `lhs (->|->=) rhs`; returns the rule and whether it was weak.
  std::pair<Rule, bool> parse_rule(bool allow_weak_arrow) {
    Token at = peek();
    Term lhs = parse_term();
    bool weak = false;
    if (peek().kind == Tok::ArrowEq) {
      if (!allow_weak_arrow) error(peek(), "'->=' is not allowed here");
      weak = true;
      next();
    } else {
      expect(Tok::Arrow, "'->'");
    }
    Term rhs = parse_term();
    try {
      return {Rule(std::move(lhs), std::move(rhs)), weak};
    } catch (const rule_error& e) {
      error(at, e.what());
    }
  }

  void parse_var_section() {
    while (peek().kind == Tok::Ident) {
      Token v = next();
      if (arities.contains(v.text))
        error(v, v.text + " is already a function symbol");
      variables.insert(v.text);
    }
  }

  std::vector<std::pair<Rule, bool>> parse_rule_section(bool allow_weak_arrow) {
    std::vector<std::pair<Rule, bool>> out;
    while (peek().kind == Tok::Ident) out.push_back(parse_rule(allow_weak_arrow));
    return out;
  }

  // Parses the whole document as named sections; returns rules per section.
  std::map<std::string, std::vector<std::pair<Rule, bool>>> parse_document(
      const std::set<std::string>& rule_sections, bool allow_weak_arrow) {
    std::map<std::string, std::vector<std::pair<Rule, bool>>> out;
    while (peek().kind != Tok::End) {
      expect(Tok::LParen, "'('");
      Token name = expect(Tok::Ident, "a section name");
      if (name.text == "VAR") {
        parse_var_section();
      } else if (rule_sections.contains(name.text)) {
        auto rules = parse_rule_section(allow_weak_arrow);
        auto& dest = out[name.text];
        dest.insert(dest.end(), rules.begin(), rules.end());
      } else {
        error(name, "unknown section " + name.text);
      }
      expect(Tok::RParen, "')'");
    }
    return out;
  }
};

Trs collect(const std::vector<std::pair<Rule, bool>>& rules, bool weak) {
  std::vector<Rule> out;
  for (const auto& [r, w] : rules)
    if (w == weak) out.push_back(r);
  return Trs(std::move(out));
}

void print_component(std::ostringstream& os, const std::string& name,
                     const Trs& rules, const char* arrow = " -> ") {
  if (rules.empty()) return;
  os << '(' << name << '\n';
  for (const Rule& r : rules)
    os << "  " << r.lhs.to_string() << arrow << r.rhs.to_string() << '\n';
  os << ")\n";
}

std::string var_section(const std::vector<const Trs*>& components) {
  std::set<std::string> vars;
  for (const Trs* t : components)
    for (const Rule& r : *t) {
      r.lhs.collect_vars(vars);
      r.rhs.collect_vars(vars);
    }
  std::ostringstream os;
  os << "(VAR";
  for (const std::string& v : vars) os << ' ' << v;
  os << ")\n";
  return os.str();
}

}  // namespace

ParsedTrs parse_trs(const std::string& text) {
  Parser p{lex(text)};
  auto sections = p.parse_document({"RULES"}, true);
  const auto& rules = sections["RULES"];
  try {
    return {collect(rules, false), collect(rules, true)};
  } catch (const rule_error& e) {
    throw parse_error(1, 1, e.what());
  }
}

RelativeDpp parse_rdp(const std::string& text) {
  Parser p{lex(text)};
  auto sections = p.parse_document(
      {"STRICT-PAIRS", "WEAK-PAIRS", "STRICT-RULES", "WEAK-RULES"}, false);
  try {
    return RelativeDpp::make(collect(sections["STRICT-PAIRS"], false),
                             collect(sections["WEAK-PAIRS"], false),
                             collect(sections["STRICT-RULES"], false),
                             collect(sections["WEAK-RULES"], false));
  } catch (const dpp_error& e) {
    throw parse_error(1, 1, std::string("component-overlap: ") + e.what());
  } catch (const rule_error& e) {
    throw parse_error(1, 1, e.what());
  }
}

std::string print_trs(const ParsedTrs& t) {
  std::ostringstream os;
  os << var_section({&t.strict, &t.weak});
  os << "(RULES\n";
  for (const Rule& r : t.strict)
    os << "  " << r.lhs.to_string() << " -> " << r.rhs.to_string() << '\n';
  for (const Rule& r : t.weak)
    os << "  " << r.lhs.to_string() << " ->= " << r.rhs.to_string() << '\n';
  os << ")\n";
  return os.str();
}

std::string print_rdp(const RelativeDpp& d) {
  std::ostringstream os;
  os << var_section({&d.strict_pairs(), &d.weak_pairs(), &d.strict_rules(),
                     &d.weak_rules()});
  print_component(os, "STRICT-PAIRS", d.strict_pairs());
  print_component(os, "WEAK-PAIRS", d.weak_pairs());
  print_component(os, "STRICT-RULES", d.strict_rules());
  print_component(os, "WEAK-RULES", d.weak_rules());
  return os.str();
}

}  // namespace reldp
