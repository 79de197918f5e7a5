#include "frsim/fisdsl.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace frsim {

SourceError::SourceError(ErrorKind kind, int line, int column, const std::string& message)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

namespace {

enum class TokenType { Ident, Number, Punct, End };

struct Token {
  TokenType type = TokenType::End;
  std::string text;
  double number = 0.0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_space_and_comments();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= text_.size()) {
        tokens.push_back(tok);
        return tokens;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tok.type = TokenType::Ident;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
          tok.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
                 c == '.') {
        tok.type = TokenType::Number;
        tok.text = lex_number(tok);
      } else if (std::string_view("[](){},;=").find(c) != std::string_view::npos) {
        tok.type = TokenType::Punct;
        tok.text = std::string(1, advance());
      } else {
        throw SourceError(ErrorKind::SyntaxError, tok.line, tok.column,
                          std::string("unexpected character '") + c + "'");
      }
      tokens.push_back(std::move(tok));
    }
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string lex_number(Token& tok) {
    std::string s;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        s += advance();
        ++n;
      }
      return n;
    };
    if (text_[pos_] == '-' || text_[pos_] == '+') s += advance();
    std::size_t n = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      s += advance();
      n += digits();
    }
    if (n == 0) throw SourceError(ErrorKind::SyntaxError, tok.line, tok.column, "malformed number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      s += advance();
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) s += advance();
      if (digits() == 0) {
        throw SourceError(ErrorKind::SyntaxError, tok.line, tok.column, "malformed exponent");
      }
    }
    const char* first = s.data() + (s[0] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), tok.number);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw SourceError(ErrorKind::SyntaxError, tok.line, tok.column, "malformed number");
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct ParsedVariable {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<Term> terms;
  Token at;
};

struct ParsedRule {
  Rule rule;
  std::vector<Token> refs;  // one per antecedent, then the consequent
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FisConfig run() {
    while (is_keyword("var")) parse_var();
    while (is_keyword("rule")) parse_rule();
    if (peek().type != TokenType::End) {
      fail(peek(), variables_.empty() && rules_.empty() ? "'var' or 'rule'" : "'rule' or end of input");
    }
    return build();
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.type != TokenType::End) ++pos_;
    return t;
  }

  bool is_keyword(std::string_view kw) const {
    return peek().type == TokenType::Ident && peek().text == kw;
  }

  [[noreturn]] void fail(const Token& at, std::string_view expected) const {
    const std::string found = at.type == TokenType::End ? "end of input" : "'" + at.text + "'";
    throw SourceError(ErrorKind::SyntaxError, at.line, at.column,
                      "expected " + std::string(expected) + ", found " + found);
  }

  void expect_keyword(std::string_view kw) {
    if (!is_keyword(kw)) fail(peek(), "'" + std::string(kw) + "'");
    next();
  }

  void expect_punct(char p) {
    if (peek().type != TokenType::Punct || peek().text[0] != p) {
      fail(peek(), std::string("'") + p + "'");
    }
    next();
  }

  const Token& expect_ident() {
    if (peek().type != TokenType::Ident) fail(peek(), "identifier");
    return next();
  }

  double expect_number() {
    if (peek().type != TokenType::Number) fail(peek(), "number");
    return next().number;
  }

  void parse_var() {
    expect_keyword("var");
    ParsedVariable v;
    v.at = expect_ident();
    v.name = v.at.text;
    for (const ParsedVariable& other : variables_) {
      if (other.name == v.name) {
        throw SourceError(ErrorKind::DuplicateName, v.at.line, v.at.column,
                          "variable '" + v.name + "' is defined twice");
      }
    }
    expect_keyword("in");
    expect_punct('[');
    const Token& lo_tok = peek();
    v.lo = expect_number();
    expect_punct(',');
    v.hi = expect_number();
    expect_punct(']');
    if (!(v.lo < v.hi)) {
      throw SourceError(ErrorKind::DomainError, lo_tok.line, lo_tok.column,
                        "domain of '" + v.name + "' needs lo < hi");
    }
    expect_punct('{');
    while (is_keyword("term")) {
      next();
      const Token& name = expect_ident();
      for (const Term& t : v.terms) {
        if (t.name == name.text) {
          throw SourceError(ErrorKind::DuplicateName, name.line, name.column,
                            "term '" + name.text + "' is defined twice in '" + v.name + "'");
        }
      }
      expect_punct('=');
      expect_keyword("tri");
      expect_punct('(');
      const Token& at = peek();
      TriangularMF mf;
      mf.a = expect_number();
      expect_punct(',');
      mf.b = expect_number();
      expect_punct(',');
      mf.c = expect_number();
      expect_punct(')');
      expect_punct(';');
      try {
        validate_triangle(mf, v.lo, v.hi, v.name + "." + name.text);
      } catch (const Error& e) {
        throw SourceError(e.kind(), at.line, at.column, e.what());
      }
      v.terms.push_back(Term{name.text, mf});
    }
    if (!is_keyword("term") && !(peek().type == TokenType::Punct && peek().text == "}")) {
      fail(peek(), "'term' or '}'");
    }
    expect_punct('}');
    variables_.push_back(std::move(v));
  }

  Condition parse_condition(std::vector<Token>& refs) {
    const Token& var = expect_ident();
    expect_keyword("is");
    const Token& term = expect_ident();
    refs.push_back(term);
    return Condition{var.text, term.text};
  }

  void parse_rule() {
    expect_keyword("rule");
    expect_keyword("if");
    ParsedRule r;
    r.rule.antecedents.push_back(parse_condition(r.refs));
    while (is_keyword("and")) {
      next();
      r.rule.antecedents.push_back(parse_condition(r.refs));
    }
    expect_keyword("then");
    r.rule.consequent = parse_condition(r.refs);
    expect_punct(';');
    rules_.push_back(std::move(r));
  }

  const ParsedVariable* find(std::string_view name) const {
    for (const ParsedVariable& v : variables_) {
      if (v.name == name) return &v;
    }
    return nullptr;
  }

  FisConfig build() {
    // Resolve every reference first so errors point at the offending token.
    std::set<std::string> antecedent_vars;
    std::set<std::string> consequent_vars;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const ParsedRule& pr = rules_[i];
      std::vector<Condition> conds = pr.rule.antecedents;
      conds.push_back(pr.rule.consequent);
      for (std::size_t k = 0; k < conds.size(); ++k) {
        const Token& at = pr.refs[k];
        const ParsedVariable* v = find(conds[k].variable);
        const std::string where = "rule " + std::to_string(i + 1) + ": ";
        if (!v) {
          throw SourceError(ErrorKind::UnknownTerm, at.line, at.column,
                            where + "unknown variable '" + conds[k].variable + "'");
        }
        bool found = false;
        for (const Term& t : v->terms) found = found || t.name == conds[k].term;
        if (!found) {
          throw SourceError(ErrorKind::UnknownTerm, at.line, at.column,
                            where + "unknown term '" + conds[k].term + "' of '" + v->name + "'");
        }
        (k + 1 == conds.size() ? consequent_vars : antecedent_vars).insert(conds[k].variable);
      }
    }

    const Token& end = peek();
    std::vector<const ParsedVariable*> outputs;
    for (const ParsedVariable& v : variables_) {
      if (consequent_vars.count(v.name) && !antecedent_vars.count(v.name)) outputs.push_back(&v);
    }
    if (outputs.size() != 1) {
      throw SourceError(ErrorKind::InvalidConfig, end.line, end.column,
                        outputs.empty() ? "no output variable (one appearing only in consequents)"
                                        : "ambiguous output variable");
    }
    const ParsedVariable* lower = find(kLowerVariable);
    const ParsedVariable* upper = find(kUpperVariable);
    if (!lower || !upper || variables_.size() != 3 || outputs.front()->name != kRankVariable) {
      throw SourceError(ErrorKind::InvalidConfig, end.line, end.column,
                        "expected inputs similarity_lower, similarity_upper and output rank");
    }
    std::vector<Rule> rules;
    for (const ParsedRule& pr : rules_) rules.push_back(pr.rule);
    auto make = [](const ParsedVariable& v) {
      return LinguisticVariable(v.name, v.lo, v.hi, v.terms);
    };
    try {
      return FisConfig(make(*lower), make(*upper), make(*outputs.front()), std::move(rules));
    } catch (const SourceError&) {
      throw;
    } catch (const Error& e) {
      throw SourceError(e.kind(), end.line, end.column, e.what());
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParsedVariable> variables_;
  std::vector<ParsedRule> rules_;
};

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

void write_variable(std::ostringstream& out, const LinguisticVariable& v) {
  out << "var " << v.name() << " in [" << format_number(v.lo()) << ", " << format_number(v.hi())
      << "] {\n";
  for (const Term& t : v.terms()) {
    out << "  term " << t.name << " = tri(" << format_number(t.mf.a) << ", "
        << format_number(t.mf.b) << ", " << format_number(t.mf.c) << ");\n";
  }
  out << "}\n";
}

}  // namespace

FisConfig parse_fis(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::string serialize_fis(const FisConfig& config) {
  std::ostringstream out;
  write_variable(out, config.lower());
  out << "\n";
  write_variable(out, config.upper());
  out << "\n";
  write_variable(out, config.output());
  out << "\n";
  for (const Rule& r : config.rules()) {
    out << "rule if ";
    for (std::size_t i = 0; i < r.antecedents.size(); ++i) {
      if (i > 0) out << " and ";
      out << r.antecedents[i].variable << " is " << r.antecedents[i].term;
    }
    out << " then " << r.consequent.variable << " is " << r.consequent.term << ";\n";
  }
  return out.str();
}

FisConfig load_fis(const std::filesystem::path& path) {
  constexpr std::string_view kBuiltin = "builtin:";
  const std::string p = path.string();
  if (p.rfind(kBuiltin, 0) == 0) {
    if (auto preset = presets::by_name(std::string_view(p).substr(kBuiltin.size()))) {
      return *preset;
    }
    throw Error(ErrorKind::FileNotFound, "unknown built-in FIS preset '" + p + "'");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open FIS file " + p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fis(buf.str());
}

FisConfig with_verbatim_rule2(const FisConfig& config) {
  std::vector<Rule> rules = config.rules();
  const Rule corrected{{{std::string(kLowerVariable), "average"},
                        {std::string(kUpperVariable), "poor"}},
                       {std::string(kRankVariable), "medium"}};
  for (Rule& r : rules) {
    if (r == corrected) {
      r.antecedents[0].variable = std::string(kUpperVariable);
      return config.with_rules(std::move(rules));
    }
  }
  throw Error(ErrorKind::InvalidConfig,
              "rule 'similarity_lower is average and similarity_upper is poor' not found");
}

}  // namespace frsim
