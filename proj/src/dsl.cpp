#include "liebi/dsl.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "esv_fixture.hpp"

namespace liebi {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      out.push_back({Tok::ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::string_view("[](),=+-*/").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(lineno, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int lineno) : toks_(std::move(toks)), line_(lineno) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_punct(char c) const { return peek().kind == Tok::punct && peek().text[0] == c; }
  bool at_end() const { return peek().kind == Tok::end; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, peek().column, msg); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    throw ParseError(line_, t.column, msg);
  }

  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Token expect_ident(const char* what) {
    if (peek().kind != Tok::ident) fail(std::string("expected ") + what);
    return next();
  }
  void expect_keyword(const char* kw) {
    if (peek().kind != Tok::ident || peek().text != kw) fail(std::string("expected '") + kw + "'");
    ++pos_;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

class SpecParser {
 public:
  AlgebraSpec parse(std::string_view text) {
    int lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++lineno;
      parse_line(line, lineno);
      start = end + 1;
    }
    if (!have_name_) throw ParseError(lineno, 1, "missing 'algebra <name>' declaration");
    return std::move(spec_);
  }

 private:
  void parse_line(std::string_view line, int lineno) {
    LineParser p(tokenize(line, lineno), lineno);
    if (p.at_end()) return;
    const Token head = p.expect_ident("a declaration keyword");
    if (head.text == "algebra") {
      if (have_name_) p.fail_at(head, "duplicate 'algebra' declaration");
      spec_.name = p.expect_ident("an algebra name").text;
      have_name_ = true;
      p.expect_end();
    } else if (head.text == "family") {
      parse_family(p);
    } else if (head.text == "bracket") {
      parse_bracket(p);
    } else {
      p.fail_at(head, "unknown declaration '" + head.text + "'");
    }
  }

  bool declared(const std::string& name) const {
    for (const auto& f : spec_.families)
      if (f.name == name) return true;
    return false;
  }
  bool half_integer(const std::string& name) const {
    for (const auto& f : spec_.families)
      if (f.name == name) return f.half_integer;
    return false;
  }

  void parse_family(LineParser& p) {
    const Token name = p.expect_ident("a family name");
    if (declared(name.text)) p.fail_at(name, "duplicate family '" + name.text + "'");
    p.expect_keyword("degree");
    p.expect_ident("an index symbol");
    bool half = false;
    if (p.at_punct('+')) {
      p.next();
      const Token one = p.next();
      if (one.kind != Tok::number || one.text != "1") p.fail_at(one, "expected '1/2'");
      p.expect_punct('/');
      const Token two = p.next();
      if (two.kind != Tok::number || two.text != "2") p.fail_at(two, "expected '1/2'");
      half = true;
    }
    p.expect_end();
    spec_.families.push_back({name.text, half});
  }

  Token family_ref(LineParser& p) {
    const Token f = p.expect_ident("a family name");
    if (!declared(f.text)) p.fail_at(f, "undeclared family '" + f.text + "'");
    return f;
  }

  void parse_bracket(LineParser& p) {
    BracketRule rule;
    p.expect_punct('[');
    const Token lf = family_ref(p);
    p.expect_punct('(');
    const Token ls = p.expect_ident("an index symbol");
    p.expect_punct(')');
    p.expect_punct(',');
    const Token rf = family_ref(p);
    p.expect_punct('(');
    const Token rs = p.expect_ident("an index symbol");
    p.expect_punct(')');
    p.expect_punct(']');
    if (ls.text == rs.text) p.fail_at(rs, "index symbols must differ");
    for (const Token* s : {&ls, &rs})
      if (declared(s->text)) p.fail_at(*s, "index symbol '" + s->text + "' names a family");
    rule.left_family = lf.text;
    rule.left_symbol = ls.text;
    rule.right_family = rf.text;
    rule.right_symbol = rs.text;

    for (const auto& r : spec_.rules) {
      const bool same = r.left_family == lf.text && r.right_family == rf.text;
      const bool reversed = r.left_family == rf.text && r.right_family == lf.text;
      if (same || reversed)
        p.fail_at(lf, "duplicate rule for [" + lf.text + ", " + rf.text + "]");
    }

    p.expect_punct('=');
    symbols_ = {ls.text, rs.text};
    if (p.peek().kind == Tok::number && p.peek().text == "0") {
      p.next();
      if (p.at_end()) {
        spec_.rules.push_back(std::move(rule));
        return;
      }
      p.fail("a zero rule must be exactly '= 0'");
    }
    bool first = true;
    while (true) {
      Rational sign(1);
      if (!first) {
        if (p.at_end()) break;
        if (p.at_punct('+')) {
          p.next();
        } else if (p.at_punct('-')) {
          p.next();
          sign = Rational(-1);
        } else {
          p.fail("expected '+' or '-' between terms");
        }
      }
      first = false;
      auto [coef, target] = parse_term(p);
      const bool target_half = half_integer(target.text);
      const bool expected_half = half_integer(lf.text) != half_integer(rf.text);
      if (target_half != expected_half)
        p.fail_at(target, "target family '" + target.text + "' has the wrong degree shape");
      coef.constant *= sign;
      coef.left *= sign;
      coef.right *= sign;
      merge_term(rule, RuleTerm{coef, target.text});
    }
    spec_.rules.push_back(std::move(rule));
  }

  static void merge_term(BracketRule& rule, RuleTerm term) {
    for (auto it = rule.terms.begin(); it != rule.terms.end(); ++it) {
      if (it->target != term.target) continue;
      it->coefficient.constant += term.coefficient.constant;
      it->coefficient.left += term.coefficient.left;
      it->coefficient.right += term.coefficient.right;
      if (it->coefficient.is_zero()) rule.terms.erase(it);
      return;
    }
    if (!term.coefficient.is_zero()) rule.terms.push_back(std::move(term));
  }

  // term := ['-'] factor (('*' | '/') factor)*, exactly one factor a family call
  std::pair<AffinePoly, Token> parse_term(LineParser& p) {
    AffinePoly coef{Rational(1), Rational(0), Rational(0)};
    if (p.at_punct('-')) {
      p.next();
      coef.constant = Rational(-1);
    }
    std::optional<Token> target;
    char op = '*';
    while (true) {
      const Token start = p.peek();
      if (start.kind == Tok::ident && !is_symbol(start.text)) {
        if (op == '/') p.fail_at(start, "cannot divide by a basis element");
        if (target) p.fail_at(start, "a term may name only one basis family");
        target = parse_family_call(p);
      } else {
        const AffinePoly f = parse_factor(p);
        coef = op == '*' ? multiply(p, start, coef, f) : divide(p, start, coef, f);
      }
      if (p.at_punct('*') || p.at_punct('/')) {
        op = p.next().text[0];
      } else {
        break;
      }
    }
    if (!target) p.fail("term has no target basis family");
    return {coef, *target};
  }

  Token parse_family_call(LineParser& p) {
    const Token f = family_ref(p);
    p.expect_punct('(');
    const Token a = p.expect_ident("an index symbol");
    const Token plus = p.peek();
    if (!p.at_punct('+')) p.fail_at(plus, "target index must be the sum of the bracket indices");
    p.next();
    const Token b = p.expect_ident("an index symbol");
    const bool ok = (a.text == symbols_[0] && b.text == symbols_[1]) ||
                    (a.text == symbols_[1] && b.text == symbols_[0]);
    if (!ok) p.fail_at(a, "target index must be the sum of the bracket indices");
    if (!p.at_punct(')')) p.fail("target index must be the sum of the bracket indices");
    p.next();
    return f;
  }

  bool is_symbol(const std::string& s) const { return s == symbols_[0] || s == symbols_[1]; }

  // factor := number | symbol | '(' expr ')'
  AffinePoly parse_factor(LineParser& p) {
    const Token t = p.next();
    if (t.kind == Tok::number) {
      return {*Rational::parse(t.text), Rational(0), Rational(0)};
    }
    if (t.kind == Tok::ident) {
      if (t.text == symbols_[0]) return {Rational(0), Rational(1), Rational(0)};
      if (t.text == symbols_[1]) return {Rational(0), Rational(0), Rational(1)};
      p.fail_at(t, "unknown symbol '" + t.text + "'");
    }
    if (t.kind == Tok::punct && t.text == "(") {
      AffinePoly e = parse_expr(p);
      p.expect_punct(')');
      return e;
    }
    p.fail_at(t, "expected a number, index symbol or '('");
  }

  // expr := ['-'] factor-product (('+' | '-') factor-product)*
  AffinePoly parse_expr(LineParser& p) {
    AffinePoly acc{Rational(0), Rational(0), Rational(0)};
    Rational sign(1);
    if (p.at_punct('-')) {
      p.next();
      sign = Rational(-1);
    }
    while (true) {
      AffinePoly prod = parse_product(p);
      acc.constant += sign * prod.constant;
      acc.left += sign * prod.left;
      acc.right += sign * prod.right;
      if (p.at_punct('+')) {
        sign = Rational(1);
      } else if (p.at_punct('-')) {
        sign = Rational(-1);
      } else {
        return acc;
      }
      p.next();
    }
  }

  AffinePoly parse_product(LineParser& p) {
    Token start = p.peek();
    AffinePoly acc = parse_factor(p);
    while (p.at_punct('*') || p.at_punct('/')) {
      const char op = p.next().text[0];
      start = p.peek();
      const AffinePoly f = parse_factor(p);
      acc = op == '*' ? multiply(p, start, acc, f) : divide(p, start, acc, f);
    }
    return acc;
  }

  static AffinePoly scale(const AffinePoly& a, const Rational& s) {
    return {a.constant * s, a.left * s, a.right * s};
  }

  static AffinePoly multiply(LineParser& p, const Token& at, const AffinePoly& a,
                             const AffinePoly& b) {
    if (a.is_constant()) return scale(b, a.constant);
    if (b.is_constant()) return scale(a, b.constant);
    p.fail_at(at, "coefficient must be affine in the indices");
  }

  static AffinePoly divide(LineParser& p, const Token& at, const AffinePoly& a,
                           const AffinePoly& b) {
    if (!b.is_constant()) p.fail_at(at, "can only divide by a constant");
    if (b.constant.is_zero()) p.fail_at(at, "division by zero");
    return scale(a, Rational(1) / b.constant);
  }

  AlgebraSpec spec_;
  bool have_name_ = false;
  std::array<std::string, 2> symbols_;
};

std::string print_poly(const AffinePoly& c, const std::string& i, const std::string& j) {
  std::vector<std::pair<Rational, std::string>> pieces;
  if (!c.left.is_zero()) pieces.emplace_back(c.left, i);
  if (!c.right.is_zero()) pieces.emplace_back(c.right, j);
  if (!c.constant.is_zero()) pieces.emplace_back(c.constant, "");
  std::string out;
  for (const auto& [k, sym] : pieces) {
    const Rational mag = k.sign() < 0 ? -k : k;
    if (out.empty())
      out += k.sign() < 0 ? "-" : "";
    else
      out += k.sign() < 0 ? " - " : " + ";
    if (sym.empty())
      out += mag.str();
    else
      out += (mag == Rational(1) ? "" : mag.str() + "*") + sym;
  }
  return pieces.size() > 1 ? "(" + out + ")" : out;
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text) { return SpecParser().parse(text); }

AlgebraSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string print_spec(const AlgebraSpec& spec) {
  std::string out = "algebra " + spec.name + "\n";
  for (const auto& f : spec.families)
    out += "family " + f.name + " degree " + (f.half_integer ? "n+1/2" : "n") + "\n";
  for (const auto& r : spec.rules) {
    const std::string& i = r.left_symbol;
    const std::string& j = r.right_symbol;
    out += "bracket [" + r.left_family + "(" + i + "), " + r.right_family + "(" + j + ")] = ";
    if (r.terms.empty()) out += "0";
    for (std::size_t t = 0; t < r.terms.size(); ++t) {
      if (t) out += " + ";
      const auto& term = r.terms[t];
      const AffinePoly& c = term.coefficient;
      if (c != AffinePoly{Rational(1), Rational(0), Rational(0)})
        out += print_poly(c, i, j) + " * ";
      out += term.target + "(" + i + "+" + j + ")";
    }
    out += "\n";
  }
  return out;
}

std::string_view builtin_esv_text() { return kEsvFixture; }

AlgebraSpec builtin_esv() { return parse_spec(builtin_esv_text()); }

AlgebraElement BracketRuleSet::bracket(BasisVector a, BasisVector b) const {
  const std::size_t n = families_.size();
  if (a.family >= n || b.family >= n) return {};
  const Entry& e = table_[a.family * n + b.family];
  AlgebraElement out;
  if (!e.present) return out;
  const Rational ia(a.twice_index, 2);
  const Rational ib(b.twice_index, 2);
  const int target = a.twice_index + b.twice_index;
  for (const auto& t : e.terms) {
    if (e.swapped)
      out.add({t.target, target}, -t.coefficient.eval(ib, ia));
    else
      out.add({t.target, target}, t.coefficient.eval(ia, ib));
  }
  return out;
}

BracketRuleSet compile_spec(const AlgebraSpec& spec) {
  BracketRuleSet out;
  out.name_ = spec.name;
  try {
    out.families_ = FamilyTable(spec.families);
  } catch (const std::invalid_argument& e) {
    throw CompileError(e.what());
  }
  const std::size_t n = out.families_.size();
  out.table_.assign(n * n, {});
  auto id = [&](const std::string& name) {
    auto f = out.families_.find(name);
    if (!f) throw CompileError("undeclared family '" + name + "'");
    return *f;
  };
  for (const auto& rule : spec.rules) {
    const FamilyId a = id(rule.left_family);
    const FamilyId b = id(rule.right_family);
    std::vector<BracketRuleSet::CompiledTerm> terms;
    for (const auto& t : rule.terms) {
      const FamilyId target = id(t.target);
      const bool expected_half = out.families_[a].half_integer != out.families_[b].half_integer;
      if (out.families_[target].half_integer != expected_half)
        throw CompileError("target family '" + t.target + "' has the wrong degree shape");
      if (a == b && t.coefficient.swapped() != AffinePoly{-t.coefficient.constant,
                                                          -t.coefficient.left,
                                                          -t.coefficient.right})
        throw CompileError("rule [" + rule.left_family + ", " + rule.right_family +
                           "] is not antisymmetric under index swap");
      terms.push_back({t.coefficient, target});
    }
    auto& fwd = out.table_[a * n + b];
    auto& rev = out.table_[b * n + a];
    if (fwd.present || rev.present)
      throw CompileError("duplicate rule for [" + rule.left_family + ", " + rule.right_family + "]");
    fwd = {terms, false, true};
    if (a != b) rev = {std::move(terms), true, true};
  }
  return out;
}

JacobiReport validate_jacobi(const LieAlgebra& alg, int w) {
  JacobiReport rep;
  const auto basis = alg.basis_window(w);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        ++rep.triples_checked;
        AlgebraElement d = jacobi_defect(alg, a, b, c);
        if (!d.is_zero()) {
          rep.pass = false;
          rep.witness = std::array<BasisVector, 3>{a, b, c};
          rep.defect = std::move(d);
          return rep;
        }
      }
  return rep;
}

}  // namespace liebi
