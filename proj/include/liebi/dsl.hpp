#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liebi/algebra.hpp"

namespace liebi {

// constant + left * i + right * j, where i and j are the indices bound on the
// left and right side of a bracket rule.
struct AffinePoly {
  Rational constant;
  Rational left;
  Rational right;

  bool is_zero() const { return constant.is_zero() && left.is_zero() && right.is_zero(); }
  bool is_constant() const { return left.is_zero() && right.is_zero(); }
  Rational eval(const Rational& i, const Rational& j) const { return constant + left * i + right * j; }
  AffinePoly swapped() const { return {constant, right, left}; }
  friend bool operator==(const AffinePoly&, const AffinePoly&) = default;
};

struct RuleTerm {
  AffinePoly coefficient;
  std::string target;  // family name; target index is always i + j

  friend bool operator==(const RuleTerm&, const RuleTerm&) = default;
};

// [F(i), G(j)] = Σ coefficient(i, j) * H(i+j)
struct BracketRule {
  std::string left_family;
  std::string left_symbol;
  std::string right_family;
  std::string right_symbol;
  std::vector<RuleTerm> terms;  // empty: the bracket vanishes

  friend bool operator==(const BracketRule&, const BracketRule&) = default;
};

struct AlgebraSpec {
  std::string name;
  std::vector<FamilyInfo> families;
  std::vector<BracketRule> rules;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class CompileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses the .lialg format:
//   algebra <name>
//   family <F> degree <n | n+1/2>
//   bracket [F(i), G(j)] = <poly> * H(i+j) [+ <poly> * K(i+j) ...]   (or "= 0")
// Blank lines and '#' comments are ignored.
AlgebraSpec parse_spec(std::string_view text);
AlgebraSpec parse_spec_file(const std::string& path);

// Canonical text form; parse_spec(print_spec(s)) == s.
std::string print_spec(const AlgebraSpec& spec);

std::string_view builtin_esv_text();
AlgebraSpec builtin_esv();

// Evaluable rule table. Pairs with no rule bracket to zero; the reverse of a
// listed pair is derived by antisymmetry.
class BracketRuleSet final : public LieAlgebra {
 public:
  const FamilyTable& families() const override { return families_; }
  AlgebraElement bracket(BasisVector a, BasisVector b) const override;
  const std::string& name() const { return name_; }

 private:
  friend BracketRuleSet compile_spec(const AlgebraSpec& spec);

  struct CompiledTerm {
    AffinePoly coefficient;
    FamilyId target;
  };
  struct Entry {
    std::vector<CompiledTerm> terms;
    bool swapped = false;  // stored for (b, a); negate and swap indices
    bool present = false;
  };

  std::string name_;
  FamilyTable families_;
  std::vector<Entry> table_;  // families x families, row major
};

// Throws CompileError for a same-family rule that is not antisymmetric under
// index swap, duplicate pairs, or an undeclared family.
BracketRuleSet compile_spec(const AlgebraSpec& spec);

struct JacobiReport {
  bool pass = true;
  std::size_t triples_checked = 0;
  std::optional<std::array<BasisVector, 3>> witness;
  AlgebraElement defect;  // at the witness
};

// Exhaustive check over all ordered basis triples with |twice_index| <= w.
JacobiReport validate_jacobi(const LieAlgebra& alg, int w);

}  // namespace liebi
