#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liebi/algebra.hpp"

using namespace liebi;
using namespace liebi::esv;

namespace {

const EsvAlgebra alg;

AlgebraElement e(BasisVector b, Rational c = Rational(1)) { return element(b, c); }

}  // namespace

TEST_CASE("basis brackets") {
  CHECK(alg.bracket(L(1), L(2)) == e(L(3)));
  CHECK(alg.bracket(N(0), M(3)) == e(M(3), Rational(2)));
  CHECK(alg.bracket(L(2), Y2(1)) == e(Y2(5), Rational(-1, 2)));
  CHECK(alg.bracket(Y2(1), Y2(1)).is_zero());
  CHECK(alg.bracket(M(0), M(5)).is_zero());
  CHECK(alg.bracket(Y2(1), Y2(-3)) == e(M(-1), Rational(-2)));
  CHECK(alg.bracket(M(2), Y2(1)).is_zero());
  CHECK(alg.bracket(N(1), Y2(1)) == e(Y2(3)));
  CHECK(alg.bracket(M(1), N(0)) == e(M(1), Rational(-2)));
}

TEST_CASE("bilinear bracket") {
  CHECK(bracket(alg, e(L(1), Rational(1, 2)), e(L(2))) == e(L(3), Rational(1, 2)));
  CHECK(bracket(alg, e(L(1)) + e(N(0)), e(M(1))) == e(M(2)) + e(M(1), Rational(2)));
  const AlgebraElement x = e(L(1)) + e(Y2(-1), Rational(3)) - e(N(2));
  CHECK(bracket(alg, x, x).is_zero());
}

TEST_CASE("jacobi examples") {
  CHECK(jacobi_defect(alg, L(1), L(2), L(3)).is_zero());
  CHECK(jacobi_defect(alg, Y2(1), Y2(1), L(2)).is_zero());
  CHECK(jacobi_defect(alg, N(0), M(1), Y2(1)).is_zero());
}

TEST_CASE("degree decomposition") {
  auto parts = degree_decompose(e(L(1)) + e(M(1)));
  REQUIRE(parts.size() == 1);
  CHECK(parts.at(HalfDegree{2}) == e(L(1)) + e(M(1)));

  parts = degree_decompose(e(L(0)) + e(Y2(1)));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(HalfDegree{0}) == e(L(0)));
  CHECK(parts.at(HalfDegree{1}) == e(Y2(1)));

  CHECK(degree_decompose(AlgebraElement{}).empty());
}

TEST_CASE("basis windows") {
  CHECK(alg.basis_window(2).size() == 11);
  CHECK(alg.basis_window(0) == std::vector<BasisVector>{L(0), M(0), N(0)});
  CHECK(alg.basis_window(1) == std::vector<BasisVector>{L(0), M(0), N(0), Y2(-1), Y2(1)});
  CHECK(alg.basis_window(6).size() == 27);
  CHECK(alg.basis_window(8).size() == 35);
}

TEST_CASE("family table and names") {
  const auto& f = families();
  CHECK(f.name(L(-2)) == "L_-2");
  CHECK(f.name(Y2(1)) == "Y_1/2");
  CHECK(f.name(Y2(-3)) == "Y_-3/2");
  CHECK(f.valid(Y2(3)));
  CHECK_FALSE(f.valid(BasisVector{kY, 2}));
  CHECK_FALSE(f.valid(BasisVector{kL, 1}));
  CHECK(*f.find("N") == kN);
  CHECK_FALSE(f.find("Q").has_value());
  CHECK_THROWS_AS(FamilyTable({{"A", false}, {"A", true}}), std::invalid_argument);
  CHECK(to_string(e(L(1)) - e(Y2(1), Rational(1, 2)), f) == "L_1 - 1/2*Y_1/2");
  CHECK(to_string(AlgebraElement{}, f) == "0");
}

TEST_CASE("canonical form drops cancelled terms") {
  AlgebraElement x = e(L(1)) + e(M(2));
  x -= e(L(1));
  CHECK(x == e(M(2)));
  CHECK(x.size() == 1);
  CHECK(x.coefficient(L(1)).is_zero());
  AlgebraElement y = x;
  y += AlgebraElement{};
  CHECK(y == x);
}

TEST_CASE("window invariants: antisymmetry, grading, jacobi") {
  const auto basis = alg.basis_window(6);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const AlgebraElement ab = alg.bracket(a, b);
      CHECK((ab + alg.bracket(b, a)).is_zero());
      for (const auto& [c, k] : ab.terms()) {
        CHECK(c.degree() == a.degree() + b.degree());
        CHECK(families().valid(c));
        CHECK_FALSE(k.is_zero());
      }
    }
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) REQUIRE(jacobi_defect(alg, a, b, c).is_zero());
}
