#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liebi/tensor.hpp"

using namespace liebi;
using namespace liebi::esv;

namespace {

const EsvAlgebra alg;

TensorElement t2(BasisVector a, BasisVector b, Rational c = Rational(1)) { return pure({a, b}, c); }

}  // namespace

TEST_CASE("diagonal action examples") {
  CHECK(diag_action(alg, L(1), t2(N(2), N(-2))) ==
        t2(N(3), N(-2), Rational(2)) - t2(N(2), N(-1), Rational(2)));
  CHECK(diag_action(alg, M(0), t2(L(1), L(-1))).is_zero());
  CHECK(diag_action(alg, N(0), t2(M(1), Y2(1))) == t2(M(1), Y2(1), Rational(3)));
  CHECK(diag_action(alg, AlgebraElement{}, t2(L(1), L(2))).is_zero());
}

TEST_CASE("twist") {
  CHECK(twist(t2(L(1), M(2))) == t2(M(2), L(1)));
  const TensorElement sym = t2(L(1), M(2)) + t2(M(2), L(1)) + t2(N(0), N(0));
  CHECK(twist(sym) == sym);
  const TensorElement t = t2(L(1), M(2), Rational(3)) - t2(Y2(1), N(0));
  CHECK(twist(twist(t)) == t);
  CHECK_THROWS_AS(twist(pure({L(0), L(1), L(2)})), std::invalid_argument);
}

TEST_CASE("cyclic map") {
  CHECK(cyclic(pure({L(0), M(1), N(2)})) == pure({M(1), N(2), L(0)}));
  const TensorElement t = pure({L(0), M(1), N(2)}) - pure({Y2(1), L(3), L(3)}, Rational(2));
  CHECK(cyclic(cyclic(cyclic(t))) == t);
  CHECK(cyclic(pure({M(4), M(4), M(4)})) == pure({M(4), M(4), M(4)}));
  CHECK_THROWS_AS(cyclic(t2(L(0), L(1))), std::invalid_argument);
}

TEST_CASE("skew test") {
  CHECK(is_skew(t2(L(1), M(2)) - t2(M(2), L(1))));
  CHECK_FALSE(is_skew(t2(L(0), L(0))));
  CHECK(is_skew(TensorElement(2)));
  CHECK_THROWS_AS(is_skew(pure({L(0)})), std::invalid_argument);
}

TEST_CASE("tensor degree decomposition") {
  const auto parts = tensor_degree_decompose(t2(L(1), L(-1)) + t2(M(2), M(0)));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(HalfDegree{0}) == t2(L(1), L(-1)));
  CHECK(parts.at(HalfDegree{4}) == t2(M(2), M(0)));
  const auto y = tensor_degree_decompose(t2(Y2(1), Y2(-1)));
  REQUIRE(y.size() == 1);
  CHECK(y.at(HalfDegree{0}) == t2(Y2(1), Y2(-1)));
  CHECK(tensor_degree_decompose(TensorElement(2)).empty());
}

TEST_CASE("tensor basis windows") {
  CHECK(tensor_basis_window(families(), 2, 0, {0}).size() == 9);
  CHECK(tensor_basis_window(families(), 2, 1, {0}).size() == 11);
  CHECK(tensor_basis_window(families(), 1, 2, {1}) == std::vector<PureTensor>{{Y2(1)}});
  for (const auto& k : tensor_basis_window(families(), 3, 4, {2})) {
    CHECK(total_degree(k) == HalfDegree{2});
    for (const auto& b : k) CHECK(std::abs(b.twice_index) <= 4);
  }
}

TEST_CASE("order is enforced") {
  CHECK_THROWS_AS(TensorElement(0), std::invalid_argument);
  TensorElement t(2);
  CHECK_THROWS_AS(t.add(PureTensor{L(0)}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(t += pure({L(0), L(0), L(0)}), std::invalid_argument);
}

TEST_CASE("tensor of elements") {
  const AlgebraElement x = element(L(1)) + element(M(0), Rational(2));
  const AlgebraElement y = element(N(1));
  CHECK(tensor(x, y) == t2(L(1), N(1)) + t2(M(0), N(1), Rational(2)));
  CHECK(tensor(t2(L(1), L(2)), y) == pure({L(1), L(2), N(1)}));
  CHECK(to_string(t2(L(1), M(2)) - t2(M(2), L(1), Rational(1, 2)), families()) ==
        "L_1⊗M_2 - 1/2*M_2⊗L_1");
}

TEST_CASE("module action law on window pure tensors") {
  const auto basis = alg.basis_window(4);
  std::vector<PureTensor> keys;
  for (const auto& k : tensor_basis_window(families(), 2, 2, {0})) keys.push_back(k);
  for (const auto& k : tensor_basis_window(families(), 3, 2, {1})) keys.push_back(k);
  for (const auto& x : basis)
    for (const auto& y : basis) {
      const AlgebraElement xy = alg.bracket(x, y);
      for (const auto& k : keys) {
        const TensorElement t = pure(k);
        const TensorElement lhs = diag_action(alg, xy, t);
        const TensorElement rhs =
            diag_action(alg, x, diag_action(alg, y, t)) - diag_action(alg, y, diag_action(alg, x, t));
        REQUIRE(lhs == rhs);
      }
    }
}

TEST_CASE("action is graded and commutes with twist and cyclic") {
  const auto basis = alg.basis_window(4);
  for (const auto& x : basis)
    for (const auto& k : tensor_basis_window(families(), 2, 3, {1})) {
      const TensorElement t = pure(k);
      const TensorElement xt = diag_action(alg, x, t);
      for (const auto& [key, c] : xt.terms()) CHECK(total_degree(key) == x.degree() + HalfDegree{1});
      CHECK(twist(xt) == diag_action(alg, x, twist(t)));
    }
  for (const auto& x : basis)
    for (const auto& k : tensor_basis_window(families(), 3, 2, {0})) {
      const TensorElement s = pure(k);
      CHECK(cyclic(diag_action(alg, x, s)) == diag_action(alg, x, cyclic(s)));
    }
}

TEST_CASE("skew tensors are u - τ(u) with u = t/2") {
  const TensorElement t = t2(L(1), M(2), Rational(3)) - t2(M(2), L(1), Rational(3)) +
                          t2(Y2(1), Y2(-1)) - t2(Y2(-1), Y2(1));
  REQUIRE(is_skew(t));
  const TensorElement u = Rational(1, 2) * t;
  CHECK(u - twist(u) == t);
}
