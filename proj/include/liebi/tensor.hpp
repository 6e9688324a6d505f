#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "liebi/algebra.hpp"

namespace liebi {

// Ordered tuple of factors; L_1⊗M_2 and M_2⊗L_1 are distinct keys.
using PureTensor = std::vector<BasisVector>;

HalfDegree total_degree(const PureTensor& t);

// Linear combination of pure tensors of one fixed order.
class TensorElement {
 public:
  explicit TensorElement(std::size_t order);

  std::size_t order() const { return order_; }
  // Throws std::invalid_argument if the tuple length is not order().
  void add(const PureTensor& t, const Rational& c);
  void add(const TensorElement& o, const Rational& scale = Rational(1));
  Rational coefficient(const PureTensor& t) const { return terms_.coefficient(t); }
  const auto& terms() const& { return terms_.terms(); }
  auto terms() && { return std::move(terms_).terms(); }
  bool is_zero() const { return terms_.is_zero(); }
  std::size_t size() const { return terms_.size(); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& s);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator-(TensorElement a) { return a *= Rational(-1); }
  friend TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::size_t order_;
  Combination<PureTensor> terms_;
};

TensorElement pure(const PureTensor& t, const Rational& c = Rational(1));
// x ⊗ y
TensorElement tensor(const AlgebraElement& x, const AlgebraElement& y);
// t ⊗ x, raising the order by one.
TensorElement tensor(const TensorElement& t, const AlgebraElement& x);

// x · (a_1⊗...⊗a_n) = Σ_k a_1⊗...⊗[x,a_k]⊗...⊗a_n
TensorElement diag_action(const LieAlgebra& alg, BasisVector x, const TensorElement& t);
TensorElement diag_action(const LieAlgebra& alg, const AlgebraElement& x, const TensorElement& t);

// Order-2 swap x⊗y -> y⊗x. Throws std::invalid_argument for other orders.
TensorElement twist(const TensorElement& t);
// Order-3 rotation x1⊗x2⊗x3 -> x2⊗x3⊗x1. Throws std::invalid_argument for other orders.
TensorElement cyclic(const TensorElement& t);

// Membership in Im(Id - τ), tested as (Id + τ)t = 0. Order 2 only.
bool is_skew(const TensorElement& t);

std::map<HalfDegree, TensorElement> tensor_degree_decompose(const TensorElement& t);

// Pure tensors of the given order whose factors all have |twice_index| <= w
// and whose degrees sum to `total`, in lexicographic order.
std::vector<PureTensor> tensor_basis_window(const FamilyTable& families, std::size_t order, int w,
                                            HalfDegree total);

std::string to_string(const TensorElement& t, const FamilyTable& families);

}  // namespace liebi
