#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "liebi/tensor.hpp"

namespace liebi {

// r = Σ a_i ⊗ b_i ∈ L⊗L. Operations below reject tensors of any other order.
using RMatrix = TensorElement;

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coboundary cobracket Δ_r(x) = x·r.
TensorElement delta_r(const LieAlgebra& alg, const RMatrix& r, const AlgebraElement& x);

// c(r) = Σ [a_i,a_j]⊗b_i⊗b_j + Σ a_i⊗[b_i,a_j]⊗b_j + Σ a_i⊗a_j⊗[b_i,b_j],
// i.e. [r12,r13] + [r12,r23] + [r13,r23] expanded inside L⊗L⊗L.
TensorElement cybe_c(const LieAlgebra& alg, const RMatrix& r);

// x·c(r) = 0 for every generator. Since the annihilator of c(r) is a
// subalgebra, this is the modified Yang-Baxter equation on the subalgebra the
// generators span. Throws PreconditionError unless r is skew.
bool mybe_check(const LieAlgebra& alg, const RMatrix& r, const GeneratorSet& gens);

// k with [a,b] = k b, if it exists and is nonzero.
std::optional<Rational> taft_ratio(const LieAlgebra& alg, const AlgebraElement& a,
                                   const AlgebraElement& b);

// a⊗b - b⊗a for [a,b] = k b, k != 0. Throws PreconditionError otherwise.
RMatrix taft_r(const LieAlgebra& alg, const AlgebraElement& a, const AlgebraElement& b);

// (Id + ξ + ξ²)(Id⊗Δ_r)Δ_r(x); zero exactly when co-Jacobi holds at x.
TensorElement co_jacobi_defect(const LieAlgebra& alg, const RMatrix& r, const AlgebraElement& x);

// co_jacobi_defect(r, x) - x·c(r). Throws PreconditionError unless r is skew.
TensorElement taft_identity_defect(const LieAlgebra& alg, const RMatrix& r,
                                   const AlgebraElement& x);

// Δ_r([x,y]) - x·Δ_r(y) + y·Δ_r(x)
TensorElement compat_defect(const LieAlgebra& alg, const RMatrix& r, const AlgebraElement& x,
                            const AlgebraElement& y);

}  // namespace liebi
