#include "liebi/bialgebra.hpp"

namespace liebi {

namespace {

void require_order2(const RMatrix& r) {
  if (r.order() != 2) throw PreconditionError("r-matrix must be an order-2 tensor");
}

void require_skew(const RMatrix& r) {
  require_order2(r);
  if (!is_skew(r)) throw PreconditionError("r-matrix is not in Im(Id - τ)");
}

}  // namespace

TensorElement delta_r(const LieAlgebra& alg, const RMatrix& r, const AlgebraElement& x) {
  require_order2(r);
  return diag_action(alg, x, r);
}

TensorElement cybe_c(const LieAlgebra& alg, const RMatrix& r) {
  require_order2(r);
  TensorElement out(3);
  for (const auto& [ti, ci] : r.terms()) {
    const BasisVector ai = ti[0], bi = ti[1];
    for (const auto& [tj, cj] : r.terms()) {
      const BasisVector aj = tj[0], bj = tj[1];
      const Rational c = ci * cj;
      const AlgebraElement first = alg.bracket(ai, aj);
      const AlgebraElement middle = alg.bracket(bi, aj);
      const AlgebraElement last = alg.bracket(bi, bj);
      for (const auto& [e, ce] : first.terms()) out.add({e, bi, bj}, c * ce);
      for (const auto& [e, ce] : middle.terms()) out.add({ai, e, bj}, c * ce);
      for (const auto& [e, ce] : last.terms()) out.add({ai, aj, e}, c * ce);
    }
  }
  return out;
}

bool mybe_check(const LieAlgebra& alg, const RMatrix& r, const GeneratorSet& gens) {
  require_skew(r);
  const TensorElement c = cybe_c(alg, r);
  if (c.is_zero()) return true;
  for (const auto& g : gens)
    if (!diag_action(alg, g, c).is_zero()) return false;
  return true;
}

std::optional<Rational> taft_ratio(const LieAlgebra& alg, const AlgebraElement& a,
                                   const AlgebraElement& b) {
  if (b.is_zero()) return std::nullopt;
  const AlgebraElement ab = bracket(alg, a, b);
  const auto& [key, coeff] = *b.terms().begin();
  const Rational k = ab.coefficient(key) / coeff;
  if (k.is_zero() || ab != k * b) return std::nullopt;
  return k;
}

RMatrix taft_r(const LieAlgebra& alg, const AlgebraElement& a, const AlgebraElement& b) {
  if (!taft_ratio(alg, a, b))
    throw PreconditionError("[a,b] is not a nonzero multiple of b");
  return tensor(a, b) - tensor(b, a);
}

TensorElement co_jacobi_defect(const LieAlgebra& alg, const RMatrix& r, const AlgebraElement& x) {
  const TensorElement dx = delta_r(alg, r, x);
  TensorElement t(3);
  for (const auto& [k, c] : dx.terms()) {
    const TensorElement dv = diag_action(alg, k[1], r);
    for (const auto& [kv, cv] : dv.terms()) t.add({k[0], kv[0], kv[1]}, c * cv);
  }
  const TensorElement t1 = cyclic(t);
  return t + t1 + cyclic(t1);
}

TensorElement taft_identity_defect(const LieAlgebra& alg, const RMatrix& r,
                                   const AlgebraElement& x) {
  require_skew(r);
  return co_jacobi_defect(alg, r, x) - diag_action(alg, x, cybe_c(alg, r));
}

TensorElement compat_defect(const LieAlgebra& alg, const RMatrix& r, const AlgebraElement& x,
                            const AlgebraElement& y) {
  TensorElement out = delta_r(alg, r, bracket(alg, x, y));
  out -= diag_action(alg, x, delta_r(alg, r, y));
  out += diag_action(alg, y, delta_r(alg, r, x));
  return out;
}

}  // namespace liebi
