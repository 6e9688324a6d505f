#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liebi/basis.hpp"
#include "liebi/combination.hpp"

namespace liebi {

using AlgebraElement = Combination<BasisVector>;

// A ½Z-graded Lie algebra presented by structure constants on a basis.
class LieAlgebra {
 public:
  virtual ~LieAlgebra() = default;

  virtual const FamilyTable& families() const = 0;
  virtual AlgebraElement bracket(BasisVector a, BasisVector b) const = 0;

  std::vector<BasisVector> basis_window(int w) const { return liebi::basis_window(families(), w); }
};

// The extended Schrödinger-Virasoro algebra with its hard-coded bracket table.
class EsvAlgebra final : public LieAlgebra {
 public:
  const FamilyTable& families() const override { return esv::families(); }
  AlgebraElement bracket(BasisVector a, BasisVector b) const override;
};

inline AlgebraElement element(BasisVector b, const Rational& c = Rational(1)) {
  AlgebraElement x;
  x.add(b, c);
  return x;
}

AlgebraElement bracket(const LieAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y);

// [[a,b],c] + [[b,c],a] + [[c,a],b]
AlgebraElement jacobi_defect(const LieAlgebra& alg, BasisVector a, BasisVector b, BasisVector c);

std::map<HalfDegree, AlgebraElement> degree_decompose(const AlgebraElement& x);

std::string to_string(const AlgebraElement& x, const FamilyTable& families);

}  // namespace liebi
