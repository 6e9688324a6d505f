#include "liebi/algebra.hpp"

namespace liebi {

namespace {

using namespace esv;

// Table entries exactly as the defining relations list them, in doubled
// indices: a = (family, 2m), b = (family, 2n). nullopt for an ordered pair
// the table does not list; the reverse order then comes from antisymmetry.
std::optional<AlgebraElement> esv_table(BasisVector a, BasisVector b) {
  const int m = a.twice_index;
  const int n = b.twice_index;
  const int sum = m + n;
  switch (a.family) {
    case kL:
      switch (b.family) {
        case kL: return element({kL, sum}, Rational(n - m, 2));                // (n-m) L_{m+n}
        case kN: return element({kN, sum}, Rational(n, 2));                    // n N_{m+n}
        case kM: return element({kM, sum}, Rational(n, 2));                    // n M_{m+n}
        case kY: return element({kY, sum}, Rational(2 * n - m, 4));            // (p - n/2) Y_{p+n}
      }
      break;
    case kN:
      switch (b.family) {
        case kY: return element({kY, sum});                                    // Y_{m+p}
        case kM: return element({kM, sum}, Rational(2));                       // 2 M_{m+n}
        case kN: return AlgebraElement{};
      }
      break;
    case kM:
      switch (b.family) {
        case kY: return AlgebraElement{};
        case kM: return AlgebraElement{};
      }
      break;
    case kY:
      if (b.family == kY) return element({kM, sum}, Rational(n - m, 2));      // (q-p) M_{p+q}
      break;
  }
  return std::nullopt;
}

}  // namespace

AlgebraElement EsvAlgebra::bracket(BasisVector a, BasisVector b) const {
  if (auto direct = esv_table(a, b)) return *direct;
  if (auto reverse = esv_table(b, a)) return -*reverse;
  return {};
}

AlgebraElement bracket(const LieAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add(alg.bracket(a, b), ca * cb);
  return out;
}

AlgebraElement jacobi_defect(const LieAlgebra& alg, BasisVector a, BasisVector b, BasisVector c) {
  const AlgebraElement ea = element(a), eb = element(b), ec = element(c);
  AlgebraElement out = bracket(alg, alg.bracket(a, b), ec);
  out += bracket(alg, alg.bracket(b, c), ea);
  out += bracket(alg, alg.bracket(c, a), eb);
  return out;
}

std::map<HalfDegree, AlgebraElement> degree_decompose(const AlgebraElement& x) {
  std::map<HalfDegree, AlgebraElement> out;
  for (const auto& [b, c] : x.terms()) out[b.degree()].add(b, c);
  return out;
}

std::string to_string(const AlgebraElement& x, const FamilyTable& families) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : x.terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (mag != Rational(1)) out += mag.str() + "*";
    out += families.name(b);
  }
  return out;
}

}  // namespace liebi
