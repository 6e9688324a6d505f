#include "liebi/tensor.hpp"

#include <cstdlib>
#include <stdexcept>

namespace liebi {

HalfDegree total_degree(const PureTensor& t) {
  HalfDegree d;
  for (const auto& b : t) d = d + b.degree();
  return d;
}

TensorElement::TensorElement(std::size_t order) : order_(order) {
  if (order == 0) throw std::invalid_argument("tensor order must be at least 1");
}

void TensorElement::add(const PureTensor& t, const Rational& c) {
  if (t.size() != order_) throw std::invalid_argument("pure tensor has wrong order");
  terms_.add(t, c);
}

void TensorElement::add(const TensorElement& o, const Rational& scale) {
  if (o.order_ != order_) throw std::invalid_argument("tensor order mismatch");
  terms_.add(o.terms_, scale);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  add(o);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  add(o, Rational(-1));
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& s) {
  terms_ *= s;
  return *this;
}

TensorElement pure(const PureTensor& t, const Rational& c) {
  TensorElement out(t.size());
  out.add(t, c);
  return out;
}

TensorElement tensor(const AlgebraElement& x, const AlgebraElement& y) {
  TensorElement out(2);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add({a, b}, ca * cb);
  return out;
}

TensorElement tensor(const TensorElement& t, const AlgebraElement& x) {
  TensorElement out(t.order() + 1);
  for (const auto& [key, c] : t.terms()) {
    PureTensor k = key;
    k.push_back({});
    for (const auto& [b, cb] : x.terms()) {
      k.back() = b;
      out.add(k, c * cb);
    }
  }
  return out;
}

TensorElement diag_action(const LieAlgebra& alg, BasisVector x, const TensorElement& t) {
  TensorElement out(t.order());
  for (const auto& [key, c] : t.terms()) {
    PureTensor k = key;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const BasisVector orig = key[i];
      const AlgebraElement image = alg.bracket(x, orig);
      for (const auto& [b, cb] : image.terms()) {
        k[i] = b;
        out.add(k, c * cb);
      }
      k[i] = orig;
    }
  }
  return out;
}

TensorElement diag_action(const LieAlgebra& alg, const AlgebraElement& x, const TensorElement& t) {
  TensorElement out(t.order());
  for (const auto& [b, c] : x.terms()) out.add(diag_action(alg, b, t), c);
  return out;
}

TensorElement twist(const TensorElement& t) {
  if (t.order() != 2) throw std::invalid_argument("twist requires an order-2 tensor");
  TensorElement out(2);
  for (const auto& [k, c] : t.terms()) out.add({k[1], k[0]}, c);
  return out;
}

TensorElement cyclic(const TensorElement& t) {
  if (t.order() != 3) throw std::invalid_argument("cyclic map requires an order-3 tensor");
  TensorElement out(3);
  for (const auto& [k, c] : t.terms()) out.add({k[1], k[2], k[0]}, c);
  return out;
}

bool is_skew(const TensorElement& t) { return (t + twist(t)).is_zero(); }

std::map<HalfDegree, TensorElement> tensor_degree_decompose(const TensorElement& t) {
  std::map<HalfDegree, TensorElement> out;
  for (const auto& [k, c] : t.terms())
    out.try_emplace(total_degree(k), t.order()).first->second.add(k, c);
  return out;
}

namespace {

void enumerate(const std::vector<BasisVector>& window, std::size_t order, int w, int remaining,
               PureTensor& prefix, std::vector<PureTensor>& out) {
  const std::size_t left = order - prefix.size();
  if (left == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  // Remaining factors can contribute at most w each in absolute value.
  if (std::abs(remaining) > static_cast<int>(left) * w) return;
  for (const auto& b : window) {
    if (left == 1 && b.twice_index != remaining) continue;
    prefix.push_back(b);
    enumerate(window, order, w, remaining - b.twice_index, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PureTensor> tensor_basis_window(const FamilyTable& families, std::size_t order, int w,
                                            HalfDegree total) {
  std::vector<PureTensor> out;
  if (order == 0 || w < 0) return out;
  const auto window = basis_window(families, w);
  PureTensor prefix;
  enumerate(window, order, w, total.twice, prefix, out);
  return out;
}

std::string to_string(const TensorElement& t, const FamilyTable& families) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (mag != Rational(1)) out += mag.str() + "*";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) out += "⊗";
      out += families.name(k[i]);
    }
  }
  return out;
}

}  // namespace liebi
