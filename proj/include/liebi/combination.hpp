#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "liebi/rational.hpp"

namespace liebi {

// Finite linear combination over an ordered key set. Canonical: keys sorted,
// no zero coefficients, so equality is structural.
template <class Key>
class Combination {
 public:
  using Terms = std::map<Key, Rational>;

  Combination() = default;
  Combination(std::initializer_list<std::pair<Key, Rational>> terms) {
    for (const auto& [k, c] : terms) add(k, c);
  }

  void add(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const Combination& o, const Rational& scale = Rational(1)) {
    if (scale.is_zero()) return;
    for (const auto& [k, c] : o.terms_) add(k, c * scale);
  }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Combination& operator+=(const Combination& o) {
    add(o);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    add(o, Rational(-1));
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator-(Combination a) { return a *= Rational(-1); }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Terms terms_;
};

}  // namespace liebi
