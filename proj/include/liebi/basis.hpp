#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liebi/rational.hpp"

namespace liebi {

using FamilyId = std::uint8_t;

// Degree in ½Z, stored doubled.
struct HalfDegree {
  int twice = 0;

  Rational value() const { return Rational(twice, 2); }
  std::string str() const;
  friend auto operator<=>(const HalfDegree&, const HalfDegree&) = default;
  friend HalfDegree operator+(HalfDegree a, HalfDegree b) { return {a.twice + b.twice}; }
};

// One generator: family plus doubled index (L_n -> 2n, Y_p -> 2p).
struct BasisVector {
  FamilyId family = 0;
  int twice_index = 0;

  HalfDegree degree() const { return {twice_index}; }
  friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

struct FamilyInfo {
  std::string name;
  bool half_integer = false;  // indices in Z + 1/2 rather than Z

  friend bool operator==(const FamilyInfo&, const FamilyInfo&) = default;
};

// Declared families of an algebra, in canonical order.
class FamilyTable {
 public:
  FamilyTable() = default;
  explicit FamilyTable(std::vector<FamilyInfo> families);

  std::size_t size() const { return families_.size(); }
  const FamilyInfo& operator[](FamilyId id) const { return families_.at(id); }
  const std::vector<FamilyInfo>& all() const { return families_; }
  std::optional<FamilyId> find(std::string_view name) const;
  // Parity of the doubled index matches the family's index domain.
  bool valid(BasisVector b) const;
  std::string name(BasisVector b) const;  // e.g. "L_-2", "Y_1/2"

  friend bool operator==(const FamilyTable&, const FamilyTable&) = default;

 private:
  std::vector<FamilyInfo> families_;
};

// All basis vectors with |twice_index| <= w in canonical order.
std::vector<BasisVector> basis_window(const FamilyTable& families, int w);

using GeneratorSet = std::vector<BasisVector>;

namespace esv {

inline constexpr FamilyId kL = 0;
inline constexpr FamilyId kM = 1;
inline constexpr FamilyId kN = 2;
inline constexpr FamilyId kY = 3;

const FamilyTable& families();

constexpr BasisVector L(int n) { return {kL, 2 * n}; }
constexpr BasisVector M(int n) { return {kM, 2 * n}; }
constexpr BasisVector N(int n) { return {kN, 2 * n}; }
// Y_p addressed by 2p, so Y2(1) is Y_{1/2} and Y2(-3) is Y_{-3/2}.
constexpr BasisVector Y2(int twice_p) { return {kY, twice_p}; }

// {L_-2, L_-1, L_1, L_2, N_1, Y_1/2}, which generates the whole algebra.
GeneratorSet generators();

}  // namespace esv

}  // namespace liebi
