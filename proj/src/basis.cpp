#include "liebi/basis.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace liebi {

std::string HalfDegree::str() const { return value().str(); }

FamilyTable::FamilyTable(std::vector<FamilyInfo> families) : families_(std::move(families)) {
  if (families_.size() > 255) throw std::invalid_argument("too many families");
  std::set<std::string> seen;
  for (const auto& f : families_)
    if (!seen.insert(f.name).second) throw std::invalid_argument("duplicate family " + f.name);
}

std::optional<FamilyId> FamilyTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < families_.size(); ++i)
    if (families_[i].name == name) return static_cast<FamilyId>(i);
  return std::nullopt;
}

bool FamilyTable::valid(BasisVector b) const {
  if (b.family >= families_.size()) return false;
  const bool odd = std::abs(b.twice_index) % 2 == 1;
  return odd == families_[b.family].half_integer;
}

std::string FamilyTable::name(BasisVector b) const {
  const std::string fam = b.family < families_.size() ? families_[b.family].name : "?";
  return fam + "_" + Rational(b.twice_index, 2).str();
}

std::vector<BasisVector> basis_window(const FamilyTable& families, int w) {
  std::vector<BasisVector> out;
  for (std::size_t f = 0; f < families.size(); ++f) {
    const bool half = families[static_cast<FamilyId>(f)].half_integer;
    for (int t = -w; t <= w; ++t)
      if ((std::abs(t) % 2 == 1) == half) out.push_back({static_cast<FamilyId>(f), t});
  }
  return out;
}

namespace esv {

const FamilyTable& families() {
  static const FamilyTable table({{"L", false}, {"M", false}, {"N", false}, {"Y", true}});
  return table;
}

GeneratorSet generators() { return {L(-2), L(-1), L(1), L(2), N(1), Y2(1)}; }

}  // namespace esv

}  // namespace liebi
