#include "trisym/molecule.hpp"

#include <stdexcept>

namespace trisym {

void MoleculeSpec::validate() const {
  if (name.empty()) throw std::invalid_argument("name: must not be empty");
  if (!(B_cm1 > 0.0)) throw std::invalid_argument("B_cm1: must be positive");
  if (!(C_cm1 > 0.0)) throw std::invalid_argument("C_cm1: must be positive");
  if (point_group == PointGroup::C3v) {
    if (!inversion_splitting_cm1) {
      throw std::invalid_argument("inversion_splitting_cm1: required for C3v molecules");
    }
    if (!(*inversion_splitting_cm1 >= 0.0)) {
      throw std::invalid_argument("inversion_splitting_cm1: must be non-negative");
    }
  } else if (inversion_splitting_cm1) {
    throw std::invalid_argument("inversion_splitting_cm1: only allowed for C3v molecules");
  }
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const auto& b = bands[i];
    const std::string where = "bands[" + std::to_string(i) + "]";
    if (b.name.empty()) throw std::invalid_argument(where + ".name: must not be empty");
    if (!(b.origin_cm1 > 0.0)) throw std::invalid_argument(where + ".origin_cm1: must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (bands[j].name == b.name) throw std::invalid_argument(where + ".name: duplicate band " + b.name);
    }
  }
}

const Band& MoleculeSpec::band(const std::string& band_name) const {
  for (const auto& b : bands) {
    if (b.name == band_name) return b;
  }
  throw std::invalid_argument("band: unknown band '" + band_name + "' for molecule " + name);
}

std::string to_string(PointGroup g) { return g == PointGroup::D3h ? "D3h" : "C3v"; }

std::string to_string(NuclearSpin s) { return s == NuclearSpin::Zero ? "0" : "1/2"; }

std::string to_string(InversionSpecies s) {
  switch (s) {
    case InversionSpecies::None:
      return "none";
    case InversionSpecies::S:
      return "s";
    case InversionSpecies::A:
      return "a";
  }
  return "?";
}

std::string to_string(TotalSpin s) { return s == TotalSpin::Half ? "1/2" : "3/2"; }

std::string to_string(BandType t) { return t == BandType::Parallel ? "parallel" : "perpendicular"; }

PointGroup parse_point_group(const std::string& text) {
  if (text == "D3h") return PointGroup::D3h;
  if (text == "C3v") return PointGroup::C3v;
  throw std::invalid_argument("point group must be D3h or C3v, got '" + text + "'");
}

NuclearSpin parse_nuclear_spin(const std::string& text) {
  if (text == "0") return NuclearSpin::Zero;
  if (text == "1/2") return NuclearSpin::Half;
  throw std::invalid_argument("nuclear spin must be \"0\" or \"1/2\", got '" + text + "'");
}

InversionSpecies parse_species(const std::string& text) {
  if (text == "none") return InversionSpecies::None;
  if (text == "s") return InversionSpecies::S;
  if (text == "a") return InversionSpecies::A;
  throw std::invalid_argument("species must be s, a or none, got '" + text + "'");
}

TotalSpin parse_total_spin(const std::string& text) {
  if (text == "1/2") return TotalSpin::Half;
  if (text == "3/2") return TotalSpin::ThreeHalves;
  throw std::invalid_argument("I must be \"1/2\" or \"3/2\", got '" + text + "'");
}

BandType parse_band_type(const std::string& text) {
  if (text == "parallel") return BandType::Parallel;
  if (text == "perpendicular") return BandType::Perpendicular;
  throw std::invalid_argument("band type must be parallel or perpendicular, got '" + text + "'");
}

}  // namespace trisym
