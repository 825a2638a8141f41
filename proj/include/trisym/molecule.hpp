#pragma once

#include <optional>
#include <string>
#include <vector>

namespace trisym {

enum class PointGroup { D3h, C3v };

/// Spin of each of the three identical nuclei.
enum class NuclearSpin { Zero, Half };

/// Inversion-doublet component. `None` for planar (D3h) molecules.
enum class InversionSpecies { None, S, A };

/// Total nuclear spin I of three spin-1/2 nuclei.
enum class TotalSpin { Half, ThreeHalves };

enum class BandType { Parallel, Perpendicular };

struct RotationalState {
  int J = 0;
  int K = 0;  // signed projection on the threefold axis
  InversionSpecies species = InversionSpecies::None;
  std::optional<TotalSpin> I;

  friend bool operator==(const RotationalState&, const RotationalState&) = default;
};

struct Band {
  std::string name;
  double origin_cm1 = 0.0;
  BandType type = BandType::Parallel;

  friend bool operator==(const Band&, const Band&) = default;
};

struct MoleculeSpec {
  std::string name;
  PointGroup point_group = PointGroup::D3h;
  NuclearSpin nuclear_spin = NuclearSpin::Zero;
  double B_cm1 = 1.0;
  double C_cm1 = 0.5;
  std::optional<double> inversion_splitting_cm1;  // C3v only
  std::vector<Band> bands;

  /// Throws std::invalid_argument naming the first inconsistent field.
  void validate() const;
  const Band& band(const std::string& band_name) const;

  friend bool operator==(const MoleculeSpec&, const MoleculeSpec&) = default;
};

std::string to_string(PointGroup g);
std::string to_string(NuclearSpin s);
std::string to_string(InversionSpecies s);
std::string to_string(TotalSpin s);
std::string to_string(BandType t);

// Exact parsers for the textual forms above; throw std::invalid_argument.
PointGroup parse_point_group(const std::string& text);
NuclearSpin parse_nuclear_spin(const std::string& text);
InversionSpecies parse_species(const std::string& text);
TotalSpin parse_total_spin(const std::string& text);
BandType parse_band_type(const std::string& text);

}  // namespace trisym
