#include "trisym/spectrum_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace trisym {

namespace {

InversionSpecies flipped(InversionSpecies s) {
  switch (s) {
    case InversionSpecies::S:
      return InversionSpecies::A;
    case InversionSpecies::A:
      return InversionSpecies::S;
    default:
      return InversionSpecies::None;
  }
}

double boltzmann(double energy_cm1, double temperature_K) {
  return std::exp(-kSecondRadiationConstant * energy_cm1 / temperature_K);
}

double unnormalised_population(const MoleculeSpec& molecule, const RotationalState& state,
                               ForbiddenBy verdict, double temperature_K, const ViolationModel& violation) {
  const double w = sector_weight(molecule, state, verdict, violation);
  if (w == 0.0) return 0.0;
  return w * (2 * state.J + 1) * boltzmann(level_energy(molecule, state), temperature_K);
}

struct Transition {
  RotationalState upper;
  Branch branch;
  double strength;
};

// Upper states reachable from `lower`, with the Honl-London factor summed
// over the signed-K components that land on the same (J', |K'|) level.
std::vector<Transition> transitions_from(const RotationalState& lower, BandType type) {
  std::vector<Transition> out;
  const InversionSpecies upper_species = flipped(lower.species);
  for (Branch branch : {Branch::P, Branch::Q, Branch::R}) {
    if (lower.J == 0 && branch != Branch::R) continue;
    const int j_up = lower.J + (branch == Branch::P ? -1 : branch == Branch::Q ? 0 : 1);
    if (type == BandType::Parallel) {
      const double s = honl_london(lower.J, lower.K, branch, type);
      if (s > 0.0) out.push_back({{j_up, lower.K, upper_species, {}}, branch, s});
      continue;
    }
    const double up = honl_london(lower.J, lower.K, branch, type, +1);
    if (lower.K == 0) {
      // K = 0 -> |K'| = 1 collects both dK = +1 and dK = -1.
      const double s = up + honl_london(lower.J, 0, branch, type, -1);
      if (s > 0.0) out.push_back({{j_up, 1, upper_species, {}}, branch, s});
      continue;
    }
    if (up > 0.0) out.push_back({{j_up, lower.K + 1, upper_species, {}}, branch, up});
    const double down = honl_london(lower.J, lower.K, branch, type, -1);
    if (down > 0.0) out.push_back({{j_up, lower.K - 1, upper_species, {}}, branch, down});
  }
  return out;
}

}  // namespace

void ViolationModel::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta: must lie in [0, 1]");
}

void ThermalEnsemble::validate() const {
  if (!(temperature_K > 0.0)) throw std::invalid_argument("temperature: must be positive");
  if (jmax < 0) throw std::invalid_argument("jmax: must be non-negative");
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::P:
      return "P";
    case Branch::Q:
      return "Q";
    case Branch::R:
      return "R";
  }
  return "?";
}

double rot_energy(const MoleculeSpec& molecule, int J, int K) {
  if (J < 0 || std::abs(K) > J) {
    throw std::invalid_argument("K: |K| must not exceed J (J=" + std::to_string(J) + ", K=" + std::to_string(K) +
                                ")");
  }
  const double j = J;
  const double k = K;
  return molecule.B_cm1 * j * (j + 1.0) - (molecule.B_cm1 - molecule.C_cm1) * k * k;
}

double level_energy(const MoleculeSpec& molecule, const RotationalState& state) {
  const double e = rot_energy(molecule, state.J, state.K);
  if (molecule.point_group != PointGroup::C3v) return e;
  const double half = molecule.inversion_splitting_cm1.value_or(0.0) / 2.0;
  return state.species == InversionSpecies::A ? e + half : e - half;
}

std::vector<RotationalState> rotational_levels(const MoleculeSpec& molecule, int jmax) {
  std::vector<RotationalState> levels;
  for (int J = 0; J <= jmax; ++J) {
    for (int K = 0; K <= J; ++K) {
      if (molecule.point_group == PointGroup::C3v) {
        levels.push_back({J, K, InversionSpecies::S, {}});
        levels.push_back({J, K, InversionSpecies::A, {}});
      } else {
        levels.push_back({J, K, InversionSpecies::None, {}});
      }
    }
  }
  return levels;
}

double sector_weight(const MoleculeSpec& molecule, const RotationalState& state, ForbiddenBy verdict,
                     const ViolationModel& violation) {
  const IrrepContent content = sector_content(molecule, state);
  const bool bosons = molecule.nuclear_spin == NuclearSpin::Zero;
  switch (verdict) {
    case ForbiddenBy::None:
      return bosons ? content.a1 : content.a2;
    case ForbiddenBy::SS:
      return violation.beta * (bosons ? content.a2 : content.a1);
    case ForbiddenBy::SP:
    case ForbiddenBy::SPandSS:
      return violation.beta * content.e;
  }
  return 0.0;
}

double level_weight(const MoleculeSpec& molecule, const RotationalState& state,
                    const ViolationModel& violation) {
  return sector_weight(molecule, state, classify(molecule, state).forbidden_by, violation);
}

double partition_function(const MoleculeSpec& molecule, const ThermalEnsemble& ensemble,
                          const ViolationModel& violation) {
  ensemble.validate();
  double z = 0.0;
  for (const auto& level : rotational_levels(molecule, ensemble.jmax)) {
    z += unnormalised_population(molecule, level, classify(molecule, level).forbidden_by, ensemble.temperature_K,
                                 violation);
  }
  return z;
}

double state_population(const MoleculeSpec& molecule, const RotationalState& state,
                        const ThermalEnsemble& ensemble, const ViolationModel& violation) {
  ensemble.validate();
  violation.validate();
  const double z = partition_function(molecule, ensemble, violation);
  if (!(z > 0.0)) throw std::domain_error("partition function vanishes: no populated level below jmax");
  const ForbiddenBy verdict = classify(molecule, state).forbidden_by;
  return unnormalised_population(molecule, state, verdict, ensemble.temperature_K, violation) / z;
}

double honl_london(int J, int K, Branch branch, BandType type, int delta_k) {
  if (J < 0 || std::abs(K) > J) throw std::invalid_argument("honl_london: |K| must not exceed J");
  if (J == 0 && branch != Branch::R) throw std::invalid_argument("honl_london: J = 0 admits only the R branch");
  const double j = J;
  const double k = K;
  if (type == BandType::Parallel) {
    switch (branch) {
      case Branch::R:
        return ((j + 1) * (j + 1) - k * k) / ((j + 1) * (2 * j + 1));
      case Branch::Q:
        return k * k / (j * (j + 1));
      case Branch::P:
        return (j * j - k * k) / (j * (2 * j + 1));
    }
  }
  if (delta_k != 1 && delta_k != -1) throw std::invalid_argument("honl_london: delta_k must be +1 or -1");
  const double s = delta_k;  // upper K = K + s
  switch (branch) {
    case Branch::R:
      return (j + 2 + s * k) * (j + 1 + s * k) / (4 * (j + 1) * (2 * j + 1));
    case Branch::Q:
      return (j + 1 + s * k) * (j - s * k) / (4 * j * (j + 1));
    case Branch::P:
      return (j - 1 - s * k) * (j - s * k) / (4 * j * (2 * j + 1));
  }
  return 0.0;
}

SubspaceSet transition_moment_symmetry(PointGroup group, BandType type) {
  if (type == BandType::Perpendicular) return {Subspace::Hprime};
  return group == PointGroup::D3h ? SubspaceSet{Subspace::Hminus} : SubspaceSet{Subspace::Hplus};
}

std::vector<SpectralLine> line_list(const MoleculeSpec& molecule, const std::string& band_name,
                                    const ThermalEnsemble& ensemble, const ViolationModel& violation) {
  molecule.validate();
  ensemble.validate();
  violation.validate();
  const Band& band = molecule.band(band_name);
  const SubspaceSet moment = transition_moment_symmetry(molecule.point_group, band.type);
  const double z = partition_function(molecule, ensemble, violation);

  std::vector<SpectralLine> lines;
  if (!(z > 0.0)) return lines;
  for (const auto& lower : rotational_levels(molecule, ensemble.jmax)) {
    const SubspaceSet lower_types = classify(molecule, lower).subspaces;
    const double boltz = boltzmann(level_energy(molecule, lower), ensemble.temperature_K);
    for (const auto& t : transitions_from(lower, band.type)) {
      const SubspaceSet upper_types = product_decompose(classify(molecule, t.upper).subspaces, moment);
      const SubspaceSet shared = lower_types & upper_types;
      if (shared.empty()) continue;  // superselection
      const ForbiddenBy verdict = verdict_for(shared, molecule.nuclear_spin);
      const double w = sector_weight(molecule, lower, verdict, violation);
      const double freq = band.origin_cm1 + level_energy(molecule, t.upper) - level_energy(molecule, lower);
      if (w == 0.0 || !(freq > 0.0)) continue;
      SpectralLine line;
      line.lower = lower;
      line.upper = t.upper;
      line.band = band.name;
      line.frequency_cm1 = freq;
      line.intensity = w * (2 * lower.J + 1) * boltz / z * t.strength;
      line.sp_forbidden = verdict == ForbiddenBy::SP || verdict == ForbiddenBy::SPandSS;
      line.ss_forbidden = verdict == ForbiddenBy::SS || verdict == ForbiddenBy::SPandSS;
      lines.push_back(std::move(line));
    }
  }

  double strongest = 0.0;
  for (const auto& l : lines) {
    if (!l.sp_forbidden && !l.ss_forbidden) strongest = std::max(strongest, l.intensity);
  }
  if (strongest > 0.0) {
    for (auto& l : lines) l.intensity /= strongest;
  }

  auto key = [](const SpectralLine& l) {
    return std::make_tuple(l.frequency_cm1, l.lower.J, l.lower.K, static_cast<int>(l.lower.species), l.upper.J,
                           l.upper.K, static_cast<int>(l.upper.species));
  };
  std::sort(lines.begin(), lines.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return lines;
}

LineListSummary summarize(const std::vector<SpectralLine>& lines) {
  LineListSummary s;
  for (const auto& l : lines) {
    if (l.sp_forbidden) {
      ++s.sp_forbidden_lines;
      s.sp_forbidden_intensity += l.intensity;
    } else if (l.ss_forbidden) {
      ++s.ss_forbidden_lines;
      s.ss_forbidden_intensity += l.intensity;
    } else {
      ++s.allowed_lines;
      s.allowed_intensity += l.intensity;
    }
  }
  return s;
}

}  // namespace trisym
