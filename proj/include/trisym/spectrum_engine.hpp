#pragma once

#include <string>
#include <vector>

#include "trisym/molecule.hpp"
#include "trisym/symmetry_classifier.hpp"

/// Rigid symmetric-top energies, thermal populations with nuclear-spin
/// statistical weights, and vibrational-band line lists in which states
/// forbidden by permutation symmetry carry a population fraction beta.
namespace trisym {

/// hc/k in cm K.
inline constexpr double kSecondRadiationConstant = 1.438776877;

struct ViolationModel {
  double beta = 0.0;  // fraction in [0, 1]

  void validate() const;
};

struct ThermalEnsemble {
  double temperature_K = 296.0;
  int jmax = 30;

  void validate() const;
};

struct SpectralLine {
  RotationalState lower;
  RotationalState upper;
  std::string band;
  double frequency_cm1 = 0.0;
  double intensity = 0.0;
  bool sp_forbidden = false;
  bool ss_forbidden = false;

  friend bool operator==(const SpectralLine&, const SpectralLine&) = default;
};

enum class Branch { P, Q, R };

std::string to_string(Branch b);

/// B J(J+1) - (B - C) K^2. Throws std::invalid_argument for |K| > J.
double rot_energy(const MoleculeSpec& molecule, int J, int K);

/// rot_energy plus the inversion offset: s components sit at -splitting/2,
/// a components at +splitting/2.
double level_energy(const MoleculeSpec& molecule, const RotationalState& state);

/// Every level with J <= jmax, one entry per (J, |K|) (and per inversion
/// species for C3v), ordered by J, then K, then species.
std::vector<RotationalState> rotational_levels(const MoleculeSpec& molecule, int jmax);

/// Statistical weight of `state` when it is populated in the sector that
/// `verdict` describes: the allowed weight for ForbiddenBy::None, otherwise
/// beta times the hypothetical weight of the violating sector (number of
/// 2-dimensional unsymmetrical components for SP, wrong-statistics
/// multiplicity for SS). Includes the +-K degeneracy.
double sector_weight(const MoleculeSpec& molecule, const RotationalState& state, ForbiddenBy verdict,
                     const ViolationModel& violation);

/// sector_weight for the state's own classification.
double level_weight(const MoleculeSpec& molecule, const RotationalState& state,
                    const ViolationModel& violation);

/// Sum of weight (2J+1) exp(-E/kT) over rotational_levels(molecule, jmax).
double partition_function(const MoleculeSpec& molecule, const ThermalEnsemble& ensemble,
                          const ViolationModel& violation);

/// Fractional population of the level `state` (whole +-K pair). Throws
/// std::invalid_argument for a non-positive temperature and
/// std::domain_error if the partition function vanishes.
double state_population(const MoleculeSpec& molecule, const RotationalState& state,
                        const ThermalEnsemble& ensemble, const ViolationModel& violation);

/// Line-strength factor of one signed-K component, normalised so that the
/// factors out of a given (J, K) sum to one over all branches (and over
/// delta_k = +-1 for perpendicular bands). `delta_k` is ignored for parallel
/// bands. J = 0 admits only the R branch.
double honl_london(int J, int K, Branch branch, BandType type, int delta_k = +1);

/// Permutation symmetry carried by the vibrational upper state of a band:
/// A2 for a parallel band of a planar molecule, A1 for a parallel band of a
/// pyramidal one, E for perpendicular bands.
SubspaceSet transition_moment_symmetry(PointGroup group, BandType type);

/// Lines of `band_name` from every level with J <= ensemble.jmax.
///
/// Selection rules: dJ = 0, +-1 (no 0 <-> 0), dK = 0 (parallel) or +-1
/// (perpendicular), s <-> a for C3v. A line is kept only if the symmetry
/// types of the lower state and of (upper state x transition symmetry)
/// overlap; its forbidden flags describe that overlap. Intensity is the
/// lower-level population in the overlapping sector times the Honl-London
/// factor, scaled so the strongest allowed line is 1. Lines of zero
/// intensity are dropped. Sorted by frequency, lower J, lower K.
std::vector<SpectralLine> line_list(const MoleculeSpec& molecule, const std::string& band_name,
                                    const ThermalEnsemble& ensemble, const ViolationModel& violation);

struct LineListSummary {
  std::size_t allowed_lines = 0;
  std::size_t sp_forbidden_lines = 0;
  std::size_t ss_forbidden_lines = 0;
  double allowed_intensity = 0.0;
  double sp_forbidden_intensity = 0.0;  // lines flagged SP (including SP+SS)
  double ss_forbidden_intensity = 0.0;  // lines flagged SS only
};

LineListSummary summarize(const std::vector<SpectralLine>& lines);

}  // namespace trisym
