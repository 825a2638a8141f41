#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trisym/group_algebra.hpp"
#include "trisym/molecule.hpp"

/// Assignment of rotational / nuclear-spin / inversion states of molecules
/// with three identical nuclei to permutation-invariant subspaces, and the
/// rule (symmetrization postulate, spin-statistics) that forbids them.
namespace trisym {

/// A set of Subspace labels, iterated in enum order.
class SubspaceSet {
 public:
  constexpr SubspaceSet() = default;
  SubspaceSet(std::initializer_list<Subspace> labels) {
    for (auto s : labels) insert(s);
  }

  void insert(Subspace s) { bits_ |= bit(s); }
  bool contains(Subspace s) const { return (bits_ & bit(s)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::vector<Subspace> labels() const;

  SubspaceSet operator|(SubspaceSet o) const { return SubspaceSet(bits_ | o.bits_); }
  SubspaceSet operator&(SubspaceSet o) const { return SubspaceSet(bits_ & o.bits_); }
  bool is_subset_of(SubspaceSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend bool operator==(SubspaceSet, SubspaceSet) = default;

 private:
  constexpr explicit SubspaceSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Subspace s) { return std::uint8_t(1u << static_cast<unsigned>(s)); }

  std::uint8_t bits_ = 0;
};

/// "Hplus, Hminus, Hprime"
std::string to_string(SubspaceSet s);

enum class ForbiddenBy { None, SP, SS, SPandSS };

/// "none", "SP", "SS", "SP, SS"
std::string to_string(ForbiddenBy f);

struct SpinAnnotation {
  TotalSpin I;
  SubspaceSet subspaces;
  ForbiddenBy forbidden_by;

  friend bool operator==(const SpinAnnotation&, const SpinAnnotation&) = default;
};

struct SymmetryAssignment {
  SubspaceSet subspaces;
  ForbiddenBy forbidden_by = ForbiddenBy::None;
  /// Filled when a spin-1/2 state is classified without a definite I: one
  /// entry per total nuclear spin, the top-level fields being their union.
  std::vector<SpinAnnotation> per_spin;

  friend bool operator==(const SymmetryAssignment&, const SymmetryAssignment&) = default;
};

/// A unit-modulus phase.
struct PhaseFactor {
  Complex value;
};

/// exp(i eps 2 pi K / 3), phase picked up under an in-plane rotation by
/// eps 2 pi / 3. Exact for every K. `epsilon` must be +1 or -1.
PhaseFactor rotation_phase_inplane(int K, int epsilon);

/// Phase of a K = 0 state under a rotation by eps pi about an in-plane
/// twofold axis: exp(i eps pi J), with an extra minus sign for the
/// a-species of a pyramidal molecule (the rotation then being combined with
/// inversion).
PhaseFactor rotation_phase_axis(int J, int epsilon, InversionSpecies species);

// Direct transcriptions of the classification tables. All reject |K| > J
// and J < 0 with std::invalid_argument.
SymmetryAssignment classify_spin0_planar(int J, int K);
/// Without I, returns the union over I = 1/2 and 3/2 with per-I annotations.
SymmetryAssignment classify_spin_half_planar(int J, int K, std::optional<TotalSpin> I = std::nullopt);
/// K = 0 states of a pyramidal molecule; `species` must be S or A.
SymmetryAssignment classify_c3v_k0(int J, InversionSpecies species, NuclearSpin spin,
                                   std::optional<TotalSpin> I = std::nullopt);

/// Dispatches on point group and nuclear spin. K != 0 states of C3v
/// molecules follow the planar rules for each inversion component.
SymmetryAssignment classify(const MoleculeSpec& molecule, const RotationalState& state);

/// Checks `state` against `molecule` (|K| <= J, species present iff C3v,
/// I only for spin-1/2 nuclei). Throws std::invalid_argument.
void validate_state(const MoleculeSpec& molecule, const RotationalState& state);

struct SpinMultiplet {
  TotalSpin I;
  int dimension;
};

/// Symmetry content of the 8 spin states of three spin-1/2 nuclei: the
/// quartet spans Hplus, the two doublets span Hprime, Hminus is empty.
std::map<Subspace, std::vector<SpinMultiplet>> spin_space_decomposition();

/// Symmetry types carried by a direct product of states of types a and b.
/// Labels are Hplus, Hminus or Hprime.
SubspaceSet product_decompose(Subspace a, Subspace b);
SubspaceSet product_decompose(SubspaceSet a, SubspaceSet b);

/// Hplus for spin-0 (bosonic) nuclei, Hminus for spin-1/2 (fermionic).
Subspace statistics_target(NuclearSpin spin);

/// What forbids a state whose admissible subspaces are `s`.
ForbiddenBy verdict_for(SubspaceSet s, NuclearSpin spin);

/// Multiplicities of the irreducible representations in a reducible one.
struct IrrepContent {
  int a1 = 0;
  int a2 = 0;
  int e = 0;

  int operator[](Irrep r) const { return r == Irrep::A1 ? a1 : r == Irrep::A2 ? a2 : e; }
  friend bool operator==(const IrrepContent&, const IrrepContent&) = default;
};

/// Characters indexed by ClassLabel (identity, transposition, three-cycle).
using ClassCharacters = std::array<int, 3>;

/// Reduces a character by orthogonality; throws std::logic_error if the
/// character is not that of a true representation.
IrrepContent reduce(const ClassCharacters& chi);

/// Character of the rotational level (J, |K|): the +-K pair for K != 0, the
/// single state for K = 0 (sign set by J parity and inversion species).
ClassCharacters rotational_characters(const MoleculeSpec& molecule, const RotationalState& state);

/// Character of the nuclear-spin space, optionally restricted to total spin I.
/// chi(g) = 2^(number of cycles of g) for three spin-1/2 nuclei.
ClassCharacters spin_characters(NuclearSpin spin, std::optional<TotalSpin> I = std::nullopt);

/// Irreducible content of (rotational level) x (nuclear spin) for `state`.
IrrepContent sector_content(const MoleculeSpec& molecule, const RotationalState& state);

/// Number of independent rotational x spin states of the level carrying the
/// symmetry the statistics demand. The +-K degeneracy is included: the count
/// refers to the whole level (J, |K|). Zero means the level is missing.
int spin_statistical_weight(const MoleculeSpec& molecule, const RotationalState& state);

}  // namespace trisym
