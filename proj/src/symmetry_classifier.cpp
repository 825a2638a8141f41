#include "trisym/symmetry_classifier.hpp"

#include <cstdlib>
#include <stdexcept>

namespace trisym {

namespace {

void check_quantum_numbers(int J, int K) {
  if (J < 0) throw std::invalid_argument("J: must be non-negative, got " + std::to_string(J));
  if (std::abs(K) > J) {
    throw std::invalid_argument("K: |K| must not exceed J (J=" + std::to_string(J) +
                                ", K=" + std::to_string(K) + ")");
  }
}

bool is_even(int n) { return n % 2 == 0; }

Subspace coarse(Subspace s) {
  return (s == Subspace::Hprime1 || s == Subspace::Hprime2) ? Subspace::Hprime : s;
}

SymmetryAssignment make(SubspaceSet s, ForbiddenBy f) { return {s, f, {}}; }

const SubspaceSet kPlus{Subspace::Hplus};
const SubspaceSet kMinus{Subspace::Hminus};
const SubspaceSet kPrime{Subspace::Hprime};
const SubspaceSet kPlusMinus{Subspace::Hplus, Subspace::Hminus};
const SubspaceSet kAll{Subspace::Hplus, Subspace::Hminus, Subspace::Hprime};

// K = 0 rows of the spin-1/2 table; `symmetric_type` is true where the
// rotational state is symmetric under the exchange-equivalent operation.
SymmetryAssignment spin_half_k0_row(bool symmetric_type, TotalSpin I) {
  if (I == TotalSpin::Half) return make(kPrime, ForbiddenBy::SP);
  return symmetric_type ? make(kPlus, ForbiddenBy::SS) : make(kMinus, ForbiddenBy::None);
}

ForbiddenBy merge_forbidden(ForbiddenBy a, ForbiddenBy b) {
  if (a == ForbiddenBy::None || b == ForbiddenBy::None) return ForbiddenBy::None;
  const bool sp = a == ForbiddenBy::SP || a == ForbiddenBy::SPandSS || b == ForbiddenBy::SP ||
                  b == ForbiddenBy::SPandSS;
  const bool ss = a == ForbiddenBy::SS || a == ForbiddenBy::SPandSS || b == ForbiddenBy::SS ||
                  b == ForbiddenBy::SPandSS;
  if (sp && ss) return ForbiddenBy::SPandSS;
  return sp ? ForbiddenBy::SP : ForbiddenBy::SS;
}

template <typename Row>
SymmetryAssignment aggregate_over_spin(Row row) {
  SymmetryAssignment out;
  bool first = true;
  for (TotalSpin I : {TotalSpin::Half, TotalSpin::ThreeHalves}) {
    const SymmetryAssignment part = row(I);
    out.subspaces = out.subspaces | part.subspaces;
    out.forbidden_by = first ? part.forbidden_by : merge_forbidden(out.forbidden_by, part.forbidden_by);
    out.per_spin.push_back({I, part.subspaces, part.forbidden_by});
    first = false;
  }
  return out;
}

}  // namespace

std::size_t SubspaceSet::size() const {
  std::size_t n = 0;
  for (unsigned b = bits_; b != 0; b >>= 1) n += b & 1u;
  return n;
}

std::vector<Subspace> SubspaceSet::labels() const {
  std::vector<Subspace> out;
  for (auto s : {Subspace::Hplus, Subspace::Hminus, Subspace::Hprime1, Subspace::Hprime2, Subspace::Hprime}) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

std::string to_string(SubspaceSet s) {
  std::string out;
  for (auto label : s.labels()) {
    if (!out.empty()) out += ", ";
    out += to_string(label);
  }
  return out;
}

std::string to_string(ForbiddenBy f) {
  switch (f) {
    case ForbiddenBy::None:
      return "none";
    case ForbiddenBy::SP:
      return "SP";
    case ForbiddenBy::SS:
      return "SS";
    case ForbiddenBy::SPandSS:
      return "SP, SS";
  }
  return "?";
}

PhaseFactor rotation_phase_inplane(int K, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  switch (((epsilon * K) % 3 + 3) % 3) {
    case 0:
      return {1.0};
    case 1:
      return {lambda_plus()};
    default:
      return {lambda_minus()};
  }
}

PhaseFactor rotation_phase_axis(int J, int epsilon, InversionSpecies species) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  // exp(i eps pi J) = (-1)^J for either sign of eps
  double phase = is_even(J) ? 1.0 : -1.0;
  if (species == InversionSpecies::A) phase = -phase;
  return {phase};
}

SymmetryAssignment classify_spin0_planar(int J, int K) {
  check_quantum_numbers(J, K);
  if (K % 3 != 0) return make(kPrime, ForbiddenBy::SP);
  if (K != 0) return make(kPlusMinus, ForbiddenBy::None);
  return is_even(J) ? make(kPlus, ForbiddenBy::None) : make(kMinus, ForbiddenBy::SS);
}

SymmetryAssignment classify_spin_half_planar(int J, int K, std::optional<TotalSpin> I) {
  check_quantum_numbers(J, K);
  auto row = [J, K](TotalSpin spin) {
    const bool quartet = spin == TotalSpin::ThreeHalves;
    if (K % 3 != 0) return quartet ? make(kPrime, ForbiddenBy::SP) : make(kAll, ForbiddenBy::None);
    if (K != 0) return quartet ? make(kPlusMinus, ForbiddenBy::None) : make(kPrime, ForbiddenBy::SP);
    return spin_half_k0_row(is_even(J), spin);
  };
  if (I) return row(*I);
  return aggregate_over_spin(row);
}

SymmetryAssignment classify_c3v_k0(int J, InversionSpecies species, NuclearSpin spin,
                                   std::optional<TotalSpin> I) {
  check_quantum_numbers(J, 0);
  if (species == InversionSpecies::None) {
    throw std::invalid_argument("species: C3v states need an inversion species (s or a)");
  }
  // rotation + inversion phase +1 <=> symmetric under the exchanges
  const bool symmetric_type = rotation_phase_axis(J, 1, species).value.real() > 0.0;
  if (spin == NuclearSpin::Zero) {
    if (I) throw std::invalid_argument("I: total nuclear spin is only defined for spin-1/2 nuclei");
    return symmetric_type ? make(kPlus, ForbiddenBy::None) : make(kMinus, ForbiddenBy::SS);
  }
  auto row = [symmetric_type](TotalSpin s) { return spin_half_k0_row(symmetric_type, s); };
  if (I) return row(*I);
  return aggregate_over_spin(row);
}

void validate_state(const MoleculeSpec& molecule, const RotationalState& state) {
  check_quantum_numbers(state.J, state.K);
  if (molecule.point_group == PointGroup::D3h && state.species != InversionSpecies::None) {
    throw std::invalid_argument("species: planar (D3h) molecules have no inversion species");
  }
  if (molecule.point_group == PointGroup::C3v && state.species == InversionSpecies::None) {
    throw std::invalid_argument("species: C3v states need an inversion species (s or a)");
  }
  if (state.I && molecule.nuclear_spin != NuclearSpin::Half) {
    throw std::invalid_argument("I: total nuclear spin is only defined for spin-1/2 nuclei");
  }
}

SymmetryAssignment classify(const MoleculeSpec& molecule, const RotationalState& state) {
  validate_state(molecule, state);
  if (molecule.point_group == PointGroup::C3v && state.K == 0) {
    return classify_c3v_k0(state.J, state.species, molecule.nuclear_spin, state.I);
  }
  if (molecule.nuclear_spin == NuclearSpin::Zero) return classify_spin0_planar(state.J, state.K);
  return classify_spin_half_planar(state.J, state.K, state.I);
}

std::map<Subspace, std::vector<SpinMultiplet>> spin_space_decomposition() {
  return {
      {Subspace::Hplus, {{TotalSpin::ThreeHalves, 4}}},
      {Subspace::Hminus, {}},
      {Subspace::Hprime, {{TotalSpin::Half, 2}, {TotalSpin::Half, 2}}},
  };
}

SubspaceSet product_decompose(Subspace a, Subspace b) {
  a = coarse(a);
  b = coarse(b);
  if (a == Subspace::Hplus) return {b};
  if (b == Subspace::Hplus) return {a};
  if (a == Subspace::Hminus && b == Subspace::Hminus) return kPlus;
  if (a == Subspace::Hprime && b == Subspace::Hprime) return kAll;
  return kPrime;
}

SubspaceSet product_decompose(SubspaceSet a, SubspaceSet b) {
  SubspaceSet out;
  for (auto x : a.labels()) {
    for (auto y : b.labels()) out = out | product_decompose(x, y);
  }
  return out;
}

Subspace statistics_target(NuclearSpin spin) {
  return spin == NuclearSpin::Zero ? Subspace::Hplus : Subspace::Hminus;
}

ForbiddenBy verdict_for(SubspaceSet s, NuclearSpin spin) {
  const Subspace target = statistics_target(spin);
  const Subspace wrong = target == Subspace::Hplus ? Subspace::Hminus : Subspace::Hplus;
  if (s.contains(target)) return ForbiddenBy::None;
  const bool unsymmetrical =
      s.contains(Subspace::Hprime) || s.contains(Subspace::Hprime1) || s.contains(Subspace::Hprime2);
  const bool wrong_statistics = s.contains(wrong);
  if (unsymmetrical && wrong_statistics) return ForbiddenBy::SPandSS;
  if (unsymmetrical) return ForbiddenBy::SP;
  if (wrong_statistics) return ForbiddenBy::SS;
  throw std::invalid_argument("verdict_for: empty subspace set");
}

IrrepContent reduce(const ClassCharacters& chi) {
  std::array<int, 3> m{};
  for (auto r : kIrreps) {
    int sum = 0;
    for (auto c : kClasses) sum += class_size(c) * character(r, c) * chi[static_cast<int>(c)];
    if (sum % 6 != 0 || sum < 0) throw std::logic_error("reduce: not the character of a representation");
    m[static_cast<int>(r)] = sum / 6;
  }
  return {m[0], m[1], m[2]};
}

ClassCharacters rotational_characters(const MoleculeSpec& molecule, const RotationalState& state) {
  validate_state(molecule, state);
  if (state.K != 0) {
    // The +-K pair: transpositions swap the two signs, the cycles multiply
    // them by conjugate phases exp(+-i 2 pi K / 3).
    const int cycle_trace = state.K % 3 == 0 ? 2 : -1;
    return {2, 0, cycle_trace};
  }
  const int exchange = static_cast<int>(rotation_phase_axis(state.J, 1, state.species).value.real());
  return {1, exchange, 1};
}

ClassCharacters spin_characters(NuclearSpin spin, std::optional<TotalSpin> I) {
  if (spin == NuclearSpin::Zero) {
    if (I) throw std::invalid_argument("I: total nuclear spin is only defined for spin-1/2 nuclei");
    return {1, 1, 1};
  }
  if (!I) return {8, 4, 2};
  // quartet: 4 x A1; doublets: 2 x E
  return *I == TotalSpin::ThreeHalves ? ClassCharacters{4, 4, 4} : ClassCharacters{4, 0, -2};
}

IrrepContent sector_content(const MoleculeSpec& molecule, const RotationalState& state) {
  const auto rot = rotational_characters(molecule, state);
  const auto spin = spin_characters(molecule.nuclear_spin, state.I);
  ClassCharacters product{};
  for (int c = 0; c < 3; ++c) product[c] = rot[c] * spin[c];
  return reduce(product);
}

int spin_statistical_weight(const MoleculeSpec& molecule, const RotationalState& state) {
  const IrrepContent content = sector_content(molecule, state);
  return molecule.nuclear_spin == NuclearSpin::Zero ? content.a1 : content.a2;
}

}  // namespace trisym
