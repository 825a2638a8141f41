#include "trisym/group_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trisym {

namespace {

constexpr std::array<std::array<int, 3>, 6> kBasis{{
    {1, 2, 3},
    {1, 3, 2},
    {2, 1, 3},
    {2, 3, 1},
    {3, 1, 2},
    {3, 2, 1},
}};

RepMatrix outer(const SymVector& a, const SymVector& b) { return a * b.adjoint(); }

}  // namespace

Permutation Permutation::from_images(std::array<int, 3> images) {
  std::array<int, 3> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) {
    throw std::invalid_argument("permutation images must be a bijection on {1,2,3}");
  }
  return Permutation(images);
}

Permutation Permutation::transposition(int j, int k) {
  if (j == k || j < 1 || j > 3 || k < 1 || k > 3) {
    throw std::invalid_argument("transposition needs two distinct labels in 1..3");
  }
  std::array<int, 3> images{1, 2, 3};
  std::swap(images[j - 1], images[k - 1]);
  return Permutation(images);
}

int Permutation::sign() const {
  // parity of the number of inversions
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (images_[i] > images_[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int Permutation::cycle_count() const {
  std::array<bool, 3> seen{};
  int cycles = 0;
  for (int start = 1; start <= 3; ++start) {
    if (seen[start - 1]) continue;
    ++cycles;
    for (int x = start; !seen[x - 1]; x = image(x)) seen[x - 1] = true;
  }
  return cycles;
}

std::string Permutation::name() const {
  switch (class_of(*this)) {
    case ClassLabel::Identity:
      return "I";
    case ClassLabel::Transposition: {
      std::string out = "(";
      bool first = true;
      for (int i = 1; i <= 3; ++i) {
        if (image(i) == i) continue;
        out += first ? "" : ",";
        out += std::to_string(i);
        first = false;
      }
      return out + ")";
    }
    case ClassLabel::ThreeCycle:
      return image(1) == 2 ? "(1,2,3)" : "(3,2,1)";
  }
  return "?";
}

const std::array<Permutation, 6>& all_permutations() {
  static const std::array<Permutation, 6> elements{
      Permutation::identity(),        Permutation::transposition(2, 3),
      Permutation::transposition(1, 3), Permutation::transposition(1, 2),
      Permutation::cycle123(),        Permutation::cycle321(),
  };
  return elements;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  // (P_p P_q |x>)_i = x_{q(p(i))}
  std::array<int, 3> images{};
  for (int i = 1; i <= 3; ++i) images[i - 1] = q.image(p.image(i));
  return Permutation::from_images(images);
}

Permutation inverse(const Permutation& p) {
  std::array<int, 3> images{};
  for (int i = 1; i <= 3; ++i) images[p.image(i) - 1] = i;
  return Permutation::from_images(images);
}

ClassLabel class_of(const Permutation& p) {
  switch (p.cycle_count()) {
    case 3:
      return ClassLabel::Identity;
    case 2:
      return ClassLabel::Transposition;
    default:
      return ClassLabel::ThreeCycle;
  }
}

int class_size(ClassLabel c) {
  switch (c) {
    case ClassLabel::Identity:
      return 1;
    case ClassLabel::Transposition:
      return 3;
    case ClassLabel::ThreeCycle:
      return 2;
  }
  return 0;
}

std::string to_string(ClassLabel c) {
  switch (c) {
    case ClassLabel::Identity:
      return "identity";
    case ClassLabel::Transposition:
      return "transposition";
    case ClassLabel::ThreeCycle:
      return "three-cycle";
  }
  return "?";
}

int basis_index(const std::array<int, 3>& labels) {
  auto it = std::find(kBasis.begin(), kBasis.end(), labels);
  if (it == kBasis.end()) throw std::invalid_argument("not an ordering of (1,2,3)");
  return static_cast<int>(it - kBasis.begin()) + 1;
}

std::array<int, 3> basis_labels(int index) {
  if (index < 1 || index > 6) throw std::out_of_range("ket index must be in 1..6");
  return kBasis[index - 1];
}

RepMatrix regular_rep(const Permutation& p) {
  RepMatrix m = RepMatrix::Zero();
  for (int col = 1; col <= 6; ++col) {
    const auto x = basis_labels(col);
    std::array<int, 3> y{};
    for (int i = 1; i <= 3; ++i) y[i - 1] = x[p.image(i) - 1];
    m(basis_index(y) - 1, col - 1) = 1.0;
  }
  return m;
}

RepMatrix symmetrizer() {
  RepMatrix s = RepMatrix::Zero();
  for (const auto& g : all_permutations()) s += regular_rep(g);
  return s / 6.0;
}

RepMatrix antisymmetrizer() {
  RepMatrix a = RepMatrix::Zero();
  for (const auto& g : all_permutations()) a += static_cast<double>(g.sign()) * regular_rep(g);
  return a / 6.0;
}

Complex lambda_plus() { return {-0.5, std::sqrt(3.0) / 2.0}; }
Complex lambda_minus() { return {-0.5, -std::sqrt(3.0) / 2.0}; }

SymVector basis_ket(int index) {
  if (index < 1 || index > 6) throw std::out_of_range("ket index must be in 1..6");
  SymVector v = SymVector::Zero();
  v(index - 1) = 1.0;
  return v;
}

SymVector sym_state() { return SymVector::Constant(1.0 / std::sqrt(6.0)); }

SymVector antisym_state() {
  SymVector v;
  v << -1.0, 1.0, 1.0, -1.0, -1.0, 1.0;
  return v / std::sqrt(6.0);
}

SymVector v1() {
  SymVector v = SymVector::Zero();
  v(1) = lambda_minus();
  v(2) = lambda_plus();
  v(5) = 1.0;
  return v;
}

SymVector v2() {
  SymVector v = SymVector::Zero();
  v(0) = lambda_plus();
  v(3) = lambda_minus();
  v(4) = 1.0;
  return v;
}

SymVector v3() {
  SymVector v = SymVector::Zero();
  v(1) = lambda_plus();
  v(2) = lambda_minus();
  v(5) = 1.0;
  return v;
}

SymVector v4() {
  SymVector v = SymVector::Zero();
  v(0) = lambda_minus();
  v(3) = lambda_plus();
  v(4) = 1.0;
  return v;
}

SymVector normalized(const SymVector& v) {
  const double n = v.norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalise the zero vector");
  return v / n;
}

std::vector<Eigenpair> cycle_eigenbasis() {
  return {
      {"s", sym_state(), 1.0},           {"a", antisym_state(), 1.0},
      {"v1", v1(), lambda_minus()},      {"v2", v2(), lambda_minus()},
      {"v3", v3(), lambda_plus()},       {"v4", v4(), lambda_plus()},
  };
}

InvariantProjectors invariant_projectors() {
  // v1 and v4 (v2 and v3) have disjoint supports, hence are orthogonal.
  return {
      (outer(v1(), v1()) + outer(v4(), v4())) / 3.0,
      (outer(v2(), v2()) + outer(v3(), v3())) / 3.0,
  };
}

SymVector apply_perm(const Permutation& p, const SymVector& v) { return regular_rep(p) * v; }

std::string to_string(Subspace s) {
  switch (s) {
    case Subspace::Hplus:
      return "Hplus";
    case Subspace::Hminus:
      return "Hminus";
    case Subspace::Hprime1:
      return "Hprime1";
    case Subspace::Hprime2:
      return "Hprime2";
    case Subspace::Hprime:
      return "Hprime";
  }
  return "?";
}

std::map<Subspace, SymVector> decompose(const SymVector& v) {
  static const RepMatrix s = symmetrizer();
  static const RepMatrix a = antisymmetrizer();
  static const InvariantProjectors primes = invariant_projectors();
  return {
      {Subspace::Hplus, s * v},
      {Subspace::Hminus, a * v},
      {Subspace::Hprime1, primes.prime1 * v},
      {Subspace::Hprime2, primes.prime2 * v},
  };
}

std::string to_string(Irrep r) {
  switch (r) {
    case Irrep::A1:
      return "A1";
    case Irrep::A2:
      return "A2";
    case Irrep::E:
      return "E";
  }
  return "?";
}

const CharacterTable& character_table() {
  static const CharacterTable table{{
      {1, 1, 1},
      {1, -1, 1},
      {2, 0, -1},
  }};
  return table;
}

int character(Irrep r, ClassLabel c) {
  return character_table()[static_cast<int>(r)][static_cast<int>(c)];
}

}  // namespace trisym
