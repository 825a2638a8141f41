#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

/// Exact machinery for the permutation group S3 acting on three labelled
/// particles: group elements, the 6-dimensional regular representation on
/// the kets |1,2,3>, |1,3,2>, |2,1,3>, |2,3,1>, |3,1,2>, |3,2,1> (in that
/// order, numbered 1..6), its projectors and its invariant subspaces.
namespace trisym {

using Complex = std::complex<double>;
using RepMatrix = Eigen::Matrix<Complex, 6, 6>;
using SymVector = Eigen::Matrix<Complex, 6, 1>;

/// An element of S3. `image(i)` is the label that i is sent to.
///
/// A permutation acts on a three-slot ket by reading slot i from slot
/// sigma(i): P|x1,x2,x3> = |x_sigma(1), x_sigma(2), x_sigma(3)>. The
/// three-cycle (1 2 3) therefore maps |1,2,3> to |2,3,1>.
class Permutation {
 public:
  constexpr Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection on {1,2,3}.
  static Permutation from_images(std::array<int, 3> images);

  static constexpr Permutation identity() { return {}; }
  /// Exchange of labels j and k (j != k, both in 1..3).
  static Permutation transposition(int j, int k);
  /// The cycle 1 -> 2 -> 3 -> 1.
  static constexpr Permutation cycle123() { return Permutation({2, 3, 1}); }
  /// The cycle 3 -> 2 -> 1 -> 3.
  static constexpr Permutation cycle321() { return Permutation({3, 1, 2}); }

  int image(int label) const { return images_.at(label - 1); }
  const std::array<int, 3>& images() const { return images_; }

  /// +1 for even, -1 for odd permutations.
  int sign() const;
  /// Number of disjoint cycles, fixed points included (3, 2 or 1).
  int cycle_count() const;
  /// Cycle notation: "I", "(1,2)", "(1,2,3)", "(3,2,1)", ...
  std::string name() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  constexpr explicit Permutation(std::array<int, 3> images) : images_(images) {}

  std::array<int, 3> images_{1, 2, 3};
};

/// All six elements, ordered identity, (2,3), (1,3), (1,2), (1,2,3), (3,2,1).
const std::array<Permutation, 6>& all_permutations();

/// Operator product: apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

enum class ClassLabel { Identity, Transposition, ThreeCycle };

ClassLabel class_of(const Permutation& p);
int class_size(ClassLabel c);
std::string to_string(ClassLabel c);
inline constexpr std::array<ClassLabel, 3> kClasses{
    ClassLabel::Identity, ClassLabel::Transposition, ClassLabel::ThreeCycle};

/// 1-based index of the ket |a,b,c> in the fixed basis ordering.
int basis_index(const std::array<int, 3>& labels);
/// Inverse of basis_index.
std::array<int, 3> basis_labels(int index);

/// 0/1 permutation matrix of `p` on the ket basis; a homomorphism under
/// `compose`.
RepMatrix regular_rep(const Permutation& p);

/// (1/6) sum_g rep(g): rank-1 projector onto the symmetric ket.
RepMatrix symmetrizer();
/// (1/6) sum_g sgn(g) rep(g): rank-1 projector onto the antisymmetric ket.
RepMatrix antisymmetrizer();

/// The cube roots of unity exp(+-2 pi i / 3), built from exact
/// (-1/2, +-sqrt(3)/2) components.
Complex lambda_plus();
Complex lambda_minus();

// Named vectors with the component phases of the closed-form eigenbasis.
// |s> and |a> are unit vectors; v1..v4 are unnormalised (norm^2 = 3).
SymVector sym_state();
SymVector antisym_state();
SymVector v1();
SymVector v2();
SymVector v3();
SymVector v4();
SymVector basis_ket(int index);  // |index>, 1-based

SymVector normalized(const SymVector& v);

struct Eigenpair {
  std::string name;
  SymVector vector;
  Complex eigenvalue;  // under regular_rep(cycle123())
};

/// |s>, |a> (eigenvalue 1), v1, v2 (lambda_minus), v3, v4 (lambda_plus) for
/// the (1,2,3) cycle. The (3,2,1) cycle has the same eigenvectors with the
/// complex-conjugate eigenvalues.
std::vector<Eigenpair> cycle_eigenbasis();

struct InvariantProjectors {
  RepMatrix prime1;  // onto span{v1, v4}
  RepMatrix prime2;  // onto span{v2, v3}
};

InvariantProjectors invariant_projectors();

SymVector apply_perm(const Permutation& p, const SymVector& v);

/// Invariant subspaces of the three-particle space. `Hprime` stands for
/// Hprime1 + Hprime2 when the two are not distinguished.
enum class Subspace { Hplus, Hminus, Hprime1, Hprime2, Hprime };

std::string to_string(Subspace s);

/// Orthogonal components of `v` in Hplus, Hminus, Hprime1 and Hprime2.
std::map<Subspace, SymVector> decompose(const SymVector& v);

/// Irreducible representations: A1 symmetric, A2 antisymmetric, E 2-dim.
enum class Irrep { A1, A2, E };

std::string to_string(Irrep r);
inline constexpr std::array<Irrep, 3> kIrreps{Irrep::A1, Irrep::A2, Irrep::E};

/// Rows A1, A2, E; columns identity, transposition, three-cycle.
using CharacterTable = std::array<std::array<int, 3>, 3>;

const CharacterTable& character_table();
int character(Irrep r, ClassLabel c);

}  // namespace trisym
