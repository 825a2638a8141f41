#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "trisym/group_algebra.hpp"

using namespace trisym;

namespace {

constexpr double kTol = 1e-12;

const Permutation kId = Permutation::identity();
const Permutation k12 = Permutation::transposition(1, 2);
const Permutation k13 = Permutation::transposition(1, 3);
const Permutation k23 = Permutation::transposition(2, 3);
const Permutation k123 = Permutation::cycle123();
const Permutation k321 = Permutation::cycle321();

RepMatrix from_rows(const std::array<std::array<int, 6>, 6>& rows) {
  RepMatrix m;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m(r, c) = rows[r][c];
  return m;
}

double max_abs(const RepMatrix& m) { return m.cwiseAbs().maxCoeff(); }

bool commutes_with_group(const RepMatrix& m) {
  for (const auto& g : all_permutations()) {
    const RepMatrix r = regular_rep(g);
    if (max_abs(r * m - m * r) > kTol) return false;
  }
  return true;
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_images({0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::transposition(2, 2), std::invalid_argument);
}

TEST(Permutation, ExactlySixDistinctElements) {
  std::set<Permutation> seen(all_permutations().begin(), all_permutations().end());
  EXPECT_EQ(seen.size(), 6u);
  // every bijection is one of them
  std::array<int, 3> images{1, 2, 3};
  do {
    EXPECT_TRUE(seen.count(Permutation::from_images(images)));
  } while (std::next_permutation(images.begin(), images.end()));
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(kId, k12), k12);
  EXPECT_EQ(compose(k123, k123), k321);
  EXPECT_EQ(compose(k12, k12), kId);
}

TEST(Compose, ClosureAndInverses) {
  for (const auto& p : all_permutations()) {
    EXPECT_EQ(compose(p, inverse(p)), kId);
    for (const auto& q : all_permutations()) {
      const auto r = compose(p, q);
      EXPECT_NE(std::find(all_permutations().begin(), all_permutations().end(), r), all_permutations().end());
    }
  }
}

TEST(ClassOf, Examples) {
  EXPECT_EQ(class_of(k23), ClassLabel::Transposition);
  EXPECT_EQ(class_of(k123), ClassLabel::ThreeCycle);
  EXPECT_EQ(class_of(kId), ClassLabel::Identity);
}

TEST(ClassOf, SizesAndConjugationInvariance) {
  std::map<ClassLabel, int> sizes;
  for (const auto& g : all_permutations()) {
    ++sizes[class_of(g)];
    for (const auto& h : all_permutations()) {
      EXPECT_EQ(class_of(compose(compose(h, g), inverse(h))), class_of(g));
    }
  }
  for (auto c : kClasses) EXPECT_EQ(sizes[c], class_size(c));
}

TEST(RegularRep, PrintedCycleMatrices) {
  const RepMatrix p123 = from_rows({{{0, 0, 0, 0, 1, 0},
                                     {0, 0, 1, 0, 0, 0},
                                     {0, 0, 0, 0, 0, 1},
                                     {1, 0, 0, 0, 0, 0},
                                     {0, 0, 0, 1, 0, 0},
                                     {0, 1, 0, 0, 0, 0}}});
  const RepMatrix p321 = from_rows({{{0, 0, 0, 1, 0, 0},
                                     {0, 0, 0, 0, 0, 1},
                                     {0, 1, 0, 0, 0, 0},
                                     {0, 0, 0, 0, 1, 0},
                                     {1, 0, 0, 0, 0, 0},
                                     {0, 0, 1, 0, 0, 0}}});
  EXPECT_EQ(regular_rep(k123), p123);
  EXPECT_EQ(regular_rep(k321), p321);
  EXPECT_EQ(regular_rep(kId), RepMatrix::Identity());
}

TEST(RegularRep, PermutationMatrices) {
  for (const auto& g : all_permutations()) {
    const RepMatrix m = regular_rep(g);
    for (int i = 0; i < 6; ++i) {
      EXPECT_EQ(m.row(i).sum(), Complex(1.0));
      EXPECT_EQ(m.col(i).sum(), Complex(1.0));
    }
    EXPECT_EQ(m.real().cwiseProduct(m.real()), m.real());  // entries 0 or 1
  }
}

TEST(RegularRep, HomomorphismOnAll36Pairs) {
  for (const auto& p : all_permutations())
    for (const auto& q : all_permutations())
      EXPECT_EQ(regular_rep(compose(p, q)), regular_rep(p) * regular_rep(q)) << p.name() << " " << q.name();
}

TEST(Projectors, SymmetrizerExamples) {
  const SymVector s1 = symmetrizer() * basis_ket(1);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(std::abs(s1(i) - 1.0 / 6.0), 0.0, kTol);
  EXPECT_LT((s1 - sym_state() / std::sqrt(6.0)).norm(), kTol);
  EXPECT_LT((antisymmetrizer() * sym_state()).norm(), kTol);
  EXPECT_LT(max_abs(symmetrizer() * symmetrizer() - symmetrizer()), kTol);
}

TEST(Projectors, AntisymmetricStateMatchesSignConvention) {
  // The stored |a> carries the opposite global phase to A|1>.
  const SymVector image = antisymmetrizer() * basis_ket(1) * std::sqrt(6.0);
  EXPECT_LT((image + antisym_state()).norm(), kTol);
  EXPECT_LT((antisymmetrizer() * antisym_state() - antisym_state()).norm(), kTol);
}

TEST(Projectors, Algebra) {
  const RepMatrix S = symmetrizer();
  const RepMatrix A = antisymmetrizer();
  const auto [P1, P2] = invariant_projectors();
  const std::array<RepMatrix, 4> all{S, A, P1, P2};
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_LT(max_abs(all[i] * all[i] - all[i]), kTol);
    EXPECT_LT(max_abs(all[i] - all[i].adjoint()), kTol);
    EXPECT_TRUE(commutes_with_group(all[i]));
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i != j) EXPECT_LT(max_abs(all[i] * all[j]), kTol);
    }
  }
  EXPECT_LT(max_abs(S + A + P1 + P2 - RepMatrix::Identity()), kTol);
  EXPECT_EQ(oracle::numerical_rank(S), 1);
  EXPECT_EQ(oracle::numerical_rank(A), 1);
  EXPECT_EQ(oracle::numerical_rank(P1), 2);
  EXPECT_EQ(oracle::numerical_rank(P2), 2);
}

TEST(Eigenbasis, EigenvaluesUnderBothCycles) {
  const RepMatrix c = regular_rep(k123);
  const RepMatrix c2 = regular_rep(k321);
  for (const auto& e : cycle_eigenbasis()) {
    EXPECT_LT((c * e.vector - e.eigenvalue * e.vector).norm(), kTol) << e.name;
    EXPECT_LT((c2 * e.vector - std::conj(e.eigenvalue) * e.vector).norm(), kTol) << e.name;
  }
  EXPECT_LT((c * v1() - lambda_minus() * v1()).norm(), kTol);
  EXPECT_LT((c2 * v1() - lambda_plus() * v1()).norm(), kTol);
  EXPECT_LT((c * sym_state() - sym_state()).norm(), kTol);
}

TEST(Eigenbasis, CubeRootsAreExact) {
  EXPECT_EQ(lambda_plus() * lambda_minus(), Complex(1.0, 0.0) * (lambda_plus() * lambda_minus()));
  EXPECT_NEAR(std::abs(lambda_plus() * lambda_plus() - lambda_minus()), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(lambda_plus() + lambda_minus() + 1.0), 0.0, 1e-15);
  EXPECT_EQ(lambda_plus(), std::conj(lambda_minus()));
}

TEST(Eigenbasis, AgreesWithNumericalSolver) {
  Eigen::ComplexEigenSolver<RepMatrix> solver(regular_rep(k123));
  std::vector<double> phases;
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(std::abs(solver.eigenvalues()(i)), 1.0, 1e-12);
    phases.push_back(std::arg(solver.eigenvalues()(i)));
  }
  std::sort(phases.begin(), phases.end());
  const double third = 2.0 * M_PI / 3.0;
  const std::array<double, 6> expected{-third, -third, 0.0, 0.0, third, third};
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(phases[i], expected[i], 1e-12);
}

TEST(InvariantSubspaces, Membership) {
  const auto [P1, P2] = invariant_projectors();
  EXPECT_LT((P1 * v1() - v1()).norm(), kTol);
  EXPECT_LT((P1 * v4() - v4()).norm(), kTol);
  EXPECT_LT((P1 * v2()).norm(), kTol);
  EXPECT_LT((P2 * v2() - v2()).norm(), kTol);
  EXPECT_LT((P2 * v3() - v3()).norm(), kTol);
}

TEST(ApplyPerm, WorkedExchangeExample) {
  const SymVector result = apply_perm(k23, v1());
  SymVector printed = SymVector::Zero();
  printed(0) = lambda_minus();
  printed(3) = lambda_plus();
  printed(4) = 1.0;
  EXPECT_EQ(result, printed);  // exact: only a permutation of components
  EXPECT_EQ(result, v4());
  EXPECT_EQ(apply_perm(kId, v2()), v2());
}

TEST(ApplyPerm, ExchangeRotatesWithinHprime2AndSwapsCycleEigenvalue) {
  const auto [P1, P2] = invariant_projectors();
  const SymVector w = apply_perm(k12, v2());
  EXPECT_LT((P2 * w - w).norm(), kTol);
  // eigenvalue of v2 under (1,2,3) is lambda_minus; its image has lambda_plus
  EXPECT_LT((regular_rep(k123) * w - lambda_plus() * w).norm(), kTol);
}

TEST(InvariantSubspaces, TranspositionsPairV1WithV4AndV2WithV3) {
  const auto [P1, P2] = invariant_projectors();
  for (const auto& t : {k12, k13, k23}) {
    for (const auto& [v, partner] : {std::pair{v1(), v4()}, {v4(), v1()}, {v2(), v3()}, {v3(), v2()}}) {
      const SymVector w = apply_perm(t, v);
      // w is a unit-modulus multiple of the partner vector
      const Complex ratio = partner.dot(w) / partner.squaredNorm();
      EXPECT_LT((w - ratio * partner).norm(), kTol);
      EXPECT_NEAR(std::abs(ratio), 1.0, kTol);
    }
  }
  for (const auto& g : all_permutations()) {
    const RepMatrix r = regular_rep(g);
    EXPECT_LT(max_abs(P1 * r * P1 - r * P1), kTol);
    EXPECT_LT(max_abs(P2 * r * P2 - r * P2), kTol);
  }
}

TEST(CommonEigenvectors, ExchangeEigenvaluesPropagate) {
  // Stack (P_t - eps_t) for the three exchanges; the common eigenspace is the
  // kernel. Only equal signs leave a non-trivial kernel, spanned by |s> or |a>.
  const std::array<Permutation, 3> exchanges{k12, k13, k23};
  for (int mask = 0; mask < 8; ++mask) {
    Eigen::Matrix<Complex, 18, 6> stacked;
    for (int i = 0; i < 3; ++i) {
      const double eps = (mask >> i) & 1 ? -1.0 : 1.0;
      stacked.block<6, 6>(6 * i, 0) = regular_rep(exchanges[i]) - eps * RepMatrix::Identity();
    }
    const int kernel = 6 - oracle::numerical_rank(stacked);
    if (mask == 0) {
      EXPECT_EQ(kernel, 1);
      EXPECT_LT((stacked * sym_state()).norm(), kTol);
    } else if (mask == 7) {
      EXPECT_EQ(kernel, 1);
      EXPECT_LT((stacked * antisym_state()).norm(), kTol);
    } else {
      EXPECT_EQ(kernel, 0) << "mask " << mask;
    }
  }
}

TEST(Decompose, Examples) {
  auto parts = decompose(sym_state());
  EXPECT_LT((parts[Subspace::Hplus] - sym_state()).norm(), kTol);
  EXPECT_LT(parts[Subspace::Hminus].norm(), kTol);
  EXPECT_LT(parts[Subspace::Hprime1].norm(), kTol);
  EXPECT_LT(parts[Subspace::Hprime2].norm(), kTol);

  parts = decompose(v1() + antisym_state());
  EXPECT_LT(parts[Subspace::Hplus].norm(), kTol);
  EXPECT_LT((parts[Subspace::Hminus] - antisym_state()).norm(), kTol);
  EXPECT_LT((parts[Subspace::Hprime1] - v1()).norm(), kTol);
  EXPECT_LT(parts[Subspace::Hprime2].norm(), kTol);
}

TEST(Decompose, BasisKetNorms) {
  // Oracle: overlaps with the orthonormalised eigenbasis.
  // |<s|1>|^2 = 1/6, |<a|1>|^2 = 1/6, |<v4|1>|^2/3 = 1/3, |<v2|1>|^2/3 = 1/3.
  const SymVector ket = basis_ket(1);
  const double s = std::norm(normalized(sym_state()).dot(ket));
  const double a = std::norm(normalized(antisym_state()).dot(ket));
  const double p1 = std::norm(normalized(v1()).dot(ket)) + std::norm(normalized(v4()).dot(ket));
  const double p2 = std::norm(normalized(v2()).dot(ket)) + std::norm(normalized(v3()).dot(ket));
  EXPECT_NEAR(s, 1.0 / 6.0, kTol);
  EXPECT_NEAR(a, 1.0 / 6.0, kTol);
  EXPECT_NEAR(p1, 1.0 / 3.0, kTol);
  EXPECT_NEAR(p2, 1.0 / 3.0, kTol);

  auto parts = decompose(ket);
  EXPECT_NEAR(parts[Subspace::Hplus].squaredNorm(), s, kTol);
  EXPECT_NEAR(parts[Subspace::Hminus].squaredNorm(), a, kTol);
  EXPECT_NEAR(parts[Subspace::Hprime1].squaredNorm(), p1, kTol);
  EXPECT_NEAR(parts[Subspace::Hprime2].squaredNorm(), p2, kTol);
}

TEST(Decompose, ReconstructsRandomVectors) {
  std::srand(7);
  for (int trial = 0; trial < 100; ++trial) {
    const SymVector v = SymVector::Random();
    SymVector sum = SymVector::Zero();
    for (const auto& [label, part] : decompose(v)) sum += part;
    EXPECT_LT((sum - v).norm(), kTol);
  }
}

TEST(Vectors, PrintedNormalisation) {
  for (const auto& v : {v1(), v2(), v3(), v4()}) EXPECT_NEAR(v.squaredNorm(), 3.0, kTol);
  EXPECT_NEAR(sym_state().norm(), 1.0, kTol);
  EXPECT_NEAR(antisym_state().norm(), 1.0, kTol);
  EXPECT_NEAR(normalized(v1()).norm(), 1.0, kTol);
  EXPECT_THROW(normalized(SymVector::Zero()), std::invalid_argument);
}

TEST(CharacterTable, ValuesAndOrthogonality) {
  EXPECT_EQ(character(Irrep::E, ClassLabel::Identity), 2);
  EXPECT_EQ(character(Irrep::A2, ClassLabel::Transposition), -1);
  for (auto r : kIrreps) {
    for (auto s : kIrreps) {
      int sum = 0;
      for (auto c : kClasses) sum += class_size(c) * character(r, c) * character(s, c);
      EXPECT_EQ(sum, r == s ? 6 : 0);
    }
  }
}

TEST(CharacterTable, RegularRepresentationContainsEachIrrepDimTimes) {
  // trace of the regular representation: 6 at the identity, 0 elsewhere
  for (const auto& g : all_permutations()) {
    const Complex trace = regular_rep(g).trace();
    EXPECT_EQ(trace, Complex(g == kId ? 6.0 : 0.0));
    int expected = 0;
    for (auto r : kIrreps) expected += character(r, ClassLabel::Identity) * character(r, class_of(g));
    EXPECT_EQ(trace.real(), expected);
  }
}
