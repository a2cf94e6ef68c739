#include <cmath>

#include "bohr/explorer.hpp"
#include "bohr/inequalities.hpp"
#include "support.hpp"

namespace bohr {
namespace {

using test::mat;
using test::near;

// Direct long-double evaluation of both sides, without the library's
// normalization by min alpha.
std::pair<long double, long double> weighted_sides(const std::vector<Complex>& z,
                                                   const std::vector<double>& alpha, double r) {
  std::complex<long double> s = 0;
  long double q = 0, t = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    s += std::complex<long double>(z[i].real(), z[i].imag());
    q += std::pow(static_cast<long double>(alpha[i]), 1.0L / (1.0L - r));
    t += alpha[i] * std::pow(static_cast<long double>(std::abs(z[i])), static_cast<long double>(r));
  }
  return {std::pow(std::abs(s), static_cast<long double>(r)), std::pow(q, r - 1.0L) * t};
}

TEST(VasicKeckic, Examples) {
  ScalarReport s = vasic_keckic_scalar(std::vector<Complex>{1, 1}, std::vector<double>{1, 1}, 2);
  EXPECT_DOUBLE_EQ(s.lhs, 4);
  EXPECT_DOUBLE_EQ(s.rhs, 4);
  EXPECT_TRUE(s.holds());
  EXPECT_TRUE(s.near_equality());

  s = vasic_keckic_scalar(std::vector<Complex>{1, 2}, std::vector<double>{1, 2}, 2);
  EXPECT_DOUBLE_EQ(s.lhs, 9);
  EXPECT_DOUBLE_EQ(s.rhs, 13.5);
  EXPECT_TRUE(s.holds());
  EXPECT_FALSE(s.near_equality());

  s = vasic_keckic_scalar(std::vector<Complex>{Complex(3, -4)}, std::vector<double>{0.37}, 2.7);
  EXPECT_EQ(s.lhs, s.rhs);
  EXPECT_NEAR(s.lhs, std::pow(5.0, 2.7), 1e-12 * s.lhs);
}

TEST(VasicKeckic, Errors) {
  const std::vector<Complex> z{1, 2};
  EXPECT_THROW(vasic_keckic_scalar(std::vector<Complex>{}, std::vector<double>{}, 2), InputError);
  EXPECT_THROW(vasic_keckic_scalar(z, std::vector<double>{1}, 2), InputError);
  EXPECT_THROW(vasic_keckic_scalar(z, std::vector<double>{1, 0}, 2), PreconditionError);
  EXPECT_THROW(vasic_keckic_scalar(z, std::vector<double>{1, -2}, 2), PreconditionError);
  EXPECT_THROW(vasic_keckic_scalar(z, std::vector<double>{1, 1}, 1), PreconditionError);
}

TEST(VasicKeckic, AgreesWithDirectEvaluation) {
  CounterRng rng(51);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const double r = 1.05 + 2.95 * rng.uniform();
    std::vector<Complex> z;
    std::vector<double> alpha;
    for (std::size_t i = 0; i < n; ++i) {
      z.push_back(rng.complex_gaussian());
      alpha.push_back(rng.log_uniform(0.1, 10));
    }
    const ScalarReport s = vasic_keckic_scalar(z, alpha, r);
    const auto [lhs, rhs] = weighted_sides(z, alpha, r);
    EXPECT_NEAR(s.lhs, static_cast<double>(lhs), 1e-12 * std::max(1.0L, lhs));
    EXPECT_NEAR(s.rhs, static_cast<double>(rhs), 1e-11 * std::max(1.0L, rhs));
    EXPECT_TRUE(s.holds());
  }
}

TEST(BohrScalar, Examples) {
  ScalarReport s = bohr_scalar(1, 1, 2);
  EXPECT_DOUBLE_EQ(s.lhs, 4);
  EXPECT_DOUBLE_EQ(s.rhs, 4);
  EXPECT_TRUE(s.near_equality());

  s = bohr_scalar(1, 0, 2);
  EXPECT_DOUBLE_EQ(s.lhs, 1);
  EXPECT_DOUBLE_EQ(s.rhs, 2);

  s = bohr_scalar(1, -1, 3);
  EXPECT_DOUBLE_EQ(s.lhs, 0);
  EXPECT_DOUBLE_EQ(s.rhs, 4.5);

  EXPECT_THROW(bohr_scalar(1, 1, 1), PreconditionError);
}

TEST(BohrScalar, CrossCheckAgainstWeightedForm) {
  CounterRng rng(52);
  for (int trial = 0; trial < 500; ++trial) {
    const Complex z = rng.complex_gaussian(), w = rng.complex_gaussian();
    const double r = 1.01 + 5 * rng.uniform();
    const ScalarReport s = bohr_scalar(z, w, r);
    ASSERT_TRUE(s.cross_check_rhs.has_value());
    EXPECT_NEAR(*s.cross_check_rhs, s.rhs, 1e-12 * std::max(1.0, s.rhs));
    // alpha = (r - 1, 1) at exponent 2: (1/(r-1) + 1) * ((r-1)|z|^2 + |w|^2)
    const double direct = (1 / (r - 1) + 1) * ((r - 1) * std::norm(z) + std::norm(w));
    EXPECT_NEAR(direct, s.rhs, 1e-12 * std::max(1.0, s.rhs));
    EXPECT_TRUE(s.holds());
  }
}

TEST(BohrOperatorPair, Examples) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  InequalityReport rep = bohr_operator_pair(id, id, 2);
  EXPECT_TRUE(near(rep.lhs, id * 4.0, 1e-14));
  EXPECT_TRUE(near(rep.rhs, id * 4.0, 1e-14));
  EXPECT_TRUE(rep.near_equality());

  CounterRng rng(5);
  const ComplexMatrix a = random_gaussian(3, 3, rng);
  rep = bohr_operator_pair(a, ComplexMatrix::Zero(3, 3), 2);
  const ComplexMatrix gram = a.adjoint() * a;
  EXPECT_TRUE(near(rep.lhs, gram, 1e-12));
  EXPECT_TRUE(near(rep.rhs, gram * 2.0, 1e-12));

  EXPECT_THROW(bohr_operator_pair(id, ComplexMatrix::Identity(3, 3), 2), InputError);
  EXPECT_THROW(bohr_operator_pair(id, id, 1), PreconditionError);
}

TEST(BohrOperatorPair, RandomPairsHold) {
  CounterRng rng(53);
  for (int trial = 0; trial < 1000; ++trial) {
    const ComplexMatrix a = random_gaussian(3, 3, rng);
    const ComplexMatrix b = random_gaussian(3, 3, rng);
    const InequalityReport rep = bohr_operator_pair(a, b, 1.5);
    ASSERT_TRUE(rep.holds()) << "trial " << trial << " gap " << rep.min_gap();
    // gap = |sqrt(r-1) A - B/sqrt(r-1)|^2 exactly; compare its spectrum
    const double c = std::sqrt(0.5);
    const RealVector expected = eigenvalues(hermitize((c * a - b / c).adjoint() * (c * a - b / c)));
    EXPECT_NEAR(rep.min_gap(), expected(0), 1e-10 * std::max(1.0, expected(2)));
  }
}

TEST(FieldBohr, SingleIdentityEntryIsEquality) {
  const HermitianMatrix a = random_psd(3, std::uint64_t{61});
  const WeightedField f({FieldEntry{1, 1, a, PositiveMap::identity(3)}});
  const InequalityReport rep = field_bohr(f, 1.5);
  EXPECT_TRUE(rep.holds());
  EXPECT_LE(std::abs(rep.min_gap()), rep.tolerance());
  EXPECT_TRUE(near(rep.lhs, matrix_power(a, 1.5).matrix(), 1e-12 * max_abs(rep.lhs.matrix())));
}

TEST(FieldBohr, SingleCongruenceIsHansenStep) {
  CounterRng rng(62);
  const ComplexMatrix x = random_contraction(3, rng);
  const HermitianMatrix a = random_psd(3, rng);
  const InequalityReport f =
      field_bohr(WeightedField({FieldEntry{1, 1, a, congruence_map(x)}}), 1.5);
  const InequalityReport h = hansen_check(x, a, 1.5);
  EXPECT_TRUE(near(f.lhs, h.lhs.matrix(), 1e-12));
  EXPECT_TRUE(near(f.rhs, h.rhs.matrix(), 1e-12));
  EXPECT_TRUE(f.holds());
}

TEST(FieldBohr, DiagonalFieldReducesToScalarForm) {
  CounterRng rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    const Index d = 1 + static_cast<Index>(rng.below(4));
    const std::size_t n = 1 + rng.below(4);
    const double r = 1.1 + 0.9 * rng.uniform();
    std::vector<FieldEntry> entries;
    std::vector<std::vector<double>> diag(n);
    std::vector<double> alpha;
    for (std::size_t i = 0; i < n; ++i) {
      for (Index k = 0; k < d; ++k) diag[i].push_back(rng.log_uniform(0.01, 10));
      alpha.push_back(rng.log_uniform(0.1, 10));
      entries.push_back(FieldEntry{1, alpha[i], HermitianMatrix::diagonal(diag[i]),
                                   PositiveMap::identity(d)});
    }
    const InequalityReport rep = field_bohr(WeightedField(entries), r);
    std::vector<double> gaps;
    for (Index k = 0; k < d; ++k) {
      std::vector<Complex> z;
      for (std::size_t i = 0; i < n; ++i) z.push_back(diag[i][static_cast<std::size_t>(k)]);
      const auto [lhs, rhs] = weighted_sides(z, alpha, r);
      gaps.push_back(static_cast<double>(rhs - lhs));
    }
    std::sort(gaps.begin(), gaps.end());
    for (std::size_t k = 0; k < gaps.size(); ++k) {
      EXPECT_NEAR(rep.gap_spectrum[k], gaps[k], 1e-9 * std::max(1.0, max_abs(rep.rhs.matrix())));
    }
    EXPECT_TRUE(rep.holds());
  }
}

TEST(FieldBohr, OneByOneMatchesScalarVerdict) {
  CounterRng rng(64);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    const double r = 1.1 + 0.9 * rng.uniform();
    std::vector<FieldEntry> entries;
    std::vector<Complex> z;
    std::vector<double> alpha;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = rng.log_uniform(0.01, 100);
      alpha.push_back(rng.log_uniform(0.1, 10));
      z.push_back(a);
      entries.push_back(FieldEntry{1, alpha.back(), HermitianMatrix::diagonal({a}),
                                   PositiveMap::identity(1)});
    }
    EXPECT_EQ(field_bohr(WeightedField(entries), r).holds(),
              vasic_keckic_scalar(z, alpha, r).holds());
  }
}

TEST(FieldBohr, ConditionFailureIsDistinct) {
  const ComplexMatrix x = ComplexMatrix::Identity(2, 2) * std::sqrt(2.0);
  const WeightedField f({FieldEntry{1, 1, HermitianMatrix::identity(2), congruence_map(x)},
                         FieldEntry{1, 1, HermitianMatrix::identity(2), congruence_map(x)}});
  EXPECT_THROW(field_bohr(f, 2.0), ConditionError);
  const WeightedField ok({FieldEntry{1, 1, HermitianMatrix::identity(2), PositiveMap::identity(2)}});
  EXPECT_THROW(field_bohr(ok, 3.0), PreconditionError);
  EXPECT_NO_THROW(field_bohr(ok, 3.0, VerifyOptions{true, 1.0}));
}

TEST(FieldBohr, RandomContractionPairs) {
  CounterRng rng(65);
  const std::vector<double> alpha{1, 2};
  for (int trial = 0; trial < 1000; ++trial) {
    const Index d = 2 + static_cast<Index>(rng.below(3));
    std::vector<FieldEntry> entries;
    for (int i = 0; i < 2; ++i) {
      entries.push_back(FieldEntry{1, alpha[static_cast<std::size_t>(i)], random_psd(d, rng),
                                   congruence_map(random_contraction(d, rng))});
    }
    ASSERT_TRUE(field_bohr(WeightedField(entries), 1.5).holds()) << "trial " << trial;
  }
}

TEST(CongruenceBohr, EqualOperatorsScaledIdentity) {
  const std::size_t n = 3;
  const double r = 1.5;
  const HermitianMatrix a = random_psd(2, std::uint64_t{66});
  const std::vector<ComplexMatrix> x(n, ComplexMatrix::Identity(2, 2) / std::sqrt(3.0));
  const std::vector<HermitianMatrix> as(n, a);
  const InequalityReport rep = congruence_bohr(x, as, std::vector<double>(n, 1.0), r);
  const ComplexMatrix ar = matrix_power(a, r).matrix();
  EXPECT_TRUE(near(rep.lhs, ar, 1e-12 * max_abs(ar)));
  EXPECT_TRUE(near(rep.rhs, ar * std::pow(3.0, r - 1), 1e-12 * max_abs(ar)));
  EXPECT_EQ(rep.context.label, "congruence_bohr");
  EXPECT_TRUE(rep.holds());
}

TEST(CongruenceBohr, UnitaryIsEquality) {
  CounterRng rng(67);
  const ComplexMatrix u = random_unitary(4, rng);
  const HermitianMatrix a = random_psd(4, rng);
  const InequalityReport rep = congruence_bohr(std::vector<ComplexMatrix>{u},
                                               std::vector<HermitianMatrix>{a},
                                               std::vector<double>{2.5}, 1.8);
  EXPECT_LE(std::abs(rep.min_gap()), rep.tolerance());
}

TEST(CongruenceBohr, LengthMismatch) {
  const std::vector<ComplexMatrix> x(2, ComplexMatrix::Identity(2, 2) * 0.5);
  const std::vector<HermitianMatrix> a(1, HermitianMatrix::identity(2));
  EXPECT_THROW(congruence_bohr(x, a, std::vector<double>{1, 1}, 1.5), InputError);
}

TEST(Hansen, Examples) {
  const HermitianMatrix a = HermitianMatrix::from(mat({{2, 1}, {1, 1}}));
  InequalityReport rep = hansen_check(mat({{1, 0}, {0, 0}}), a, 2);
  EXPECT_TRUE(near(rep.lhs, mat({{4, 0}, {0, 0}}), 1e-13));
  EXPECT_TRUE(near(rep.rhs, mat({{5, 0}, {0, 0}}), 1e-13));
  EXPECT_TRUE(rep.holds());

  rep = hansen_check(ComplexMatrix::Identity(2, 2), a, 1.3);
  EXPECT_LE(std::abs(rep.min_gap()), rep.tolerance());

  rep = hansen_check(ComplexMatrix::Zero(2, 2), a, 1.3);
  EXPECT_EQ(max_abs(rep.lhs.matrix()), 0.0);
  EXPECT_EQ(max_abs(rep.rhs.matrix()), 0.0);
  EXPECT_TRUE(rep.holds());
}

TEST(Hansen, Errors) {
  const HermitianMatrix a = HermitianMatrix::identity(2);
  EXPECT_THROW(hansen_check(ComplexMatrix::Identity(2, 2) * 1.01, a, 1.5), PreconditionError);
  EXPECT_NO_THROW(hansen_check(ComplexMatrix::Identity(2, 2) * (1 + 1e-13), a, 1.5));
  EXPECT_THROW(hansen_check(ComplexMatrix::Identity(3, 3), a, 1.5), InputError);
  EXPECT_THROW(hansen_check(ComplexMatrix::Identity(2, 2), HermitianMatrix::diagonal({-1, 1}), 1.5),
               PreconditionError);
}

TEST(ConvexityChain, EqualOperatorsGiveEqualFirstStep) {
  const std::size_t n = 4;
  const HermitianMatrix a = random_psd(3, std::uint64_t{68});
  const std::vector<ComplexMatrix> x(n, ComplexMatrix::Identity(3, 3) / 2.0);
  const std::vector<HermitianMatrix> as(n, a);
  const ChainReport c = convexity_chain_bohr(x, as, std::vector<double>(n, 1.0), 1.5);
  EXPECT_LE(std::abs(c.convexity_step.min_gap()), c.convexity_step.tolerance());
  EXPECT_TRUE(c.conjunction());
  EXPECT_TRUE(c.consistent());
}

TEST(ConvexityChain, SingleTermFirstStepIsEquality) {
  CounterRng rng(69);
  const ChainReport c = convexity_chain_bohr(
      std::vector<ComplexMatrix>{random_contraction(3, rng)},
      std::vector<HermitianMatrix>{random_psd(3, rng)}, std::vector<double>{0.3}, 1.7);
  EXPECT_LE(std::abs(c.convexity_step.min_gap()), c.convexity_step.tolerance());
  EXPECT_TRUE(c.hansen_step.holds());
}

TEST(ConvexityChain, RandomTrialsMatchCongruence) {
  CounterRng rng(70);
  for (int trial = 0; trial < 200; ++trial) {
    const Index d = 1 + static_cast<Index>(rng.below(4));
    const std::size_t n = 1 + rng.below(4);
    const double r = 1.1 + 0.9 * rng.uniform();
    std::vector<ComplexMatrix> x;
    std::vector<HermitianMatrix> a;
    std::vector<double> alpha;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(random_contraction(d, rng));
      a.push_back(random_psd(d, rng));
      alpha.push_back(rng.log_uniform(0.1, 10));
    }
    const ChainReport c = convexity_chain_bohr(x, a, alpha, r);
    EXPECT_TRUE(c.conjunction());
    EXPECT_TRUE(c.consistent());
    EXPECT_TRUE(near(c.combined.rhs, c.hansen_step.rhs.matrix(),
                     1e-10 * std::max(1.0, max_abs(c.combined.rhs.matrix()))));
  }
}

TEST(ConvexityChain, RejectsNonContractions) {
  EXPECT_THROW(convexity_chain_bohr(std::vector<ComplexMatrix>{ComplexMatrix::Identity(2, 2) * 2.0},
                                    std::vector<HermitianMatrix>{HermitianMatrix::identity(2)},
                                    std::vector<double>{1}, 1.5),
               PreconditionError);
}

TEST(OrthogonalFamily, RankOneEquality) {
  ComplexVector x = ComplexVector::Zero(3);
  x(1) = 1;
  const auto fam = rank_one_family(ComplexMatrix::Identity(3, 3), 2, x);
  const OrthogonalFamilyReport rep = orthogonal_family_bohr(fam, std::vector<double>{1, 1}, 3);
  const ComplexMatrix px = rank_one(x, x);
  const double c = std::pow(2.0, 1.5);
  EXPECT_TRUE(near(rep.op.lhs, px * c, 1e-12));
  EXPECT_TRUE(near(rep.op.rhs, px * c, 1e-12));
  EXPECT_LE(std::abs(rep.op.min_gap()), rep.op.tolerance());
  EXPECT_NEAR(rep.norm.lhs, c, 1e-12);
  EXPECT_NEAR(rep.norm.rhs, std::sqrt(2.0) * 2, 1e-12);
  EXPECT_TRUE(rep.holds());
}

TEST(OrthogonalFamily, SingleOperatorIsEquality) {
  CounterRng rng(71);
  const ComplexMatrix a = random_gaussian(3, 3, rng);
  for (double r : {2.5, 3.0, 4.0}) {
    const OrthogonalFamilyReport rep = orthogonal_family_bohr(std::vector<ComplexMatrix>{a},
                                                              std::vector<double>{0.7}, r);
    EXPECT_LE(std::abs(rep.op.min_gap()), rep.op.tolerance()) << r;
    EXPECT_NEAR(rep.norm.lhs, rep.norm.rhs, 1e-12 * rep.norm.rhs);
  }
}

TEST(OrthogonalFamily, Errors) {
  const std::vector<ComplexMatrix> overlap{ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)};
  try {
    orthogonal_family_bohr(overlap, std::vector<double>{1, 1}, 3);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("A_0 and A_1"), std::string::npos) << e.what();
  }
  const auto fam = random_orthogonal_family(3, 2, std::uint64_t{72});
  EXPECT_THROW(orthogonal_family_bohr(fam, std::vector<double>{1, 1}, 2.0), PreconditionError);
  EXPECT_THROW(orthogonal_family_bohr(fam, std::vector<double>{1, 1}, 4.5), PreconditionError);
  EXPECT_THROW(orthogonal_family_bohr(fam, std::vector<double>{1}, 3), InputError);
}

TEST(OrthogonalFamily, NormBoundMatchesDirectFormula) {
  CounterRng rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + static_cast<Index>(rng.below(4));
    const Index n = 1 + static_cast<Index>(rng.below(static_cast<std::size_t>(d)));
    const double r = 2.1 + 1.9 * rng.uniform();
    const auto fam = random_orthogonal_family(d, n, rng);
    std::vector<double> alpha;
    for (Index i = 0; i < n; ++i) alpha.push_back(rng.log_uniform(0.1, 10));
    const OrthogonalFamilyReport rep = orthogonal_family_bohr(fam, alpha, r);
    double c = 0, t = 0;
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (Index i = 0; i < n; ++i) {
      c += std::pow(alpha[i], 2 / (2 - r));
      t += alpha[i] * std::pow(operator_norm(fam[i]), r);
      sum += fam[i];
    }
    const double rhs = std::pow(c, (r - 2) / 2) * t;
    EXPECT_NEAR(rep.norm.rhs, rhs, 1e-10 * rhs);
    EXPECT_NEAR(rep.norm.lhs, std::pow(operator_norm(sum), r), 1e-10 * rhs);
    EXPECT_TRUE(rep.holds());
  }
}

TEST(Jensen, SquareWithHalvingMaps) {
  CounterRng rng(74);
  const ComplexMatrix half = ComplexMatrix::Identity(3, 3) / std::sqrt(2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const HermitianMatrix a = random_hermitian(3, rng), b = random_hermitian(3, rng);
    const std::vector<JensenTerm> terms{JensenTerm{1, 1, a, PositiveMap({half})},
                                        JensenTerm{1, 1, b, PositiveMap({half})}};
    const InequalityReport rep = jensen_discrete(terms, OperatorConvexFunction::square());
    const ComplexMatrix m = (a.matrix() + b.matrix()) / 4.0;
    EXPECT_TRUE(near(rep.lhs, m * m, 1e-12));
    EXPECT_TRUE(near(rep.rhs, (a.matrix() * a.matrix() + b.matrix() * b.matrix()) / 4.0, 1e-12));
    EXPECT_TRUE(rep.holds());
  }
}

TEST(Jensen, EqualOperatorsUnitalFieldIsEquality) {
  const HermitianMatrix a = random_psd(3, std::uint64_t{75});
  const std::vector<JensenTerm> terms{JensenTerm{1, 2, a, PositiveMap::identity(3)},
                                      JensenTerm{0.5, 3, a, PositiveMap::identity(3)}};
  const InequalityReport rep = jensen_discrete(terms, OperatorConvexFunction::power(1.5));
  EXPECT_LE(std::abs(rep.min_gap()), rep.tolerance());
}

TEST(Jensen, SingleSubunitalTerm) {
  CounterRng rng(76);
  for (int trial = 0; trial < 100; ++trial) {
    const PositiveMap phi = random_subunital_map(3, 3, 2, rng);
    const HermitianMatrix a = random_psd(3, rng);
    const InequalityReport rep =
        jensen_discrete(std::vector<JensenTerm>{JensenTerm{1, 1, a, phi}},
                        OperatorConvexFunction::power(1.5));
    EXPECT_TRUE(near(rep.lhs, matrix_power(phi.apply(a), 1.5).matrix(), 1e-12 * std::max(1.0, max_abs(rep.lhs.matrix()))));
    EXPECT_TRUE(rep.holds());
  }
}

TEST(Jensen, Errors) {
  const HermitianMatrix a = HermitianMatrix::identity(2);
  const std::vector<JensenTerm> ok{JensenTerm{1, 1, a, PositiveMap::identity(2)}};
  EXPECT_THROW(OperatorConvexFunction::parse("cube", 3), InputError);
  EXPECT_THROW(OperatorConvexFunction::power(3), PreconditionError);
  EXPECT_THROW(OperatorConvexFunction::power(1), PreconditionError);
  EXPECT_EQ(OperatorConvexFunction::parse("square", 0).kind(), OperatorConvexFunction::Kind::square);

  const std::vector<JensenTerm> negative{JensenTerm{1, -1, a, PositiveMap::identity(2)}};
  EXPECT_THROW(jensen_discrete(negative, OperatorConvexFunction::square()), PreconditionError);

  const std::vector<JensenTerm> indefinite{
      JensenTerm{1, 1, HermitianMatrix::diagonal({-1, 1}), PositiveMap::identity(2)}};
  EXPECT_THROW(jensen_discrete(indefinite, OperatorConvexFunction::power(1.5)), PreconditionError);
  EXPECT_NO_THROW(jensen_discrete(indefinite, OperatorConvexFunction::square()));

  const PositiveMap big = congruence_map(ComplexMatrix::Identity(2, 2) * 2.0);
  EXPECT_THROW(jensen_discrete(std::vector<JensenTerm>{JensenTerm{1, 1, a, big}},
                               OperatorConvexFunction::square()),
               ConditionError);
  // zero weights are dropped
  const std::vector<JensenTerm> with_zero{JensenTerm{1, 1, a, PositiveMap::identity(2)},
                                          JensenTerm{1, 0, a, big}};
  EXPECT_NO_THROW(jensen_discrete(with_zero, OperatorConvexFunction::square()));
}

}  // namespace
}  // namespace bohr
