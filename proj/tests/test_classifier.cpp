#include "mink/classifier.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <tuple>

using namespace mink;

namespace {

Motion random_motion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> T(-1.5, 1.5), U(-3, 3), R(-3.14, 3.14);
  return Motion(rotation(R(rng)) * boost(T(rng)) * rotation(R(rng)), MVector(U(rng), U(rng), U(rng)));
}

const Mat3 kFlip = Eigen::Vector3d(1, -1, -1).asDiagonal();  // in SO_0(1,2)

}  // namespace

TEST(StandardizeLinear, TrivialCases) {
  const StandardForm b1 = standardize_linear(B1());
  EXPECT_EQ(b1.cls, GeneratorClass::Hyperbolic);
  EXPECT_NEAR(b1.lambda, 1.0, 1e-14);
  EXPECT_LT((b1.conjugator.A() - Mat3::Identity()).norm(), 1e-12);
  const StandardForm b2 = standardize_linear(2.0 * B2());
  EXPECT_EQ(b2.cls, GeneratorClass::Elliptic);
  EXPECT_NEAR(b2.lambda, 2.0, 1e-14);
  EXPECT_LT((b2.conjugator.A() - Mat3::Identity()).norm(), 1e-12);
  EXPECT_THROW(standardize_linear(Mat3::Zero()), DomainError);
  EXPECT_THROW(standardize_linear(Mat3::Identity()), DomainError);
}

TEST(StandardizeLinear, RoundTripsConjugates) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const Mat3 A = random_motion(rng).A();
    const Mat3 Ainv = eta() * A.transpose() * eta();
    for (const Mat3& B : {B1(), B2(), B3()}) {
      const StandardForm sf = standardize_linear(A * B * Ainv);
      EXPECT_LT(sf.residual, 1e-8);
      EXPECT_TRUE(in_so0_12(sf.conjugator.A(), 1e-9));
      if (sf.cls == GeneratorClass::Hyperbolic) {
        EXPECT_NEAR(sf.lambda, 1.0, 1e-9);
      }
    }
  }
}

TEST(StandardizeLinear, SignOfEllipticFactorIsInvariant) {
  // -B2 is not conjugate to B2 inside SO_0(1,2).
  EXPECT_NEAR(standardize_linear(-B2()).lambda, -1.0, 1e-12);
  const Mat3 A = boost(0.8);
  EXPECT_NEAR(standardize_linear(-A * B2() * eta() * A.transpose() * eta()).lambda, -1.0, 1e-9);
}

TEST(NormalizeTranslations, EllipticCompletingTheSquare) {
  // (B2, a e1 + b e2 + c e3) with kernel e1: the translation (0, -c, b) removes b, c.
  const double a = 0.3, b = 1.2, c = -0.7;
  const SubalgebraSpec s{{B2(), MVector(a, b, c)}, translation_el(e1())};
  const TranslationNormalization tn = normalize_translations(s, {B2()});
  EXPECT_TRUE(tn.translation.a().isApprox(MVector(0, -c, b), 1e-12));
  EXPECT_LT(tn.residual_parts[0].norm(), 1e-12);
  EXPECT_LT(span_distance(adjoint(tn.translation, s), build(FamilyId::Pb).basis), 1e-12);
}

TEST(NormalizeTranslations, CatalogFormIsAFixedPoint) {
  FamilyParams p = default_params(FamilyId::Pd);
  p.beta = 1.5;
  const TranslationNormalization tn = normalize_translations(build(FamilyId::Pd, p).basis, {B1()});
  EXPECT_LT(tn.translation.a().norm(), 1e-15);
  EXPECT_DOUBLE_EQ(tn.residual_parts[0](2), 1.5);
}

TEST(Classify, PdBetaRecoveredFromTranslationConjugates) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> U(-3, 3);
  FamilyParams p = default_params(FamilyId::Pd);
  p.beta = 1.5;
  const CatalogEntry e = build(FamilyId::Pd, p);
  for (int i = 0; i < 20; ++i) {
    const Classification c = classify(adjoint(Motion::translation(MVector(U(rng), U(rng), U(rng))), e.basis));
    ASSERT_TRUE(c.matched());
    EXPECT_EQ(c.id, FamilyId::Pd);
    EXPECT_NEAR(c.params.beta, 1.5, 1e-8);
  }
}

TEST(Classify, RoundTripAllFamilies) {
  std::mt19937_64 rng(42);
  for (FamilyId id : kAllFamilies) {
    const CatalogEntry e = build(id);
    for (int i = 0; i < 50; ++i) {
      const Motion g = random_motion(rng);
      const SubalgebraSpec s = adjoint(g, e.basis);
      const Classification c = classify(s);
      ASSERT_TRUE(c.matched()) << to_string(id) << ": " << c.reason;
      EXPECT_EQ(c.id, id);
      const FamilyParams want = canonical_params(id, e.params);
      EXPECT_NEAR(c.params.beta, want.beta, 1e-8);
      EXPECT_NEAR(c.params.alpha, want.alpha, 1e-8);
      EXPECT_EQ(c.params.sign, want.sign);
      EXPECT_EQ(c.params.plane, want.plane);
      EXPECT_LT(span_distance(adjoint(c.conjugator, s), e.basis), 1e-6);
    }
  }
}

TEST(Classify, PlaneKindAndSignRecovered) {
  std::mt19937_64 rng(8);
  for (PlaneKind k : {PlaneKind::Riemannian, PlaneKind::Lorentzian, PlaneKind::Degenerate}) {
    FamilyParams p = default_params(FamilyId::Pa);
    p.plane = k;
    const Classification c = classify(adjoint(random_motion(rng), build(FamilyId::Pa, p).basis));
    ASSERT_TRUE(c.matched());
    EXPECT_EQ(c.params.plane, k);
  }
  FamilyParams p = default_params(FamilyId::Pd);
  p.beta = -2.0;
  p.sign = -1;
  const Classification c = classify(adjoint(random_motion(rng), build(FamilyId::Pd, p).basis));
  ASSERT_TRUE(c.matched());
  EXPECT_EQ(c.params.sign, -1);
  EXPECT_NEAR(c.params.beta, -2.0, 1e-8);
}

TEST(Classify, DocumentedExamples) {
  const Classification pc = classify(SubalgebraSpec{linear_el(B2()), translation_el(e2()), translation_el(e3())});
  ASSERT_TRUE(pc.matched());
  EXPECT_EQ(pc.id, FamilyId::Pc);
  const Classification ns = classify(SubalgebraSpec{linear_el(B1()), linear_el(B2())});
  EXPECT_EQ(ns.outcome, ClassifyOutcome::NotASubalgebra);
  EXPECT_FALSE(ns.signature.has_value());
}

TEST(Classify, Rejections) {
  // Elliptic generator with trivial translation kernel.
  EXPECT_EQ(classify(SubalgebraSpec{{B2(), e1()}}).outcome, ClassifyOutcome::NotCohomogeneityOne);
  // All of R^3 translations: transitive.
  EXPECT_EQ(classify(SubalgebraSpec{linear_el(B1()), translation_el(e1()), translation_el(e2()),
                                    translation_el(e3())})
                .outcome,
            ClassifyOutcome::NotCohomogeneityOne);
  // Elliptic with the kernel e2, e3 and an e1 section: transitive.
  EXPECT_EQ(classify(SubalgebraSpec{{B2(), e1()}, translation_el(e2()), translation_el(e3())}).outcome,
            ClassifyOutcome::NotCohomogeneityOne);
  // A line of translations alone.
  EXPECT_EQ(classify(SubalgebraSpec{translation_el(e1())}).outcome, ClassifyOutcome::NotCohomogeneityOne);
}

TEST(Classify, ParabolicWithNonRemovableSectionIsUnmatched) {
  const SubalgebraSpec s{{B3(), e1m2()}, translation_el(e12())};
  ASSERT_TRUE(is_subalgebra(s));
  const Classification c = classify(s);
  EXPECT_EQ(c.outcome, ClassifyOutcome::Unmatched);
  ASSERT_TRUE(c.signature.has_value());
  EXPECT_EQ(c.signature->linear_type, LinearType::Parabolic);
}

TEST(Classify, TwinFamiliesFollowBasisOrientation) {
  // diag(1,-1,-1) carries span N-iii onto span N-iv, but flips the supplied B1.
  const Motion flip = Motion::linear(kFlip);
  const SubalgebraSpec flipped = adjoint(flip, build(FamilyId::Niii).basis);
  EXPECT_LT(span_distance(flipped, build(FamilyId::Niv).basis), 1e-12);
  EXPECT_EQ(classify(flipped).id, FamilyId::Niii);
  EXPECT_EQ(classify(build(FamilyId::Niv).basis).id, FamilyId::Niv);
}

TEST(Classify, NviiBetaIsRemovable) {
  FamilyParams p = default_params(FamilyId::Nvii);
  p.beta = 2.5;
  const Classification c = classify(build(FamilyId::Nvii, p).basis);
  ASSERT_TRUE(c.matched());
  EXPECT_EQ(c.id, FamilyId::Nvii);
  EXPECT_DOUBLE_EQ(c.params.beta, 0.0);
}

TEST(Signature, ConjugationInvariant) {
  std::mt19937_64 rng(9);
  for (FamilyId id : kAllFamilies) {
    const CatalogEntry e = build(id);
    const InvariantSignature s0 = signature(e.basis);
    for (int i = 0; i < 50; ++i)
      EXPECT_TRUE(signature(adjoint(random_motion(rng), e.basis)).same_invariants(s0)) << to_string(id);
  }
  EXPECT_THROW(signature(SubalgebraSpec{linear_el(B1()), linear_el(B2())}), DomainError);
}

TEST(Signature, TableHasNoTies) {
  // Signature tuples separate all families except the screw parameter,
  // which alone tells P-d from N-v (and P-d(-) from N-vi).
  std::map<std::tuple<int, int, int, int, int, int, bool>, FamilyId> seen;
  for (FamilyId id : kAllFamilies) {
    const InvariantSignature s = signature(build(id).basis);
    const auto key = std::make_tuple(s.dim_g, s.dim_l, static_cast<int>(s.linear_type), s.dim_ker,
                                     s.ker_causal ? static_cast<int>(*s.ker_causal) : -1, s.eigen_sign,
                                     id == FamilyId::Pd);
    EXPECT_TRUE(seen.emplace(key, id).second) << to_string(id) << " ties with " << to_string(seen[key]);
  }
  const InvariantSignature pd = signature(build(FamilyId::Pd).basis);
  EXPECT_EQ(pd.eigen_sign, 1);
  EXPECT_EQ(signature(build(FamilyId::Nvi).basis).eigen_sign, -1);
}

TEST(CanonicalParams, NxDirectionNormalization) {
  FamilyParams p;
  p.alpha = -2.0;
  p.beta = 0.0;
  const FamilyParams c = canonical_params(FamilyId::Nx, p);
  EXPECT_DOUBLE_EQ(c.alpha, 1.0);
  EXPECT_DOUBLE_EQ(c.beta, 0.0);
  p.alpha = 0.0;
  p.beta = -3.0;
  EXPECT_DOUBLE_EQ(canonical_params(FamilyId::Nx, p).beta, 1.0);
}
