#include "mink/orbit.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace mink;

TEST(OrbitDimension, HandValues) {
  EXPECT_EQ(orbit_dimension(build(FamilyId::Pb).basis, MVector(5, 0, 0)), 1);
  EXPECT_EQ(orbit_dimension(build(FamilyId::Pb).basis, MVector(1, 2, 3)), 2);
  EXPECT_EQ(orbit_dimension(build(FamilyId::Nxii).basis, MVector::Zero()), 0);
  EXPECT_EQ(orbit_dimension(build(FamilyId::Nxii).basis, MVector(5, 3, 4)), 2);
  EXPECT_EQ(orbit_dimension(build(FamilyId::Nix).basis, MVector(1, 1, 0)), 1);
  EXPECT_EQ(orbit_dimension(build(FamilyId::Nxi).basis, MVector(1, 2, 0)), 3);
  // N-x: dimension 1 on x = y, open elsewhere; no two-dimensional orbit.
  EXPECT_EQ(orbit_dimension(build(FamilyId::Nx).basis, MVector(2, 2, 1)), 1);
  EXPECT_EQ(orbit_dimension(build(FamilyId::Nx).basis, MVector(2, 1, 1)), 3);
}

TEST(OrbitCausal, NiStrata) {
  const auto& s = build(FamilyId::Ni).basis;
  EXPECT_EQ(orbit_causal(s, MVector(1, 2, 0)), Causal::Lorentzian);
  EXPECT_EQ(orbit_causal(s, MVector(2, 1, 0)), Causal::Riemannian);
  EXPECT_EQ(orbit_causal(s, MVector(1, 1, 0)), Causal::Degenerate);
  EXPECT_EQ(orbit_causal(s, MVector(1, -1, 3)), Causal::Degenerate);
  EXPECT_EQ(orbit_causal(s, MVector(0, 0, 3)), Causal::Spacelike);
}

TEST(OrbitCausal, PlanesOfTranslationGroups) {
  for (PlaneKind k : {PlaneKind::Riemannian, PlaneKind::Lorentzian, PlaneKind::Degenerate}) {
    FamilyParams p = default_params(FamilyId::Pa);
    p.plane = k;
    const CatalogEntry e = build(FamilyId::Pa, p);
    EXPECT_EQ(orbit_causal(e.basis, MVector(0.3, -2, 1)), detail::plane_causal(k));
  }
}

TEST(Stabilizer, DimensionsAdd) {
  std::mt19937_64 rng(2);
  for (FamilyId id : kAllFamilies) {
    const CatalogEntry e = build(id);
    for (const auto& p : generic_points(rng, 10))
      EXPECT_EQ(orbit_dimension(e.basis, p) + stabilizer_algebra(e.basis, p).dim(), e.basis.dim());
  }
  // Stabilizer at p is tangent-field-free at p.
  const auto stab = stabilizer_algebra(build(FamilyId::Nxii).basis, MVector(1, 2, 3));
  ASSERT_EQ(stab.dim(), 1);
  EXPECT_LT(stab.basis[0].field(MVector(1, 2, 3)).norm(), 1e-12);
}

TEST(FlowDisplacement, MatchesExponential) {
  const AlgebraElement el{0.5 * B1() + B3(), MVector(1, 0, 2)};
  const MVector p(0.3, 1.0, -2.0);
  for (double s : {-3.0, -0.1, 0.0, 0.2, 4.0})
    EXPECT_LT((flow_displacement(el, s, p) - (exp_element(el, s)(p) - p)).norm(), 1e-11);
  // Exactly zero at a fixed point.
  EXPECT_EQ(flow_displacement({B1(), -e12()}, 20.0, MVector(1, 1, 0)).norm(), 0.0);
}

TEST(TangentNormQuadratic, HandValues) {
  // <p,p> = 12, (x - y)^2 = 1, discriminant 4 * 1 * 12.
  EXPECT_DOUBLE_EQ(an_tangent_discriminant(MVector(1, 2, 3)), 48.0);
  EXPECT_DOUBLE_EQ(an_tangent_norm(2.0, MVector(1, 2, 3)), -23.0);
  EXPECT_DOUBLE_EQ(an_tangent_discriminant(MVector(3, 3, 1)), 0.0);
}

TEST(ShapeOperator, ScrewBoostIsNilpotent) {
  for (int sign : {1, -1}) {
    FamilyParams p = default_params(FamilyId::Pd);
    p.beta = 0.5;
    p.sign = sign;
    const CatalogEntry e = build(FamilyId::Pd, p);
    const ShapeOperatorResult r = shape_operator(e, MVector(1.0, -0.3, 0.7));
    EXPECT_LT(std::abs(r.lambda1), 1e-6);
    EXPECT_LT(std::abs(r.lambda2), 1e-6);
    EXPECT_GT(r.rank_one_margin, 1e-3);
    EXPECT_EQ(r.diagnosis, ShapeDiagnosis::NonDiagonalizable);
    EXPECT_NEAR(norm2(r.normal), 1.0, 1e-12);
    EXPECT_NEAR(inner(r.v1, r.v2), -1.0, 1e-12);
    EXPECT_NEAR(norm2(r.v1), 0.0, 1e-12);
  }
}

TEST(ShapeOperator, RejectsDegenerateOrbitsAndOtherFamilies) {
  const CatalogEntry e = build(FamilyId::Pd);
  EXPECT_THROW(shape_operator(e, MVector(1, 1, 0)), DomainError);
  EXPECT_THROW(shape_operator(build(FamilyId::Ni), MVector(1, 2, 0)), DomainError);
}

TEST(DegenerateNormal, NullDirection) {
  const auto n = degenerate_normal(build(FamilyId::Pd).basis, MVector(2, 2, 1));
  ASSERT_TRUE(n.has_value());
  EXPECT_LT((*n - e12().normalized()).norm(), 1e-12);
  EXPECT_FALSE(degenerate_normal(build(FamilyId::Pd).basis, MVector(2, 1, 1)).has_value());
}

TEST(Invariant, ConservedAlongOrbits) {
  for (FamilyId id : {FamilyId::Ni, FamilyId::Nxii, FamilyId::Pb, FamilyId::Pc}) {
    const CatalogEntry e = build(id);
    ASSERT_TRUE(static_cast<bool>(e.invariant)) << to_string(id);
    const MVector p(0.4, 1.7, -0.9);
    const double f0 = e.invariant(p);
    for (const auto& q : sample_orbit(e, p, tensor_grid(e.basis.dim(), 4, 1.5)))
      EXPECT_NEAR(e.invariant(q), f0, 1e-9 * std::max(1.0, std::abs(f0))) << to_string(id);
  }
}

TEST(Sampling, GridAndCsv) {
  EXPECT_EQ(tensor_grid(2, 3, 1.0).size(), 9u);
  EXPECT_EQ(tensor_grid(3, 2, 1.0).front(), (std::vector<double>{-1, -1, -1}));
  EXPECT_TRUE(tensor_grid(0, 3, 1.0).empty());
  const CatalogEntry e = build(FamilyId::Pb);
  const Grid g = tensor_grid(2, 3, 1.0);
  std::ostringstream os;
  write_orbit_csv(os, g, sample_orbit(e, MVector(0.1, 1, 0), g), 2);
  const std::string csv = os.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t1,t2,x1,x2,x3");
  EXPECT_NE(csv.find("0.10000000000000001"), std::string::npos);
  EXPECT_THROW(sample_orbit(e, MVector::Zero(), tensor_grid(3, 2, 1.0)), DomainError);
}

TEST(Evidence, NumericGuesses) {
  EXPECT_EQ(orbit_evidence(build(FamilyId::Pb).basis, MVector(5, 0, 0)).numeric_guess, OrbitClass::Singular);
  EXPECT_EQ(orbit_evidence(build(FamilyId::Pb).basis, MVector(5, 1, 0)).numeric_guess, OrbitClass::Principal);
  EXPECT_EQ(orbit_evidence(build(FamilyId::Nxi).basis, MVector(1, 1, 2)).numeric_guess, OrbitClass::Exceptional);
  EXPECT_EQ(orbit_evidence(build(FamilyId::Nxi).basis, MVector(1, 2, 2)).numeric_guess, OrbitClass::OpenOrbit);
  const OrbitClassVerdict v = orbit_class(build(FamilyId::Nxi), MVector(1, 1, 2));
  EXPECT_EQ(v.cls, OrbitClass::Exceptional);
  EXPECT_TRUE(v.evidence_agrees);
}
