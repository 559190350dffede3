#include "mink/algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mink;

namespace {

AlgebraElement random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-2, 2);
  return {U(rng) * B1() + U(rng) * B2() + U(rng) * B3(), MVector(U(rng), U(rng), U(rng))};
}

}  // namespace

TEST(Generators, HandValues) {
  Mat3 b3;
  b3 << 0, 0, 1, 0, 0, 1, 1, -1, 0;
  EXPECT_EQ(B3(), b3);
  EXPECT_TRUE((B3() * B3() * B3()).isZero());
  EXPECT_TRUE((B3() * e12()).isZero());
  EXPECT_TRUE((B3() * e3()).isApprox(e12()));
  EXPECT_TRUE((B3() * e1m2()).isApprox(2.0 * e3()));
}

TEST(Bracket, HandValues) {
  // [B1, B2] = E13 + E31.
  const Mat3 c = bracket(linear_el(B1()), linear_el(B2())).X;
  EXPECT_TRUE(c.isApprox(unit_matrix(1, 3) + unit_matrix(3, 1)));
  EXPECT_TRUE(bracket(linear_el(B1()), linear_el(B3())).X.isApprox(B3()));
  // [(X, 0), (0, w)] = (0, X w).
  const AlgebraElement t = bracket(linear_el(B1()), translation_el(e12()));
  EXPECT_TRUE(t.X.isZero());
  EXPECT_TRUE(t.v.isApprox(e12()));
  // [(B3, 0), (0, a e12 + b e3)] = (0, b e12): N-x with b != 0 leaves its span.
  const AlgebraElement nx = bracket(linear_el(B3()), translation_el(2.0 * e12() + 3.0 * e3()));
  EXPECT_TRUE(nx.v.isApprox(3.0 * e12()));
}

TEST(Bracket, JacobiAndAntisymmetry) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
    EXPECT_LT((bracket(x, y) + bracket(y, x)).norm(), 1e-13);
    const auto j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    EXPECT_LT(j.norm(), 1e-12);
  }
}

TEST(Adjoint, IsAHomomorphism) {
  std::mt19937_64 rng(12);
  const Motion g(rotation(0.8) * boost(-0.6), MVector(1, 2, -1));
  for (int i = 0; i < 20; ++i) {
    const auto x = random_element(rng), y = random_element(rng);
    const auto lhs = adjoint(g, bracket(x, y));
    const auto rhs = bracket(adjoint(g, x), adjoint(g, y));
    EXPECT_LT((lhs - rhs).norm(), 1e-11);
  }
  // Translation conjugation: (X, v) -> (X, v - X a).
  const auto t = adjoint(Motion::translation(e3()), AlgebraElement{B2(), MVector::Zero()});
  EXPECT_TRUE(t.v.isApprox(-(B2() * e3())));
}

TEST(GeneratorClass, Types) {
  EXPECT_EQ(generator_class(B1()), GeneratorClass::Hyperbolic);
  EXPECT_EQ(generator_class(B2()), GeneratorClass::Elliptic);
  EXPECT_EQ(generator_class(B3()), GeneratorClass::Parabolic);
  EXPECT_EQ(generator_class(Mat3::Zero()), GeneratorClass::Zero);
  EXPECT_EQ(generator_class(B1() + 2.0 * B2()), GeneratorClass::Elliptic);
}

TEST(Subalgebra, Membership) {
  const SubalgebraSpec pd{{B1(), e3()}, translation_el(e12())};
  EXPECT_TRUE(is_subalgebra(pd));
  EXPECT_FALSE(is_subalgebra(SubalgebraSpec{linear_el(B1()), linear_el(B2())}));
  EXPECT_FALSE(is_independent(SubalgebraSpec{linear_el(B1()), linear_el(2.0 * B1())}));
  EXPECT_FALSE(all_in_so12(SubalgebraSpec{linear_el(Mat3::Identity())}));
  EXPECT_TRUE(in_span(pd, translation_el(3.0 * e12())));
  EXPECT_FALSE(in_span(pd, translation_el(e3())));
}

TEST(Subalgebra, LinearPartAndKernel) {
  const SubalgebraSpec pd{{B1(), e3()}, translation_el(e12())};
  EXPECT_EQ(linear_part(pd).dim, 1);
  const TranslationKernel k = kernel_of_l(pd);
  ASSERT_EQ(k.dim, 1);
  EXPECT_NEAR(std::abs(k.basis.col(0).dot(e12().normalized())), 1.0, 1e-12);
  const SubalgebraSpec ideal = translation_ideal(k);
  EXPECT_TRUE(is_ideal(ideal, pd));
}

TEST(Subalgebra, SpanDistanceIgnoresBasisChoice) {
  const SubalgebraSpec a{linear_el(B1()), translation_el(e12())};
  const SubalgebraSpec b{linear_el(B1()) + translation_el(e12()) * 2.0, translation_el(-e12())};
  EXPECT_LT(span_distance(a, b), 1e-12);
  EXPECT_GT(span_distance(a, SubalgebraSpec{linear_el(B1()), translation_el(e3())}), 0.1);
}
