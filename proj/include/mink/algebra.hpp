#pragma once

// The Lie algebra so(1,2) (+)_pi R^3 of infinitesimal isometries of
// Minkowski 3-space.

#include "mink/linalg.hpp"
#include "mink/minkowski.hpp"

#include <limits>
#include <string_view>
#include <utility>
#include <vector>

namespace mink {

using Coords12 = Eigen::Matrix<double, 12, 1>;

/// Infinitesimal isometry x -> X x + v.
struct AlgebraElement {
  Mat3 X = Mat3::Zero();
  MVector v = MVector::Zero();

  AlgebraElement() = default;
  AlgebraElement(const Mat3& X_, const MVector& v_) : X(X_), v(v_) {}

  /// Row-major X followed by v.
  Coords12 coords() const {
    Coords12 c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c(3 * i + j) = X(i, j);
    c.tail<3>() = v;
    return c;
  }

  static AlgebraElement from_coords(const Eigen::Ref<const Eigen::VectorXd>& c) {
    AlgebraElement el;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) el.X(i, j) = c(3 * i + j);
    el.v = c.tail<3>();
    return el;
  }

  MVector field(const MVector& p) const { return X * p + v; }

  AlgebraElement operator+(const AlgebraElement& o) const { return {X + o.X, v + o.v}; }
  AlgebraElement operator-(const AlgebraElement& o) const { return {X - o.X, v - o.v}; }
  AlgebraElement operator*(double s) const { return {s * X, s * v}; }
  double norm() const { return coords().norm(); }
};

inline AlgebraElement operator*(double s, const AlgebraElement& a) { return a * s; }

inline Mat3 unit_matrix(int i, int j) {
  Mat3 m = Mat3::Zero();
  m(i - 1, j - 1) = 1.0;
  return m;
}

/// Boost generator E12 + E21.
inline Mat3 B1() { return unit_matrix(1, 2) + unit_matrix(2, 1); }
/// Rotation generator E23 - E32.
inline Mat3 B2() { return unit_matrix(2, 3) - unit_matrix(3, 2); }
/// Nilpotent generator E13 + E31 + B2; B3^3 = 0.
inline Mat3 B3() { return unit_matrix(1, 3) + unit_matrix(3, 1) + B2(); }

inline AlgebraElement linear_el(const Mat3& X) { return {X, MVector::Zero()}; }
inline AlgebraElement translation_el(const MVector& v) { return {Mat3::Zero(), v}; }

inline AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  return {a.X * b.X - b.X * a.X, a.X * b.v - b.X * a.v};
}

/// Adjoint action of a motion g = (A, a): the generator of g exp(s el) g^{-1}.
inline AlgebraElement adjoint(const Motion& g, const AlgebraElement& el) {
  const Mat3 Ainv = eta() * g.A().transpose() * eta();
  const Mat3 Y = g.A() * el.X * Ainv;
  return {Y, g.A() * el.v - Y * g.a()};
}

enum class GeneratorClass { Zero, Elliptic, Hyperbolic, Parabolic };

inline std::string_view to_string(GeneratorClass g) {
  switch (g) {
    case GeneratorClass::Zero: return "zero";
    case GeneratorClass::Elliptic: return "elliptic";
    case GeneratorClass::Hyperbolic: return "hyperbolic";
    case GeneratorClass::Parabolic: return "parabolic";
  }
  return "?";
}

/// Sign of trace(X^2): negative for rotations, positive for boosts.
inline GeneratorClass generator_class(const Mat3& X, double tol = kMembershipTol) {
  const double tr = (X * X).trace();
  if (tr < -tol) return GeneratorClass::Elliptic;
  if (tr > tol) return GeneratorClass::Hyperbolic;
  if (X.cwiseAbs().maxCoeff() > tol) return GeneratorClass::Parabolic;
  return GeneratorClass::Zero;
}

/// generator_class on the direction of X (scale free).
inline GeneratorClass generator_class_normalized(const Mat3& X, double tol = kMembershipTol) {
  const double n = X.norm();
  if (n <= tol) return GeneratorClass::Zero;
  return generator_class(X / n, tol);
}

/// A finite basis of a subspace of so(1,2) (+) R^3.
struct SubalgebraSpec {
  std::vector<AlgebraElement> basis;

  SubalgebraSpec() = default;
  explicit SubalgebraSpec(std::vector<AlgebraElement> b) : basis(std::move(b)) {}
  SubalgebraSpec(std::initializer_list<AlgebraElement> b) : basis(b) {}

  int dim() const { return static_cast<int>(basis.size()); }

  /// 12 x dim coordinate matrix.
  Eigen::MatrixXd coords() const {
    Eigen::MatrixXd M(12, dim());
    for (int k = 0; k < dim(); ++k) M.col(k) = basis[k].coords();
    return M;
  }

  Eigen::MatrixXd linear_coords() const { return coords().topRows(9); }
  Eigen::MatrixXd translation_coords() const { return coords().bottomRows(3); }

  AlgebraElement combine(const Eigen::Ref<const Eigen::VectorXd>& c) const {
    AlgebraElement out;
    for (int k = 0; k < dim(); ++k) out = out + basis[k] * c(k);
    return out;
  }
};

inline bool is_independent(const SubalgebraSpec& s, double tol = kMembershipTol) {
  if (s.dim() == 0) return true;
  if (s.dim() > 12) return false;
  return linalg::conditioning(s.coords()) > tol;
}

inline bool all_in_so12(const SubalgebraSpec& s, double tol = kMembershipTol) {
  for (const auto& el : s.basis)
    if (!so12_check(el.X, tol)) return false;
  return true;
}

/// Distance of el from span(s), relative to max(|el|, 1).
inline double span_residual(const SubalgebraSpec& s, const AlgebraElement& el) {
  const Coords12 c = el.coords();
  return linalg::span_residual(s.coords(), c) / std::max(c.norm(), 1.0);
}

inline bool in_span(const SubalgebraSpec& s, const AlgebraElement& el,
                    double tol = kMembershipTol) {
  return span_residual(s, el) < tol;
}

/// Largest residual of a pairwise bracket outside span(s).
inline double closure_residual(const SubalgebraSpec& s) {
  double worst = 0.0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      worst = std::max(worst, span_residual(s, bracket(s.basis[i], s.basis[j])));
  return worst;
}

inline bool is_subalgebra(const SubalgebraSpec& s, double tol = kMembershipTol) {
  return all_in_so12(s, tol) && is_independent(s, tol) && closure_residual(s) < tol;
}

/// [ambient, sub] contained in sub.
inline bool is_ideal(const SubalgebraSpec& sub, const SubalgebraSpec& ambient,
                     double tol = kMembershipTol) {
  for (const auto& el : sub.basis)
    if (!in_span(ambient, el, tol)) return false;
  for (const auto& a : ambient.basis)
    for (const auto& b : sub.basis)
      if (!in_span(sub, bracket(a, b), tol)) return false;
  return true;
}

struct LinearPart {
  int dim = 0;
  std::vector<Mat3> basis;
};

/// Image of span(s) under (X, v) -> X.
inline LinearPart linear_part(const SubalgebraSpec& s, double tol = linalg::kRankTol) {
  const Eigen::MatrixXd R = linalg::range(s.linear_coords(), tol);
  LinearPart out;
  out.dim = static_cast<int>(R.cols());
  for (int k = 0; k < R.cols(); ++k) {
    Mat3 X;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) X(i, j) = R(3 * i + j, k);
    out.basis.push_back(X);
  }
  return out;
}

struct TranslationKernel {
  int dim = 0;
  Eigen::MatrixXd basis;  // 3 x dim, orthonormal columns
};

/// The subspace {v : (0, v) in span(s)}.
inline TranslationKernel kernel_of_l(const SubalgebraSpec& s, double tol = linalg::kRankTol) {
  TranslationKernel out;
  if (s.dim() == 0) {
    out.basis = Eigen::MatrixXd(3, 0);
    return out;
  }
  const Eigen::MatrixXd N = linalg::nullspace(s.linear_coords(), tol);
  const Eigen::MatrixXd V = s.translation_coords() * N;
  out.basis = linalg::range(V, tol);
  out.dim = static_cast<int>(out.basis.cols());
  return out;
}

inline SubalgebraSpec translation_ideal(const TranslationKernel& k) {
  SubalgebraSpec s;
  for (int i = 0; i < k.dim; ++i) s.basis.push_back(translation_el(k.basis.col(i)));
  return s;
}

inline SubalgebraSpec adjoint(const Motion& g, const SubalgebraSpec& s) {
  SubalgebraSpec out;
  for (const auto& el : s.basis) out.basis.push_back(adjoint(g, el));
  return out;
}

/// Largest residual of a's basis outside span(b), both directions.
inline double span_distance(const SubalgebraSpec& a, const SubalgebraSpec& b) {
  if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& el : a.basis) worst = std::max(worst, span_residual(b, el));
  for (const auto& el : b.basis) worst = std::max(worst, span_residual(a, el));
  return worst;
}

}  // namespace mink
