#pragma once

// Signature (1,2) geometry on R^3 and the identity component of the
// Poincare group acting on it.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mink {

using MVector = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Default structural-membership tolerance. All catalog data is O(1).
inline constexpr double kMembershipTol = 1e-9;

/// Raised when a value violates a documented precondition.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline const Mat3& eta() {
  static const Mat3 m = Eigen::Vector3d(-1.0, 1.0, 1.0).asDiagonal();
  return m;
}

inline MVector e1() { return {1.0, 0.0, 0.0}; }
inline MVector e2() { return {0.0, 1.0, 0.0}; }
inline MVector e3() { return {0.0, 0.0, 1.0}; }
inline MVector e12() { return {1.0, 1.0, 0.0}; }
inline MVector e1m2() { return {1.0, -1.0, 0.0}; }
inline MVector e123() { return {1.0, 1.0, 1.0}; }

inline double inner(const MVector& u, const MVector& v) {
  return -u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

inline double norm2(const MVector& v) { return inner(v, v); }

/// Vector w with <w, u> = <w, v> = 0 (Minkowski cross product).
inline MVector lorentz_cross(const MVector& u, const MVector& v) {
  return eta() * u.cross(v);
}

enum class Causal {
  Timelike,
  Null,
  Spacelike,
  ZeroVector,
  Lorentzian,
  Degenerate,
  Riemannian,
};

inline std::string_view to_string(Causal c) {
  switch (c) {
    case Causal::Timelike: return "timelike";
    case Causal::Null: return "null";
    case Causal::Spacelike: return "spacelike";
    case Causal::ZeroVector: return "zero-vector";
    case Causal::Lorentzian: return "lorentzian";
    case Causal::Degenerate: return "degenerate";
    case Causal::Riemannian: return "riemannian";
  }
  return "?";
}

inline Causal causal_character(const MVector& v, double tol = kMembershipTol) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale < tol) return Causal::ZeroVector;
  const double q = norm2(v);
  const double band = tol * scale * scale;
  if (q < -band) return Causal::Timelike;
  if (std::abs(q) <= band) return Causal::Null;
  return Causal::Spacelike;
}

/// True iff X lies in so(1,2), i.e. X^T eta + eta X = 0.
inline bool so12_check(const Mat3& X, double tol = kMembershipTol) {
  return std::abs(X(0, 1) - X(1, 0)) <= tol && std::abs(X(0, 2) - X(2, 0)) <= tol &&
         std::abs(X(1, 2) + X(2, 1)) <= tol && std::abs(X(0, 0)) <= tol &&
         std::abs(X(1, 1)) <= tol && std::abs(X(2, 2)) <= tol;
}

inline bool in_so0_12(const Mat3& A, double tol = kMembershipTol) {
  const Mat3 r = A.transpose() * eta() * A - eta();
  return r.cwiseAbs().maxCoeff() <= tol && std::abs(A.determinant() - 1.0) <= tol &&
         A(0, 0) >= 1.0 - tol;
}

/// An isometry x -> A x + a with A in SO_0(1,2).
class Motion {
public:
  Motion() : A_(Mat3::Identity()), a_(MVector::Zero()) {}

  Motion(const Mat3& A, const MVector& a) : A_(A), a_(a) {
    if (!in_so0_12(A_))
      throw DomainError("Motion: linear part is not in SO_0(1,2)");
    if (!a_.allFinite()) throw DomainError("Motion: non-finite translation");
  }

  /// Skips the invariant check; for products of already-valid motions.
  static Motion trusted(const Mat3& A, const MVector& a) {
    Motion m;
    m.A_ = A;
    m.a_ = a;
    return m;
  }

  static Motion translation(const MVector& a) { return trusted(Mat3::Identity(), a); }
  static Motion linear(const Mat3& A) { return Motion(A, MVector::Zero()); }

  const Mat3& A() const { return A_; }
  const MVector& a() const { return a_; }

  MVector operator()(const MVector& p) const { return A_ * p + a_; }

private:
  Mat3 A_;
  MVector a_;
};

inline MVector apply(const Motion& m, const MVector& p) { return m(p); }

inline Motion compose(const Motion& m1, const Motion& m2) {
  return Motion::trusted(m1.A() * m2.A(), m1.A() * m2.a() + m1.a());
}

inline Motion invert(const Motion& m) {
  // A^{-1} = eta A^T eta for A in O(1,2).
  const Mat3 inv = eta() * m.A().transpose() * eta();
  return Motion::trusted(inv, -(inv * m.a()));
}

inline double motion_distance(const Motion& m1, const Motion& m2) {
  return std::max((m1.A() - m2.A()).cwiseAbs().maxCoeff(),
                  (m1.a() - m2.a()).cwiseAbs().maxCoeff());
}

/// Boost in the (x1,x2) plane: cosh t (E11+E22) + sinh t (E12+E21) + E33.
inline Mat3 boost(double t) {
  Mat3 A = Mat3::Identity();
  A(0, 0) = A(1, 1) = std::cosh(t);
  A(0, 1) = A(1, 0) = std::sinh(t);
  return A;
}

/// Rotation in the (x2,x3) plane, exp(t B2).
inline Mat3 rotation(double t) {
  Mat3 A = Mat3::Identity();
  A(1, 1) = A(2, 2) = std::cos(t);
  A(1, 2) = std::sin(t);
  A(2, 1) = -std::sin(t);
  return A;
}

}  // namespace mink
