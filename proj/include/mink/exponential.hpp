#pragma once

// Exponentials of infinitesimal isometries. Two independent routes:
// closed forms using X^3 = (tr X^2 / 2) X, and a generic Taylor series with
// scaling and squaring on the 4x4 homogeneous embedding.

#include "mink/algebra.hpp"

#include <cmath>

namespace mink {

using Mat4 = Eigen::Matrix4d;

namespace detail {

// Coefficients (a1, a2) with
//   exp(M)     = I + a1 M + a2 M^2
//   V(M)       = I + b1 M + b2 M^2,   V(M) = sum_k M^k / (k+1)!
// for M^3 = kappa M, written in terms of s^2 = kappa.
struct ExpCoeffs {
  double a1, a2, b1, b2;
};

inline ExpCoeffs exp_coeffs(double kappa) {
  const double s = std::sqrt(std::abs(kappa));
  if (s < 1.0) {
    // Power series in kappa; the closed forms below cancel badly for small s.
    // a1 = sum k^j/(2j+1)!, a2 = b1 = sum k^j/(2j+2)!, b2 = sum k^j/(2j+3)!.
    double a1 = 0.0, a2 = 0.0, b2 = 0.0, pw = 1.0, fact = 1.0;  // fact = (2j+1)!
    for (int j = 0; j < 12; ++j) {
      a1 += pw / fact;
      a2 += pw / (fact * (2 * j + 2));
      b2 += pw / (fact * (2 * j + 2) * (2 * j + 3));
      pw *= kappa;
      fact *= (2.0 * j + 2) * (2.0 * j + 3);
    }
    return {a1, a2, a2, b2};
  }
  if (kappa > 0) {
    const double ch = std::cosh(s), sh = std::sinh(s);
    return {sh / s, (ch - 1.0) / (s * s), (ch - 1.0) / (s * s), (sh - s) / (s * s * s)};
  }
  const double c = std::cos(s), sn = std::sin(s);
  return {sn / s, (1.0 - c) / (s * s), (1.0 - c) / (s * s), (s - sn) / (s * s * s)};
}

}  // namespace detail

/// exp(M) for M in so(1,2), by generator class.
inline Mat3 exp_linear(const Mat3& M) {
  const Mat3 M2 = M * M;
  const auto c = detail::exp_coeffs(0.5 * M2.trace());
  return Mat3::Identity() + c.a1 * M + c.a2 * M2;
}

/// Time-t flow of the infinitesimal isometry el, closed form.
inline Motion exp_element(const AlgebraElement& el, double t) {
  if (!so12_check(el.X)) throw DomainError("exp_element: linear part not in so(1,2)");
  const Mat3 M = t * el.X;
  const Mat3 M2 = M * M;
  const auto c = detail::exp_coeffs(0.5 * M2.trace());
  const Mat3 E = Mat3::Identity() + c.a1 * M + c.a2 * M2;
  const Mat3 V = Mat3::Identity() + c.b1 * M + c.b2 * M2;
  return Motion::trusted(E, V * (t * el.v));
}

/// Taylor series (20 terms) with scaling and squaring until |H|_inf <= 0.5.
inline Mat4 exp_series(const Mat4& H) {
  int squarings = 0;
  double norm = H.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const Mat4 Hs = H / std::ldexp(1.0, squarings);
  Mat4 term = Mat4::Identity();
  Mat4 sum = Mat4::Identity();
  for (int k = 1; k <= 20; ++k) {
    term = term * Hs / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline Mat4 homogeneous(const AlgebraElement& el) {
  Mat4 H = Mat4::Zero();
  H.topLeftCorner<3, 3>() = el.X;
  H.topRightCorner<3, 1>() = el.v;
  return H;
}

/// Time-t flow of el via the series route.
inline Motion exp_element_series(const AlgebraElement& el, double t) {
  if (!so12_check(el.X)) throw DomainError("exp_element_series: linear part not in so(1,2)");
  const Mat4 E = exp_series(t * homogeneous(el));
  return Motion::trusted(E.topLeftCorner<3, 3>(), E.topRightCorner<3, 1>());
}

}  // namespace mink
