#pragma once

// Orbit geometry at a point: tangent space, dimension, stabilizer algebra,
// induced-metric type, sampled orbits, the shape operator of the screw-boost
// family, and the tangent-norm quadratic of AN.

#include "mink/catalog.hpp"
#include "mink/exponential.hpp"

#include <complex>
#include <locale>
#include <ostream>
#include <sstream>
#include <vector>

namespace mink {

/// Fundamental fields X p + v of the basis at p (columns).
inline Eigen::Matrix<double, 3, Eigen::Dynamic> tangent_matrix(const SubalgebraSpec& spec,
                                                               const MVector& p) {
  Eigen::Matrix<double, 3, Eigen::Dynamic> T(3, spec.dim());
  for (int k = 0; k < spec.dim(); ++k) T.col(k) = spec.basis[k].field(p);
  return T;
}

inline std::vector<MVector> tangent_basis(const SubalgebraSpec& spec, const MVector& p) {
  std::vector<MVector> out;
  for (const auto& el : spec.basis) out.push_back(el.field(p));
  return out;
}

inline int orbit_dimension(const SubalgebraSpec& spec, const MVector& p) {
  return linalg::numeric_rank(tangent_matrix(spec, p));
}

/// The subalgebra {xi in span : xi(p) = 0}.
inline SubalgebraSpec stabilizer_algebra(const SubalgebraSpec& spec, const MVector& p) {
  SubalgebraSpec out;
  if (spec.dim() == 0) return out;
  const Eigen::MatrixXd N = linalg::nullspace(tangent_matrix(spec, p));
  for (int k = 0; k < N.cols(); ++k) out.basis.push_back(spec.combine(N.col(k)));
  return out;
}

/// Gram determinant below this fraction of |G|_F^2 means degenerate.
inline constexpr double kDegenerateGramTol = 1e-9;

/// Causal type of the subspace spanned by the columns of T.
inline Causal subspace_causal(const Eigen::MatrixXd& T) {
  const Eigen::MatrixXd Q = linalg::range(T);
  switch (Q.cols()) {
    case 0: return Causal::ZeroVector;
    case 1: return causal_character(Q.col(0));
    case 3: return Causal::Lorentzian;
    default: break;
  }
  const Eigen::Matrix2d G = Q.transpose() * eta() * Q;
  const double det = G.determinant();
  if (std::abs(det) <= kDegenerateGramTol * G.squaredNorm()) return Causal::Degenerate;
  return det < 0 ? Causal::Lorentzian : Causal::Riemannian;
}

inline Causal orbit_causal(const SubalgebraSpec& spec, const MVector& p) {
  return subspace_causal(tangent_matrix(spec, p));
}

/// Displacement exp(s el)(p) - p = s V(sX) (Xp + v), never formed by subtraction.
inline MVector flow_displacement(const AlgebraElement& el, double s, const MVector& p) {
  const Mat3 M = s * el.X;
  const Mat3 M2 = M * M;
  const auto c = detail::exp_coeffs(0.5 * M2.trace());
  const Mat3 V = Mat3::Identity() + c.b1 * M + c.b2 * M2;
  return s * (V * el.field(p));
}

using Grid = std::vector<std::vector<double>>;

/// Points exp(t1 xi1) exp(t2 xi2) ... exp(tk xik) p over the grid.
inline std::vector<MVector> sample_orbit(const CatalogEntry& entry, const MVector& p,
                                         const Grid& grid) {
  if (grid.empty()) return {p};
  std::vector<MVector> out;
  out.reserve(grid.size());
  for (const auto& ts : grid) {
    if (static_cast<int>(ts.size()) != entry.basis.dim())
      throw DomainError("sample_orbit: grid tuple length must equal the algebra dimension");
    MVector q = p;
    for (int k = entry.basis.dim() - 1; k >= 0; --k)
      q = exp_element(entry.basis.basis[k], ts[k])(q);
    out.push_back(q);
  }
  return out;
}

/// Uniform tensor grid with n points per axis on [-range, range].
inline Grid tensor_grid(int dim, int n, double range) {
  Grid g;
  if (dim == 0 || n <= 0) return g;
  std::vector<int> idx(dim, 0);
  const auto coord = [&](int i) {
    return n == 1 ? 0.0 : -range + 2.0 * range * i / (n - 1);
  };
  while (true) {
    std::vector<double> ts(dim);
    for (int k = 0; k < dim; ++k) ts[k] = coord(idx[k]);
    g.push_back(std::move(ts));
    int k = 0;
    while (k < dim && ++idx[k] == n) idx[k++] = 0;
    if (k == dim) break;
  }
  return g;
}

/// CSV: t1..tk, x1, x2, x3 with 17 significant digits, C locale.
inline void write_orbit_csv(std::ostream& os, const Grid& grid,
                            const std::vector<MVector>& points, int dim) {
  std::ostringstream ss;
  ss.imbue(std::locale::classic());
  ss.precision(17);
  for (int k = 0; k < dim; ++k) ss << 't' << (k + 1) << ',';
  ss << "x1,x2,x3\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int k = 0; k < dim; ++k) ss << (i < grid.size() ? grid[i][k] : 0.0) << ',';
    ss << points[i](0) << ',' << points[i](1) << ',' << points[i](2) << '\n';
  }
  os << ss.str();
}

// ---------------------------------------------------------------------------
// Shape operator of the screw-boost family.

enum class ShapeDiagnosis { Diagonalizable, NonDiagonalizable };

inline std::string_view to_string(ShapeDiagnosis d) {
  return d == ShapeDiagnosis::NonDiagonalizable ? "non-diagonalizable" : "diagonalizable";
}

struct ShapeOperatorResult {
  Eigen::Matrix2d S;  // columns: S(v1), S(v2) in the null basis (v1, v2)
  std::complex<double> lambda1, lambda2;
  double rank_one_margin = 0.0;  // largest singular value of S - mean(lambda) I
  MVector normal;                // unit spacelike normal at p
  MVector v1, v2;                // null tangent basis, <v1, v2> = -1
  ShapeDiagnosis diagnosis = ShapeDiagnosis::Diagonalizable;
};

inline constexpr double kShapeStep = 1e-4;
inline constexpr double kShapeTol = 1e-6;

/// Shape operator of the P-d orbit through p with respect to its unit
/// spacelike normal, by central differences of the normal field along the
/// one-parameter flows of the basis.
inline ShapeOperatorResult shape_operator(const CatalogEntry& entry, const MVector& p,
                                          double h = kShapeStep) {
  if (entry.id != FamilyId::Pd) throw DomainError("shape_operator: only defined for P-d");
  const AlgebraElement& screw = entry.basis.basis[0];
  const AlgebraElement& shift = entry.basis.basis[1];
  const MVector w1 = shift.v;
  const MVector w2 = screw.field(p);
  if (std::abs(inner(w1, w2)) < 1e-6 * w1.norm())
    throw DomainError("shape_operator: degenerate orbit, no unit normal");

  // The normal is affine in the base point through w2; evaluate it at
  // p + d by adding the increment rather than re-forming w2.
  const MVector n0 = lorentz_cross(w1, w2);
  const auto normal_at = [&](const MVector& d) -> MVector {
    const MVector n = n0 + lorentz_cross(w1, screw.X * d);
    return n / std::sqrt(norm2(n));
  };
  const MVector N = normal_at(MVector::Zero());

  // Null tangent basis with <v1, v2> = -1.
  const MVector v1 = w1 / w1.norm();
  MVector m = w2 - (norm2(w2) / (2.0 * inner(v1, w2))) * v1;
  const MVector v2 = m * (-1.0 / inner(v1, m));

  const auto derivative = [&](const AlgebraElement& el) -> MVector {
    const MVector fwd = normal_at(flow_displacement(el, h, p));
    const MVector bwd = normal_at(flow_displacement(el, -h, p));
    return -(fwd - bwd) / (2.0 * h);
  };
  // S(w) expressed as a v1 + b v2: <S w, v2> = -a, <S w, v1> = -b.
  const auto coords = [&](const MVector& Sw) -> Eigen::Vector2d {
    return {-inner(Sw, v2), -inner(Sw, v1)};
  };
  // Tangent basis (w1, w2) -> null basis (v1, v2).
  Eigen::Matrix2d W;
  W.col(0) = Eigen::Vector2d(-inner(w1, v2), -inner(w1, v1));
  W.col(1) = Eigen::Vector2d(-inner(w2, v2), -inner(w2, v1));
  Eigen::Matrix2d SW;
  SW.col(0) = coords(derivative(shift));
  SW.col(1) = coords(derivative(screw));

  ShapeOperatorResult r;
  r.S = SW * W.inverse();
  r.normal = N;
  r.v1 = v1;
  r.v2 = v2;
  const double tr = r.S.trace();
  const double det = r.S.determinant();
  const std::complex<double> disc = std::sqrt(std::complex<double>(tr * tr / 4.0 - det));
  r.lambda1 = tr / 2.0 + disc;
  r.lambda2 = tr / 2.0 - disc;
  const Eigen::Matrix2d shifted = r.S - (tr / 2.0) * Eigen::Matrix2d::Identity();
  r.rank_one_margin = linalg::operator_norm(shifted);
  const bool coincide = std::abs(r.lambda1 - r.lambda2) <= kShapeTol;
  const bool one_dim_eigenspace = r.rank_one_margin > kShapeTol;
  r.diagnosis = coincide && one_dim_eigenspace ? ShapeDiagnosis::NonDiagonalizable
                                               : ShapeDiagnosis::Diagonalizable;
  return r;
}

/// Null normal direction of a degenerate orbit (unit Euclidean length,
/// first component >= 0), or nullopt if the tangent plane is not degenerate.
inline std::optional<MVector> degenerate_normal(const SubalgebraSpec& spec, const MVector& p) {
  const Eigen::MatrixXd Q = linalg::range(tangent_matrix(spec, p));
  if (Q.cols() != 2 || subspace_causal(Q) != Causal::Degenerate) return std::nullopt;
  MVector n = lorentz_cross(Q.col(0), Q.col(1)).normalized();
  if (n(0) < 0) n = -n;
  return n;
}

// ---------------------------------------------------------------------------
// Tangent-norm quadratic of AN.

/// <w, w> for w the velocity of exp(t(alpha B1 + B3)) p at t = 0.
inline double an_tangent_norm(double alpha, const MVector& p) {
  const double x = p(0), y = p(1), z = p(2);
  return alpha * alpha * (x * x - y * y) + 2.0 * alpha * z * (x - y) + (x - y) * (x - y);
}

/// Discriminant of an_tangent_norm as a quadratic in alpha.
inline double an_tangent_discriminant(const MVector& p) {
  const double x = p(0), y = p(1), z = p(2);
  const double a = x * x - y * y, b = 2.0 * z * (x - y), c = (x - y) * (x - y);
  return b * b - 4.0 * a * c;
}

// ---------------------------------------------------------------------------
// Orbit-type evidence.

struct OrbitEvidence {
  int orbit_dim = 0;
  int stabilizer_dim = 0;
  int neighbor_max_dim = 0;
  bool neighborhood_uniform = true;  // all stencil points share (dim, stab dim)
  OrbitClass numeric_guess = OrbitClass::Principal;
};

inline constexpr double kStencilRadius = 1e-3;

/// Compares (orbit dim, stabilizer dim) at p with the 26 points of a
/// 3x3x3 stencil of the given radius. Advisory only.
inline OrbitEvidence orbit_evidence(const SubalgebraSpec& spec, const MVector& p,
                                    double radius = kStencilRadius) {
  OrbitEvidence ev;
  ev.orbit_dim = orbit_dimension(spec, p);
  ev.stabilizer_dim = spec.dim() - ev.orbit_dim;
  ev.neighbor_max_dim = ev.orbit_dim;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      for (int k = -1; k <= 1; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        const MVector q = p + radius * MVector(i, j, k);
        const int d = orbit_dimension(spec, q);
        ev.neighbor_max_dim = std::max(ev.neighbor_max_dim, d);
        if (d != ev.orbit_dim) ev.neighborhood_uniform = false;
      }
  if (ev.orbit_dim == 3)
    ev.numeric_guess = OrbitClass::OpenOrbit;
  else if (ev.neighborhood_uniform)
    ev.numeric_guess = OrbitClass::Principal;
  else if (ev.orbit_dim == 2 && ev.neighbor_max_dim == 3)
    ev.numeric_guess = OrbitClass::Exceptional;
  else
    ev.numeric_guess = OrbitClass::Singular;
  return ev;
}

struct OrbitClassVerdict {
  OrbitClass cls;  // from the catalog
  OrbitEvidence evidence;
  bool evidence_agrees = false;
};

inline OrbitClassVerdict orbit_class(const CatalogEntry& entry, const MVector& p) {
  OrbitClassVerdict v;
  v.cls = expected_orbit(entry, p).cls;
  v.evidence = orbit_evidence(entry.basis, p);
  v.evidence_agrees = v.evidence.numeric_guess == v.cls;
  return v;
}

}  // namespace mink
