#pragma once

// Identifies the catalog family of an arbitrary subalgebra of
// so(1,2) (+) R^3: conjugation invariants, standardization of the linear
// part by an element of SO_0(1,2), removal of translation components by a
// pure translation, then a decision table over the normalized form.

#include "mink/catalog.hpp"
#include "mink/orbit.hpp"

#include <optional>
#include <string>

namespace mink {

enum class LinearType { Zero, Elliptic, Hyperbolic, Parabolic, TwoDimSolvable, Full };

inline std::string_view to_string(LinearType t) {
  switch (t) {
    case LinearType::Zero: return "zero";
    case LinearType::Elliptic: return "elliptic";
    case LinearType::Hyperbolic: return "hyperbolic";
    case LinearType::Parabolic: return "parabolic";
    case LinearType::TwoDimSolvable: return "two-dim-solvable";
    case LinearType::Full: return "full";
  }
  return "?";
}

struct InvariantSignature {
  int dim_g = 0;
  int dim_l = 0;
  LinearType linear_type = LinearType::Zero;
  int dim_ker = 0;
  std::optional<Causal> ker_causal;  // none when ker l = 0
  // Sign of the eigenvalue of the (oriented) hyperbolic generator on the
  // unique null line of ker l; 0 when there is no such unique line.
  int eigen_sign = 0;
  FamilyParams params;

  bool same_invariants(const InvariantSignature& o) const {
    return dim_g == o.dim_g && dim_l == o.dim_l && linear_type == o.linear_type &&
           dim_ker == o.dim_ker && ker_causal == o.ker_causal && eigen_sign == o.eigen_sign;
  }
};

namespace frames {

/// C in SO_0(1,2) with det fixed to +1 by flipping the last column.
inline Mat3 fix_orientation(Mat3 C) {
  if (C.determinant() < 0) C.col(2) = -C.col(2);
  return C;
}

/// C e1 = future unit vector along the timelike k.
inline Mat3 from_timelike(MVector k) {
  k /= std::sqrt(-norm2(k));
  if (k(0) < 0) k = -k;
  MVector a = std::abs(k(1)) <= std::abs(k(2)) ? e2() : e3();
  MVector f2 = a + inner(a, k) * k;
  f2 /= std::sqrt(norm2(f2));
  MVector f3 = lorentz_cross(k, f2);
  f3 /= std::sqrt(norm2(f3));
  Mat3 C;
  C << k, f2, f3;
  return fix_orientation(C);
}

/// C e3 = unit vector along the spacelike s (up to sign).
inline Mat3 from_spacelike(MVector s) {
  s /= std::sqrt(norm2(s));
  MVector f1 = e1() - inner(e1(), s) * s;
  f1 /= std::sqrt(-norm2(f1));
  MVector f2 = lorentz_cross(f1, s);
  f2 /= std::sqrt(norm2(f2));
  Mat3 C;
  C << f1, f2, s;
  if (C.determinant() < 0) C.col(1) = -C.col(1);
  return C;
}

/// C with C(e1 + e2) a positive multiple of the future null n and
/// C e3 = +-b, b unit spacelike orthogonal to n.
inline Mat3 from_null(MVector n, const MVector& b) {
  if (n(0) < 0) n = -n;
  MVector f1 = e1() - inner(e1(), b) * b;
  f1 /= std::sqrt(-norm2(f1));
  const double alpha = -inner(n, f1);
  const MVector f2 = n / alpha - f1;
  const MVector a = (f1 - f2) / alpha;
  Mat3 C;
  C << 0.5 * (n + a), 0.5 * (n - a), b;
  return fix_orientation(C);
}

}  // namespace frames

struct StandardForm {
  Motion conjugator;  // (C, 0) with C^{-1} X C = lambda B_i
  GeneratorClass cls = GeneratorClass::Zero;
  double lambda = 0.0;
  double residual = 0.0;
};

inline Mat3 standard_generator(GeneratorClass c) {
  switch (c) {
    case GeneratorClass::Elliptic: return B2();
    case GeneratorClass::Hyperbolic: return B1();
    case GeneratorClass::Parabolic: return B3();
    case GeneratorClass::Zero: break;
  }
  return Mat3::Zero();
}

namespace detail {

/// Right singular vector of M for its smallest singular value.
inline MVector near_kernel(const Mat3& M) {
  Eigen::JacobiSVD<Mat3> svd(M, Eigen::ComputeFullV);
  return svd.matrixV().col(2);
}

/// Right singular vector of M for its largest singular value.
inline MVector top_direction(const Mat3& M) {
  Eigen::JacobiSVD<Mat3> svd(M, Eigen::ComputeFullV);
  return svd.matrixV().col(0);
}

}  // namespace detail

/// Conjugates a nonzero X in so(1,2) to lambda B2, lambda B1 (lambda > 0)
/// or lambda B3. For elliptic and parabolic X the sign of lambda is a
/// conjugation invariant within SO_0(1,2) and is reported as found.
inline StandardForm standardize_linear(const Mat3& X) {
  if (!so12_check(X, 1e-8 * std::max(1.0, X.norm())))
    throw DomainError("standardize_linear: X is not in so(1,2)");
  const double scale = X.norm();
  if (scale < kMembershipTol) throw DomainError("standardize_linear: X = 0");
  const Mat3 Xn = X / scale;
  StandardForm out;
  out.cls = generator_class(Xn, 1e-8);
  Mat3 C = Mat3::Identity();
  switch (out.cls) {
    case GeneratorClass::Elliptic:
      C = frames::from_timelike(detail::near_kernel(Xn));
      break;
    case GeneratorClass::Hyperbolic: {
      const double mu = std::sqrt(0.5 * (Xn * Xn).trace());
      MVector np = detail::near_kernel(Xn - mu * Mat3::Identity());
      MVector nm = detail::near_kernel(Xn + mu * Mat3::Identity());
      if (np(0) < 0) np = -np;
      if (nm(0) < 0) nm = -nm;
      const double c = std::sqrt(-2.0 / inner(np, nm));
      np *= c;
      nm *= c;
      MVector s = detail::near_kernel(Xn);
      s /= std::sqrt(norm2(s));
      C << 0.5 * (np + nm), 0.5 * (np - nm), s;
      C = frames::fix_orientation(C);
      break;
    }
    case GeneratorClass::Parabolic: {
      const MVector n = detail::near_kernel(Xn);
      MVector b = Xn * detail::top_direction(Xn * Xn);
      // Image of X is n^perp; drop the roundoff component along e.g. n's partner.
      b /= std::sqrt(norm2(b));
      C = frames::from_null(n, b);
      break;
    }
    case GeneratorClass::Zero:
      throw DomainError("standardize_linear: X = 0");
  }
  const Mat3 Cinv = eta() * C.transpose() * eta();
  const Mat3 Y = Cinv * X * C;
  const Mat3 B = standard_generator(out.cls);
  out.lambda = (Y.cwiseProduct(B)).sum() / B.squaredNorm();
  out.residual = (Y - out.lambda * B).cwiseAbs().maxCoeff();
  out.conjugator = Motion(C, MVector::Zero());
  return out;
}

/// Linear parts standardized to span{B1, B3} for a two-dimensional l(g).
inline StandardForm standardize_two_dim(const LinearPart& lp) {
  const Mat3 d = lp.basis[0] * lp.basis[1] - lp.basis[1] * lp.basis[0];
  StandardForm sf = standardize_linear(d);
  if (sf.cls != GeneratorClass::Parabolic)
    throw DomainError("standardize_two_dim: derived algebra is not nilpotent");
  const Mat3& C = sf.conjugator.A();
  const Mat3 Cinv = eta() * C.transpose() * eta();
  SubalgebraSpec target{linear_el(B1()), linear_el(B3())};
  double worst = 0.0;
  for (const Mat3& X : lp.basis)
    worst = std::max(worst, span_residual(target, linear_el(Cinv * X * C)));
  sf.residual = worst;
  return sf;
}

struct TranslationNormalization {
  Motion translation;                   // (I, c)
  std::vector<Mat3> generators;         // standard linear generators used
  std::vector<MVector> residual_parts;  // P(v_i - Y_i c), not removable
  double section_residual = 0.0;        // fit of the generators in l(g)
};

inline std::vector<Mat3> standard_basis(int dim_l) {
  switch (dim_l) {
    case 1: return {};
    case 2: return {B1(), B3()};
    case 3: return {B1(), B2(), B3()};
    default: return {};
  }
}

/// For a spec whose linear part is already spanned by the given standard
/// generators, finds the pure translation (I, c) removing every translation
/// component that conjugation can remove, modulo ker l.
inline TranslationNormalization normalize_translations(const SubalgebraSpec& spec,
                                                       const std::vector<Mat3>& generators) {
  TranslationNormalization out;
  out.generators = generators;
  const TranslationKernel K = kernel_of_l(spec);
  const Mat3 P = Mat3::Identity() - K.basis * K.basis.transpose();
  const Eigen::MatrixXd L = spec.linear_coords();
  const Eigen::MatrixXd V = spec.translation_coords();
  const int m = static_cast<int>(generators.size());
  std::vector<MVector> sections;
  for (const Mat3& Y : generators) {
    Eigen::VectorXd y(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) y(3 * i + j) = Y(i, j);
    const Eigen::VectorXd coef = linalg::solve_ls(L, y);
    out.section_residual = std::max(out.section_residual, (L * coef - y).norm());
    sections.push_back(V * coef);
  }
  Eigen::MatrixXd A(3 * m, 3);
  Eigen::VectorXd rhs(3 * m);
  for (int i = 0; i < m; ++i) {
    A.middleRows(3 * i, 3) = P * generators[i];
    rhs.segment(3 * i, 3) = P * sections[i];
  }
  MVector c = MVector::Zero();
  if (m > 0) c = linalg::solve_ls(A, rhs);
  for (int i = 0; i < m; ++i) out.residual_parts.push_back(P * (sections[i] - generators[i] * c));
  out.translation = Motion::translation(c);
  return out;
}

enum class ClassifyOutcome { Matched, NotASubalgebra, NotCohomogeneityOne, Unmatched };

inline std::string_view to_string(ClassifyOutcome o) {
  switch (o) {
    case ClassifyOutcome::Matched: return "matched";
    case ClassifyOutcome::NotASubalgebra: return "not-a-subalgebra";
    case ClassifyOutcome::NotCohomogeneityOne: return "not-cohomogeneity-one";
    case ClassifyOutcome::Unmatched: return "unmatched";
  }
  return "?";
}

struct Classification {
  ClassifyOutcome outcome = ClassifyOutcome::Unmatched;
  std::optional<FamilyId> id;
  FamilyParams params;
  Motion conjugator;  // Ad(conjugator) maps span(spec) onto the catalog basis
  double residual = 0.0;
  std::optional<InvariantSignature> signature;
  std::string reason;

  bool matched() const { return outcome == ClassifyOutcome::Matched; }
};

/// Decisions on whether a normalized vector component vanishes.
inline constexpr double kClassifyTol = 1e-6;

namespace detail {

inline bool in_subspace(const Eigen::MatrixXd& Q, const MVector& v) {
  return linalg::span_residual(Q, v) < kClassifyTol * v.norm();
}

/// The first basis element with a nonzero linear part fixes the orientation
/// of a one-dimensional l(g).
inline Mat3 reference_generator(const SubalgebraSpec& spec) {
  double largest = 0.0;
  for (const auto& el : spec.basis) largest = std::max(largest, el.X.norm());
  for (const auto& el : spec.basis)
    if (el.X.norm() > 1e-6 * largest) return el.X;
  return Mat3::Zero();
}

inline int null_line_eigen_sign(const Mat3& X, const TranslationKernel& K) {
  if (K.dim == 0 || K.dim == 3) return 0;
  std::vector<MVector> nulls;
  if (K.dim == 1) {
    if (causal_character(K.basis.col(0), 1e-8) == Causal::Null) nulls.push_back(K.basis.col(0));
  } else {
    const MVector k1 = K.basis.col(0), k2 = K.basis.col(1);
    const double a = norm2(k1), b = inner(k1, k2), c = norm2(k2);
    // Null directions s k1 + k2 (or k1): a s^2 + 2 b s + c = 0.
    const double disc = b * b - a * c;
    if (std::abs(a) < 1e-8) {
      nulls.push_back(k1);
      if (std::abs(b) > 1e-8) nulls.push_back(-c / (2.0 * b) * k1 + k2);
    } else if (disc > 1e-8) {
      const double r = std::sqrt(disc);
      nulls.push_back(((-b + r) / a) * k1 + k2);
      nulls.push_back(((-b - r) / a) * k1 + k2);
    } else if (std::abs(disc) <= 1e-8) {
      nulls.push_back((-b / a) * k1 + k2);
    }
  }
  if (nulls.size() != 1) return 0;
  const MVector& n = nulls.front();
  const double lambda = n.dot(X * n) / n.squaredNorm();
  if (std::abs(lambda) < 1e-8 * std::max(1.0, X.norm())) return 0;
  return lambda > 0 ? 1 : -1;
}

}  // namespace detail

/// Conjugation invariants of a subalgebra. Throws DomainError if spec is not
/// a subalgebra.
inline InvariantSignature signature(const SubalgebraSpec& spec) {
  if (!is_subalgebra(spec)) throw DomainError("signature: not a subalgebra");
  InvariantSignature s;
  const LinearPart lp = linear_part(spec);
  const TranslationKernel K = kernel_of_l(spec);
  s.dim_g = spec.dim();
  s.dim_l = lp.dim;
  s.dim_ker = K.dim;
  if (K.dim > 0) s.ker_causal = subspace_causal(K.basis);
  switch (lp.dim) {
    case 0: s.linear_type = LinearType::Zero; break;
    case 1: {
      switch (generator_class_normalized(lp.basis[0], 1e-8)) {
        case GeneratorClass::Elliptic: s.linear_type = LinearType::Elliptic; break;
        case GeneratorClass::Hyperbolic: s.linear_type = LinearType::Hyperbolic; break;
        case GeneratorClass::Parabolic: s.linear_type = LinearType::Parabolic; break;
        case GeneratorClass::Zero: s.linear_type = LinearType::Zero; break;
      }
      if (s.linear_type == LinearType::Hyperbolic)
        s.eigen_sign = detail::null_line_eigen_sign(detail::reference_generator(spec), K);
      break;
    }
    case 2: s.linear_type = LinearType::TwoDimSolvable; break;
    default: s.linear_type = LinearType::Full; break;
  }
  return s;
}

/// Canonical representative of a family's parameters: the values classify
/// reports. N-vii's beta is removable by a translation; N-x's direction is
/// normalized to unit length with first nonzero component positive.
inline FamilyParams canonical_params(FamilyId id, const FamilyParams& p) {
  FamilyParams out = default_params(id);
  const ParamSlots slots = param_slots(id);
  if (id == FamilyId::Pd) {
    out.beta = p.beta;
    out.sign = p.sign;
  } else if (id == FamilyId::Nx) {
    double a = p.alpha, b = p.beta;
    const double n = std::hypot(a, b);
    a /= n;
    b /= n;
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
    }
    out.alpha = a;
    out.beta = b;
  } else if (slots.plane) {
    out.plane = p.plane;
  }
  return out;
}

inline Classification classify(const SubalgebraSpec& spec) {
  Classification out;
  if (!is_subalgebra(spec)) {
    out.outcome = ClassifyOutcome::NotASubalgebra;
    out.reason = "basis is not linearly independent, not in so(1,2) (+) R^3, or not closed under the bracket";
    return out;
  }
  InvariantSignature sig = signature(spec);
  out.signature = sig;
  const auto reject = [&](ClassifyOutcome o, std::string why) {
    out.outcome = o;
    out.reason = std::move(why);
    return out;
  };
  if (sig.dim_g < 2)
    return reject(ClassifyOutcome::NotCohomogeneityOne, "orbits of a group of dimension < 2 have dimension < 2");

  // Linear standardization.
  const LinearPart lp = linear_part(spec);
  const TranslationKernel K0 = kernel_of_l(spec);
  Mat3 C = Mat3::Identity();
  std::vector<Mat3> gens;
  switch (sig.linear_type) {
    case LinearType::Zero: {
      if (K0.dim != 2)
        return reject(ClassifyOutcome::NotCohomogeneityOne, "pure translations of dimension != 2");
      const MVector k1 = K0.basis.col(0), k2 = K0.basis.col(1);
      const Causal plane = subspace_causal(K0.basis);
      const MVector n = lorentz_cross(k1, k2);
      if (plane == Causal::Riemannian) {
        C = frames::from_timelike(n);
        out.params.plane = PlaneKind::Riemannian;
      } else if (plane == Causal::Lorentzian) {
        C = frames::from_spacelike(n);
        out.params.plane = PlaneKind::Lorentzian;
      } else {
        // n is null and lies in the plane; pick a unit spacelike b in the plane orthogonal to n.
        MVector b = std::abs(inner(k1, n)) < std::abs(inner(k2, n)) ? k1 : k2;
        b = b - (b.dot(n) / n.squaredNorm()) * n;
        b /= std::sqrt(norm2(b));
        C = frames::from_null(n, b);
        out.params.plane = PlaneKind::Degenerate;
      }
      break;
    }
    case LinearType::Elliptic:
    case LinearType::Hyperbolic:
    case LinearType::Parabolic: {
      const StandardForm sf = standardize_linear(detail::reference_generator(spec));
      C = sf.conjugator.A();
      gens = {standard_generator(sf.cls)};
      break;
    }
    case LinearType::TwoDimSolvable:
      C = standardize_two_dim(lp).conjugator.A();
      gens = standard_basis(2);
      break;
    case LinearType::Full:
      gens = standard_basis(3);
      break;
  }
  const Motion lin_inv = Motion(eta() * C.transpose() * eta(), MVector::Zero());
  const SubalgebraSpec s1 = adjoint(lin_inv, spec);
  const TranslationNormalization tn = normalize_translations(s1, gens);
  if (tn.section_residual > kClassifyTol)
    return reject(ClassifyOutcome::Unmatched, "linear part did not standardize");

  const TranslationKernel K = kernel_of_l(s1);
  const auto has = [&](const MVector& v) { return detail::in_subspace(K.basis, v); };
  const auto residual_zero = [&]() {
    for (const auto& r : tn.residual_parts)
      if (r.norm() > kClassifyTol) return false;
    return true;
  };
  const char* transitive = "orbits are open everywhere (transitive action)";
  const char* small = "orbits have dimension <= 1";

  std::optional<FamilyId> id;
  FamilyParams params;
  switch (sig.linear_type) {
    case LinearType::Zero:
      id = FamilyId::Pa;
      params.plane = out.params.plane;
      break;
    case LinearType::Elliptic:
      if (K.dim == 0) return reject(ClassifyOutcome::NotCohomogeneityOne, small);
      if (K.dim == 3) return reject(ClassifyOutcome::NotCohomogeneityOne, transitive);
      if (K.dim == 1 && has(e1())) id = FamilyId::Pb;
      if (K.dim == 2 && has(e2()) && has(e3())) {
        if (!residual_zero()) return reject(ClassifyOutcome::NotCohomogeneityOne, transitive);
        id = FamilyId::Pc;
      }
      break;
    case LinearType::Hyperbolic: {
      if (K.dim == 0) return reject(ClassifyOutcome::NotCohomogeneityOne, small);
      if (K.dim == 3) return reject(ClassifyOutcome::NotCohomogeneityOne, transitive);
      const double beta = tn.residual_parts[0](2);
      const bool screw = std::abs(beta) > kClassifyTol;
      if (K.dim == 1) {
        if (has(e3())) {
          id = FamilyId::Ni;
        } else if (has(e12()) || has(e1m2())) {
          const bool plus = has(e12());
          if (screw) {
            id = FamilyId::Pd;
            params.beta = beta;
            params.sign = plus ? 1 : -1;
          } else {
            id = plus ? FamilyId::Nv : FamilyId::Nvi;
          }
        }
      } else {
        if (has(e1()) && has(e2())) {
          if (!residual_zero()) return reject(ClassifyOutcome::NotCohomogeneityOne, transitive);
          id = FamilyId::Nii;
        } else if (has(e12()) && has(e3())) {
          id = FamilyId::Niii;
        } else if (has(e1m2()) && has(e3())) {
          id = FamilyId::Niv;
        }
      }
      break;
    }
    case LinearType::Parabolic:
      if (K.dim == 0) return reject(ClassifyOutcome::NotCohomogeneityOne, small);
      if (K.dim == 3) return reject(ClassifyOutcome::NotCohomogeneityOne, transitive);
      if (K.dim == 1 && has(e12())) {
        if (!residual_zero())
          return reject(ClassifyOutcome::Unmatched,
                        "parabolic generator with a non-removable (e1 - e2) translation component");
        id = FamilyId::Nvii;
      } else if (K.dim == 2 && has(e12()) && has(e3())) {
        if (!residual_zero()) return reject(ClassifyOutcome::NotCohomogeneityOne, transitive);
        id = FamilyId::Nviii;
      }
      break;
    case LinearType::TwoDimSolvable:
      if (K.dim == 3) return reject(ClassifyOutcome::NotCohomogeneityOne, transitive);
      if (!residual_zero())
        return reject(ClassifyOutcome::Unmatched, "translation parts of AN not removable");
      if (K.dim == 0) id = FamilyId::Nix;
      if (K.dim == 1 && has(e12())) {
        id = FamilyId::Nx;
        params.alpha = 1.0;
        params.beta = 0.0;
      }
      if (K.dim == 2 && has(e12()) && has(e3())) id = FamilyId::Nxi;
      break;
    case LinearType::Full:
      if (K.dim == 3) return reject(ClassifyOutcome::NotCohomogeneityOne, transitive);
      if (!residual_zero())
        return reject(ClassifyOutcome::Unmatched, "translation parts of so(1,2) not removable");
      if (K.dim == 0) id = FamilyId::Nxii;
      break;
  }
  if (!id) return reject(ClassifyOutcome::Unmatched, "no catalog family has this signature");

  params = canonical_params(*id, params);
  const CatalogEntry entry = build(*id, params);
  const Motion conj = compose(tn.translation, lin_inv);
  const double residual = span_distance(adjoint(conj, spec), entry.basis);
  sig.params = params;
  out.signature = sig;
  out.conjugator = conj;
  out.residual = residual;
  out.params = params;
  out.id = id;
  if (residual > kClassifyTol)
    return reject(ClassifyOutcome::Unmatched, "normalized basis does not span the catalog basis");
  out.outcome = ClassifyOutcome::Matched;
  return out;
}

}  // namespace mink
