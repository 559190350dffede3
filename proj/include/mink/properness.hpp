#pragma once

// Properness verdicts, nonproperness witnesses and stabilizer compactness.
// Properness itself is read from the catalog; numerics only certify the
// nonproper side.

#include "mink/orbit.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mink {

enum class Properness { Proper, Nonproper };

inline std::string_view to_string(Properness p) {
  return p == Properness::Proper ? "proper" : "nonproper";
}

inline Properness verdict(const CatalogEntry& entry) {
  return entry.proper ? Properness::Proper : Properness::Nonproper;
}

enum class StabilizerClass { Trivial, Compact, Noncompact };

inline std::string_view to_string(StabilizerClass s) {
  switch (s) {
    case StabilizerClass::Trivial: return "trivial";
    case StabilizerClass::Compact: return "compact";
    case StabilizerClass::Noncompact: return "noncompact";
  }
  return "?";
}

/// A stabilizer algebra is compact iff the trace form tr(XY) is negative
/// definite on its linear parts (it injects into so(1,2) because v = -Xp).
inline StabilizerClass stabilizer_compactness(const SubalgebraSpec& spec, const MVector& p) {
  const SubalgebraSpec stab = stabilizer_algebra(spec, p);
  if (stab.dim() == 0) return StabilizerClass::Trivial;
  const int k = stab.dim();
  Eigen::MatrixXd K(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) K(i, j) = (stab.basis[i].X * stab.basis[j].X).trace();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
  const double scale = std::max(1.0, K.cwiseAbs().maxCoeff());
  return es.eigenvalues().maxCoeff() < -kMembershipTol * scale ? StabilizerClass::Compact
                                                               : StabilizerClass::Noncompact;
}

struct NonpropernessWitness {
  MVector point;
  AlgebraElement generator;
  std::vector<std::pair<int, double>> growth_certificate;  // (n, |exp(n X)|_2)
  double fixed_point_residual = 0.0;
  double membership_residual = 0.0;
  bool valid = false;
};

inline constexpr int kWitnessSteps = 20;
inline constexpr double kWitnessGrowth = 100.0;
inline constexpr double kFixedPointTol = 1e-8;

/// Recomputes the certificate and the validity flag for (p, g).
inline NonpropernessWitness certify(const SubalgebraSpec& spec, const MVector& p,
                                    const AlgebraElement& g) {
  NonpropernessWitness w;
  w.point = p;
  w.generator = g;
  w.membership_residual = span_residual(spec, g);
  bool monotone = true;
  double prev = 0.0;
  for (int n = 1; n <= kWitnessSteps; ++n) {
    const Motion m = exp_element(g, static_cast<double>(n));
    const double moved = flow_displacement(g, static_cast<double>(n), p).cwiseAbs().maxCoeff();
    w.fixed_point_residual = std::max(w.fixed_point_residual, moved);
    const double norm = linalg::operator_norm(m.A());
    if (norm <= prev) monotone = false;
    prev = norm;
    w.growth_certificate.emplace_back(n, norm);
  }
  w.valid = monotone && prev >= kWitnessGrowth && w.fixed_point_residual < kFixedPointTol &&
            w.membership_residual < kMembershipTol;
  return w;
}

/// A fixed point with a non-elliptic one-parameter stabilizer subgroup.
inline NonpropernessWitness make_witness(const CatalogEntry& entry) {
  if (entry.proper) throw DomainError("make_witness: entry is proper");
  if (!entry.witness) throw std::logic_error("make_witness: catalog entry has no witness");
  const auto& cand = *entry.witness;
  const GeneratorClass gc = generator_class(cand.generator.X);
  if (gc == GeneratorClass::Elliptic || gc == GeneratorClass::Zero)
    throw std::logic_error("make_witness: candidate stabilizer generator is not hyperbolic or parabolic");
  return certify(entry.basis, cand.point, cand.generator);
}

struct RecoveryReport {
  int trials = 0;
  int passed = 0;
  double max_t_error = 0.0;
  double max_u_error = 0.0;
  bool pass() const { return trials > 0 && passed == trials; }
};

inline constexpr double kRecoveryTol = 1e-6;

/// The element (A_t, u w + beta t e3) of the P-d group, w = e1 +- e2.
inline Motion screw_boost_element(const CatalogEntry& entry, double t, double u) {
  return compose(exp_element(entry.basis.basis[1], u), exp_element(entry.basis.basis[0], t));
}

/// Recovers (t, u) from (X, g X) for g in the P-d group.
inline std::pair<double, double> recover_parameters(double beta, const MVector& X,
                                                    const MVector& Y) {
  const double t = (Y(2) - X(2)) / beta;
  const double u = Y(0) - X(0) * std::cosh(t) - X(1) * std::sinh(t);
  return {t, u};
}

inline RecoveryReport recovery_test(const CatalogEntry& entry, int trials, std::uint64_t seed) {
  if (entry.id != FamilyId::Pd) throw DomainError("recovery_test: only defined for P-d");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> T(-2.0, 2.0), P(-3.0, 3.0);
  RecoveryReport r;
  for (int i = 0; i < trials; ++i) {
    const double t = T(rng), u = T(rng);
    const MVector X(P(rng), P(rng), P(rng));
    const MVector Y = screw_boost_element(entry, t, u)(X);
    const auto [t2, u2] = recover_parameters(entry.params.beta, X, Y);
    const double et = std::abs(t - t2), eu = std::abs(u - u2);
    r.max_t_error = std::max(r.max_t_error, et);
    r.max_u_error = std::max(r.max_u_error, eu);
    ++r.trials;
    if (et < kRecoveryTol && eu < kRecoveryTol) ++r.passed;
  }
  return r;
}

}  // namespace mink
