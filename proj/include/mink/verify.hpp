#pragma once

// The acceptance suite as library functions. Each check is deterministic
// given its seed and reports a pass flag, the worst residual seen and a
// short human-readable detail line.

#include "mink/analysis.hpp"
#include "mink/classifier.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace mink {

struct CheckResult {
  int id = 0;
  std::string name;
  std::string citation;  // which statement of the classification the check exercises
  bool pass = false;
  double residual = 0.0;
  std::string detail;
};

namespace verify_detail {

inline Motion random_motion(std::mt19937_64& rng, double boost_range = 1.5,
                            double shift_range = 3.0) {
  std::uniform_real_distribution<double> T(-boost_range, boost_range), U(-shift_range, shift_range),
      R(-3.141592653589793, 3.141592653589793);
  const Mat3 A = rotation(R(rng)) * boost(T(rng)) * rotation(R(rng));
  return Motion(A, MVector(U(rng), U(rng), U(rng)));
}

inline AlgebraElement random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  return {U(rng) * B1() + U(rng) * B2() + U(rng) * B3(), MVector(U(rng), U(rng), U(rng))};
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ", ";
    s += p;
  }
  return s;
}

/// Every catalog entry, with P-a instantiated for all three plane kinds.
inline std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  for (FamilyId id : kAllFamilies) {
    if (id == FamilyId::Pa) {
      for (PlaneKind k : {PlaneKind::Riemannian, PlaneKind::Lorentzian, PlaneKind::Degenerate}) {
        FamilyParams p = default_params(id);
        p.plane = k;
        out.push_back(build(id, p));
      }
    } else {
      out.push_back(build(id));
    }
  }
  return out;
}

inline std::string label(const CatalogEntry& e) {
  std::string s(to_string(e.id));
  if (e.id == FamilyId::Pa) s += "(" + std::string(to_string(e.params.plane)) + ")";
  return s;
}

}  // namespace verify_detail

inline constexpr std::uint64_t kDefaultSeed = 42;

/// 1. Every family constructs, is bracket-closed and has an orbit of
/// dimension exactly 2 (and none above 3) at some seeded point.
inline CheckResult check_catalog_integrity(std::uint64_t seed = kDefaultSeed) {
  CheckResult r{1, "catalog integrity", "catalog of cohomogeneity-one subgroups", true, 0.0, ""};
  std::mt19937_64 rng(seed);
  std::vector<std::string> failures;
  for (FamilyId id : kAllFamilies) {
    const CatalogEntry e = build(id);
    const double closure = closure_residual(e.basis);
    r.residual = std::max(r.residual, closure);
    std::vector<MVector> pts = generic_points(rng, 100);
    const auto strata = stratum_points(e, rng, 2);
    pts.insert(pts.end(), strata.begin(), strata.end());
    bool has_two = false, too_big = false;
    for (const auto& p : pts) {
      const int d = orbit_dimension(e.basis, p);
      has_two = has_two || d == 2;
      too_big = too_big || d > 3;
    }
    if (closure >= 1e-9 || !has_two || too_big) {
      std::string why(to_string(id));
      if (closure >= 1e-9) why += " not closed";
      if (!has_two) why += " has no 2-dimensional orbit";
      failures.push_back(why);
    }
  }
  r.pass = failures.empty();
  r.detail = r.pass ? "16 families closed, each with a 2-dimensional orbit"
                    : "failing: " + verify_detail::join(failures);
  return r;
}

/// 2. Proper/nonproper verdicts, witnesses over parameter sweeps, compact
/// stabilizers for proper entries.
inline CheckResult check_properness(std::uint64_t seed = kDefaultSeed) {
  CheckResult r{2, "properness dichotomy", "properness of the catalog actions", true, 0.0, ""};
  std::mt19937_64 rng(seed);
  int proper = 0, nonproper = 0, witnesses = 0;
  std::vector<std::string> failures, inadmissible;
  for (FamilyId id : kAllFamilies) (is_proper_family(id) ? proper : nonproper)++;
  if (proper != 4 || nonproper != 12) failures.push_back("verdict count");

  const std::vector<double> sweep = {-2.0, -1.0, 0.5, 1.0, 3.0};
  const auto witness_ok = [&](const CatalogEntry& e, const std::string& tag) {
    const NonpropernessWitness w = make_witness(e);
    r.residual = std::max(r.residual, w.fixed_point_residual);
    ++witnesses;
    if (!w.valid) failures.push_back("witness " + tag);
  };
  for (FamilyId id : kAllFamilies) {
    if (is_proper_family(id)) continue;
    const std::string name(to_string(id));
    witness_ok(build(id), name);
    const ParamSlots slots = param_slots(id);
    if (id == FamilyId::Nx) {
      for (double a : sweep)
        for (double b : sweep) {
          FamilyParams p = default_params(id);
          p.alpha = a;
          p.beta = b;
          try {
            witness_ok(build(id, p), name);
          } catch (const DomainError&) {
            inadmissible.push_back(name);
          }
        }
      for (double a : sweep) {
        FamilyParams p = default_params(id);
        p.alpha = a;
        p.beta = 0.0;
        witness_ok(build(id, p), name);
      }
    } else if (slots.beta) {
      for (double b : sweep) {
        FamilyParams p = default_params(id);
        p.beta = b;
        witness_ok(build(id, p), name);
      }
    }
  }

  int stabilizers = 0;
  for (const CatalogEntry& base : verify_detail::all_entries()) {
    if (!base.proper) continue;
    std::vector<CatalogEntry> entries = {base};
    if (base.id == FamilyId::Pd)
      for (double b : sweep)
        for (int s : {1, -1}) {
          FamilyParams p = base.params;
          p.beta = b;
          p.sign = s;
          entries.push_back(build(FamilyId::Pd, p));
        }
    for (const CatalogEntry& e : entries) {
      std::vector<MVector> pts = generic_points(rng, 180);
      const auto strata = stratum_points(e, rng, 10);
      pts.insert(pts.end(), strata.begin(), strata.end());
      pts.push_back(MVector::Zero());
      for (const auto& p : pts) {
        ++stabilizers;
        if (stabilizer_compactness(e.basis, p) == StabilizerClass::Noncompact) {
          failures.push_back("noncompact stabilizer in " + verify_detail::label(e));
          break;
        }
      }
    }
  }
  std::ostringstream os;
  os << proper << " proper, " << nonproper << " nonproper; " << witnesses << " witnesses; "
     << stabilizers << " proper-entry stabilizers";
  if (!inadmissible.empty())
    os << "; " << inadmissible.size() << " N-x sweep points with beta != 0 are not subalgebras";
  if (!failures.empty()) os << "; failing: " << verify_detail::join(failures);
  r.pass = failures.empty();
  r.detail = os.str();
  return r;
}

/// 3. The screw-boost group element is recovered from one point and its image.
inline CheckResult check_recovery(std::uint64_t seed = kDefaultSeed) {
  CheckResult r{3, "parameter recovery", "recovery of the screw-boost group element", true, 0.0, ""};
  std::ostringstream os;
  for (double b : {0.5, 1.0, 2.0}) {
    FamilyParams p = default_params(FamilyId::Pd);
    p.beta = b;
    const RecoveryReport rep = recovery_test(build(FamilyId::Pd, p), 100, seed);
    r.residual = std::max({r.residual, rep.max_t_error, rep.max_u_error});
    r.pass = r.pass && rep.pass();
    os << "beta=" << b << ": " << rep.passed << "/" << rep.trials << "  ";
  }
  r.detail = os.str();
  return r;
}

/// 4. P-d orbits off the degenerate stratum have a nonzero nilpotent shape
/// operator; on it they are degenerate with null normal e1 +- e2.
inline CheckResult check_shape_operator(std::uint64_t seed = kDefaultSeed) {
  CheckResult r{4, "shape operator", "screw-boost orbits are generalized cylinders", true, 0.0, ""};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  int nilpotent = 0, total = 0, degenerate = 0, dtotal = 0;
  double min_margin = 1e300;
  for (double b : {0.5, 1.0, 2.0})
    for (int sign : {1, -1}) {
      FamilyParams p = default_params(FamilyId::Pd);
      p.beta = b;
      p.sign = sign;
      const CatalogEntry e = build(FamilyId::Pd, p);
      int taken = 0;
      while (taken < 20) {
        const MVector q(U(rng), U(rng), U(rng));
        if (std::abs(q(0) - sign * q(1)) < 0.1) continue;
        ++taken;
        ++total;
        const ShapeOperatorResult s = shape_operator(e, q);
        const double lam = std::max(std::abs(s.lambda1), std::abs(s.lambda2));
        r.residual = std::max(r.residual, lam);
        min_margin = std::min(min_margin, s.rank_one_margin);
        if (lam < 1e-5 && s.rank_one_margin > 1e-3) ++nilpotent;
      }
      const MVector expected = (sign > 0 ? e12() : e1m2()).normalized();
      for (int i = 0; i < 5; ++i) {
        const double x = U(rng);
        const MVector q(x, sign * x, U(rng));
        ++dtotal;
        const auto n = degenerate_normal(e.basis, q);
        if (orbit_causal(e.basis, q) == Causal::Degenerate && n && (*n - expected).norm() < 1e-8)
          ++degenerate;
      }
    }
  r.pass = nilpotent == total && degenerate == dtotal;
  std::ostringstream os;
  os << nilpotent << "/" << total << " non-diagonalizable with double eigenvalue 0 (min margin "
     << min_margin << "); " << degenerate << "/" << dtotal << " degenerate with null normal";
  r.detail = os.str();
  return r;
}

/// 5. Orbit inventories: dimension, causal character and class at seeded
/// generic and stratum points, plus family-specific invariants.
inline CheckResult check_orbit_inventories(std::uint64_t seed = kDefaultSeed) {
  CheckResult r{5, "orbit inventories", "orbit types of each catalog action", true, 0.0, ""};
  std::mt19937_64 rng(seed);
  std::vector<std::string> failures;
  int points = 0;
  for (const CatalogEntry& e : verify_detail::all_entries()) {
    std::vector<MVector> pts = generic_points(rng, 100);
    const auto strata = stratum_points(e, rng, 5);
    pts.insert(pts.end(), strata.begin(), strata.end());
    int bad = 0;
    for (const auto& p : pts) {
      ++points;
      const OrbitReport rep = analyze_orbit(e, p);
      if (!rep.matched_expectation) ++bad;
      // Conserved quantity along the orbit.
      if (e.invariant && rep.orbit_dim == 2 && e.basis.dim() <= 3) {
        const double f0 = e.invariant(p);
        const Grid g = tensor_grid(e.basis.dim(), 3, 0.5);
        for (const MVector& q : sample_orbit(e, p, g)) {
          const double drift = std::abs(e.invariant(q) - f0) / std::max(1.0, std::abs(f0));
          r.residual = std::max(r.residual, drift);
          if (drift > 1e-8) ++bad;
        }
      }
    }
    if (bad) failures.push_back(verify_detail::label(e) + " (" + std::to_string(bad) + ")");
  }

  // N-i: the lines x = +-y (off the axis) carry the degenerate orbits.
  {
    const CatalogEntry e = build(FamilyId::Ni);
    for (int sx : {1, -1})
      for (int sy : {1, -1}) {
        const MVector q(sx * 1.3, sy * 1.3, 0.4);
        if (orbit_causal(e.basis, q) != Causal::Degenerate) failures.push_back("N-i degenerate strata");
      }
  }
  // N-xii: light-cone orbits are exceptional and degenerate.
  {
    const CatalogEntry e = build(FamilyId::Nxii);
    const MVector q(std::sqrt(5.0), 1.0, 2.0);
    if (expected_orbit(e, q).cls != OrbitClass::Exceptional || orbit_dimension(e.basis, q) != 2 ||
        orbit_causal(e.basis, q) != Causal::Degenerate)
      failures.push_back("N-xii light cone");
  }
  // P-c: every orbit is a spacelike plane.
  {
    const CatalogEntry e = build(FamilyId::Pc);
    for (const auto& q : generic_points(rng, 20))
      if (orbit_causal(e.basis, q) != Causal::Riemannian) {
        failures.push_back("P-c spacelike planes");
        break;
      }
  }
  // N-viii: stabilizer at p is the translate of the stabilizer at the origin.
  {
    const CatalogEntry e = build(FamilyId::Nviii);
    const SubalgebraSpec s0 = stabilizer_algebra(e.basis, MVector::Zero());
    for (const auto& q : generic_points(rng, 20)) {
      const Motion g = Motion::translation(MVector(0.0, q(1) - q(0), q(2)));
      const double d = span_distance(stabilizer_algebra(e.basis, q), adjoint(g, s0));
      r.residual = std::max(r.residual, d);
      if (d >= 1e-8 || orbit_causal(e.basis, q) != Causal::Degenerate) {
        failures.push_back("N-viii stabilizer");
        break;
      }
    }
  }
  r.pass = failures.empty();
  r.detail = std::to_string(points) + " points" +
             (r.pass ? "" : "; failing: " + verify_detail::join(failures));
  return r;
}

/// 6. Sign of the discriminant of the AN tangent-norm quadratic follows the
/// causal character of p; the closed form matches a finite difference.
inline CheckResult check_tangent_norm(std::uint64_t seed = kDefaultSeed) {
  CheckResult r{6, "tangent-norm quadratic", "causal character of AN orbits", true, 0.0, ""};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-3.0, 3.0), A(-2.0, 2.0);
  int space_ok = 0, time_ok = 0, space_n = 0, time_n = 0, fd_bad = 0;
  while (space_n < 100 || time_n < 100) {
    const MVector p(U(rng), U(rng), U(rng));
    if (std::abs(p(0) - p(1)) < 1e-3) continue;
    const double q = norm2(p);
    if (std::abs(q) < 1e-3) continue;
    const double disc = an_tangent_discriminant(p);
    if (q > 0 && space_n < 100) {
      ++space_n;
      if (disc > 0) ++space_ok;
    } else if (q < 0 && time_n < 100) {
      ++time_n;
      if (disc < 0) ++time_ok;
    } else {
      continue;
    }
    const double alpha = A(rng);
    const AlgebraElement el = linear_el(alpha * B1() + B3());
    const double h = 1e-5;
    const MVector w = (exp_element(el, h)(p) - exp_element(el, -h)(p)) / (2.0 * h);
    const double err = std::abs(norm2(w) - an_tangent_norm(alpha, p)) / std::max(1.0, std::abs(norm2(w)));
    r.residual = std::max(r.residual, err);
    if (err > 1e-7) ++fd_bad;
  }
  r.pass = space_ok == 100 && time_ok == 100 && fd_bad == 0;
  std::ostringstream os;
  os << "spacelike " << space_ok << "/100 positive, timelike " << time_ok
     << "/100 negative, finite-difference mismatches " << fd_bad;
  r.detail = os.str();
  return r;
}

/// 7. classify recovers every family from seeded conjugates and rejects the
/// two non-examples.
inline CheckResult check_classifier(std::uint64_t seed = kDefaultSeed) {
  CheckResult r{7, "classifier round-trip", "conjugacy classification of the subgroups", true, 0.0, ""};
  std::mt19937_64 rng(seed);
  std::vector<std::string> failures;
  int ok = 0, total = 0;
  std::vector<CatalogEntry> entries = verify_detail::all_entries();
  for (double b : {-2.0, 1.5})
    for (int s : {1, -1}) {
      FamilyParams p = default_params(FamilyId::Pd);
      p.beta = b;
      p.sign = s;
      entries.push_back(build(FamilyId::Pd, p));
    }
  for (const CatalogEntry& e : entries) {
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      ++total;
      const Classification c = classify(adjoint(verify_detail::random_motion(rng), e.basis));
      bool good = c.matched() && c.id == e.id;
      if (good) {
        r.residual = std::max(r.residual, c.residual);
        const FamilyParams want = canonical_params(e.id, e.params);
        if (e.id == FamilyId::Pd)
          good = std::abs(c.params.beta - want.beta) < 1e-6 && c.params.sign == want.sign;
        if (e.id == FamilyId::Pa) good = c.params.plane == want.plane;
        if (e.id == FamilyId::Nx)
          good = std::abs(c.params.alpha - want.alpha) < 1e-6 && std::abs(c.params.beta - want.beta) < 1e-6;
      }
      good ? ++ok : ++bad;
    }
    if (bad) failures.push_back(verify_detail::label(e) + " (" + std::to_string(bad) + ")");
  }
  const Classification not_sub = classify(SubalgebraSpec{linear_el(B1()), linear_el(B2())});
  if (not_sub.outcome != ClassifyOutcome::NotASubalgebra) failures.push_back("non-subalgebra probe");
  const Classification elliptic = classify(SubalgebraSpec{{{B2(), e1()}}});
  if (elliptic.outcome != ClassifyOutcome::NotCohomogeneityOne) failures.push_back("elliptic probe");
  r.pass = failures.empty();
  r.detail = std::to_string(ok) + "/" + std::to_string(total) + " conjugates classified; probes " +
             std::string(to_string(not_sub.outcome)) + ", " + std::string(to_string(elliptic.outcome)) +
             (r.pass ? "" : "; failing: " + verify_detail::join(failures));
  return r;
}

/// 8. Closed-form and series exponentials agree; exp(2 pi B2) = I; Jacobi.
inline CheckResult check_numerics(std::uint64_t seed = kDefaultSeed) {
  CheckResult r{8, "numerics cross-validation", "exponentials of the catalog generators", true, 0.0, ""};
  std::mt19937_64 rng(seed);
  double exp_err = 0.0;
  for (const CatalogEntry& e : verify_detail::all_entries())
    for (const AlgebraElement& el : e.basis.basis)
      for (int k = -10; k <= 10; ++k) {
        const double t = 0.5 * k;
        const Motion a = exp_element(el, t), b = exp_element_series(el, t);
        exp_err = std::max(exp_err, motion_distance(a, b));
      }
  const Motion full = exp_element(linear_el(B2()), 2.0 * 3.141592653589793);
  const double period = motion_distance(full, Motion::translation(MVector::Zero()));
  double jacobi = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto x = verify_detail::random_element(rng), y = verify_detail::random_element(rng),
               z = verify_detail::random_element(rng);
    const AlgebraElement j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    jacobi = std::max(jacobi, j.norm());
  }
  r.residual = std::max({exp_err, period, jacobi});
  r.pass = exp_err < 1e-10 && period < 1e-9 && jacobi < 1e-10;
  std::ostringstream os;
  os << "exp mismatch " << exp_err << ", period " << period << ", Jacobi " << jacobi;
  r.detail = os.str();
  return r;
}

inline std::vector<CheckResult> run_all_checks(std::uint64_t seed = kDefaultSeed) {
  return {check_catalog_integrity(seed), check_properness(seed), check_recovery(seed),
          check_shape_operator(seed),    check_orbit_inventories(seed), check_tangent_norm(seed),
          check_classifier(seed),        check_numerics(seed)};
}

}  // namespace mink
