#pragma once

// The sixteen families of closed connected subgroups of SO_0(1,2) x| R^3
// acting with cohomogeneity one on Minkowski 3-space: four proper (P-*),
// twelve nonproper (N-*), with their orbit inventories.

#include "mink/algebra.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace mink {

enum class FamilyId {
  Pa, Pb, Pc, Pd,
  Ni, Nii, Niii, Niv, Nv, Nvi, Nvii, Nviii, Nix, Nx, Nxi, Nxii,
};

inline constexpr std::array<FamilyId, 16> kAllFamilies = {
    FamilyId::Pa,   FamilyId::Pb,   FamilyId::Pc,  FamilyId::Pd,  FamilyId::Ni,   FamilyId::Nii,
    FamilyId::Niii, FamilyId::Niv,  FamilyId::Nv,  FamilyId::Nvi, FamilyId::Nvii, FamilyId::Nviii,
    FamilyId::Nix,  FamilyId::Nx,   FamilyId::Nxi, FamilyId::Nxii,
};

inline std::string_view to_string(FamilyId id) {
  static constexpr std::array<std::string_view, 16> names = {
      "P-a", "P-b",   "P-c",    "P-d",  "N-i",  "N-ii",  "N-iii", "N-iv",
      "N-v", "N-vi",  "N-vii",  "N-viii", "N-ix", "N-x",  "N-xi",  "N-xii"};
  return names[static_cast<std::size_t>(id)];
}

inline std::optional<FamilyId> parse_family(std::string_view s) {
  for (FamilyId id : kAllFamilies)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

inline bool is_proper_family(FamilyId id) {
  return id == FamilyId::Pa || id == FamilyId::Pb || id == FamilyId::Pc || id == FamilyId::Pd;
}

/// Causal type of the translation plane of a pure translation group.
enum class PlaneKind { Riemannian, Lorentzian, Degenerate };

inline std::string_view to_string(PlaneKind k) {
  switch (k) {
    case PlaneKind::Riemannian: return "riemannian";
    case PlaneKind::Lorentzian: return "lorentzian";
    case PlaneKind::Degenerate: return "degenerate";
  }
  return "?";
}

inline std::optional<PlaneKind> parse_plane_kind(std::string_view s) {
  for (PlaneKind k : {PlaneKind::Riemannian, PlaneKind::Lorentzian, PlaneKind::Degenerate})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

/// Family parameters. Which slots are meaningful depends on the family:
/// P-a uses plane, P-d uses beta and sign, N-vii uses beta, N-x uses alpha
/// and beta.
struct FamilyParams {
  double beta = 1.0;
  double alpha = 1.0;
  int sign = +1;
  PlaneKind plane = PlaneKind::Riemannian;

  bool operator==(const FamilyParams&) const = default;
};

struct ParamSlots {
  bool beta = false;
  bool alpha = false;
  bool sign = false;
  bool plane = false;
};

inline ParamSlots param_slots(FamilyId id) {
  switch (id) {
    case FamilyId::Pa: return {.plane = true};
    case FamilyId::Pd: return {.beta = true, .sign = true};
    case FamilyId::Nvii: return {.beta = true};
    case FamilyId::Nx: return {.beta = true, .alpha = true};
    default: return {};
  }
}

inline FamilyParams default_params(FamilyId id) {
  FamilyParams p;
  if (id == FamilyId::Nvii) p.beta = 0.0;
  if (id == FamilyId::Nx) {
    p.alpha = 1.0;
    p.beta = 0.0;
  }
  return p;
}

enum class OrbitSpace { RealLine, HalfLineClosed, ThreePointsNonHausdorff, OtherNonHausdorff };

inline std::string_view to_string(OrbitSpace o) {
  switch (o) {
    case OrbitSpace::RealLine: return "real-line";
    case OrbitSpace::HalfLineClosed: return "half-line-closed";
    case OrbitSpace::ThreePointsNonHausdorff: return "three-points-non-Hausdorff";
    case OrbitSpace::OtherNonHausdorff: return "other-non-Hausdorff";
  }
  return "?";
}

enum class OrbitClass { Principal, Singular, Exceptional, OpenOrbit };

inline std::string_view to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::Principal: return "principal";
    case OrbitClass::Singular: return "singular";
    case OrbitClass::Exceptional: return "exceptional";
    case OrbitClass::OpenOrbit: return "open-orbit";
  }
  return "?";
}

using Invariant = std::function<double(const MVector&)>;

/// One stratum of an orbit inventory.
struct ExpectedOrbit {
  std::string stratum;
  int dim = 0;
  Causal causal = Causal::ZeroVector;
  OrbitClass cls = OrbitClass::Principal;
};

struct WitnessCandidate {
  MVector point;
  AlgebraElement generator;
};

struct CatalogEntry {
  FamilyId id;
  FamilyParams params;
  SubalgebraSpec basis;
  bool proper = false;
  OrbitSpace orbit_space = OrbitSpace::RealLine;
  std::vector<ExpectedOrbit> inventory;
  std::string invariant_name;  // empty when there is none
  Invariant invariant;
  std::optional<WitnessCandidate> witness;
  std::string source;
};

/// Equalities defining measure-zero strata hold within this tolerance.
inline constexpr double kStratumTol = 1e-9;

namespace detail {

inline bool near_zero(double x) { return std::abs(x) < kStratumTol; }

inline bool on_light_cone(const MVector& p) {
  return std::abs(norm2(p)) < kStratumTol * std::max(1.0, p.squaredNorm());
}

inline bool is_origin(const MVector& p) { return p.cwiseAbs().maxCoeff() < kStratumTol; }

inline Causal plane_causal(PlaneKind k) {
  switch (k) {
    case PlaneKind::Riemannian: return Causal::Riemannian;
    case PlaneKind::Lorentzian: return Causal::Lorentzian;
    case PlaneKind::Degenerate: return Causal::Degenerate;
  }
  return Causal::Riemannian;
}

inline std::pair<MVector, MVector> plane_basis(PlaneKind k) {
  switch (k) {
    case PlaneKind::Riemannian: return {e2(), e3()};
    case PlaneKind::Lorentzian: return {e1(), e2()};
    case PlaneKind::Degenerate: return {e12(), e3()};
  }
  return {e2(), e3()};
}

}  // namespace detail

/// Constructs a family. Throws DomainError for inadmissible parameters.
inline CatalogEntry build(FamilyId id, const FamilyParams& params_in) {
  using detail::near_zero;
  FamilyParams params = params_in;
  const ParamSlots slots = param_slots(id);
  if (!slots.beta) params.beta = default_params(id).beta;
  if (!slots.alpha) params.alpha = default_params(id).alpha;
  if (!slots.sign) params.sign = +1;
  if (!slots.plane) params.plane = PlaneKind::Riemannian;
  if (params.sign != 1 && params.sign != -1) throw DomainError("sign must be +1 or -1");
  if (!std::isfinite(params.beta) || !std::isfinite(params.alpha))
    throw DomainError("non-finite parameter");

  CatalogEntry e;
  e.id = id;
  e.params = params;
  e.proper = is_proper_family(id);
  const double beta = params.beta;
  const int sg = params.sign;
  const MVector null_dir = sg > 0 ? e12() : e1m2();
  const char* null_name = sg > 0 ? "x = y" : "x = -y";
  const auto L = [](const Mat3& X) { return linear_el(X); };
  const auto T = [](const MVector& v) { return translation_el(v); };
  const MVector origin = MVector::Zero();
  const auto d_of = [](const MVector& p) { return p(0) - p(1); };

  switch (id) {
    case FamilyId::Pa: {
      const auto [u, w] = detail::plane_basis(params.plane);
      e.basis = {T(u), T(w)};
      e.orbit_space = OrbitSpace::RealLine;
      e.inventory = {{"all points", 2, detail::plane_causal(params.plane), OrbitClass::Principal}};
      const MVector n = u.cross(w).normalized();
      e.invariant_name = "n.p (Euclidean normal of the translation plane)";
      e.invariant = [n](const MVector& p) { return n.dot(p); };
      e.source = "pure translation group";
      break;
    }
    case FamilyId::Pb:
      e.basis = {L(B2()), T(e1())};
      e.orbit_space = OrbitSpace::HalfLineClosed;
      e.inventory = {{"y = z = 0", 1, Causal::Timelike, OrbitClass::Singular},
                     {"otherwise", 2, Causal::Lorentzian, OrbitClass::Principal}};
      e.invariant_name = "y^2 + z^2";
      e.invariant = [](const MVector& p) { return p(1) * p(1) + p(2) * p(2); };
      e.source = "SO(2) x R, standard embedding";
      break;
    case FamilyId::Pc:
      e.basis = {L(B2()), T(e2()), T(e3())};
      e.orbit_space = OrbitSpace::RealLine;
      e.inventory = {{"all points", 2, Causal::Riemannian, OrbitClass::Principal}};
      e.invariant_name = "x";
      e.invariant = [](const MVector& p) { return p(0); };
      e.source = "Iso_0(R^2), standard embedding";
      break;
    case FamilyId::Pd: {
      if (near_zero(beta)) throw DomainError("P-d requires beta != 0 (beta = 0 is N-v / N-vi)");
      e.basis = {AlgebraElement(B1(), beta * e3()), T(null_dir)};
      e.orbit_space = OrbitSpace::RealLine;
      e.inventory = {{null_name, 2, Causal::Degenerate, OrbitClass::Principal},
                     {"otherwise", 2, Causal::Lorentzian, OrbitClass::Principal}};
      // Along A_t the null coordinate transverse to the translation scales
      // by exp(-+t) while z moves by beta t.
      if (sg > 0) {
        e.invariant_name = "(x - y) exp(z / beta)";
        e.invariant = [beta](const MVector& p) { return (p(0) - p(1)) * std::exp(p(2) / beta); };
      } else {
        e.invariant_name = "(x + y) exp(-z / beta)";
        e.invariant = [beta](const MVector& p) { return (p(0) + p(1)) * std::exp(-p(2) / beta); };
      }
      e.source = "boost with screw translation beta e3, null translations";
      break;
    }
    case FamilyId::Ni:
      e.basis = {L(B1()), T(e3())};
      e.orbit_space = OrbitSpace::OtherNonHausdorff;
      e.inventory = {{"x = y = 0", 1, Causal::Spacelike, OrbitClass::Singular},
                     {"x = +-y != 0", 2, Causal::Degenerate, OrbitClass::Principal},
                     {"x^2 < y^2", 2, Causal::Lorentzian, OrbitClass::Principal},
                     {"x^2 > y^2", 2, Causal::Riemannian, OrbitClass::Principal}};
      e.invariant_name = "x^2 - y^2";
      e.invariant = [](const MVector& p) { return p(0) * p(0) - p(1) * p(1); };
      e.witness = WitnessCandidate{origin, L(B1())};
      e.source = "A x R e3";
      break;
    case FamilyId::Nii:
      e.basis = {L(B1()), T(e1()), T(e2())};
      e.orbit_space = OrbitSpace::RealLine;
      e.inventory = {{"all points", 2, Causal::Lorentzian, OrbitClass::Principal}};
      e.invariant_name = "z";
      e.invariant = [](const MVector& p) { return p(2); };
      e.witness = WitnessCandidate{origin, L(B1())};
      e.source = "Iso_0(R^2_1)";
      break;
    case FamilyId::Niii:
    case FamilyId::Niv: {
      const bool plus = id == FamilyId::Niii;
      e.basis = {L(B1()), T(plus ? e12() : e1m2()), T(e3())};
      e.orbit_space = OrbitSpace::ThreePointsNonHausdorff;
      e.inventory = {{plus ? "x = y" : "x = -y", 2, Causal::Degenerate, OrbitClass::Exceptional},
                     {"otherwise", 3, Causal::Lorentzian, OrbitClass::OpenOrbit}};
      // (B1, -x e12) fixes (x, x, 0); (B1, e1 - e2) fixes (1, -1, 0).
      e.witness = plus ? WitnessCandidate{MVector(1, 1, 0), AlgebraElement(B1(), -e12())}
                       : WitnessCandidate{MVector(1, -1, 0), AlgebraElement(B1(), e1m2())};
      e.source = plus ? "A x| span(e1+e2, e3)" : "A x| span(e1-e2, e3)";
      break;
    }
    case FamilyId::Nv:
    case FamilyId::Nvi: {
      const bool plus = id == FamilyId::Nv;
      e.basis = {L(B1()), T(plus ? e12() : e1m2())};
      e.orbit_space = OrbitSpace::OtherNonHausdorff;
      e.inventory = {{plus ? "x = y" : "x = -y", 1, Causal::Null, OrbitClass::Singular},
                     {"otherwise", 2, Causal::Lorentzian, OrbitClass::Principal}};
      e.invariant_name = "z";
      e.invariant = [](const MVector& p) { return p(2); };
      e.witness = WitnessCandidate{MVector(0, 0, 1), L(B1())};
      e.source = plus ? "A x| R(e1+e2)" : "A x| R(e1-e2)";
      break;
    }
    case FamilyId::Nvii:
      e.basis = {AlgebraElement(B3(), beta * e3()), T(e12())};
      e.orbit_space = OrbitSpace::OtherNonHausdorff;
      e.inventory = {{"y - x = beta", 1, Causal::Null, OrbitClass::Singular},
                     {"otherwise", 2, Causal::Degenerate, OrbitClass::Principal}};
      e.invariant_name = "x - y";
      e.invariant = d_of;
      e.witness = WitnessCandidate{MVector(1, 1 + beta, 0), AlgebraElement(B3(), beta * e3())};
      e.source = "N with screw translation beta e3, null translations";
      break;
    case FamilyId::Nviii:
      e.basis = {L(B3()), T(e12()), T(e3())};
      e.orbit_space = OrbitSpace::RealLine;
      e.inventory = {{"all points", 2, Causal::Degenerate, OrbitClass::Principal}};
      e.invariant_name = "x - y";
      e.invariant = d_of;
      // Stabilizer of (1, 2, 3) is (B3, -z e12 + (y - x) e3).
      e.witness = WitnessCandidate{MVector(1, 2, 3), AlgebraElement(B3(), MVector(-3, -3, 1))};
      e.source = "N x| span(e1+e2, e3)";
      break;
    case FamilyId::Nix:
      e.basis = {L(B1()), L(B3())};
      e.orbit_space = OrbitSpace::OtherNonHausdorff;
      e.inventory = {{"origin", 0, Causal::ZeroVector, OrbitClass::Singular},
                     {"x = y, p != 0", 1, Causal::Null, OrbitClass::Singular},
                     {"x != y, <p,p> = 0", 2, Causal::Degenerate, OrbitClass::Principal},
                     {"x != y, <p,p> > 0", 2, Causal::Lorentzian, OrbitClass::Principal},
                     {"x != y, <p,p> < 0", 2, Causal::Riemannian, OrbitClass::Principal}};
      e.invariant_name = "<p,p>";
      e.invariant = [](const MVector& p) { return norm2(p); };
      e.witness = WitnessCandidate{origin, L(B1())};
      e.source = "AN";
      break;
    case FamilyId::Nx: {
      if (near_zero(params.alpha) && near_zero(beta))
        throw DomainError("N-x requires (alpha, beta) != (0, 0)");
      // [(B3,0), (0, alpha e12 + beta e3)] = (0, beta e12): closed only for beta = 0.
      if (!near_zero(beta))
        throw DomainError("N-x with beta != 0 is not closed under the bracket");
      e.basis = {L(B1()), L(B3()), T(params.alpha * e12())};
      e.orbit_space = OrbitSpace::OtherNonHausdorff;
      e.inventory = {{"x = y", 1, Causal::Null, OrbitClass::Singular},
                     {"otherwise", 3, Causal::Lorentzian, OrbitClass::OpenOrbit}};
      e.witness = WitnessCandidate{origin, L(B1())};
      e.source = "AN x| R(alpha e12 + beta e3)";
      break;
    }
    case FamilyId::Nxi:
      e.basis = {L(B1()), L(B3()), T(e12()), T(e3())};
      e.orbit_space = OrbitSpace::ThreePointsNonHausdorff;
      e.inventory = {{"x = y", 2, Causal::Degenerate, OrbitClass::Exceptional},
                     {"otherwise", 3, Causal::Lorentzian, OrbitClass::OpenOrbit}};
      e.witness = WitnessCandidate{origin, L(B1())};
      e.source = "AN x| span(e1+e2, e3)";
      break;
    case FamilyId::Nxii:
      e.basis = {L(B1()), L(B2()), L(B3())};
      e.orbit_space = OrbitSpace::OtherNonHausdorff;
      e.inventory = {{"origin", 0, Causal::ZeroVector, OrbitClass::Singular},
                     {"light cone", 2, Causal::Degenerate, OrbitClass::Exceptional},
                     {"<p,p> > 0", 2, Causal::Lorentzian, OrbitClass::Principal},
                     {"<p,p> < 0", 2, Causal::Riemannian, OrbitClass::Principal}};
      e.invariant_name = "<p,p>";
      e.invariant = [](const MVector& p) { return norm2(p); };
      e.witness = WitnessCandidate{origin, L(B1())};
      e.source = "SO_0(1,2)";
      break;
  }
  return e;
}

inline CatalogEntry build(FamilyId id) { return build(id, default_params(id)); }

/// Index into entry.inventory of the stratum containing p.
inline std::size_t stratum_index(const CatalogEntry& e, const MVector& p) {
  using detail::near_zero;
  const double x = p(0), y = p(1);
  const bool on_plus = near_zero(x - y);
  const bool on_minus = near_zero(x + y);
  switch (e.id) {
    case FamilyId::Pa:
    case FamilyId::Pc:
    case FamilyId::Nii:
    case FamilyId::Nviii:
      return 0;
    case FamilyId::Pb:
      return (near_zero(p(1)) && near_zero(p(2))) ? 0 : 1;
    case FamilyId::Pd:
      return (e.params.sign > 0 ? on_plus : on_minus) ? 0 : 1;
    case FamilyId::Ni:
      if (near_zero(x) && near_zero(y)) return 0;
      if (on_plus || on_minus) return 1;
      return x * x < y * y ? 2 : 3;
    case FamilyId::Niii:
    case FamilyId::Nv:
    case FamilyId::Nx:
    case FamilyId::Nxi:
      return on_plus ? 0 : 1;
    case FamilyId::Niv:
    case FamilyId::Nvi:
      return on_minus ? 0 : 1;
    case FamilyId::Nvii:
      return near_zero(y - x - e.params.beta) ? 0 : 1;
    case FamilyId::Nix:
      if (detail::is_origin(p)) return 0;
      if (on_plus) return 1;
      if (detail::on_light_cone(p)) return 2;
      return norm2(p) > 0 ? 3 : 4;
    case FamilyId::Nxii:
      if (detail::is_origin(p)) return 0;
      if (detail::on_light_cone(p)) return 1;
      return norm2(p) > 0 ? 2 : 3;
  }
  return 0;
}

inline ExpectedOrbit expected_orbit(const CatalogEntry& e, const MVector& p) {
  return e.inventory.at(stratum_index(e, p));
}

struct CatalogRow {
  FamilyId id;
  ParamSlots slots;
  bool proper;
  OrbitSpace orbit_space;
  std::string source;
};

inline std::vector<CatalogRow> list_catalog() {
  std::vector<CatalogRow> rows;
  for (FamilyId id : kAllFamilies) {
    const CatalogEntry e = build(id);
    rows.push_back({id, param_slots(id), e.proper, e.orbit_space, e.source});
  }
  return rows;
}

/// Seeded points in [-range, range]^3.
inline std::vector<MVector> generic_points(std::mt19937_64& rng, int n, double range = 3.0) {
  std::uniform_real_distribution<double> U(-range, range);
  std::vector<MVector> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.emplace_back(U(rng), U(rng), U(rng));
  return pts;
}

/// Seeded points lying exactly on each measure-zero stratum of the entry.
inline std::vector<MVector> stratum_points(const CatalogEntry& e, std::mt19937_64& rng,
                                           int per_stratum) {
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  std::vector<MVector> pts;
  const auto repeat = [&](auto make) {
    for (int i = 0; i < per_stratum; ++i) pts.push_back(make());
  };
  const auto plus = [&] { const double r = U(rng); return MVector(r, r, U(rng)); };
  const auto minus = [&] { const double r = U(rng); return MVector(r, -r, U(rng)); };
  const auto cone = [&] {
    const double y = U(rng), z = U(rng);
    const double x = std::sqrt(y * y + z * z);
    return MVector(U(rng) < 0 ? -x : x, y, z);
  };
  switch (e.id) {
    case FamilyId::Pb:
      repeat([&] { return MVector(U(rng), 0, 0); });
      break;
    case FamilyId::Pd:
      if (e.params.sign > 0) repeat(plus); else repeat(minus);
      break;
    case FamilyId::Ni:
      repeat([&] { return MVector(0, 0, U(rng)); });
      repeat(plus);
      repeat(minus);
      break;
    case FamilyId::Niii:
    case FamilyId::Nv:
    case FamilyId::Nx:
    case FamilyId::Nxi:
      repeat(plus);
      break;
    case FamilyId::Niv:
    case FamilyId::Nvi:
      repeat(minus);
      break;
    case FamilyId::Nvii:
      repeat([&] { const double r = U(rng); return MVector(r, r + e.params.beta, U(rng)); });
      break;
    case FamilyId::Nix:
      pts.push_back(MVector::Zero());
      repeat(plus);
      repeat([&] {
        MVector p = cone();
        while (std::abs(p(0) - p(1)) < 1e-3) p = cone();
        return p;
      });
      break;
    case FamilyId::Nxii:
      pts.push_back(MVector::Zero());
      repeat(cone);
      break;
    default:
      break;
  }
  return pts;
}

}  // namespace mink
