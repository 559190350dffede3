#pragma once

#include "mink/properness.hpp"

#include <optional>

namespace mink {

/// Per-point orbit analysis of a catalog entry, checked against its inventory.
struct OrbitReport {
  MVector point;
  int orbit_dim = 0;
  int stabilizer_dim = 0;
  Causal causal = Causal::ZeroVector;
  StabilizerClass stabilizer_class = StabilizerClass::Trivial;
  OrbitClass orbit_class = OrbitClass::Principal;
  ExpectedOrbit expected;
  OrbitEvidence evidence;
  std::optional<double> invariant;
  bool matched_expectation = false;
};

inline OrbitReport analyze_orbit(const CatalogEntry& entry, const MVector& p) {
  OrbitReport r;
  r.point = p;
  r.orbit_dim = orbit_dimension(entry.basis, p);
  r.stabilizer_dim = stabilizer_algebra(entry.basis, p).dim();
  r.causal = orbit_causal(entry.basis, p);
  r.stabilizer_class = stabilizer_compactness(entry.basis, p);
  r.expected = expected_orbit(entry, p);
  r.orbit_class = r.expected.cls;
  r.evidence = orbit_evidence(entry.basis, p);
  if (entry.invariant) r.invariant = entry.invariant(p);
  r.matched_expectation = r.orbit_dim == r.expected.dim && r.causal == r.expected.causal &&
                          r.orbit_dim + r.stabilizer_dim == entry.basis.dim();
  return r;
}

}  // namespace mink
