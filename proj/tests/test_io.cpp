#include "mink/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace mink;

TEST(ParseBasis, ValidFileWithComments) {
  std::istringstream in(
      "# screw boost\n"
      "0 1 0 1 0 0 0 0 0  0 0 1.5   # (B1, 1.5 e3)\n"
      "\n"
      "0 0 0 0 0 0 0 0 0 1 1 0\n");
  const SubalgebraSpec s = parse_basis(in);
  ASSERT_EQ(s.dim(), 2);
  EXPECT_TRUE(s.basis[0].X.isApprox(B1()));
  EXPECT_DOUBLE_EQ(s.basis[0].v(2), 1.5);
  EXPECT_TRUE(s.basis[1].v.isApprox(e12()));
}

TEST(ParseBasis, ErrorsCarryLineAndColumn) {
  std::istringstream bad("0 0 0 0 0 0 0 0 0 1 1 0\n0 1 0 1 0 0 0 0 0 0 x 1\n");
  try {
    parse_basis(bad);
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 21);
  }
  std::istringstream short_line("1 2 3\n");
  EXPECT_THROW(parse_basis(short_line), ParseError);
  std::istringstream long_line("0 0 0 0 0 0 0 0 0 1 1 0 7\n");
  EXPECT_THROW(parse_basis(long_line), ParseError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(parse_basis(empty), ParseError);
}

TEST(ParseBasis, FormatRoundTrip) {
  FamilyParams p = default_params(FamilyId::Pd);
  p.beta = 0.1;
  const SubalgebraSpec s = adjoint(Motion(boost(0.3), MVector(1, 2, 3)), build(FamilyId::Pd, p).basis);
  std::istringstream in(format_basis(s));
  const SubalgebraSpec t = parse_basis(in);
  for (int i = 0; i < s.dim(); ++i) EXPECT_EQ(s.basis[i].coords(), t.basis[i].coords());
}

TEST(ParsePoint, Values) {
  EXPECT_EQ(parse_point("2,1,0"), MVector(2, 1, 0));
  EXPECT_EQ(parse_point("-1.5,+2,3e-1"), MVector(-1.5, 2, 0.3));
  EXPECT_THROW(parse_point("1,2"), ParseError);
  EXPECT_THROW(parse_point("1,,2"), ParseError);
  EXPECT_THROW(parse_point("1,2,nan"), ParseError);
}

TEST(ParseParams, Values) {
  const FamilyParams p = parse_params(FamilyId::Pd, "beta=1.5,sign=-1");
  EXPECT_DOUBLE_EQ(p.beta, 1.5);
  EXPECT_EQ(p.sign, -1);
  EXPECT_EQ(parse_params(FamilyId::Pa, "plane=lorentzian").plane, PlaneKind::Lorentzian);
  EXPECT_EQ(parse_params(FamilyId::Nx, ""), default_params(FamilyId::Nx));
  EXPECT_THROW(parse_params(FamilyId::Ni, "beta=1"), ParseError);
  EXPECT_THROW(parse_params(FamilyId::Pd, "sign=2"), ParseError);
  EXPECT_THROW(parse_params(FamilyId::Pd, "beta"), ParseError);
  EXPECT_THROW(parse_params(FamilyId::Pa, "plane=round"), ParseError);
}

TEST(Json, ClassifyResultSchema) {
  const Classification c = classify(build(FamilyId::Pd).basis);
  const Json j = run_report("classify", to_json(c));
  EXPECT_EQ(j["schema"], 1);
  const Json& r = j["payload"];
  EXPECT_EQ(r["id"], "P-d");
  EXPECT_EQ(r["conjugator"]["A"].size(), 9u);
  EXPECT_EQ(r["conjugator"]["a"].size(), 3u);
  EXPECT_DOUBLE_EQ(r["params"]["beta"].get<double>(), 1.0);
  EXPECT_TRUE(r.contains("residual"));
  const Json rej = to_json(classify(SubalgebraSpec{{B2(), e1()}}));
  EXPECT_EQ(rej["outcome"], "not-cohomogeneity-one");
  EXPECT_TRUE(rej.contains("signature"));
}

TEST(Json, CatalogEntries) {
  const Json j = to_json(build(FamilyId::Pd));
  EXPECT_EQ(j["param_slots"], Json::array({"beta", "sign"}));
  EXPECT_EQ(j["generators"].size(), 2u);
  EXPECT_EQ(j["generators"][0].size(), 12u);
  EXPECT_EQ(j["proper"], true);
  EXPECT_EQ(to_json(build(FamilyId::Nxii))["params"], Json::object());
}

TEST(Json, DeterministicAndRoundTrippable) {
  const Json a = to_json(make_witness(build(FamilyId::Nix)));
  const Json b = to_json(make_witness(build(FamilyId::Nix)));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(Json::parse(a.dump()), a);
  // Shortest round-trip form, never more than 17 significant digits.
  EXPECT_EQ(Json(0.1).dump(), "0.1");
  EXPECT_EQ(Json::parse(Json(1.0 / 3.0).dump()).get<double>(), 1.0 / 3.0);
}

TEST(Json, OrbitReport) {
  const Json j = to_json(analyze_orbit(build(FamilyId::Ni), MVector(1, 2, 0)));
  EXPECT_EQ(j["causal"], "lorentzian");
  EXPECT_EQ(j["orbit_class"], "principal");
  EXPECT_DOUBLE_EQ(j["invariant"].get<double>(), -3.0);
  EXPECT_EQ(j["matched_expectation"], true);
}
