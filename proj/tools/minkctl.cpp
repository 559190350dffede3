// minkctl: catalog listing, orbit analysis, classification, properness
// reports and the acceptance suite.
//
// Exit codes: 0 ok, 1 a check failed, 2 bad input, 3 orbit expectation mismatch.

#include "mink/io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

using namespace mink;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kBadInput = 2, kMismatch = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MINK_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric MINK_SEED\n";
    }
  }
  return kDefaultSeed;
}

FamilyId require_family(const std::string& s) {
  const auto id = parse_family(s);
  if (!id) throw ParseError(1, 1, "unknown family id '" + s + "'");
  return *id;
}

std::string vec_str(const MVector& v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(10) << "(" << v(0) << ", " << v(1) << ", " << v(2) << ")";
  return os.str();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string generators_str(const CatalogEntry& e) {
  std::string s;
  for (const auto& el : e.basis.basis) {
    const Coords12 c = el.coords();
    std::ostringstream os;
    os << std::setprecision(4) << "[";
    for (int i = 0; i < 12; ++i) os << (i ? " " : "") << c(i);
    os << "]";
    s += (s.empty() ? "" : " ") + os.str();
  }
  return s;
}

int cmd_catalog(bool json, const std::string& only) {
  std::vector<CatalogEntry> entries;
  if (!only.empty())
    entries.push_back(build(require_family(only)));
  else
    for (FamilyId id : kAllFamilies) entries.push_back(build(id));
  if (json) {
    Json arr = Json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    print_json(run_report("catalog", arr));
    return kOk;
  }
  std::cout << std::left << std::setw(7) << "id" << std::setw(10) << "proper" << std::setw(22)
            << "orbit space" << std::setw(14) << "parameters"
            << "source\n";
  for (const auto& e : entries) {
    std::string slots;
    for (const auto& s : slots_json(param_slots(e.id))) slots += (slots.empty() ? "" : ",") + s.get<std::string>();
    std::cout << std::setw(7) << to_string(e.id) << std::setw(10) << (e.proper ? "proper" : "nonproper")
              << std::setw(22) << to_string(e.orbit_space) << std::setw(14) << (slots.empty() ? "-" : slots)
              << e.source << "\n";
    std::cout << "       generators " << generators_str(e) << "\n";
  }
  return kOk;
}

int cmd_orbit(const std::string& id_s, const std::string& params_s, const std::string& point_s,
              int grid, const std::string& csv, bool json) {
  const FamilyId id = require_family(id_s);
  const CatalogEntry e = build(id, parse_params(id, params_s));
  const MVector p = parse_point(point_s);
  const OrbitReport r = analyze_orbit(e, p);
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot open " + csv);
    const Grid g = tensor_grid(e.basis.dim(), grid, 1.0);
    write_orbit_csv(out, g, sample_orbit(e, p, g), e.basis.dim());
  }
  if (json) {
    print_json(run_report("orbit", to_json(r)));
  } else {
    std::cout << to_string(id) << " orbit through " << vec_str(p) << "\n"
              << "  stratum      " << r.expected.stratum << "\n"
              << "  dimension    " << r.orbit_dim << " (stabilizer " << r.stabilizer_dim << ", "
              << to_string(r.stabilizer_class) << ")\n"
              << "  causal       " << to_string(r.causal) << "\n"
              << "  class        " << to_string(r.orbit_class) << " (numeric evidence: "
              << to_string(r.evidence.numeric_guess) << ")\n";
    if (r.invariant) std::cout << "  " << e.invariant_name << " = " << std::setprecision(17) << *r.invariant << "\n";
    std::cout << "  expected     dim " << r.expected.dim << ", " << to_string(r.expected.causal) << " -> "
              << (r.matched_expectation ? "match" : "MISMATCH") << "\n";
  }
  return r.matched_expectation ? kOk : kMismatch;
}

int cmd_classify(const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open " + path);
  const SubalgebraSpec spec = parse_basis(in);
  const Classification c = classify(spec);
  if (json) {
    print_json(run_report("classify", to_json(c)));
  } else if (c.matched()) {
    std::cout << "family     " << to_string(*c.id) << "\n";
    const Json pj = params_json(*c.id, c.params);
    if (!pj.empty()) std::cout << "params     " << pj.dump() << "\n";
    std::cout << "conjugator " << to_json(c.conjugator).dump() << "\n"
              << "residual   " << c.residual << "\n";
  } else {
    std::cout << to_string(c.outcome) << ": " << c.reason << "\n";
    if (c.signature) std::cout << "signature  " << to_json(*c.signature).dump() << "\n";
  }
  return c.matched() ? kOk : kCheckFailed;
}

int cmd_properness(const std::string& id_s, const std::string& params_s, std::uint64_t seed, bool json) {
  const FamilyId id = require_family(id_s);
  const CatalogEntry e = build(id, parse_params(id, params_s));
  if (e.proper) {
    std::mt19937_64 rng(seed);
    auto pts = generic_points(rng, 180);
    const auto strata = stratum_points(e, rng, 10);
    pts.insert(pts.end(), strata.begin(), strata.end());
    int noncompact = 0;
    for (const auto& p : pts)
      if (stabilizer_compactness(e.basis, p) == StabilizerClass::Noncompact) ++noncompact;
    if (json) {
      print_json(run_report("properness", Json{{"id", std::string(to_string(id))},
                                               {"verdict", "proper"},
                                               {"points", pts.size()},
                                               {"noncompact_stabilizers", noncompact}}));
    } else {
      std::cout << to_string(id) << ": proper\n"
                << "  " << pts.size() << " sampled points, " << noncompact << " noncompact stabilizers\n";
    }
    return noncompact == 0 ? kOk : kCheckFailed;
  }
  const NonpropernessWitness w = make_witness(e);
  if (json) {
    print_json(run_report("properness", Json{{"id", std::string(to_string(id))},
                                             {"verdict", "nonproper"},
                                             {"witness", to_json(w)}}));
  } else {
    std::cout << to_string(id) << ": nonproper\n"
              << "  fixed point  " << vec_str(w.point) << "\n"
              << "  generator    " << to_json(w.generator).dump() << "\n"
              << "  fixed-point residual " << w.fixed_point_residual << ", membership residual "
              << w.membership_residual << "\n"
              << "     n   |exp(nX)|_2\n";
    for (const auto& [n, g] : w.growth_certificate)
      std::cout << std::setw(6) << n << "   " << std::setprecision(6) << g << "\n";
    std::cout << "  witness " << (w.valid ? "valid" : "INVALID") << "\n";
  }
  return w.valid ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool json) {
  if (suite != "all") throw ParseError(1, 1, "unknown suite '" + suite + "'");
  const auto checks = run_all_checks(seed);
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (json) {
    print_json(run_report("verify", Json{{"suite", suite}, {"seed", seed}, {"pass", all}}, checks));
  } else {
    for (const auto& c : checks)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << std::left << std::setw(28) << c.name
                << " [" << c.citation << "]  residual " << std::setprecision(3) << c.residual << "  "
                << c.detail << "\n";
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomogeneity-one isometric actions on 3-dimensional Minkowski space"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = default_seed();
  bool json = false;
  app.add_option("--seed", seed, "seed for all random sampling (default 42, or MINK_SEED)");
  app.add_flag("--json", json, "emit a versioned JSON report");

  std::string id, params, point = "", basis, csv, suite = "all";
  int grid = 5;

  auto* catalog = app.add_subcommand("catalog", "list the catalog families");
  catalog->add_flag("--json", json);
  catalog->add_option("--id", id, "show one family");

  auto* orbit = app.add_subcommand("orbit", "analyze the orbit through a point");
  orbit->add_flag("--json", json);
  orbit->add_option("--id", id)->required();
  orbit->add_option("--params", params, "e.g. beta=1.5,sign=-1");
  orbit->add_option("--point", point, "x,y,z")->required();
  orbit->add_option("--grid", grid, "samples per orbit parameter for --csv")->check(CLI::Range(1, 1000));
  orbit->add_option("--csv", csv, "write orbit samples to this file");

  auto* cls = app.add_subcommand("classify", "identify the family of a subalgebra");
  cls->add_flag("--json", json);
  cls->add_option("--basis", basis, "basis file: 12 reals per line")->required();

  auto* prop = app.add_subcommand("properness", "properness verdict and witness");
  prop->add_flag("--json", json);
  prop->add_option("--id", id)->required();
  prop->add_option("--params", params);

  auto* ver = app.add_subcommand("verify", "run the acceptance suite");
  ver->add_flag("--json", json);
  ver->add_option("--suite", suite, "only 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*catalog) return cmd_catalog(json, id);
    if (*orbit) return cmd_orbit(id, params, point, grid, csv, json);
    if (*cls) return cmd_classify(basis, json);
    if (*prop) return cmd_properness(id, params, seed, json);
    if (*ver) return cmd_verify(suite, seed, json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
