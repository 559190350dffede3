#pragma once

// Text formats: basis files, point and parameter flags, and the versioned
// JSON report. Keys keep insertion order so output is byte-stable.

#include "mink/verify.hpp"

#include "json.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mink {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "1.0.0";

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

namespace io_detail {

inline bool parse_double(std::string_view tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace io_detail

/// One element per line: 12 reals (X row-major, then v). '#' starts a comment.
inline SubalgebraSpec parse_basis(std::istream& in) {
  SubalgebraSpec spec;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = raw.substr(0, raw.find('#'));
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      double v = 0.0;
      if (!io_detail::parse_double(std::string_view(line).substr(pos, end - pos), v))
        throw ParseError(line_no, static_cast<int>(pos) + 1,
                         "not a real number: '" + line.substr(pos, end - pos) + "'");
      if (vals.size() == 12)
        throw ParseError(line_no, static_cast<int>(pos) + 1, "more than 12 reals on the line");
      vals.push_back(v);
      pos = end;
    }
    if (vals.empty()) continue;
    if (vals.size() != 12)
      throw ParseError(line_no, static_cast<int>(line.size()) + 1,
                       "expected 12 reals, found " + std::to_string(vals.size()));
    Coords12 c;
    for (int i = 0; i < 12; ++i) c(i) = vals[i];
    spec.basis.push_back(AlgebraElement::from_coords(c));
  }
  if (spec.basis.empty()) throw ParseError(line_no + 1, 1, "no basis elements");
  return spec;
}

inline std::string format_basis(const SubalgebraSpec& spec) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  for (const auto& el : spec.basis) {
    const Coords12 c = el.coords();
    for (int i = 0; i < 12; ++i) os << (i ? " " : "") << c(i);
    os << "\n";
  }
  return os.str();
}

/// "x,y,z".
inline MVector parse_point(const std::string& s) {
  std::vector<double> vals;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(',', pos);
    const std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    double v = 0.0;
    if (!io_detail::parse_double(tok, v))
      throw ParseError(1, static_cast<int>(pos) + 1, "not a real number: '" + tok + "'");
    vals.push_back(v);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  if (vals.size() != 3) throw ParseError(1, 1, "a point needs 3 coordinates");
  return {vals[0], vals[1], vals[2]};
}

/// "beta=1.5,sign=-1", "alpha=1,beta=0", "plane=lorentzian". Unset keys keep
/// the family defaults; keys the family does not use are an error.
inline FamilyParams parse_params(FamilyId id, const std::string& s) {
  FamilyParams p = default_params(id);
  if (s.empty()) return p;
  const ParamSlots slots = param_slots(id);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find(',', pos), s.size());
    const std::string item = s.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    const int col = static_cast<int>(pos) + 1;
    if (eq == std::string::npos) throw ParseError(1, col, "expected key=value: '" + item + "'");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    double v = 0.0;
    if (key == "plane") {
      if (!slots.plane) throw ParseError(1, col, "family has no plane parameter");
      const auto k = parse_plane_kind(val);
      if (!k) throw ParseError(1, col + static_cast<int>(eq) + 1, "unknown plane kind '" + val + "'");
      p.plane = *k;
    } else if (!io_detail::parse_double(val, v)) {
      throw ParseError(1, col + static_cast<int>(eq) + 1, "not a real number: '" + val + "'");
    } else if (key == "beta" && slots.beta) {
      p.beta = v;
    } else if (key == "alpha" && slots.alpha) {
      p.alpha = v;
    } else if (key == "sign" && slots.sign && (v == 1.0 || v == -1.0)) {
      p.sign = static_cast<int>(v);
    } else {
      throw ParseError(1, col, "parameter '" + key + "' not valid for " + std::string(to_string(id)));
    }
    pos = end + 1;
  }
  return p;
}

// ---------------------------------------------------------------------------
// JSON.

inline Json to_json(const MVector& v) { return Json::array({v(0), v(1), v(2)}); }

inline Json to_json(const Mat3& A) {
  Json j = Json::array();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) j.push_back(A(i, k));
  return j;
}

inline Json to_json(const Motion& m) { return Json{{"A", to_json(m.A())}, {"a", to_json(m.a())}}; }

inline Json to_json(const AlgebraElement& el) {
  const Coords12 c = el.coords();
  Json j = Json::array();
  for (int i = 0; i < 12; ++i) j.push_back(c(i));
  return j;
}

inline Json params_json(FamilyId id, const FamilyParams& p) {
  const ParamSlots s = param_slots(id);
  Json j = Json::object();
  if (s.alpha) j["alpha"] = p.alpha;
  if (s.beta) j["beta"] = p.beta;
  if (s.sign) j["sign"] = p.sign;
  if (s.plane) j["plane"] = std::string(to_string(p.plane));
  return j;
}

inline Json slots_json(const ParamSlots& s) {
  Json j = Json::array();
  if (s.alpha) j.push_back("alpha");
  if (s.beta) j.push_back("beta");
  if (s.sign) j.push_back("sign");
  if (s.plane) j.push_back("plane");
  return j;
}

inline Json to_json(const CatalogEntry& e) {
  Json gens = Json::array();
  for (const auto& el : e.basis.basis) gens.push_back(to_json(el));
  Json inv = Json::array();
  for (const auto& o : e.inventory)
    inv.push_back({{"stratum", o.stratum},
                   {"dim", o.dim},
                   {"causal", std::string(to_string(o.causal))},
                   {"class", std::string(to_string(o.cls))}});
  Json j{{"id", std::string(to_string(e.id))},
         {"params", params_json(e.id, e.params)},
         {"param_slots", slots_json(param_slots(e.id))},
         {"generators", gens},
         {"proper", e.proper},
         {"orbit_space", std::string(to_string(e.orbit_space))},
         {"inventory", inv},
         {"source", e.source}};
  if (!e.invariant_name.empty()) j["invariant"] = e.invariant_name;
  return j;
}

inline Json to_json(const OrbitReport& r) {
  Json j{{"point", to_json(r.point)},
         {"orbit_dim", r.orbit_dim},
         {"stabilizer_dim", r.stabilizer_dim},
         {"causal", std::string(to_string(r.causal))},
         {"stabilizer", std::string(to_string(r.stabilizer_class))},
         {"orbit_class", std::string(to_string(r.orbit_class))},
         {"stratum", r.expected.stratum},
         {"expected", {{"dim", r.expected.dim},
                       {"causal", std::string(to_string(r.expected.causal))},
                       {"class", std::string(to_string(r.expected.cls))}}},
         {"evidence", {{"neighbor_max_dim", r.evidence.neighbor_max_dim},
                       {"uniform", r.evidence.neighborhood_uniform},
                       {"guess", std::string(to_string(r.evidence.numeric_guess))}}}};
  if (r.invariant) j["invariant"] = *r.invariant;
  j["matched_expectation"] = r.matched_expectation;
  return j;
}

inline Json to_json(const NonpropernessWitness& w) {
  Json growth = Json::array();
  for (const auto& [n, g] : w.growth_certificate) growth.push_back({{"n", n}, {"norm", g}});
  return Json{{"point", to_json(w.point)},
              {"generator", to_json(w.generator)},
              {"growth", growth},
              {"fixed_point_residual", w.fixed_point_residual},
              {"membership_residual", w.membership_residual},
              {"valid", w.valid}};
}

inline Json to_json(const InvariantSignature& s) {
  Json j{{"dim_g", s.dim_g},
         {"dim_l", s.dim_l},
         {"linear_type", std::string(to_string(s.linear_type))},
         {"dim_ker", s.dim_ker}};
  j["ker_causal"] = s.ker_causal ? Json(std::string(to_string(*s.ker_causal))) : Json(nullptr);
  j["eigen_sign"] = s.eigen_sign;
  return j;
}

inline Json to_json(const Classification& c) {
  Json j{{"outcome", std::string(to_string(c.outcome))}};
  if (c.matched()) {
    j["id"] = std::string(to_string(*c.id));
    j["params"] = params_json(*c.id, c.params);
    j["conjugator"] = to_json(c.conjugator);
    j["residual"] = c.residual;
  } else {
    j["reason"] = c.reason;
  }
  if (c.signature) j["signature"] = to_json(*c.signature);
  return j;
}

inline Json to_json(const CheckResult& c) {
  return Json{{"id", c.id},          {"name", c.name},         {"citation", c.citation},
              {"pass", c.pass},      {"residual", c.residual}, {"detail", c.detail}};
}

/// Top-level report envelope.
inline Json run_report(const std::string& command, Json payload,
                       const std::vector<CheckResult>& checks = {}) {
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back(to_json(c));
  return Json{{"schema", kSchemaVersion},
              {"version", kVersion},
              {"command", command},
              {"payload", std::move(payload)},
              {"checks", cs}};
}

}  // namespace mink
