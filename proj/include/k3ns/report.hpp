#pragma once

#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3ns/engine.hpp"

namespace k3ns {

inline const char* tool_version() { return "1.0.0"; }

// Full run output: version, smoothness primes, the seven case reports in
// ascending order, and the conjunction of every check. Serialization is
// canonical (sorted keys, ascending m) and never contains floating-point
// values; rationals appear as "num/den" strings.
struct ReportDocument {
  std::string version;
  std::vector<long long> primes_used;
  std::vector<CaseReport> cases;
  bool overall_pass = false;

  friend bool operator==(const ReportDocument& x, const ReportDocument& y) {
    return x.version == y.version && x.primes_used == y.primes_used &&
           x.cases == y.cases && x.overall_pass == y.overall_pass;
  }
};

inline ReportDocument build_report(const std::vector<long long>& primes) {
  ReportDocument doc;
  doc.version = tool_version();
  doc.primes_used = primes;
  doc.cases = classify_all(primes);
  doc.overall_pass = true;
  for (const CaseReport& c : doc.cases) doc.overall_pass = doc.overall_pass && c.all_checks_pass();
  return doc;
}

// Smoothness-certificate primes from K3NS_PRIMES (comma-separated), default
// {101, 1009}.
inline std::vector<long long> primes_from_env() {
  const char* env = std::getenv("K3NS_PRIMES");
  if (env == nullptr || *env == '\0') return {101, 1009};
  std::vector<long long> out;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    long long p = std::stoll(item);
    if (!is_prime(p)) throw std::invalid_argument("K3NS_PRIMES: " + item + " is not prime");
    out.push_back(p);
  }
  if (out.empty()) throw std::invalid_argument("K3NS_PRIMES: no primes given");
  return out;
}

// --------------------------------------------------------------------------
// JSON rendering. nlohmann::json objects keep keys sorted, so identical
// documents serialize to identical bytes.
// --------------------------------------------------------------------------

inline nlohmann::json quotient_to_json(const std::optional<BranchConfiguration>& q) {
  nlohmann::json out;
  if (!q.has_value()) {
    out["base"] = "none";
    out["branch"] = nlohmann::json::array();
    return out;
  }
  out["base"] = q->base.name();
  nlohmann::json branch = nlohmann::json::array();
  for (const BranchComponent& c : q->components) {
    nlohmann::json entry;
    entry["class"] = c.curve_class.str(q->base);
    entry["index"] = c.ramification_index;
    branch.push_back(entry);
  }
  out["branch"] = branch;
  return out;
}

inline nlohmann::json to_json(const CaseReport& rep) {
  nlohmann::json out;
  out["m"] = rep.m;
  out["exists"] = rep.exists;
  out["num_surfaces"] = rep.num_surfaces;
  out["num_actions"] = rep.num_actions;
  out["quotient_model"] = quotient_to_json(rep.quotient_model);
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : rep.checks) {
    nlohmann::json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  out["checks"] = checks;
  out["annotation"] = rep.annotation;
  return out;
}

inline nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json out;
  out["tool_version"] = doc.version;
  out["primes_used"] = doc.primes_used;
  nlohmann::json cases = nlohmann::json::array();
  for (const CaseReport& c : doc.cases) cases.push_back(to_json(c));
  out["cases"] = cases;
  out["overall_pass"] = doc.overall_pass;
  return out;
}

inline std::string render_json(const ReportDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

// --------------------------------------------------------------------------
// Parsing back (round-trip support). The branch list stores only class and
// index; coefficients are recovered from the per-case cover order m.
// --------------------------------------------------------------------------

namespace detail {

inline SurfaceModel surface_from_name(const std::string& name) {
  if (name == "P2") return SurfaceModel::plane();
  if (name.size() >= 2 && name[0] == 'F')
    return SurfaceModel::hirzebruch(std::stoll(name.substr(1)));
  throw std::invalid_argument("surface_from_name: unknown surface '" + name + "'");
}

// Inverse of DivisorClass::str for the classes that occur in quotient models:
// "dH"/"H" on the plane and "(a,b)" on F_0.
inline DivisorClass divisor_from_string(const std::string& s, const SurfaceModel& X) {
  if (X.kind() == SurfaceKind::ProjectivePlane) {
    if (s == "H") return DivisorClass::on_plane(1);
    if (s == "-H") return DivisorClass::on_plane(-1);
    if (s == "0") return DivisorClass::on_plane(0);
    if (s.size() >= 2 && s.back() == 'H')
      return DivisorClass::on_plane(std::stoll(s.substr(0, s.size() - 1)));
    throw std::invalid_argument("divisor_from_string: bad plane class '" + s + "'");
  }
  if (s.size() >= 5 && s.front() == '(' && s.back() == ')') {
    auto comma = s.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("divisor_from_string: bad class '" + s + "'");
    long long a = std::stoll(s.substr(1, comma - 1));
    long long b = std::stoll(s.substr(comma + 1, s.size() - comma - 2));
    return DivisorClass::on_hirzebruch(a, b);
  }
  throw std::invalid_argument("divisor_from_string: bad class '" + s + "'");
}

}  // namespace detail

inline ReportDocument report_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.version = j.at("tool_version").get<std::string>();
  doc.primes_used = j.at("primes_used").get<std::vector<long long>>();
  doc.overall_pass = j.at("overall_pass").get<bool>();
  for (const nlohmann::json& jc : j.at("cases")) {
    CaseReport rep;
    rep.m = jc.at("m").get<long long>();
    rep.exists = jc.at("exists").get<bool>();
    rep.num_surfaces = jc.at("num_surfaces").get<int>();
    rep.num_actions = jc.at("num_actions").get<int>();
    rep.annotation = jc.at("annotation").get<std::string>();
    const nlohmann::json& jq = jc.at("quotient_model");
    std::string base = jq.at("base").get<std::string>();
    if (base != "none") {
      SurfaceModel surface = detail::surface_from_name(base);
      BranchConfiguration cfg{surface, {}, rep.m};
      for (const nlohmann::json& jb : jq.at("branch")) {
        long long r = jb.at("index").get<long long>();
        DivisorClass cls =
            detail::divisor_from_string(jb.at("class").get<std::string>(), surface);
        cfg.components.emplace_back(cls, r, rep.m - rep.m / r, rep.m);
      }
      rep.quotient_model = cfg;
    }
    for (const nlohmann::json& jk : jc.at("checks"))
      rep.checks.push_back({jk.at("name").get<std::string>(), jk.at("pass").get<bool>(),
                            jk.at("detail").get<std::string>()});
    doc.cases.push_back(std::move(rep));
  }
  return doc;
}

// --------------------------------------------------------------------------
// Text rendering.
// --------------------------------------------------------------------------

inline std::string render_case_checks(const CaseReport& rep) {
  std::ostringstream os;
  for (const CheckResult& c : rep.checks)
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail
       << "\n";
  return os.str();
}

inline std::string render_case_summary(const CaseReport& rep) {
  std::ostringstream os;
  long long passed = 0;
  for (const CheckResult& c : rep.checks)
    if (c.pass) ++passed;
  os << "m=" << std::left << std::setw(3) << rep.m
     << " exists=" << (rep.exists ? "yes" : "no ") << " surfaces=" << rep.num_surfaces
     << " actions=" << rep.num_actions << " quotient="
     << std::setw(6)
     << (rep.quotient_model ? rep.quotient_model->base.name() : std::string("-"))
     << " checks=" << passed << "/" << rep.checks.size();
  return os.str();
}

inline std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "k3ns report (version " << doc.version << ")\n";
  os << "smoothness primes:";
  for (long long p : doc.primes_used) os << " " << p;
  os << "\n\n";
  for (const CaseReport& rep : doc.cases) os << render_case_summary(rep) << "\n";
  os << "\noverall: " << (doc.overall_pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace k3ns
