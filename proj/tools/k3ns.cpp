// Command-line front end: enumerate admissible orders, classify single cases,
// certify curve smoothness over a prime field, and emit the full report.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "k3ns/k3ns.hpp"

namespace {

constexpr long long kSupportedOrders[] = {38, 44, 48, 50, 54, 60, 66};

struct TheoremExpectation {
  bool exists;
  int num_actions;
};

TheoremExpectation expected_verdict(long long m) {
  if (m == 60) return {false, 0};
  if (m == 38) return {true, 2};
  return {true, 1};
}

k3ns::CaseReport run_case(long long m, const std::vector<long long>& primes) {
  switch (m) {
    case 38: return k3ns::verify_m38();
    case 44: return k3ns::verify_m44();
    case 50: return k3ns::verify_m50(primes);
    default: return k3ns::classify_div3(m);
  }
}

int cmd_orders(long long phi_max) {
  for (const k3ns::OrderCandidate& c : k3ns::admissible_orders(phi_max))
    std::cout << "m=" << c.m << " phi=" << c.phi << "\n";
  return 0;
}

int cmd_classify(long long m, bool as_json, bool verbose,
                 const std::vector<long long>& primes) {
  k3ns::CaseReport rep = run_case(m, primes);
  if (as_json) {
    std::cout << k3ns::to_json(rep).dump(2) << "\n";
  } else {
    std::cout << k3ns::render_case_summary(rep) << "\n";
    if (verbose) std::cout << k3ns::render_case_checks(rep);
    if (!rep.annotation.empty()) std::cout << "note: " << rep.annotation << "\n";
  }
  TheoremExpectation want = expected_verdict(m);
  bool ok = rep.all_checks_pass() && rep.exists == want.exists &&
            rep.num_actions == want.num_actions;
  return ok ? 0 : 1;
}

int cmd_smooth(const std::string& path, long long prime) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open curve file '" << path << "'\n";
    return 2;
  }
  k3ns::PlaneCurve curve = k3ns::parse_curve(in);
  auto singular = k3ns::singular_point_fp(curve, prime);
  if (singular) {
    const auto& pt = *singular;
    std::cout << "singular point (" << pt[0] << ":" << pt[1] << ":" << pt[2]
              << ") over F_" << prime << "\n";
    return 1;
  }
  std::cout << "smooth over F_" << prime << " (degree " << curve.degree() << ", "
            << prime * prime + prime + 1 << " points scanned)\n";
  return 0;
}

int cmd_report(const std::string& format, const std::string& out_path,
               const std::vector<long long>& primes) {
  k3ns::ReportDocument doc = k3ns::build_report(primes);
  std::string rendered =
      format == "json" ? k3ns::render_json(doc) : k3ns::render_text(doc);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << rendered;
  }
  return doc.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3ns: exact case analysis of high-order purely non-symplectic "
               "cyclic automorphisms of K3 surfaces"};
  app.require_subcommand(1);

  auto* orders = app.add_subcommand("orders", "list orders m with phi(m) <= bound");
  long long phi_max = 21;
  orders->add_option("--phi-max", phi_max, "totient bound")
      ->check(CLI::PositiveNumber);

  std::vector<long long> supported(std::begin(kSupportedOrders),
                                   std::end(kSupportedOrders));

  auto* classify = app.add_subcommand("classify", "run one case and print its verdict");
  long long classify_m = 0;
  bool classify_json = false;
  classify->add_option("--m", classify_m, "order to classify")
      ->required()
      ->check(CLI::IsMember(supported));
  classify->add_flag("--json", classify_json, "emit the full case report as JSON");

  auto* verify = app.add_subcommand("verify", "run one case and print every check");
  long long verify_m = 0;
  verify->add_option("--m", verify_m, "order to verify")
      ->required()
      ->check(CLI::IsMember(supported));

  auto* smooth = app.add_subcommand("smooth", "certify a plane curve smooth over F_p");
  std::string curve_path;
  long long prime = 101;
  smooth->add_option("--curve", curve_path, "curve file (lines 'i j k : num/den')")
      ->required();
  smooth->add_option("--prime", prime, "certification prime")->required();

  auto* report = app.add_subcommand("report", "run all seven cases");
  bool report_all = false;
  std::string report_format = "json";
  std::string report_out;
  report->add_flag("--all", report_all, "run every case")->required();
  report->add_option("--format", report_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  report->add_option("--out", report_out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::vector<long long> primes = k3ns::primes_from_env();
    if (orders->parsed()) return cmd_orders(phi_max);
    if (classify->parsed()) return cmd_classify(classify_m, classify_json, false, primes);
    if (verify->parsed()) return cmd_classify(verify_m, false, true, primes);
    if (smooth->parsed()) {
      if (!k3ns::is_prime(prime)) {
        std::cerr << "error: " << prime << " is not prime\n";
        return 2;
      }
      return cmd_smooth(curve_path, prime);
    }
    if (report->parsed()) return cmd_report(report_format, report_out, primes);
  } catch (const std::runtime_error& e) {
    // Parse-level failures (curve files, environment).
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
