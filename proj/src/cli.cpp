#include "eqkt/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "eqkt/catalog.hpp"
#include "eqkt/errors.hpp"
#include "eqkt/restriction.hpp"
#include "eqkt/sweep.hpp"
#include "eqkt/tduality.hpp"

namespace eqkt {

void ReportDocument::summarize() {
  summary = {};
  for (const auto& r : results) {
    ++summary.total;
    if (r.value("pass", true)) ++summary.passed;
  }
  summary.failed = summary.total - summary.passed;
}

json ReportDocument::to_json() const {
  return {{"version", version},
          {"command", command},
          {"timestamp", timestamp},
          {"results", results},
          {"summary", {{"total", summary.total}, {"passed", summary.passed}, {"failed", summary.failed}}}};
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument doc;
  doc.version = j.at("version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  doc.timestamp = j.value("timestamp", "");
  doc.results = j.at("results").get<std::vector<json>>();
  const json& s = j.at("summary");
  doc.summary = {s.at("total").get<long>(), s.at("passed").get<long>(), s.at("failed").get<long>()};
  return doc;
}

int exit_status(const ReportDocument& doc) { return doc.summary.failed == 0 ? 0 : 1; }

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string module_text(const json& m) {
  std::vector<Integer> factors;
  for (const auto& t : m.at("torsion")) factors.push_back(integer_from_json(t));
  factors.insert(factors.end(), m.at("rank").get<std::size_t>(), Integer(0));
  return describe_factors(factors);
}

void render_table(const ReportDocument& doc, std::ostream& os) {
  for (const auto& r : doc.results) {
    if (r.contains("identifier")) {
      os << r.at("identifier").get<std::string>() << "  [" << r.at("kind").get<std::string>() << "]  "
         << r.at("anchor").get<std::string>() << '\n';
      continue;
    }
    os << (r.value("pass", true) ? "PASS" : "FAIL") << "  " << r.value("family", "") << " ";
    const json& subject = r.at("subject");
    for (const auto& [key, value] : subject.items())
      if (value.is_number()) os << ' ' << key << '=' << value.dump();
    if (subject.contains("closed_form")) {
      const json& k = subject.at("closed_form");
      os << "  K0 = " << module_text(k.at("k0")) << ", K1 = " << module_text(k.at("k1"));
    }
    if (subject.contains("pair") && subject.contains("dual"))
      os << "  " << subject.at("pair").dump() << " <-> " << subject.at("dual").dump();
    for (const auto& c : r.at("checks"))
      if (!c.at("pass").get<bool>()) os << "  !" << c.at("name").get<std::string>();
    os << '\n';
  }
  os << "total " << doc.summary.total << ", passed " << doc.summary.passed << ", failed " << doc.summary.failed << '\n';
}

std::string join_command(const std::vector<std::string>& args) {
  std::string s = "eqkt";
  for (const auto& a : args) s += ' ' + a;
  return s;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact twisted equivariant K-theory of circle bundles over a point", "eqkt"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string out_path;
  int jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::Range(1, 4096));

  long n = 0, m = 0, k = 0, twist = 0, max_n = 0;
  std::string suite_name;

  auto* kgroups = app.add_subcommand("kgroups", "K-groups of (E_k, twist) by both routes")->fallthrough();
  kgroups->add_option("--n", n)->required();
  kgroups->add_option("--k", k)->required();
  kgroups->add_option("--twist", twist)->required();

  auto* pairs = app.add_subcommand("pairs", "All valid pairs for Z_n with their duals")->fallthrough();
  pairs->add_option("--n", n)->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "Restriction along Z_m -> Z_n, both descriptions")->fallthrough();
  restrict_cmd->add_option("--n", n)->required();
  restrict_cmd->add_option("--m", m)->required();
  restrict_cmd->add_option("--k", k)->required();
  restrict_cmd->add_option("--twist", twist)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification sweep")->fallthrough();
  verify->add_option("--suite", suite_name)->required();
  verify->add_option("--max-n", max_n)->required();

  auto* constants = app.add_subcommand("constants", "Duality constants of one pair")->fallthrough();
  constants->add_option("--n", n)->required();
  constants->add_option("--k", k)->required();
  constants->add_option("--twist", twist)->required();

  auto* catalog = app.add_subcommand("catalog", "Dump the catalog of worked examples")->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  ReportDocument doc;
  doc.command = join_command(args);
  doc.timestamp = utc_timestamp();

  try {
    auto push = [&doc](const VerificationReport& r) { doc.results.push_back(r.to_json(false)); };
    if (*kgroups) {
      push(kgroups_report(PointPair(n, k, twist)));
    } else if (*pairs) {
      if (n < 1) throw UsageError("--n must be at least 1");
      for (const auto& p : classify_pairs(n)) {
        VerificationReport r;
        r.family = "pairs";
        r.subject = {{"pair", to_json(p)}, {"dual", to_json(dual_pair(p))}};
        r.sort_key = {p.n(), p.k(), p.ell()};
        push(r);
      }
    } else if (*restrict_cmd) {
      push(verify_restriction_agreement(make_restriction_context(n, m, k, twist)));
    } else if (*verify) {
      const auto suite = parse_suite(suite_name);
      if (!suite) throw UsageError("unknown suite '" + suite_name + "'");
      if (max_n < 1) throw UsageError("--max-n must be at least 1");
      SweepOptions options;
      options.suite = *suite;
      options.max_n = max_n;
      options.jobs = jobs;
      for (const auto& r : run_suite_parallel(options)) push(r);
    } else if (*constants) {
      const PointPair p(n, k, twist);
      VerificationReport r = verify_constants(p);
      try {
        r.subject["constants"] = duality_constants(p).to_json();
      } catch (const ConstantMismatch&) {
        // already recorded as a failing gcd_chain check
      }
      push(r);
    } else if (*catalog) {
      for (const auto& e : default_catalog()) doc.results.push_back(e.to_json());
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  doc.summarize();

  std::ostringstream rendered;
  if (format == "table")
    render_table(doc, rendered);
  else
    rendered << doc.to_json().dump(2) << '\n';

  if (out_path.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(out_path);
    if (!(file << rendered.str())) {
      err << "error: cannot write " << out_path << '\n';
      return 2;
    }
  }
  return exit_status(doc);
}

}  // namespace eqkt
