// One PASS/FAIL line per acceptance criterion. Tolerances are exact equality
// throughout; a criterion also fails when it overruns its time budget.
//
// usage: acceptance [path-to-eqkt-binary]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "eqkt/cli.hpp"
#include "eqkt/restriction.hpp"
#include "eqkt/sweep.hpp"
#include "eqkt/tduality.hpp"
#include "oracles.hpp"

using namespace eqkt;

namespace {

struct Outcome {
  bool pass = true;
  long instances = 0;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

long g0(long n, long x) { return oracle::plain_gcd(n, x == 0 ? n : x); }

Outcome closed_form_vs_mv() {
  Outcome o;
  for (long n = 1; n <= 30; ++n)
    for (const auto& p : classify_pairs(n)) {
      ++o.instances;
      const auto mv = compute_kgroups_mv(p);
      const auto cf = compute_kgroups_closed(p);
      if (mv.k0.invariant_factors() != cf.k0.invariant_factors() ||
          mv.k1.invariant_factors() != cf.k1.invariant_factors())
        o.fail(p.to_string());
    }
  if (o.instances < 1033) o.fail("too few triples");
  return o;
}

Outcome group_isomorphism() {
  Outcome o;
  for (long n = 1; n <= 30; ++n)
    for (const auto& p : classify_pairs(n)) {
      ++o.instances;
      const auto a = compute_kgroups_mv(p);
      const auto b = compute_kgroups_mv(dual_pair(p));
      if (a.k0.invariant_factors() != b.k1.invariant_factors() || a.k1.invariant_factors() != b.k0.invariant_factors())
        o.fail(p.to_string());
    }
  return o;
}

Outcome restriction_agreement() {
  Outcome o;
  for (long n = 1; n <= 20; ++n)
    for (long m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      for (const auto& p : classify_pairs(n)) {
        ++o.instances;
        const auto r = verify_restriction_agreement(make_restriction_context(n, m, p.k(), p.ell()));
        if (!r.passed()) o.fail(r.subject.dump());
        for (const char* name : {"k0_transport_agrees", "k1_transport_agrees", "ker_iso_isomorphism",
                                 "coker_iso_isomorphism", "coker_inverse_two_sided"})
          if (!r.find(name)) o.fail(std::string("missing ") + name);
      }
    }
  return o;
}

Outcome admissibility_diagrams() {
  Outcome o;
  for (long n = 1; n <= 20; ++n)
    for (const auto& p : classify_pairs(n)) {
      ++o.instances;
      const auto r = verify_admissibility_diagrams(p);
      if (!r.passed()) o.fail(p.to_string());
      const Check* c = r.find("c_from_images");
      if (!c) {
        o.fail("missing c_from_images");
        continue;
      }
      const long expected = duality_constants(p).c_left;
      if (c->witness.at("right_k1_image_C") != expected || c->witness.at("right_k0_image_C") != expected)
        o.fail("C mismatch at " + p.to_string());
    }
  return o;
}

Outcome gcd_chain() {
  Outcome o;
  for (long n = 1; n <= 1000; ++n)
    for (long k = 0; k < n; ++k) {
      const long d = g0(n, k);
      for (long l = 0; l < n; l += n / d) {
        ++o.instances;
        const PointPair p(n, k, l);
        DualityConstants c{};
        try {
          c = duality_constants(p);
        } catch (const ConstantMismatch& e) {
          o.fail(e.what());
          continue;
        }
        const long dp = g0(n, l);
        const long g = oracle::plain_gcd(d, l == 0 ? d : l);
        const long e = d * l / n, f = dp * k / n;
        if (c.c_left != c.c_right || c.alpha != oracle::additive_order_by_steps(e, g) ||
            c.beta != oracle::additive_order_by_steps(f, dp) || c.beta_prime != oracle::additive_order_by_steps(f, g))
          o.fail(p.to_string());
      }
    }
  return o;
}

Outcome trivial_twist() {
  Outcome o;
  for (long n = 1; n <= 30; ++n)
    for (long k = 0; k < n; ++k) {
      ++o.instances;
      const auto r = verify_trivial_twist_case(n, k);
      if (!r.passed()) o.fail(r.subject.dump());
      for (const char* name : {"ek0_kernel_ideal", "ek0_k1_image"})
        if (!r.find(name)) o.fail(std::string("missing ") + name);
    }
  return o;
}

Outcome abelian_torsion_free() {
  Outcome o;
  const auto inputs = random_abelian_inputs(256, 0x5eed);
  for (const auto& in : inputs) {
    ++o.instances;
    if (in.group.order() > 64) o.fail("group too large");
    const auto k = compute_kgroups_abelian(in);
    const auto orbits = static_cast<std::size_t>(oracle::translation_orbits(in.twist.group.factors, in.twist.exponents));
    if (!k.k0.is_torsion_free() || !k.k1.is_torsion_free() || k.k0.free_rank() != orbits || k.k1.free_rank() != orbits)
      o.fail(to_json(in).dump());
  }
  return o;
}

Outcome smith_suite() {
  Outcome o;
  std::mt19937_64 rng(0xa11ce);
  std::uniform_int_distribution<std::size_t> size(0, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    ++o.instances;
    const IntMatrix a = oracle::random_matrix(rng, size(rng), size(rng), -9, 9);
    const auto s = smith_normal_form(a);
    const Integer du = determinant(s.u), dv = determinant(s.v);
    bool ok = s.u * a * s.v == s.d && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    for (std::size_t i = 0; ok && i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j && s.d(i, j) != 0) ok = false;
    const auto diag = s.diagonal();
    for (std::size_t i = 0; ok && i < diag.size(); ++i) {
      if (diag[i] <= 0) ok = false;
      if (i + 1 < diag.size() && !mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t())) ok = false;
    }
    for (std::size_t i = diag.size(); ok && i < std::min(s.d.rows(), s.d.cols()); ++i)
      if (s.d(i, i) != 0) ok = false;
    if (ok && s.rank() != oracle::rational_rank(a)) ok = false;
    if (!ok) o.fail("matrix " + a.to_string());
  }
  return o;
}

int run_binary(const std::string& binary, const std::string& args) {
  const std::string cmd = binary + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_contract(const std::string& binary) {
  Outcome o;
  const std::vector<std::vector<std::string>> corpus = {
      {"kgroups", "--n", "4", "--k", "2", "--twist", "2"},
      {"kgroups", "--n", "1", "--k", "0", "--twist", "0"},
      {"pairs", "--n", "4"},
      {"pairs", "--n", "7"},
      {"restrict", "--n", "12", "--m", "4", "--k", "4", "--twist", "3"},
      {"constants", "--n", "12", "--k", "4", "--twist", "3"},
      {"verify", "--suite", "all", "--max-n", "6"},
      {"catalog"},
  };
  for (const auto& args : corpus) {
    ++o.instances;
    std::ostringstream out, err;
    if (run_cli(args, out, err) != 0) o.fail("nonzero exit for " + args[0]);
    const json emitted = json::parse(out.str());
    const auto doc = ReportDocument::from_json(emitted);
    if (doc.to_json() != emitted || ReportDocument::from_json(json::parse(doc.to_json().dump())) != doc)
      o.fail("round trip for " + args[0]);
  }

  const std::vector<std::pair<std::vector<std::string>, int>> codes = {
      {{"kgroups", "--n", "4", "--k", "2", "--twist", "2"}, 0},
      {{"kgroups", "--n", "4", "--k", "2", "--twist", "1"}, 2},
      {{"verify", "--suite", "duality", "--max-n", "0"}, 2},
      {{"verify", "--suite", "unknown", "--max-n", "4"}, 2},
      {{"pairs", "--n", "0"}, 2},
  };
  for (const auto& [args, expected] : codes) {
    ++o.instances;
    std::ostringstream out, err;
    if (run_cli(args, out, err) != expected) o.fail("exit code for " + args[0]);
    if (!binary.empty()) {
      std::string joined;
      for (const auto& a : args) joined += a + " ";
      if (run_binary(binary, joined) != expected) o.fail("binary exit code for " + joined);
    }
  }
  {
    ++o.instances;
    std::vector<SweepTask> tasks{
        {"kgroups", json::object(), {4, 2, 1}, [] { return std::vector{kgroups_report(PointPair(4, 2, 1))}; }}};
    ReportDocument doc;
    for (const auto& r : run_tasks_serial(tasks)) doc.results.push_back(r.to_json(false));
    doc.summarize();
    if (exit_status(doc) != 1) o.fail("failed verification does not exit 1");
  }

  ++o.instances;
  json reference;
  for (const char* jobs : {"1", "2", "4"}) {
    std::ostringstream out, err;
    run_cli({"--jobs", jobs, "verify", "--suite", "all", "--max-n", "8"}, out, err);
    const json results = json::parse(out.str()).at("results");
    if (reference.is_null())
      reference = results;
    else if (results != reference)
      o.fail(std::string("results differ with --jobs ") + jobs);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "closed form vs Mayer-Vietoris, n <= 30", 60, closed_form_vs_mv},
      {2, "K-groups of dual pairs swap degrees, n <= 30", 60, group_isomorphism},
      {3, "restriction agreement and identifications, n <= 20", 300, restriction_agreement},
      {4, "admissibility diagrams and C, n <= 20", 300, admissibility_diagrams},
      {5, "gcd chain and orders, n <= 1000", 30, gcd_chain},
      {6, "trivial-twist kernel ideal and (n/d) image, n <= 30", 60, trivial_twist},
      {7, "finite abelian torsion-freeness, 256 random inputs", 60, abelian_torsion_free},
      {8, "Smith normal form property suite, 1000 matrices", 30, smith_suite},
      {9, "CLI round trip, exit codes, --jobs independence", 30, [&] { return cli_contract(binary); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.fail("over time budget");
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s [%ld instances, %.2fs of %.0fs]%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.instances, secs, c.budget_s, o.pass ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
