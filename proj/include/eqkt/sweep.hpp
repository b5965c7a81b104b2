#pragma once

// Verification sweeps over all valid instances up to a bound. Instances are
// enumerated up front; evaluation is pure, so the OpenMP scheduler and the
// serial reference produce the same report set after sorting.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqkt/ktheory.hpp"
#include "eqkt/report.hpp"

namespace eqkt {

enum class Suite { kgroups, restriction, duality, constants, abelian, all };

std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite suite);

struct SweepOptions {
  Suite suite = Suite::all;
  long max_n = 1;
  int jobs = 1;
  std::uint64_t seed = 20240611;
};

/// One unit of scheduled work. An exception thrown by run becomes a failing
/// evaluation_error report under this instance's family, subject and key.
struct SweepTask {
  std::string family;
  json subject;
  std::vector<long> sort_key;
  std::function<std::vector<VerificationReport>()> run;
};

std::vector<SweepTask> enumerate_tasks(const SweepOptions& options);

std::vector<VerificationReport> run_tasks_serial(const std::vector<SweepTask>& tasks);
std::vector<VerificationReport> run_tasks_parallel(const std::vector<SweepTask>& tasks, int jobs);

/// Reference implementation: one thread, in enumeration order, then sorted.
std::vector<VerificationReport> run_suite_serial(const SweepOptions& options);
std::vector<VerificationReport> run_suite_parallel(const SweepOptions& options);

/// Orders by (family, sort_key).
void sort_reports(std::vector<VerificationReport>& reports);

/// Both routes, torsion-freeness, rank gcd(d, e) and the MV cokernel map.
VerificationReport kgroups_report(const PointPair& p);
/// Group isomorphism and the restriction diagrams as one report.
VerificationReport duality_report(const PointPair& p);
/// Constants for every valid triple of Z_n, folded into one report.
VerificationReport constants_report_for_n(long n);

/// Random finite abelian inputs with |G| <= max_order.
std::vector<AbelianPointInput> random_abelian_inputs(std::size_t count, std::uint64_t seed, long max_order = 64);
json to_json(const AbelianPointInput& input);
VerificationReport abelian_report(const AbelianPointInput& input, long index);

}  // namespace eqkt
