#pragma once

// Verification reports and their JSON form.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eqkt/exactalg.hpp"
#include "eqkt/ktheory.hpp"
#include "eqkt/repring.hpp"

namespace eqkt {

using json = nlohmann::json;

/// Registered claim identifiers. Anything else is rejected by add_check.
const std::vector<std::string>& registered_checks();
bool is_registered_check(std::string_view name);

/// Stated in every duality report: what the combinatorial model does and
/// does not establish.
extern const char* const kDualityScopeNote;

struct Check {
  std::string name;
  bool pass;
  json witness;

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::string family;
  json subject;
  /// Sort key for deterministic ordering, e.g. (n, k, ell) or (n, m, k, ell).
  std::vector<long> sort_key;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  /// Throws std::logic_error for unregistered names.
  void add_check(std::string name, bool pass, json witness = json::object());
  /// Appends every check of other (same subject assumed).
  void merge(const VerificationReport& other);
  bool passed() const;
  const Check* find(std::string_view name) const;

  json to_json(bool with_timing = true) const;
  static VerificationReport from_json(const json& j);
};

// serialization helpers
json to_json(const Integer& x);
Integer integer_from_json(const json& j);
json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);
json to_json(const std::vector<Integer>& factors);
/// {rank, torsion: [...]}
json module_to_json(const PresentedModule& m);
json to_json(const PointPair& p);
json to_json(const KGroupPair& k);
json to_json(const GroupRingElement& x);
json to_json(const Character& c);

}  // namespace eqkt
