#pragma once

// Worked examples stored as data: the circle-action-over-a-point table, the
// rotation action on S^2, and the trivial-twist / trivial-bundle rule.
//
// Circle-equivariant entries are recorded facts, never recomputed: modules
// over R(S^1) are outside the exact-integer engine.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "eqkt/ktheory.hpp"
#include "eqkt/report.hpp"

namespace eqkt {

enum class StatementKind { kgroup_formula, h3_class, dual_pair_rule };

const char* to_string(StatementKind kind);

struct CatalogEntry {
  std::string identifier;
  std::map<std::string, long> inputs;
  StatementKind kind;
  json payload;
  std::string anchor;

  json to_json() const;
};

struct CatalogModule {
  std::string label;
  PresentedModule module;
};

/// K-groups of E_k and (E_0, P_k) for the circle acting on itself by z -> z^k.
/// Throws UnsupportedParameter for k < 1.
CatalogEntry s1_point_entry(long k);
/// The modules behind s1_point_entry, in payload order.
std::vector<CatalogModule> s1_point_modules(long k);

struct H3Class {
  long rank;  // H^3 is Z^rank
  std::string text;
};

H3Class s2_h3(long p, long q);
CatalogEntry s2_h3_entry(long p, long q);

/// Pair (E_{bundle}, twist) over S^2 with the rotation action. Twists are
/// recorded inside Z^2 = H^3(E_{0,0}): on E_{p,0} the class P_t is (0, t),
/// on E_{0,q} the class Q_t is (t, 0), and E_{p,q} with p, q != 0 carries
/// only the zero twist.
struct S2Pair {
  std::array<long, 2> bundle;
  std::array<long, 2> twist;

  friend bool operator==(const S2Pair&, const S2Pair&) = default;
};

bool is_valid_s2_pair(const S2Pair& pair);
/// Swaps bundle and twist data; throws InvalidPair for invalid input.
S2Pair s2_dual(const S2Pair& pair);

struct S2DualRule {
  S2Pair from;
  S2Pair to;
};

/// (E_{p,0}, P_q) <-> (E_{0,q}, Q_p)
S2DualRule s2_dual_rule(long p, long q);
/// (E_{0,0}, P_{p,q}) <-> (E_{p,q}, 0)
S2DualRule s2_trivial_twist_rule(long p, long q);
CatalogEntry s2_dual_rule_entry(long p, long q);

/// (n, k, 0) -> (n, 0, k)
PointPair noflux_rule(long n, long k);
CatalogEntry noflux_entry(long n, long k);

/// Default catalog dump: circle entries k = 1..s1_max, the S^2 samples and
/// a few trivial-twist rules.
std::vector<CatalogEntry> default_catalog(long s1_max = 3);

}  // namespace eqkt
