#include "eqkt/catalog.hpp"

#include <string>

#include "eqkt/tduality.hpp"

namespace eqkt {

const char* to_string(StatementKind kind) {
  switch (kind) {
    case StatementKind::kgroup_formula:
      return "kgroup_formula";
    case StatementKind::h3_class:
      return "h3_class";
    case StatementKind::dual_pair_rule:
      return "dual_pair_rule";
  }
  return "unknown";
}

json CatalogEntry::to_json() const {
  return {{"identifier", identifier}, {"inputs", inputs}, {"kind", eqkt::to_string(kind)},
          {"payload", payload},       {"anchor", anchor}};
}

std::vector<CatalogModule> s1_point_modules(long k) {
  if (k < 1) throw UnsupportedParameter("circle-over-point table covers k >= 1 only");
  const auto rank = static_cast<std::size_t>(k);
  return {{"K0(E_k)", PresentedModule::free(rank)},
          {"K1(E_k)", PresentedModule::free(0)},
          {"K0(E_0,P_k)", PresentedModule::free(0)},
          {"K1(E_0,P_k)", PresentedModule::free(rank)}};
}

CatalogEntry s1_point_entry(long k) {
  json payload = json::object();
  for (const auto& m : s1_point_modules(k)) payload[m.label] = module_to_json(m.module);
  payload["description"] = "K0(E_k) = R(Z_k) = K1(E_0,P_k); K1(E_k) = 0 = K0(E_0,P_k)";
  return {"s1_point_k" + std::to_string(k), {{"k", k}}, StatementKind::kgroup_formula, std::move(payload),
          "circle acting on itself by the k-th power, over a point"};
}

H3Class s2_h3(long p, long q) {
  if (p == 0 && q == 0) return {2, "Z^2"};
  if (p == 0 || q == 0) return {1, "Z"};
  return {0, "0"};
}

CatalogEntry s2_h3_entry(long p, long q) {
  const auto c = s2_h3(p, q);
  return {"s2_h3_" + std::to_string(p) + "_" + std::to_string(q), {{"p", p}, {"q", q}}, StatementKind::h3_class,
          {{"rank", c.rank}, {"text", c.text}}, "rotation action on S^2, degree-3 classes of E_{p,q}"};
}

bool is_valid_s2_pair(const S2Pair& s) {
  const auto [p, q] = s.bundle;
  const auto [a, b] = s.twist;
  if (p == 0 && q == 0) return true;
  if (q == 0) return a == 0;  // E_{p,0}: twist (0, t)
  if (p == 0) return b == 0;  // E_{0,q}: twist (t, 0)
  return a == 0 && b == 0;
}

S2Pair s2_dual(const S2Pair& s) {
  if (!is_valid_s2_pair(s)) throw InvalidPair("twist is not a degree-3 class of this bundle");
  return {s.twist, s.bundle};
}

S2DualRule s2_dual_rule(long p, long q) {
  const S2Pair from{{p, 0}, {0, q}};
  return {from, s2_dual(from)};
}

S2DualRule s2_trivial_twist_rule(long p, long q) {
  const S2Pair from{{0, 0}, {p, q}};
  return {from, s2_dual(from)};
}

namespace {

json s2_pair_json(const S2Pair& s) { return {{"bundle", s.bundle}, {"twist", s.twist}}; }

}  // namespace

CatalogEntry s2_dual_rule_entry(long p, long q) {
  const auto rule = s2_dual_rule(p, q);
  const auto trivial = s2_trivial_twist_rule(p, q);
  return {"s2_dual_" + std::to_string(p) + "_" + std::to_string(q),
          {{"p", p}, {"q", q}},
          StatementKind::dual_pair_rule,
          {{"rule", {{"from", s2_pair_json(rule.from)}, {"to", s2_pair_json(rule.to)}}},
           {"trivial_twist_rule", {{"from", s2_pair_json(trivial.from)}, {"to", s2_pair_json(trivial.to)}}}},
          "rotation action on S^2, dual pairs (E_{p,0}, P_q) and (E_{0,q}, Q_p)"};
}

PointPair noflux_rule(long n, long k) {
  const PointPair source(n, k, 0);
  PointPair target(n, 0, k);
  if (!(dual_pair(source) == target)) throw InvalidPair("trivial-twist rule disagrees with pair duality");
  return target;
}

CatalogEntry noflux_entry(long n, long k) {
  const PointPair target = noflux_rule(n, k);
  return {"noflux_" + std::to_string(n) + "_" + std::to_string(k),
          {{"n", n}, {"k", k}},
          StatementKind::dual_pair_rule,
          {{"from", to_json(PointPair(n, k, 0))}, {"to", to_json(target)}},
          "trivial twists are dual to trivial bundles"};
}

std::vector<CatalogEntry> default_catalog(long s1_max) {
  std::vector<CatalogEntry> out;
  for (long k = 1; k <= s1_max; ++k) out.push_back(s1_point_entry(k));
  for (auto [p, q] : {std::pair{0L, 0L}, {0L, 3L}, {2L, 0L}, {1L, 2L}}) out.push_back(s2_h3_entry(p, q));
  out.push_back(s2_dual_rule_entry(2, 5));
  for (auto [n, k] : {std::pair{1L, 0L}, {4L, 0L}, {4L, 2L}, {6L, 4L}}) out.push_back(noflux_entry(n, k));
  return out;
}

}  // namespace eqkt
