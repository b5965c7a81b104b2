#include "eqkt/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqkt {

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = {
      // K-groups, two routes
      "k0_routes_agree", "k1_routes_agree", "torsion_free", "rank_formula", "mv_coker_identification",
      // restriction maps
      "rest_k0_well_defined", "rest_k1_well_defined", "ladder_commutes", "ker_iso_isomorphism",
      "coker_iso_isomorphism", "coker_inverse_two_sided", "k0_transport_agrees", "k1_transport_agrees",
      // duality
      "routes_agree", "k0_iso", "k1_iso", "generator_actions_invertible", "left_k0_fixed_iso",
      "left_k1_fixed_iso", "right_k1_image_C", "right_k0_image_C", "c_from_images", "dual_action_exponent",
      // trivial-twist case
      "ek0_ring_restriction_surjective", "ek0_kernel_ideal", "ek0_k0_iso", "ek0_k1_dual_iso", "ek0_k1_image",
      "ek0_k0_dual_image",
      // constants
      "gcd_chain", "alpha_order", "beta_order", "beta_prime_order",
      // finite abelian groups
      "abelian_torsion_free", "abelian_orbit_rank",
      // sweep plumbing
      "evaluation_error"};
  return names;
}

bool is_registered_check(std::string_view name) {
  const auto& names = registered_checks();
  return std::find(names.begin(), names.end(), name) != names.end();
}

const char* const kDualityScopeNote =
    "The T-duality homomorphism itself is not computed; checks cover isomorphism classes of the K-groups "
    "and the restriction-diagram constraints that force it to be an isomorphism.";

void VerificationReport::add_check(std::string name, bool pass, json witness) {
  if (!is_registered_check(name)) throw std::logic_error("unregistered check name: " + name);
  checks.push_back({std::move(name), pass, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  elapsed_ms += other.elapsed_ms;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json VerificationReport::to_json(bool with_timing) const {
  json j;
  j["family"] = family;
  j["subject"] = subject;
  j["sort_key"] = sort_key;
  j["pass"] = passed();
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  j["checks"] = std::move(cs);
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport r;
  r.family = j.at("family").get<std::string>();
  r.subject = j.at("subject");
  r.sort_key = j.at("sort_key").get<std::vector<long>>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("witness")});
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

json to_json(const IntMatrix& m) {
  json entries = json::array();
  for (const auto& x : m.entries()) entries.push_back(to_json(x));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const json& j) {
  std::vector<Integer> entries;
  for (const auto& x : j.at("entries")) entries.push_back(integer_from_json(x));
  return IntMatrix::from_entries(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                                 std::move(entries));
}

json to_json(const std::vector<Integer>& factors) {
  json a = json::array();
  for (const auto& f : factors) a.push_back(to_json(f));
  return a;
}

json module_to_json(const PresentedModule& m) {
  return {{"rank", m.free_rank()}, {"torsion", to_json(m.torsion())}};
}

json to_json(const PointPair& p) { return {{"n", p.n()}, {"k", p.k()}, {"ell", p.ell()}}; }

json to_json(const KGroupPair& k) {
  return {{"k0", module_to_json(k.k0)}, {"k1", module_to_json(k.k1)}, {"provenance", to_string(k.provenance)}};
}

json to_json(const GroupRingElement& x) { return {{"modulus", x.modulus()}, {"coeffs", to_json(x.coeffs())}}; }

json to_json(const Character& c) { return {{"factors", c.group.factors}, {"exponents", c.exponents}}; }

}  // namespace eqkt
