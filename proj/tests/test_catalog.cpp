#include <doctest.h>

#include "eqkt/catalog.hpp"
#include "eqkt/tduality.hpp"

using namespace eqkt;

TEST_CASE("circle over a point") {
  CHECK_THROWS_AS(s1_point_entry(0), UnsupportedParameter);
  CHECK_THROWS_AS(s1_point_entry(-2), UnsupportedParameter);

  const auto one = s1_point_entry(1);
  CHECK(one.kind == StatementKind::kgroup_formula);
  CHECK(one.payload.at("K0(E_k)").at("rank") == 1);
  CHECK(one.payload.at("K1(E_k)").at("rank") == 0);

  const auto three = s1_point_entry(3);
  CHECK(three.payload.at("K0(E_k)").at("rank") == 3);
  CHECK(three.payload.at("K1(E_0,P_k)").at("rank") == 3);
  CHECK(three.payload.at("K0(E_0,P_k)").at("rank") == 0);
}

TEST_CASE("payload ranks match the constructed modules") {
  for (long k = 1; k <= 12; ++k) {
    const auto entry = s1_point_entry(k);
    for (const auto& m : s1_point_modules(k)) {
      CHECK(entry.payload.at(m.label).at("rank") == m.module.free_rank());
      CHECK(entry.payload.at(m.label).at("torsion").empty());
    }
  }
}

TEST_CASE("finite shadow: K0 of (E_k, 0) for Z_n with k | n is free of rank k") {
  for (long n = 1; n <= 30; ++n)
    for (long k = 1; k < n; ++k) {
      if (n % k != 0) continue;
      const auto kg = compute_kgroups_closed(PointPair(n, k, 0));
      CHECK(kg.k0.invariant_factors() == s1_point_modules(k)[0].module.invariant_factors());
    }
}

TEST_CASE("degree-3 classes over S^2") {
  CHECK(s2_h3(0, 0).rank == 2);
  CHECK(s2_h3(0, 0).text == "Z^2");
  CHECK(s2_h3(0, 3).rank == 1);
  CHECK(s2_h3(1, 2).rank == 0);
  for (long p = -5; p <= 5; ++p)
    for (long q = -5; q <= 5; ++q) CHECK(s2_h3(p, q).rank == s2_h3(q, p).rank);
}

TEST_CASE("S^2 dual pairs") {
  const auto rule = s2_dual_rule(2, 5);
  CHECK(rule.from == S2Pair{{2, 0}, {0, 5}});
  CHECK(rule.to == S2Pair{{0, 5}, {2, 0}});
  const S2Pair trivial{{0, 0}, {0, 0}};
  CHECK(s2_dual(trivial) == trivial);
  CHECK(s2_trivial_twist_rule(3, 4).to == S2Pair{{3, 4}, {0, 0}});
  for (long p = -4; p <= 4; ++p)
    for (long q = -4; q <= 4; ++q) {
      for (const S2Pair& s : {s2_dual_rule(p, q).from, s2_trivial_twist_rule(p, q).from}) {
        REQUIRE(is_valid_s2_pair(s));
        CHECK(s2_dual(s2_dual(s)) == s);
      }
    }
  CHECK_THROWS_AS(s2_dual(S2Pair{{1, 1}, {0, 1}}), InvalidPair);
}

TEST_CASE("trivial twists are dual to trivial bundles") {
  CHECK(noflux_rule(4, 2) == PointPair(4, 0, 2));
  CHECK(noflux_rule(5, 0) == PointPair(5, 0, 0));
  for (long n = 1; n <= 30; ++n)
    for (long k = 0; k < n; ++k) CHECK(noflux_rule(n, k) == dual_pair(PointPair(n, k, 0)));
}

TEST_CASE("catalog dump") {
  const auto entries = default_catalog();
  CHECK(entries.size() >= 8);
  for (const auto& e : entries) {
    const json j = e.to_json();
    CHECK_FALSE(j.at("anchor").get<std::string>().empty());
    CHECK(j.at("identifier") == e.identifier);
  }
}
