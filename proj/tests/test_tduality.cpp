#include <doctest.h>

#include "eqkt/tduality.hpp"
#include "oracles.hpp"

using namespace eqkt;

namespace {

long g0(long n, long x) { return oracle::plain_gcd(n, x == 0 ? n : x); }

IntMatrix matrix_power(const IntMatrix& m, long e) {
  IntMatrix out = IntMatrix::identity(m.rows());
  for (long i = 0; i < e; ++i) out = out * m;
  return out;
}

}  // namespace

TEST_CASE("dual pairs") {
  CHECK(dual_pair(PointPair(4, 2, 0)) == PointPair(4, 0, 2));
  for (long n = 1; n <= 30; ++n)
    for (const auto& p : classify_pairs(n)) CHECK(dual_pair(dual_pair(p)) == p);
}

TEST_CASE("duality constants on worked examples") {
  const auto a = duality_constants(PointPair(12, 4, 3));
  CHECK(a.d == 4);
  CHECK(a.d_prime == 3);
  CHECK(a.alpha == 1);
  CHECK(a.beta == 3);
  CHECK(a.beta_prime == 1);
  CHECK(a.c_left == 3);
  CHECK(a.c_right == 3);

  const auto b = duality_constants(PointPair(4, 2, 2));
  CHECK(b.alpha == 2);
  CHECK(b.beta == 2);
  CHECK(b.beta_prime == 2);
  CHECK(b.c_left == 1);
  CHECK(b.c_right == 1);

  for (long n = 1; n <= 30; ++n)
    for (long k = 0; k < n; ++k) {
      const auto c = duality_constants(PointPair(n, k, 0));
      CHECK(c.alpha == 1);
      CHECK(c.c_left == n / g0(n, k));
    }
}

TEST_CASE("constants against orders computed by repeated addition, n <= 200") {
  for (long n = 1; n <= 200; ++n)
    for (const auto& p : classify_pairs(n)) {
      const auto c = duality_constants(p);
      const long d = g0(n, p.k()), dp = g0(n, p.ell());
      const long e = d * p.ell() / n, f = dp * p.k() / n;
      const long g = oracle::plain_gcd(d, p.ell() == 0 ? d : p.ell());
      CHECK(c.alpha == oracle::additive_order_by_steps(e, g));
      CHECK(c.beta == oracle::additive_order_by_steps(f, dp));
      CHECK(c.beta_prime == oracle::additive_order_by_steps(f, g));
      CHECK(c.c_left * d * c.alpha == n);
      CHECK(c.c_right * c.beta_prime == c.beta);
    }
}

TEST_CASE("generator actions") {
  SUBCASE("(4,2,2) bundle side, degree 0: multiplication by xi fixes 1 + xi") {
    const auto a = generator_action(PointPair(4, 2, 2), Side::bundle, 0);
    // target K0 for Z_2 with trivial twist is R(Z_2) on the basis {1, eta}
    CHECK(a.matrix() == IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(a.matrix() * IntMatrix::from_rows({{1}, {1}}) == IntMatrix::from_rows({{1}, {1}}));
  }
  SUBCASE("action order divides n, n <= 20") {
    for (long n = 1; n <= 20; ++n)
      for (const auto& p : classify_pairs(n))
        for (Side side : {Side::bundle, Side::dual})
          for (int degree : {0, 1}) {
            const auto a = generator_action(p, side, degree);
            CHECK(maps_equal(ModuleMap(a.source(), a.target(), matrix_power(a.matrix(), n)), identity_map(a.source())));
          }
  }
}

TEST_CASE("group isomorphism between dual pairs, n <= 30") {
  for (long n = 1; n <= 30; ++n)
    for (const auto& p : classify_pairs(n)) {
      const auto r = verify_group_isomorphism(p);
      CHECK(r.passed());
    }
  const auto r = verify_group_isomorphism(PointPair(6, 2, 3));
  CHECK(r.passed());
  const auto a = compute_kgroups_closed(PointPair(6, 2, 3));
  const auto b = compute_kgroups_closed(PointPair(6, 3, 2));
  for (const auto* m : {&a.k0, &a.k1, &b.k0, &b.k1}) CHECK(m->invariant_factors() == std::vector<Integer>{0});
}

TEST_CASE("admissibility diagrams") {
  const auto r = verify_admissibility_diagrams(PointPair(4, 2, 2));
  INFO(r.to_json().dump());
  CHECK(r.passed());
  const Check* c = r.find("c_from_images");
  REQUIRE(c != nullptr);
  CHECK(c->witness.at("c_left") == 1);

  const auto s = verify_admissibility_diagrams(PointPair(12, 4, 3));
  CHECK(s.passed());
  CHECK(s.find("c_from_images")->witness.at("right_k1_image_C") == 3);

  for (long n = 1; n <= 12; ++n)
    for (const auto& p : classify_pairs(n)) {
      const auto v = verify_admissibility_diagrams(p);
      INFO(p.to_string());
      CHECK(v.passed());
    }
}

TEST_CASE("trivial twist case") {
  for (long n = 1; n <= 16; ++n)
    for (long k = 0; k < n; ++k) CHECK(verify_trivial_twist_case(n, k).passed());
}

TEST_CASE("constants report") {
  const auto r = verify_constants(PointPair(12, 4, 3));
  CHECK(r.passed());
  CHECK(r.checks.size() == 4);
  CHECK(r.family == "constants");
}

TEST_CASE("unregistered check names are rejected") {
  VerificationReport r;
  CHECK_THROWS_AS(r.add_check("not_a_claim", true), std::logic_error);
  r.add_check("k0_iso", true);
  r.add_check("k1_iso", false);
  CHECK_FALSE(r.passed());
}
