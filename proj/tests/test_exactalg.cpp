#include <doctest.h>

#include <random>

#include "eqkt/exactalg.hpp"
#include "oracles.hpp"

using namespace eqkt;

namespace {

bool is_unimodular(const IntMatrix& m) {
  const Integer det = determinant(m);
  return det == 1 || det == -1;
}

bool is_smith_form(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t r = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < r; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < r && d(i + 1, i + 1) != 0) {
      if (d(i, i) == 0) return false;
      if (!mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t())) return false;
    }
  }
  return true;
}

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("smith form of diag(2,3) is diag(1,6)") {
  const IntMatrix a = IntMatrix::diagonal({2, 3});
  const auto s = smith_normal_form(a);
  CHECK(s.d == IntMatrix::diagonal({1, 6}));
  CHECK(s.u * a * s.v == s.d);
}

TEST_CASE("smith form on empty and zero matrices") {
  for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {3, 0}, {2, 2}}) {
    const IntMatrix a(r, c);
    const auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(s.rank() == 0);
  }
}

TEST_CASE("smith form needs arbitrary precision") {
  IntMatrix a(2, 2);
  a(0, 0) = Integer("123456789012345678901234567890");
  a(0, 1) = Integer("987654321098765432109876543210");
  a(1, 0) = 7;
  a(1, 1) = Integer("-55555555555555555555555555");
  const auto s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(is_smith_form(s.d));
  CHECK(is_unimodular(s.u));
  CHECK(is_unimodular(s.v));
  CHECK(s.diagonal() == oracle::determinantal_invariant_factors(a));
}

TEST_CASE("smith form matches determinantal divisors on small random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, size(rng), size(rng), -6, 6);
    const auto s = smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    CHECK(s.diagonal() == oracle::determinantal_invariant_factors(a));
  }
}

TEST_CASE("smith form property suite on random matrices up to 12x12") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> size(0, 12);
  for (int trial = 0; trial < 250; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, size(rng), size(rng), -9, 9);
    const auto s = smith_normal_form(a);
    REQUIRE(s.u * a * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    CHECK(is_smith_form(s.d));
    CHECK(s.rank() == oracle::rational_rank(a));
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 0; n <= 6; ++n) {
    const IntMatrix a = oracle::random_matrix(rng, n, n, -9, 9);
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    CHECK(determinant(a) == oracle::laplace_det(rows));
  }
}

TEST_CASE("kernel basis") {
  SUBCASE("[[1,1],[1,1]] has kernel spanned by (1,-1)") {
    const IntMatrix k = kernel_basis(IntMatrix::from_rows({{1, 1}, {1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(same_lattice(k, IntMatrix::from_rows({{1}, {-1}})));
  }
  SUBCASE("random matrices: a*k = 0, cols - rank vectors, saturated") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
      const IntMatrix a = oracle::random_matrix(rng, size(rng), size(rng), -4, 4);
      const IntMatrix k = kernel_basis(a);
      CHECK((a * k).is_zero());
      CHECK(k.cols() == a.cols() - oracle::rational_rank(a));
      // saturated: Z^n / ker is torsion-free
      CHECK(cokernel(k).is_torsion_free());
    }
  }
}

TEST_CASE("presented modules") {
  CHECK(cokernel(IntMatrix::diagonal({2, 3})).invariant_factors() == ints({6}));
  CHECK(cokernel(IntMatrix::diagonal({2, 3})).describe() == "Z/6");
  CHECK(PresentedModule::free(0).describe() == "0");
  CHECK(PresentedModule::free(0).is_trivial());
  CHECK(PresentedModule::free(3).free_rank() == 3);
  const PresentedModule m = cokernel(hstack(IntMatrix::diagonal({2, 4, 0, 0}).columns(0, 3), IntMatrix(4, 0)));
  CHECK(m.invariant_factors() == ints({2, 4, 0, 0}));
  CHECK(m.describe() == "Z^2 ⊕ Z/2 ⊕ Z/4");
  CHECK(m.describe(false) == "Z^2 + Z/2 + Z/4");
  CHECK(m.isomorphic_to(cokernel(IntMatrix::diagonal({4, 2, 0, 0}))));
  CHECK_FALSE(m.isomorphic_to(cokernel(IntMatrix::diagonal({8, 1, 0, 0}))));
}

TEST_CASE("cokernel invariant under permutations and unimodular change of basis") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    const IntMatrix a = oracle::random_matrix(rng, r, c, -9, 9);
    const auto base = cokernel(a).invariant_factors();
    IntMatrix p = a;
    p.swap_rows(0, r - 1);
    p.swap_cols(0, c - 1);
    CHECK(cokernel(p).invariant_factors() == base);
    const IntMatrix changed = oracle::random_unimodular(rng, r) * a * oracle::random_unimodular(rng, c);
    CHECK(cokernel(changed).invariant_factors() == base);
  }
}

TEST_CASE("induced map analysis") {
  SUBCASE("multiplication by 2 on Z/4") {
    const PresentedModule z4 = cokernel(IntMatrix::diagonal({4}));
    const auto a = induced_map_analysis(ModuleMap(z4, z4, IntMatrix::diagonal({2})));
    CHECK(a.kernel.invariant_factors() == ints({2}));
    CHECK(a.image.invariant_factors() == ints({2}));
    CHECK_FALSE(a.is_injective);
    CHECK_FALSE(a.is_surjective);
  }
  SUBCASE("identity on arbitrary modules") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const PresentedModule m = cokernel(oracle::random_matrix(rng, 4, 3, -5, 5));
      const auto a = induced_map_analysis(identity_map(m));
      CHECK(a.is_injective);
      CHECK(a.is_surjective);
    }
  }
  SUBCASE("ill-defined map is rejected") {
    const PresentedModule z2 = cokernel(IntMatrix::diagonal({2}));
    const PresentedModule z3 = cokernel(IntMatrix::diagonal({3}));
    const ModuleMap f(z2, z3, IntMatrix::diagonal({1}));
    CHECK_FALSE(f.is_well_defined());
    CHECK_THROWS_AS(f.certify(), IllFormedMap);
    CHECK_THROWS_AS(induced_map_analysis(f), IllFormedMap);
  }
  SUBCASE("Z -> Z/6 -> ... kernel of a surjection") {
    const PresentedModule z = PresentedModule::free(1);
    const PresentedModule z6 = cokernel(IntMatrix::diagonal({6}));
    const auto a = induced_map_analysis(ModuleMap(z, z6, IntMatrix::diagonal({1})));
    CHECK(a.is_surjective);
    CHECK_FALSE(a.is_injective);
    CHECK(a.kernel.invariant_factors() == ints({0}));
  }
}

TEST_CASE("submodule equality") {
  const PresentedModule z = PresentedModule::free(1);
  const ModuleMap two(z, z, IntMatrix::diagonal({2}));
  const ModuleMap four(z, z, IntMatrix::diagonal({4}));
  CHECK_FALSE(submodule_equal(two, four));
  CHECK(submodule_equal(two, two));

  std::mt19937_64 rng(19);
  const PresentedModule target = cokernel(IntMatrix::diagonal({0, 6, 0}));
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix g = oracle::random_matrix(rng, 3, 2, -4, 4);
    const ModuleMap f(PresentedModule::free(2), target, g);
    const IntMatrix h_mat = hstack(g, g.column(0) + g.column(1));
    const ModuleMap h(PresentedModule::free(3), target, h_mat);
    CHECK(submodule_equal(f, h));
    CHECK(submodule_equal(h, f));
  }
  CHECK_THROWS_AS(submodule_equal(two, ModuleMap(z, PresentedModule::free(2), IntMatrix::from_rows({{1}, {0}}))),
                  TargetMismatch);
}

TEST_CASE("lattice quotient and preimage") {
  const IntMatrix outer = IntMatrix::identity(2);
  const IntMatrix inner = IntMatrix::diagonal({3, 3});
  CHECK(lattice_quotient(outer, inner).invariant_factors() == ints({3, 3}));
  CHECK_THROWS_AS(lattice_quotient(inner, outer), std::invalid_argument);

  const IntMatrix m = IntMatrix::from_rows({{2}});
  const IntMatrix pre = preimage_lattice(m, IntMatrix::from_rows({{6}}));
  CHECK(same_lattice(pre, IntMatrix::from_rows({{3}})));
}

TEST_CASE("solve and compose") {
  const IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
  CHECK(solve_integer(a, IntMatrix::from_rows({{4}, {9}})) == IntMatrix::from_rows({{2}, {3}}));
  CHECK_FALSE(solve_integer(a, IntMatrix::from_rows({{1}, {0}})).has_value());
  const PresentedModule z = PresentedModule::free(1);
  const ModuleMap f(z, z, IntMatrix::diagonal({2}));
  CHECK(compose(f, f).matrix() == IntMatrix::diagonal({4}));
  CHECK_THROWS_AS(compose(f, ModuleMap(z, PresentedModule::free(2), IntMatrix(2, 1))), TargetMismatch);
}
