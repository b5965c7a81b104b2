#pragma once

// Representation rings of finite cyclic and finite abelian groups.
//
// R(Z_d) = Z[xi]/(xi^d - 1) is handled in the fixed basis 1, xi, ..., xi^(d-1);
// every exponent is reduced mod d on entry. Characters of a finite abelian
// group are exponent tuples in the (isomorphic) dual group.

#include <cstddef>
#include <vector>

#include "eqkt/exactalg.hpp"

namespace eqkt {

/// gcd with gcd(n, 0) = n.
long gcd_of(long a, long b);
/// x mod m in [0, m); m >= 1.
long reduce_mod(long x, long m);
/// Order of x in the additive group Z_m, by scanning the divisors of m.
long additive_order(long x, long m);

class GroupRingElement {
 public:
  /// The zero element of R(Z_d).
  explicit GroupRingElement(std::size_t modulus);
  GroupRingElement(std::size_t modulus, std::vector<Integer> coeffs);

  static GroupRingElement unit(std::size_t modulus);
  /// xi^exponent
  static GroupRingElement monomial(std::size_t modulus, long exponent);
  static GroupRingElement from_column(const IntMatrix& column);

  std::size_t modulus() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  IntMatrix to_column() const;
  GroupRingElement pow(unsigned long e) const;

  friend GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y);
  friend GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y);
  /// Cyclic convolution. Throws ModulusMismatch.
  friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
  friend GroupRingElement operator*(const Integer& s, const GroupRingElement& x);
  friend bool operator==(const GroupRingElement& x, const GroupRingElement& y) = default;

 private:
  std::vector<Integer> coeffs_;
};

GroupRingElement mul(const GroupRingElement& x, const GroupRingElement& y);

/// Matrix of multiplication by xi^a on R(Z_d): basis index i goes to i + a mod d.
IntMatrix char_action_matrix(std::size_t d, long a);

struct InvariantSubmodule {
  /// d x r, one orbit-sum vector per column, ordered by least orbit element.
  IntMatrix basis;
  /// Free of rank r = gcd(d, a).
  PresentedModule module;
};

/// The xi^a-fixed part of R(Z_d).
InvariantSubmodule invariant_submodule(std::size_t d, long a);

/// R(Z_d) / <1 - xi^a>, presented with relations I - P_a.
PresentedModule quotient_by_one_minus(std::size_t d, long a);

/// Ring map R(Z_d) -> R(Z_{d_sub}), xi^i -> eta^(i mod d_sub). Throws NotASubgroup.
IntMatrix restriction_ring_map(std::size_t d, std::size_t d_sub);

/// Sum of P_a^i over 0 <= i < count, as a d x d matrix.
IntMatrix geometric_action_sum(std::size_t d, long a, long count);

struct FiniteAbelianGroup {
  /// Orders of the cyclic factors; all positive.
  std::vector<long> factors;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<long> factors);

  long order() const;
  /// Mixed-radix index of an exponent tuple (first factor fastest).
  std::size_t index_of(const std::vector<long>& element) const;
  std::vector<long> element_at(std::size_t index) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

struct Character {
  FiniteAbelianGroup group;
  /// Reduced mod the matching factor order.
  std::vector<long> exponents;

  Character(FiniteAbelianGroup group, std::vector<long> exponents);

  bool is_trivial() const;
  /// Order of the character as an element of the dual group.
  long order() const;
};

/// Kernel of phi : G -> Z_n, phi(x) = sum_i phi_i x_i mod n, in invariant
/// factor form. Throws IllFormedHom unless phi_i * factor_i = 0 mod n.
FiniteAbelianGroup kernel_of_hom(const FiniteAbelianGroup& g, const std::vector<long>& phi, long n);

}  // namespace eqkt
