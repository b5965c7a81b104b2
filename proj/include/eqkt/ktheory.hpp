#pragma once

// Twisted Z_n-equivariant K-groups of a circle bundle E_k over a point with
// twist class ell, computed two ways: from the two-cell Mayer-Vietoris
// matrix and from the closed-form fixed-point / coinvariant description.

#include <string>
#include <vector>

#include "eqkt/exactalg.hpp"
#include "eqkt/repring.hpp"

namespace eqkt {

/// (E_k, tau_ell) for Z_n; valid iff k * ell = 0 mod n.
class PointPair {
 public:
  /// Throws InvalidPair unless n >= 1, 0 <= k, ell < n and k * ell = 0 mod n.
  PointPair(long n, long k, long ell);
  /// Reduces k and ell mod n first.
  static PointPair reduced(long n, long k, long ell);
  static bool is_valid(long n, long k, long ell);

  long n() const { return n_; }
  long k() const { return k_; }
  long ell() const { return ell_; }
  /// gcd(n, k), with gcd(n, 0) = n.
  long d() const { return gcd_of(n_, k_); }
  /// d * ell / n; exact division is asserted.
  long twist_exponent() const;

  std::string to_string() const;

  friend auto operator<=>(const PointPair&, const PointPair&) = default;

 private:
  long n_;
  long k_;
  long ell_;
};

/// Ascending list of all ell with k * ell = 0 mod n.
std::vector<long> classify_twists(long n, long k);
/// All valid pairs for Z_n in lexicographic (k, ell) order.
std::vector<PointPair> classify_pairs(long n);

enum class Provenance { mv, closed_form };

const char* to_string(Provenance p);

struct KGroupPair {
  PresentedModule k0;
  PresentedModule k1;
  Provenance provenance;
  /// Embedding of the free module k0: into R(Z_d)^2 for the Mayer-Vietoris
  /// route, into R(Z_d) (orbit sums) for the closed form.
  IntMatrix k0_basis;

  bool same_groups(const KGroupPair& other) const {
    return k0.isomorphic_to(other.k0) && k1.isomorphic_to(other.k1);
  }
};

/// 2d x 2d matrix of (x, y) -> (x - xi^e y, x - y) over R(Z_d).
IntMatrix mv_matrix(const PointPair& pair);

KGroupPair compute_kgroups_mv(const PointPair& pair);
KGroupPair compute_kgroups_closed(const PointPair& pair);

/// [(p, q)] -> [p - q] from coker(mv_matrix) to R(Z_d)/<1 - xi^e>.
ModuleMap mv_cokernel_identification(const PointPair& pair);

/// G acting on the circle through phi : G -> Z_n, twisted by a character of
/// K = ker(phi).
struct AbelianPointInput {
  FiniteAbelianGroup group;
  std::vector<long> phi;
  long n;
  Character twist;
};

/// Orbits of multiplication by the twist character on Irr(K).
long character_orbit_count(const Character& twist);

/// Throws IllFormedHom, CharacterDomainMismatch.
KGroupPair compute_kgroups_abelian(const AbelianPointInput& input);

}  // namespace eqkt
