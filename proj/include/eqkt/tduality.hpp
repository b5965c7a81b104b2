#pragma once

// T-dual pairs over a point for Z_n, the K-group isomorphism between dual
// pairs, and the restriction-diagram constraints along Z_d -> Z_n.

#include "eqkt/exactalg.hpp"
#include "eqkt/ktheory.hpp"
#include "eqkt/report.hpp"
#include "eqkt/restriction.hpp"

namespace eqkt {

/// (E_k, ell) -> (E_ell, k)
PointPair dual_pair(const PointPair& p);

struct DualityConstants {
  long n;
  long k;
  long ell;
  long d;        // gcd(n, k)
  long d_prime;  // gcd(n, ell)
  long alpha;
  long beta;
  long beta_prime;
  long c_left;   // n / (d alpha)
  long c_right;  // beta / beta'

  // Orders recomputed by divisor scan, independent of the gcd formulas.
  long alpha_order;       // order of d*ell/n in Z_gcd(d, ell)
  long alpha_order_in_d;  // order of d*ell/n in Z_d (the other reading)
  long beta_order;        // order of d'k/n in Z_d'
  long beta_prime_order;  // order of d'k/n in Z_gcd(d, ell)

  json to_json() const;
};

/// Throws ConstantMismatch when c_left != c_right or a quotient is not integral.
DualityConstants duality_constants(const PointPair& p);

enum class Side { bundle, dual };

/// Multiplication by the residual generator on the Z_d-restricted K-group:
/// xi^(d ell/n) on the bundle side, zeta^(d'k/n) on the dual side.
ModuleMap generator_action(const PointPair& p, Side side, int degree);

/// Column lattice (containing the relations) of elements fixed by an endomorphism.
IntMatrix fixed_lattice(const ModuleMap& endo);

VerificationReport verify_group_isomorphism(const PointPair& p);
VerificationReport verify_admissibility_diagrams(const PointPair& p);
/// The (E_k, 0) / (E_0, k) case in detail.
VerificationReport verify_trivial_twist_case(long n, long k);
/// gcd chain and the three multiplicative-order identities.
VerificationReport verify_constants(const PointPair& p);

}  // namespace eqkt
