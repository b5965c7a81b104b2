#pragma once

// Restriction of K-groups of (E_k, tau_ell) along Z_m -> Z_n, in closed form
// and through the block map on the Z_m two-cell complex.

#include "eqkt/exactalg.hpp"
#include "eqkt/ktheory.hpp"
#include "eqkt/report.hpp"

namespace eqkt {

struct RestrictionContext {
  long n;
  long m;
  long k;
  long ell;
  /// gcd(n, k)
  long d;
  /// gcd(m, k)
  long d_sub;
  /// n * d_sub / (m * d): number of Z_m-orbits on the n/d cells.
  long j;
  /// d * ell / n reduced mod d_sub; the element a = eta^a_exponent.
  long a_exponent;

  PointPair source() const { return PointPair(n, k, ell); }
  /// The same pair viewed Z_m-equivariantly.
  PointPair target() const { return PointPair::reduced(m, k, ell); }

  json to_json() const;
};

/// Throws NotASubgroup unless m divides n, InvalidPair for an invalid triple.
RestrictionContext make_restriction_context(long n, long m, long k, long ell);

/// K^0_{Z_n} -> K^0_{Z_m} on orbit-sum bases, p(xi) -> p(eta).
ModuleMap rest_k0_closed(const RestrictionContext& ctx);
/// K^1_{Z_n} -> K^1_{Z_m}, [p(xi)] -> [(1 + a + ... + a^(j-1)) p(eta)].
ModuleMap rest_k1_closed(const RestrictionContext& ctx);

/// (p_1..p_j, q_1..q_j) -> (p_i - a q_i for each i, then p_i - q_(i+1) cyclically).
IntMatrix phi_matrix(const RestrictionContext& ctx);

/// (p, q) -> (p(eta) repeated j times, q(eta) repeated j times).
IntMatrix vertical_matrix(const RestrictionContext& ctx);

struct PhiIdentifications {
  IntMatrix phi;
  /// Saturated kernel basis of phi; ker_iso is given in these coordinates.
  IntMatrix kernel_basis;
  /// ker(phi) -> target K^0, first-component projection.
  ModuleMap ker_iso;
  /// coker(phi) -> target K^1, alternating a-weighted sum.
  ModuleMap coker_iso;
  /// [p] -> [(p, 0, ..., 0)]
  ModuleMap coker_inverse;
};

PhiIdentifications phi_identifications(const RestrictionContext& ctx);

/// Closed-form maps against the maps transported through the Z_m complex.
VerificationReport verify_restriction_agreement(const RestrictionContext& ctx);

}  // namespace eqkt
