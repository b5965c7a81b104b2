#include "eqkt/ktheory.hpp"

#include <cassert>
#include <string>

namespace eqkt {

PointPair::PointPair(long n, long k, long ell) : n_(n), k_(k), ell_(ell) {
  if (!is_valid(n, k, ell)) throw InvalidPair("invalid pair " + to_string() + ": need 0 <= k, ell < n and k*ell = 0 mod n");
}

PointPair PointPair::reduced(long n, long k, long ell) {
  if (n < 1) throw InvalidPair("group order must be at least 1");
  return PointPair(n, reduce_mod(k, n), reduce_mod(ell, n));
}

bool PointPair::is_valid(long n, long k, long ell) {
  return n >= 1 && k >= 0 && k < n && ell >= 0 && ell < n && (k * ell) % n == 0;
}

long PointPair::twist_exponent() const {
  const long numerator = d() * ell_;
  if (numerator % n_ != 0)
    throw InvalidPair("twist exponent d*ell/n is not an integer for " + to_string());
  return numerator / n_;
}

std::string PointPair::to_string() const {
  return "(n=" + std::to_string(n_) + ", k=" + std::to_string(k_) + ", ell=" + std::to_string(ell_) + ")";
}

std::vector<long> classify_twists(long n, long k) {
  if (n < 1 || k < 0 || k >= n) throw InvalidPair("classify_twists: need n >= 1 and 0 <= k < n");
  std::vector<long> out;
  for (long ell = 0; ell < n; ++ell)
    if ((k * ell) % n == 0) out.push_back(ell);
  return out;
}

std::vector<PointPair> classify_pairs(long n) {
  if (n < 1) throw InvalidPair("classify_pairs: need n >= 1");
  std::vector<PointPair> out;
  for (long k = 0; k < n; ++k)
    for (long ell : classify_twists(n, k)) out.emplace_back(n, k, ell);
  return out;
}

const char* to_string(Provenance p) { return p == Provenance::mv ? "mv" : "closed_form"; }

namespace {

// [[I, -P], [I, -I]] for a d x d action matrix P.
IntMatrix two_cell_matrix(const IntMatrix& action) {
  const std::size_t d = action.rows();
  const IntMatrix id = IntMatrix::identity(d);
  const IntMatrix zero(d, d);
  return vstack(hstack(id, zero - action), hstack(id, zero - id));
}

KGroupPair from_mv(const IntMatrix& mv) {
  IntMatrix kernel = kernel_basis(mv);
  return {PresentedModule::free(kernel.cols()), cokernel(mv), Provenance::mv, std::move(kernel)};
}

}  // namespace

IntMatrix mv_matrix(const PointPair& pair) {
  return two_cell_matrix(char_action_matrix(static_cast<std::size_t>(pair.d()), pair.twist_exponent()));
}

KGroupPair compute_kgroups_mv(const PointPair& pair) { return from_mv(mv_matrix(pair)); }

KGroupPair compute_kgroups_closed(const PointPair& pair) {
  const auto d = static_cast<std::size_t>(pair.d());
  const long e = pair.twist_exponent();
  auto inv = invariant_submodule(d, e);
  return {std::move(inv.module), quotient_by_one_minus(d, e), Provenance::closed_form, std::move(inv.basis)};
}

ModuleMap mv_cokernel_identification(const PointPair& pair) {
  const auto d = static_cast<std::size_t>(pair.d());
  const IntMatrix id = IntMatrix::identity(d);
  return ModuleMap(cokernel(mv_matrix(pair)), quotient_by_one_minus(d, pair.twist_exponent()),
                   hstack(id, IntMatrix(d, d) - id));
}

long character_orbit_count(const Character& twist) { return twist.group.order() / twist.order(); }

KGroupPair compute_kgroups_abelian(const AbelianPointInput& input) {
  const FiniteAbelianGroup kernel = kernel_of_hom(input.group, input.phi, input.n);
  if (!(kernel == input.twist.group))
    throw CharacterDomainMismatch("twist character is not defined on ker(phi)");

  // Multiplication by the twist permutes Irr(K) by translation.
  const auto size = static_cast<std::size_t>(kernel.order());
  IntMatrix action(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    auto chi = kernel.element_at(i);
    for (std::size_t f = 0; f < chi.size(); ++f) chi[f] += input.twist.exponents[f];
    action(kernel.index_of(chi), i) = 1;
  }
  return from_mv(two_cell_matrix(action));
}

}  // namespace eqkt
