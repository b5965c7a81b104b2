#include "eqkt/repring.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace eqkt {

long gcd_of(long a, long b) { return std::gcd(a, b); }

long reduce_mod(long x, long m) {
  if (m < 1) throw std::invalid_argument("reduce_mod: modulus must be positive");
  const long r = x % m;
  return r < 0 ? r + m : r;
}

long additive_order(long x, long m) {
  x = reduce_mod(x, m);
  for (long t = 1; t <= m; ++t)
    if (m % t == 0 && (x * t) % m == 0) return t;
  return m;  // unreachable: t = m always qualifies
}

// ------------------------------------------------------ GroupRingElement

GroupRingElement::GroupRingElement(std::size_t modulus) : coeffs_(modulus, Integer(0)) {
  if (modulus == 0) throw std::invalid_argument("GroupRingElement: modulus must be at least 1");
}

GroupRingElement::GroupRingElement(std::size_t modulus, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (modulus == 0) throw std::invalid_argument("GroupRingElement: modulus must be at least 1");
  if (coeffs_.size() != modulus) throw std::invalid_argument("GroupRingElement: need exactly one coefficient per power");
}

GroupRingElement GroupRingElement::unit(std::size_t modulus) { return monomial(modulus, 0); }

GroupRingElement GroupRingElement::monomial(std::size_t modulus, long exponent) {
  GroupRingElement x(modulus);
  x.coeffs_[reduce_mod(exponent, static_cast<long>(modulus))] = 1;
  return x;
}

GroupRingElement GroupRingElement::from_column(const IntMatrix& column) {
  if (column.cols() != 1) throw std::invalid_argument("GroupRingElement::from_column: need a single column");
  std::vector<Integer> c(column.rows());
  for (std::size_t i = 0; i < column.rows(); ++i) c[i] = column(i, 0);
  return GroupRingElement(column.rows(), std::move(c));
}

IntMatrix GroupRingElement::to_column() const {
  IntMatrix m(coeffs_.size(), 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) m(i, 0) = coeffs_[i];
  return m;
}

GroupRingElement GroupRingElement::pow(unsigned long e) const {
  GroupRingElement result = unit(modulus());
  GroupRingElement base = *this;
  while (e) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.modulus() != y.modulus()) throw ModulusMismatch("group ring moduli differ");
  GroupRingElement z = x;
  for (std::size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] += y.coeffs_[i];
  return z;
}

GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.modulus() != y.modulus()) throw ModulusMismatch("group ring moduli differ");
  GroupRingElement z = x;
  for (std::size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] -= y.coeffs_[i];
  return z;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.modulus() != y.modulus()) throw ModulusMismatch("group ring moduli differ");
  const std::size_t d = x.modulus();
  GroupRingElement z(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y.coeffs_[j] == 0) continue;
      mpz_addmul(z.coeffs_[(i + j) % d].get_mpz_t(), x.coeffs_[i].get_mpz_t(), y.coeffs_[j].get_mpz_t());
    }
  }
  return z;
}

GroupRingElement operator*(const Integer& s, const GroupRingElement& x) {
  GroupRingElement z = x;
  for (auto& c : z.coeffs_) c *= s;
  return z;
}

GroupRingElement mul(const GroupRingElement& x, const GroupRingElement& y) { return x * y; }

// ------------------------------------------------------- cyclic actions

IntMatrix char_action_matrix(std::size_t d, long a) {
  if (d == 0) throw std::invalid_argument("char_action_matrix: modulus must be at least 1");
  const long shift = reduce_mod(a, static_cast<long>(d));
  IntMatrix p(d, d);
  for (std::size_t i = 0; i < d; ++i) p((i + shift) % d, i) = 1;
  return p;
}

InvariantSubmodule invariant_submodule(std::size_t d, long a) {
  if (d == 0) throw std::invalid_argument("invariant_submodule: modulus must be at least 1");
  const long shift = reduce_mod(a, static_cast<long>(d));
  std::vector<long> orbit_of(d, -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < d; ++start) {
    if (orbit_of[start] >= 0) continue;
    std::vector<std::size_t> orbit;
    std::size_t i = start;
    do {
      orbit_of[i] = static_cast<long>(orbits.size());
      orbit.push_back(i);
      i = (i + shift) % d;
    } while (i != start);
    orbits.push_back(std::move(orbit));
  }
  IntMatrix basis(d, orbits.size());
  for (std::size_t c = 0; c < orbits.size(); ++c)
    for (std::size_t i : orbits[c]) basis(i, c) = 1;
  return {std::move(basis), PresentedModule::free(orbits.size())};
}

PresentedModule quotient_by_one_minus(std::size_t d, long a) {
  return cokernel(IntMatrix::identity(d) - char_action_matrix(d, a));
}

IntMatrix restriction_ring_map(std::size_t d, std::size_t d_sub) {
  if (d == 0 || d_sub == 0 || d % d_sub != 0)
    throw NotASubgroup("Z_" + std::to_string(d_sub) + " is not a subgroup of Z_" + std::to_string(d));
  IntMatrix r(d_sub, d);
  for (std::size_t i = 0; i < d; ++i) r(i % d_sub, i) = 1;
  return r;
}

IntMatrix geometric_action_sum(std::size_t d, long a, long count) {
  IntMatrix sum(d, d);
  const long shift = reduce_mod(a, static_cast<long>(d));
  for (long t = 0; t < count; ++t) {
    const auto s = static_cast<std::size_t>((shift * t) % static_cast<long>(d));
    for (std::size_t i = 0; i < d; ++i) sum((i + s) % d, i) += 1;
  }
  return sum;
}

// --------------------------------------------------- finite abelian groups

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> f) : factors(std::move(f)) {
  for (long x : factors)
    if (x < 1) throw std::invalid_argument("FiniteAbelianGroup: factor orders must be positive");
}

long FiniteAbelianGroup::order() const {
  long o = 1;
  for (long f : factors) o *= f;
  return o;
}

std::size_t FiniteAbelianGroup::index_of(const std::vector<long>& element) const {
  if (element.size() != factors.size()) throw std::invalid_argument("FiniteAbelianGroup::index_of: arity mismatch");
  std::size_t idx = 0;
  for (std::size_t i = factors.size(); i-- > 0;)
    idx = idx * static_cast<std::size_t>(factors[i]) + static_cast<std::size_t>(reduce_mod(element[i], factors[i]));
  return idx;
}

std::vector<long> FiniteAbelianGroup::element_at(std::size_t index) const {
  std::vector<long> e(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto f = static_cast<std::size_t>(factors[i]);
    e[i] = static_cast<long>(index % f);
    index /= f;
  }
  return e;
}

Character::Character(FiniteAbelianGroup g, std::vector<long> e) : group(std::move(g)), exponents(std::move(e)) {
  if (exponents.size() != group.factors.size())
    throw std::invalid_argument("Character: need one exponent per cyclic factor");
  for (std::size_t i = 0; i < exponents.size(); ++i) exponents[i] = reduce_mod(exponents[i], group.factors[i]);
}

bool Character::is_trivial() const {
  for (long e : exponents)
    if (e != 0) return false;
  return true;
}

long Character::order() const {
  long o = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) o = std::lcm(o, additive_order(exponents[i], group.factors[i]));
  return o;
}

FiniteAbelianGroup kernel_of_hom(const FiniteAbelianGroup& g, const std::vector<long>& phi, long n) {
  if (n < 1) throw IllFormedHom("target order must be positive");
  if (phi.size() != g.factors.size()) throw IllFormedHom("need one image exponent per cyclic factor");
  for (std::size_t i = 0; i < phi.size(); ++i)
    if ((reduce_mod(phi[i], n) * g.factors[i]) % n != 0)
      throw IllFormedHom("factor " + std::to_string(i) + " of order " + std::to_string(g.factors[i]) +
                         " cannot map to " + std::to_string(phi[i]) + " in Z_" + std::to_string(n));

  std::vector<long> diag = g.factors;
  IntMatrix phi_row(1, phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) phi_row(0, i) = reduce_mod(phi[i], n);
  const ModuleMap hom(PresentedModule(g.factors.size(), IntMatrix::diagonal(diag)),
                      PresentedModule(1, IntMatrix::from_rows({{n}})), phi_row);
  const auto analysis = induced_map_analysis(hom);
  std::vector<long> factors;
  for (const auto& f : analysis.kernel.invariant_factors()) factors.push_back(f.get_si());
  return FiniteAbelianGroup(std::move(factors));
}

}  // namespace eqkt
