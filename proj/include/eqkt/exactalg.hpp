#pragma once

// Exact integer linear algebra: Smith normal form, presented finitely
// generated abelian groups and homomorphisms between them.
//
// Conventions:
//   * matrices are dense, row-major, arbitrary precision;
//   * a presented module Z^g / <relations> stores its relations as the
//     columns of a g x r matrix (r may be zero: free module of rank g);
//   * empty matrices (zero rows and/or zero columns) are legal everywhere.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eqkt/errors.hpp"

namespace eqkt {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  static IntMatrix diagonal(const std::vector<long>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Integer>& entries() const { return entries_; }

  IntMatrix transpose() const;
  IntMatrix column(std::size_t j) const;
  /// Columns [begin, end).
  IntMatrix columns(std::size_t begin, std::size_t end) const;
  /// Rows [begin, end).
  IntMatrix row_block(std::size_t begin, std::size_t end) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  // elementary operations, used by the reduction kernels
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// u * a * v = d, with u and v unimodular and d in Smith normal form.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::size_t rank() const;
  /// Nonzero diagonal entries of d, in order.
  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination; square input only.
Integer determinant(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Saturated basis of {x : a x = 0}, one basis vector per column.
IntMatrix kernel_basis(const IntMatrix& a);

/// Basis of the column lattice of a (full column rank result).
IntMatrix lattice_basis(const IntMatrix& a);

/// Membership and exact solving against one fixed generator matrix. The
/// Smith decomposition is computed once and reused for every query.
class LatticeSolver {
 public:
  explicit LatticeSolver(IntMatrix generators);

  /// Some x with generators * x = b, or nothing if b leaves the lattice.
  std::optional<IntMatrix> solve(const IntMatrix& b) const;
  bool contains(const IntMatrix& b) const { return solve(b).has_value(); }
  const IntMatrix& generators() const { return generators_; }

 private:
  IntMatrix generators_;
  SmithDecomposition snf_;
  std::size_t rank_;
};

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Column lattice of a contains column lattice of b.
bool lattice_contains(const IntMatrix& a, const IntMatrix& b);
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// {x : m x lies in the column lattice of relations}, as a basis.
IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& relations);

class PresentedModule;

/// outer / inner for column lattices inner <= outer in the same ambient Z^g.
/// Throws std::invalid_argument when inner is not contained in outer.
PresentedModule lattice_quotient(const IntMatrix& outer, const IntMatrix& inner);

/// Z^g modulo the column lattice of a g x r relations matrix.
class PresentedModule {
 public:
  PresentedModule(std::size_t generators, IntMatrix relations);

  static PresentedModule free(std::size_t rank);

  std::size_t generators() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }

  /// Normalized: factors equal to 1 dropped, nonzero factors ascending in a
  /// divisibility chain, followed by one zero per free summand.
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const;
  std::vector<Integer> torsion() const;

  bool is_trivial() const { return factors_.empty(); }
  bool is_torsion_free() const { return free_rank() == factors_.size(); }
  bool isomorphic_to(const PresentedModule& other) const { return factors_ == other.factors_; }
  /// Same generator count and identical relation matrix.
  bool structurally_equal(const PresentedModule& other) const;

  /// e.g. "Z^2 + Z/6" (ascii) or "Z^2 ⊕ Z/6".
  std::string describe(bool unicode = true) const;

 private:
  std::size_t generators_;
  IntMatrix relations_;
  std::vector<Integer> factors_;
};

std::string describe_factors(const std::vector<Integer>& factors, bool unicode = true);

PresentedModule cokernel(const IntMatrix& a);

/// Homomorphism source -> target given on generators by a
/// (target.generators x source.generators) matrix.
class ModuleMap {
 public:
  ModuleMap(PresentedModule source, PresentedModule target, IntMatrix matrix);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  /// Every source relation maps into the target relation lattice.
  bool is_well_defined() const;
  /// Throws IllFormedMap when is_well_defined() fails.
  void certify() const;

  /// Column lattice (in Z^target.generators) of image + target relations.
  IntMatrix image_lattice() const;

 private:
  PresentedModule source_;
  PresentedModule target_;
  IntMatrix matrix_;
};

ModuleMap identity_map(const PresentedModule& m);
/// outer o inner; requires inner.target structurally equal to outer.source.
ModuleMap compose(const ModuleMap& outer, const ModuleMap& inner);

struct MapAnalysis {
  PresentedModule kernel;
  PresentedModule image;
  bool is_injective;
  bool is_surjective;
};

/// Kernel and image computed on the quotient level. Throws IllFormedMap for
/// maps that are not well-defined.
MapAnalysis induced_map_analysis(const ModuleMap& f);

/// Equality of the images of f and g inside their common target.
/// Throws TargetMismatch if the targets differ structurally.
bool submodule_equal(const ModuleMap& f, const ModuleMap& g);

/// f == g as maps of presented modules (agree modulo target relations).
bool maps_equal(const ModuleMap& f, const ModuleMap& g);

}  // namespace eqkt
