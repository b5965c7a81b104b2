#include "eqkt/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace eqkt {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<Integer> entries) {
  if (entries.size() != rows * cols)
    throw std::invalid_argument("IntMatrix::from_entries: entry count does not match shape");
  IntMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.entries_ = std::move(entries);
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<long>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::column(std::size_t j) const { return columns(j, j + 1); }

IntMatrix IntMatrix::columns(std::size_t begin, std::size_t end) const {
  if (begin > end || end > cols_) throw std::out_of_range("IntMatrix::columns");
  IntMatrix m(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw std::out_of_range("IntMatrix::row_block");
  IntMatrix m(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(src, j);
    if (s != 0) mpz_addmul((*this)(dst, j).get_mpz_t(), s.get_mpz_t(), factor.get_mpz_t());
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, src);
    if (s != 0) mpz_addmul((*this)(i, dst).get_mpz_t(), s.get_mpz_t(), factor.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b(k, j);
        if (bkj != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix: sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix: difference shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.entries_) x *= s;
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// ------------------------------------------------------ Smith normal form

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the lower-right block starting at (t, t); ties
// go to the lowest (row, col) in row-major order.
std::optional<Position> smallest_nonzero(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Integer& x = d(i, j);
      if (x == 0) continue;
      if (!best || mpz_cmpabs(x.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
        best = Position{i, j};
        best_abs = abs(x);
      }
    }
  return best;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(d.rows(), d.cols());
  while (r < n && d(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const std::size_t r = rank();
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) out.push_back(d(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);

  Integer q;
  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      const auto pivot = smallest_nonzero(d, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole remaining block
      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < m && !offending_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending_row = i;
            break;
          }
      if (!offending_row) break;
      d.add_row_multiple(t, *offending_row, Integer(1));
      u.add_row_multiple(t, *offending_row, Integer(1));
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

IntMatrix kernel_basis(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  return snf.v.columns(snf.rank(), a.cols());
}

IntMatrix lattice_basis(const IntMatrix& a) {
  // colspan(a) = colspan(a v), and a v = u^-1 d vanishes past the rank.
  const auto snf = smith_normal_form(a);
  return (a * snf.v).columns(0, snf.rank());
}

// ------------------------------------------------------------- solving

LatticeSolver::LatticeSolver(IntMatrix generators)
    : generators_(std::move(generators)), snf_(smith_normal_form(generators_)), rank_(snf_.rank()) {}

std::optional<IntMatrix> LatticeSolver::solve(const IntMatrix& b) const {
  if (b.rows() != generators_.rows()) throw std::invalid_argument("LatticeSolver::solve: row count mismatch");
  const IntMatrix y = snf_.u * b;
  IntMatrix z(generators_.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < y.rows(); ++i) {
      if (i < rank_) {
        if (!mpz_divisible_p(y(i, c).get_mpz_t(), snf_.d(i, i).get_mpz_t())) return std::nullopt;
        mpz_divexact(z(i, c).get_mpz_t(), y(i, c).get_mpz_t(), snf_.d(i, i).get_mpz_t());
      } else if (y(i, c) != 0) {
        return std::nullopt;
      }
    }
  }
  return snf_.v * z;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) { return LatticeSolver(a).solve(b); }

bool lattice_contains(const IntMatrix& a, const IntMatrix& b) { return LatticeSolver(a).contains(b); }

bool same_lattice(const IntMatrix& a, const IntMatrix& b) { return lattice_contains(a, b) && lattice_contains(b, a); }

IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& relations) {
  if (m.rows() != relations.rows()) throw std::invalid_argument("preimage_lattice: row count mismatch");
  const IntMatrix ker = kernel_basis(hstack(m, relations));
  return lattice_basis(ker.row_block(0, m.cols()));
}

PresentedModule lattice_quotient(const IntMatrix& outer, const IntMatrix& inner) {
  const IntMatrix basis = lattice_basis(outer);
  auto coords = LatticeSolver(basis).solve(inner);
  if (!coords) throw std::invalid_argument("lattice_quotient: inner lattice is not contained in outer");
  return PresentedModule(basis.cols(), std::move(*coords));
}

// ------------------------------------------------------ PresentedModule

PresentedModule::PresentedModule(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_) {
    if (relations_.rows() == 0 && relations_.cols() == 0)
      relations_ = IntMatrix(generators_, 0);
    else
      throw std::invalid_argument("PresentedModule: relations must have one row per generator");
  }
  const auto diag = smith_normal_form(relations_).diagonal();
  for (const auto& x : diag)
    if (x != 1) factors_.push_back(x);
  for (std::size_t i = diag.size(); i < generators_; ++i) factors_.emplace_back(0);
}

PresentedModule PresentedModule::free(std::size_t rank) { return PresentedModule(rank, IntMatrix(rank, 0)); }

std::size_t PresentedModule::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Integer(0)));
}

std::vector<Integer> PresentedModule::torsion() const {
  std::vector<Integer> t;
  for (const auto& x : factors_)
    if (x != 0) t.push_back(x);
  return t;
}

bool PresentedModule::structurally_equal(const PresentedModule& other) const {
  return generators_ == other.generators_ && relations_ == other.relations_;
}

std::string describe_factors(const std::vector<Integer>& factors, bool unicode) {
  std::size_t free = 0;
  std::vector<std::string> parts;
  for (const auto& f : factors) {
    if (f == 0)
      ++free;
    else
      parts.push_back("Z/" + f.get_str());
  }
  if (free == 1) parts.insert(parts.begin(), "Z");
  if (free > 1) parts.insert(parts.begin(), "Z^" + std::to_string(free));
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += unicode ? " ⊕ " : " + ";
    out += parts[i];
  }
  return out;
}

std::string PresentedModule::describe(bool unicode) const { return describe_factors(factors_, unicode); }

PresentedModule cokernel(const IntMatrix& a) { return PresentedModule(a.rows(), a); }

// ------------------------------------------------------------ ModuleMap

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators()) {
    if (matrix_.rows() == 0 && matrix_.cols() == 0)
      matrix_ = IntMatrix(target_.generators(), source_.generators());
    else
      throw std::invalid_argument("ModuleMap: matrix shape must be target.generators x source.generators");
  }
}

bool ModuleMap::is_well_defined() const {
  return lattice_contains(target_.relations(), matrix_ * source_.relations());
}

void ModuleMap::certify() const {
  if (!is_well_defined())
    throw IllFormedMap("module map does not send source relations into the target relation lattice");
}

IntMatrix ModuleMap::image_lattice() const { return lattice_basis(hstack(matrix_, target_.relations())); }

ModuleMap identity_map(const PresentedModule& m) {
  return ModuleMap(m, m, IntMatrix::identity(m.generators()));
}

ModuleMap compose(const ModuleMap& outer, const ModuleMap& inner) {
  if (!inner.target().structurally_equal(outer.source()))
    throw TargetMismatch("compose: inner target differs from outer source");
  return ModuleMap(inner.source(), outer.target(), outer.matrix() * inner.matrix());
}

MapAnalysis induced_map_analysis(const ModuleMap& f) {
  f.certify();
  const IntMatrix preimage = preimage_lattice(f.matrix(), f.target().relations());
  PresentedModule kernel = lattice_quotient(preimage, f.source().relations());
  PresentedModule image(f.source().generators(), preimage);
  const bool surjective = cokernel(hstack(f.matrix(), f.target().relations())).is_trivial();
  const bool injective = kernel.is_trivial();
  return {std::move(kernel), std::move(image), injective, surjective};
}

bool submodule_equal(const ModuleMap& f, const ModuleMap& g) {
  if (!f.target().structurally_equal(g.target()))
    throw TargetMismatch("submodule_equal: images live in different target modules");
  const IntMatrix& rel = f.target().relations();
  return same_lattice(hstack(f.matrix(), rel), hstack(g.matrix(), rel));
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
  if (!f.source().structurally_equal(g.source()) || !f.target().structurally_equal(g.target()))
    throw TargetMismatch("maps_equal: maps have different source or target");
  return lattice_contains(f.target().relations(), f.matrix() - g.matrix());
}

}  // namespace eqkt
