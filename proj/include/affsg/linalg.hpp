#ifndef AFFSG_LINALG_HPP
#define AFFSG_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace affsg {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// A matrix stored as a list of columns, all of equal length.
using IntMat = std::vector<IntVec>;

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const Int& k, const IntVec& v);
Int vec_dot(const IntVec& a, const IntVec& b);
Rat vec_dot(const RatVec& a, const IntVec& b);
bool vec_is_zero(const IntVec& v);
bool vec_is_nonneg(const IntVec& v);
Int vec_sum(const IntVec& v);

/// -1, 0, +1 comparison in lexicographic order.
int vec_cmp_lex(const IntVec& a, const IntVec& b);

/// Canonical order used for all emitted vector lists: coordinate sum first,
/// ties broken lexicographically.
bool vec_graded_lex_less(const IntVec& a, const IntVec& b);

/// gcd of the absolute values of the entries (0 for the zero vector).
Int vec_content(const IntVec& v);

/// v divided by its content; the zero vector stays zero.
IntVec vec_primitive(const IntVec& v);

std::string vec_str(const IntVec& v);

RatVec to_rat(const IntVec& v);

/// Clears denominators and divides by the content, preserving direction.
IntVec rat_to_primitive_int(const RatVec& v);

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<IntVec>& vs);

// ---------------------------------------------------------------------------
// Hermite normal form (column style)
// ---------------------------------------------------------------------------

/// h = m * u with u unimodular and h in canonical column Hermite normal form:
/// pivot entries positive, entries to the left of a pivot reduced modulo it,
/// zero columns trailing.
struct HnfResult {
  IntMat h;
  IntMat u;
};

HnfResult hnf(const IntMat& m, std::size_t rows);

/// Right kernel over the integers of the matrix with the given columns:
/// a basis of { x : sum_j x_j * cols[j] = 0 }.
IntMat kernel_basis(const IntMat& cols, std::size_t rows);

/// Exact determinant of a square matrix given by columns (Bareiss).
Int determinant(const IntMat& cols);

// ---------------------------------------------------------------------------
// Lattices (subgroups of Z^d)
// ---------------------------------------------------------------------------

/// An integer lattice stored by its canonical Hermite-normal-form basis.
/// Two equal lattices always hold identical bases, so equality is structural.
class Lattice {
public:
  static Lattice zero(std::size_t dim);
  static Lattice full(std::size_t dim);
  static Lattice from_generators(std::size_t dim, const IntMat& gens);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMat& basis() const { return basis_; }

  /// Coefficients c with basis * c = v when v lies in the lattice.
  std::optional<IntVec> member(const IntVec& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

private:
  Lattice(std::size_t dim, IntMat basis, std::vector<std::size_t> pivots)
      : dim_(dim), basis_(std::move(basis)), pivot_rows_(std::move(pivots)) {}

  std::size_t dim_ = 0;
  IntMat basis_;                         // nonzero HNF columns
  std::vector<std::size_t> pivot_rows_;  // first nonzero row per column
};

Lattice lattice_intersect(const Lattice& a, const Lattice& b);

/// Index [outer : inner] for inner a full-rank sublattice of outer
/// (equal ranks required).
Int lattice_index(const Lattice& outer, const Lattice& inner);

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

/// Indices of a maximal linearly independent subset of the given columns.
std::vector<std::size_t> independent_columns(const std::vector<RatVec>& cols,
                                             std::size_t rows);

std::size_t rat_rank(const std::vector<RatVec>& cols, std::size_t rows);

/// Any exact solution x of cols * x = rhs, or nothing if inconsistent.
std::optional<RatVec> rat_solve(const std::vector<RatVec>& cols,
                                std::size_t rows, const RatVec& rhs);

/// Basis of { x : cols * x = 0 } over the rationals.
std::vector<RatVec> rat_nullspace(const std::vector<RatVec>& cols,
                                  std::size_t rows);

} // namespace affsg

#endif
