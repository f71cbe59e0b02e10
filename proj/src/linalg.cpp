#include "affsg/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "affsg/errors.hpp"

namespace affsg {

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

static void check_same_size(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw input_error("vector dimension mismatch");
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  check_same_size(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  check_same_size(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_scale(const Int& k, const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

Int vec_dot(const IntVec& a, const IntVec& b) {
  check_same_size(a, b);
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat vec_dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw input_error("vector dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

bool vec_is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

bool vec_is_nonneg(const IntVec& v) {
  for (const Int& x : v)
    if (x < 0) return false;
  return true;
}

Int vec_sum(const IntVec& v) {
  Int s = 0;
  for (const Int& x : v) s += x;
  return s;
}

int vec_cmp_lex(const IntVec& a, const IntVec& b) {
  check_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool vec_graded_lex_less(const IntVec& a, const IntVec& b) {
  Int sa = vec_sum(a), sb = vec_sum(b);
  if (sa != sb) return sa < sb;
  return vec_cmp_lex(a, b) < 0;
}

Int vec_content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntVec vec_primitive(const IntVec& v) {
  Int g = vec_content(v);
  if (g == 0 || g == 1) return v;
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IntVec rat_to_primitive_int(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    s.canonicalize();
    r[i] = s.get_num();
  }
  return vec_primitive(r);
}

void canonicalize(std::vector<IntVec>& vs) {
  std::sort(vs.begin(), vs.end(), [](const IntVec& a, const IntVec& b) {
    return vec_graded_lex_less(a, b);
  });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

namespace {

// In-place column operations applied simultaneously to h and u.
struct ColOps {
  IntMat& h;
  IntMat& u;

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(h[i], h[j]);
    std::swap(u[i], u[j]);
  }

  void negate_col(std::size_t i) {
    for (Int& x : h[i]) x = -x;
    for (Int& x : u[i]) x = -x;
  }

  // col_i -= q * col_j
  void submul_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < h[i].size(); ++r) h[i][r] -= q * h[j][r];
    for (std::size_t r = 0; r < u[i].size(); ++r) u[i][r] -= q * u[j][r];
  }

  // Replace (col_i, col_j) by (s*col_i + t*col_j, -b/g*col_i + a/g*col_j)
  // where a = h[i][row], b = h[j][row], g = s*a + t*b = gcd(a, b).
  // The 2x2 transform has determinant 1.
  void gcd_combine(std::size_t i, std::size_t j, std::size_t row) {
    const Int a = h[i][row], b = h[j][row];
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    const Int p = a / g, q = b / g;
    auto apply = [&](IntMat& m) {
      for (std::size_t r = 0; r < m[i].size(); ++r) {
        Int x = m[i][r], y = m[j][r];
        m[i][r] = s * x + t * y;
        m[j][r] = -q * x + p * y;
      }
    };
    apply(h);
    apply(u);
  }
};

} // namespace

HnfResult hnf(const IntMat& m, std::size_t rows) {
  const std::size_t n = m.size();
  for (const IntVec& col : m)
    if (col.size() != rows) throw input_error("hnf: ragged matrix");

  HnfResult res;
  res.h = m;
  res.u.assign(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) res.u[i][i] = 1;

  ColOps ops{res.h, res.u};
  std::size_t pc = 0; // next pivot column
  for (std::size_t r = 0; r < rows && pc < n; ++r) {
    // Collapse all nonzero entries of row r among columns >= pc into column pc.
    for (std::size_t j = pc; j < n; ++j) {
      if (res.h[j][r] != 0) {
        ops.swap_cols(pc, j);
        break;
      }
    }
    if (res.h[pc][r] == 0) continue; // no pivot in this row
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (res.h[j][r] != 0) ops.gcd_combine(pc, j, r);
    }
    if (res.h[pc][r] < 0) ops.negate_col(pc);
    // Reduce the entries of row r left of the pivot modulo the pivot.
    for (std::size_t j = 0; j < pc; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), res.h[j][r].get_mpz_t(),
                 res.h[pc][r].get_mpz_t());
      ops.submul_col(j, pc, q);
    }
    ++pc;
  }
  return res;
}

IntMat kernel_basis(const IntMat& cols, std::size_t rows) {
  HnfResult r = hnf(cols, rows);
  IntMat ker;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (vec_is_zero(r.h[j])) ker.push_back(r.u[j]);
  }
  return ker;
}

Int determinant(const IntMat& cols) {
  const std::size_t n = cols.size();
  for (const IntVec& c : cols)
    if (c.size() != n) throw input_error("determinant: matrix not square");
  if (n == 0) return 1;

  // Bareiss fraction-free elimination on a row-major copy.
  std::vector<IntVec> a(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];

  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Lattice
// ---------------------------------------------------------------------------

Lattice Lattice::zero(std::size_t dim) { return Lattice(dim, {}, {}); }

Lattice Lattice::full(std::size_t dim) {
  IntMat basis(dim, IntVec(dim, 0));
  std::vector<std::size_t> pivots(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    basis[i][i] = 1;
    pivots[i] = i;
  }
  return Lattice(dim, std::move(basis), std::move(pivots));
}

Lattice Lattice::from_generators(std::size_t dim, const IntMat& gens) {
  for (const IntVec& g : gens)
    if (g.size() != dim) throw input_error("lattice generator dimension mismatch");
  HnfResult r = hnf(gens, dim);
  IntMat basis;
  std::vector<std::size_t> pivots;
  for (const IntVec& col : r.h) {
    if (vec_is_zero(col)) continue;
    std::size_t p = 0;
    while (col[p] == 0) ++p;
    basis.push_back(col);
    pivots.push_back(p);
  }
  return Lattice(dim, std::move(basis), std::move(pivots));
}

std::optional<IntVec> Lattice::member(const IntVec& v) const {
  if (v.size() != dim_) throw input_error("lattice member: dimension mismatch");
  IntVec residual = v;
  IntVec coeff(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const std::size_t p = pivot_rows_[j];
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[p].get_mpz_t(),
                basis_[j][p].get_mpz_t());
    if (rem != 0) return std::nullopt;
    coeff[j] = q;
    if (q != 0) {
      for (std::size_t r = 0; r < dim_; ++r) residual[r] -= q * basis_[j][r];
    }
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return coeff;
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw input_error("lattice intersect: dimension mismatch");
  const std::size_t dim = a.ambient_dim();
  // Solve B_a x = B_b y over Z via the kernel of the stacked system.
  IntMat stacked = a.basis();
  for (const IntVec& col : b.basis()) {
    IntVec neg(dim);
    for (std::size_t i = 0; i < dim; ++i) neg[i] = -col[i];
    stacked.push_back(neg);
  }
  IntMat ker = kernel_basis(stacked, dim);
  IntMat gens;
  for (const IntVec& k : ker) {
    IntVec v(dim, 0);
    for (std::size_t j = 0; j < a.rank(); ++j) {
      for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * a.basis()[j][i];
    }
    gens.push_back(std::move(v));
  }
  return Lattice::from_generators(dim, gens);
}

Int lattice_index(const Lattice& outer, const Lattice& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw input_error("lattice index: dimension mismatch");
  if (outer.rank() != inner.rank())
    throw input_error("lattice index: ranks differ");
  IntMat t;
  for (const IntVec& v : inner.basis()) {
    auto c = outer.member(v);
    if (!c) throw input_error("lattice index: not a sublattice");
    t.push_back(*c);
  }
  Int d = determinant(t);
  return abs(d);
}

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

namespace {

// Row echelon reduction over Q; returns pivot (row, col) pairs.
// Matrix is row-major: a[r][c].
std::vector<std::pair<std::size_t, std::size_t>>
row_reduce(std::vector<RatVec>& a) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Rat inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

} // namespace

std::vector<std::size_t> independent_columns(const std::vector<RatVec>& cols,
                                             std::size_t rows) {
  std::vector<RatVec> a(rows, RatVec(cols.size(), Rat(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = cols[j][i];
  auto pivots = row_reduce(a);
  std::vector<std::size_t> idx;
  idx.reserve(pivots.size());
  for (auto& [r, c] : pivots) idx.push_back(c);
  return idx;
}

std::size_t rat_rank(const std::vector<RatVec>& cols, std::size_t rows) {
  return independent_columns(cols, rows).size();
}

std::optional<RatVec> rat_solve(const std::vector<RatVec>& cols,
                                std::size_t rows, const RatVec& rhs) {
  if (rhs.size() != rows) throw input_error("rat_solve: rhs dimension mismatch");
  const std::size_t n = cols.size();
  std::vector<RatVec> a(rows, RatVec(n + 1, Rat(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = cols[j][i];
  for (std::size_t i = 0; i < rows; ++i) a[i][n] = rhs[i];
  auto pivots = row_reduce(a);
  // Inconsistent if a pivot lands in the rhs column.
  for (auto& [r, c] : pivots)
    if (c == n) return std::nullopt;
  RatVec x(n, Rat(0));
  for (auto& [r, c] : pivots) x[c] = a[r][n];
  return x;
}

std::vector<RatVec> rat_nullspace(const std::vector<RatVec>& cols,
                                  std::size_t rows) {
  const std::size_t n = cols.size();
  std::vector<RatVec> a(rows, RatVec(n, Rat(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = cols[j][i];
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(n, false);
  for (auto& [r, c] : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(n, Rat(0));
    v[free] = 1;
    for (auto& [r, c] : pivots) v[c] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace affsg
