#include "affsg/cone.hpp"

#include <algorithm>

#include "affsg/errors.hpp"

namespace affsg {

namespace {

// One ray of the dual cone during double description, in span coordinates.
// `tight` records tightness against every constraint processed so far.
struct DualRay {
  RatVec y;
  std::vector<bool> tight;
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// Extreme rays of { y in Q^k : c . y >= 0 for every c in constraints }.
// The constraint list must have full rank k and contain the k standard basis
// vectors at the given indices (the primal cone is full-dimensional in span
// coordinates, so its own basis generators provide them).
std::vector<RatVec> dual_extreme_rays(const std::vector<RatVec>& constraints,
                                      const std::vector<std::size_t>& unit_idx,
                                      std::size_t k) {
  std::vector<DualRay> rays(k);
  std::vector<std::size_t> order = unit_idx; // processing order
  std::vector<bool> scheduled(constraints.size(), false);
  for (std::size_t i : unit_idx) scheduled[i] = true;
  for (std::size_t i = 0; i < constraints.size(); ++i)
    if (!scheduled[i]) order.push_back(i);

  // Initial simplicial cone: the nonnegative orthant, rays = unit vectors.
  for (std::size_t i = 0; i < k; ++i) {
    rays[i].y.assign(k, Rat(0));
    rays[i].y[i] = 1;
    rays[i].tight.assign(k, true);
    rays[i].tight[i] = false;
  }

  for (std::size_t step = k; step < order.size(); ++step) {
    const RatVec& c = constraints[order[step]];
    std::vector<Rat> s(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      Rat v = 0;
      for (std::size_t j = 0; j < k; ++j) v += c[j] * rays[i].y[j];
      s[i] = v;
    }
    std::vector<DualRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] >= 0) {
        DualRay r = rays[i];
        r.tight.push_back(s[i] == 0);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (s[n] >= 0) continue;
        // Combinatorial adjacency test against all current rays.
        std::vector<bool> common(step);
        for (std::size_t t = 0; t < step; ++t)
          common[t] = rays[p].tight[t] && rays[n].tight[t];
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if (subset_of(common, rays[o].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        DualRay combo;
        combo.y.resize(k);
        for (std::size_t j = 0; j < k; ++j)
          combo.y[j] = s[p] * rays[n].y[j] - s[n] * rays[p].y[j];
        // Rescale to a primitive direction to keep numbers small.
        IntVec prim = rat_to_primitive_int(combo.y);
        for (std::size_t j = 0; j < k; ++j) combo.y[j] = Rat(prim[j]);
        combo.tight.resize(step + 1);
        for (std::size_t t = 0; t <= step; ++t) {
          Rat v = 0;
          for (std::size_t j = 0; j < k; ++j)
            v += constraints[order[t]][j] * combo.y[j];
          combo.tight[t] = (v == 0);
        }
        bool dup = false;
        for (const DualRay& r : next) {
          if (rat_to_primitive_int(r.y) == prim) {
            dup = true;
            break;
          }
        }
        if (!dup) next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVec> out;
  out.reserve(rays.size());
  for (DualRay& r : rays) out.push_back(std::move(r.y));
  return out;
}

} // namespace

Cone Cone::of(std::size_t dim, const std::vector<IntVec>& generators) {
  if (dim == 0) throw input_error("cone: ambient dimension must be positive");
  for (const IntVec& g : generators) {
    if (g.size() != dim) throw input_error("cone: generator dimension mismatch");
    if (vec_is_zero(g)) throw input_error("cone: zero generator");
    if (!vec_is_nonneg(g)) throw input_error("cone: negative generator entry");
  }

  Cone c;
  c.dim_ = dim;
  c.generators_ = generators;

  // Deduplicate parallel generators by primitive direction.
  std::vector<IntVec> dirs;
  for (const IntVec& g : generators) {
    IntVec p = vec_primitive(g);
    if (std::find(dirs.begin(), dirs.end(), p) == dirs.end())
      dirs.push_back(std::move(p));
  }

  if (dirs.empty()) {
    // The zero cone: span equations pin every coordinate.
    c.span_dim_ = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim, 0);
      e[i] = 1;
      c.span_equations_.push_back(std::move(e));
    }
    return c;
  }

  std::vector<RatVec> dir_cols;
  dir_cols.reserve(dirs.size());
  for (const IntVec& d : dirs) dir_cols.push_back(to_rat(d));
  std::vector<std::size_t> basis_idx = independent_columns(dir_cols, dim);
  const std::size_t k = basis_idx.size();
  c.span_dim_ = k;

  std::vector<RatVec> basis_cols;
  for (std::size_t i : basis_idx) basis_cols.push_back(dir_cols[i]);

  // Integer equations cutting out the span: kernel of B^T.
  {
    IntMat bt_cols(dim, IntVec(k));
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < k; ++i) bt_cols[j][i] = dirs[basis_idx[i]][j];
    IntMat ker = kernel_basis(bt_cols, k);
    for (IntVec& e : ker) c.span_equations_.push_back(vec_primitive(e));
    canonicalize(c.span_equations_);
  }

  // Span coordinates of every direction; basis directions map to unit vectors.
  std::vector<RatVec> coords(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    auto sol = rat_solve(basis_cols, dim, dir_cols[i]);
    if (!sol) throw internal_error("cone: generator outside its own span");
    coords[i] = std::move(*sol);
  }
  std::vector<std::size_t> unit_idx(basis_idx.size());
  for (std::size_t i = 0; i < basis_idx.size(); ++i) unit_idx[i] = basis_idx[i];

  // Facets of the primal cone = extreme rays of the dual cone.
  std::vector<RatVec> dual = dual_extreme_rays(coords, unit_idx, k);

  // Map a span functional y back to the unique ambient normal inside the
  // span: n = B z with (B^T B) z = y.
  std::vector<RatVec> gram(k, RatVec(k, Rat(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rat s = 0;
      for (std::size_t r = 0; r < dim; ++r)
        s += basis_cols[i][r] * basis_cols[j][r];
      gram[j][i] = s; // column j of B^T B
    }
  for (const RatVec& y : dual) {
    auto z = rat_solve(gram, k, y);
    if (!z) throw internal_error("cone: singular Gram matrix");
    RatVec n(dim, Rat(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < dim; ++r) n[r] += (*z)[j] * basis_cols[j][r];
    c.facets_.push_back(rat_to_primitive_int(n));
  }
  canonicalize(c.facets_);

  // Extreme rays: directions whose tight facet normals span a hyperplane of
  // the span (rank k - 1).
  for (const IntVec& d : dirs) {
    std::vector<RatVec> tight;
    for (const IntVec& n : c.facets_) {
      if (vec_dot(n, d) == 0) tight.push_back(to_rat(n));
    }
    if (rat_rank(tight, dim) + 1 == k) c.extreme_rays_.push_back(d);
  }
  canonicalize(c.extreme_rays_);
  return c;
}

bool Cone::contains(const IntVec& v) const { return contains(to_rat(v)); }

bool Cone::contains(const RatVec& v) const {
  if (v.size() != dim_) throw input_error("cone contains: dimension mismatch");
  for (const IntVec& e : span_equations_)
    if (vec_dot(v, e) != 0) return false;
  for (const IntVec& n : facets_)
    if (vec_dot(v, n) < 0) return false;
  return true;
}

bool Cone::relint_contains(const IntVec& v) const {
  return relint_contains(to_rat(v));
}

bool Cone::relint_contains(const RatVec& v) const {
  if (v.size() != dim_) throw input_error("cone relint: dimension mismatch");
  for (const IntVec& e : span_equations_)
    if (vec_dot(v, e) != 0) return false;
  for (const IntVec& n : facets_)
    if (vec_dot(v, n) <= 0) return false;
  return true;
}

IntVec positive_functional(const Cone& c) {
  IntVec w(c.ambient_dim(), 1);
  if (!is_positive_functional(c, w))
    throw internal_error("positive_functional: all-ones rejected");
  return w;
}

bool is_positive_functional(const Cone& c, const IntVec& w) {
  if (w.size() != c.ambient_dim()) return false;
  if (!vec_is_nonneg(w)) return false;
  for (const IntVec& g : c.generators())
    if (vec_dot(w, g) <= 0) return false;
  return true;
}

} // namespace affsg
