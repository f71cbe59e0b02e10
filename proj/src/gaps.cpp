#include "affsg/gaps.hpp"

#include <algorithm>

#include "affsg/errors.hpp"

namespace affsg {

std::vector<RayDiagnostic> ray_diagnostics(const AffineSemigroup& s) {
  std::vector<RayDiagnostic> out;
  for (const IntVec& ray : s.cone().extreme_rays()) {
    RayDiagnostic d;
    d.ray = ray;
    std::size_t nz = 0;
    while (ray[nz] == 0) ++nz;
    for (const IntVec& g : s.gens()) {
      if (g[nz] % ray[nz] != 0) continue;
      Int m = g[nz] / ray[nz];
      if (m > 0 && vec_scale(m, ray) == g) d.multipliers.push_back(m);
    }
    std::sort(d.multipliers.begin(), d.multipliers.end());
    Int g = 0;
    for (const Int& m : d.multipliers)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    d.multiplier_gcd = g;
    out.push_back(std::move(d));
  }
  return out;
}

Lattice span_lattice(const AffineSemigroup& s) {
  const std::size_t d = s.dim();
  const auto& eqs = s.cone().span_equations();
  if (eqs.empty()) return Lattice::full(d);
  // Kernel of the equation matrix: columns indexed by ambient coordinates.
  IntMat cols(d, IntVec(eqs.size()));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < eqs.size(); ++i) cols[j][i] = eqs[i][j];
  return Lattice::from_generators(d, kernel_basis(cols, eqs.size()));
}

Int group_index(const AffineSemigroup& s) {
  return lattice_index(span_lattice(s), s.group());
}

CSemVerdict decide_c_semigroup(const AffineSemigroup& s, const Int& n_max) {
  if (n_max < 1) throw input_error("decide_c_semigroup: n_max must be >= 1");
  CSemVerdict v;

  auto diags = ray_diagnostics(s);
  for (const RayDiagnostic& d : diags) {
    if (d.multipliers.empty()) {
      v.status = CSemStatus::No;
      v.reason = CSemNoReason::RayWithoutGenerator;
      v.reason_ray = d.ray;
      return v;
    }
    if (d.multiplier_gcd > 1) {
      v.status = CSemStatus::No;
      v.reason = CSemNoReason::RayMultiplierGcd;
      v.reason_ray = d.ray;
      v.reason_gcd = d.multiplier_gcd;
      return v;
    }
  }

  Int index = s.gens().empty() ? Int(1) : group_index(s);
  if (index > 1) {
    v.status = CSemStatus::No;
    v.reason = CSemNoReason::GroupIndex;
    v.reason_index = index;
    return v;
  }

  // Saturation: e_j is the smallest generator on ray j; every lattice point
  // of the cone splits as r + sum n_j e_j with r in the box below, so the
  // per-(r, j) step counts bound the gap set by a finite superset.
  std::vector<IntVec> ray_elems;
  IntVec total(s.dim(), 0);
  for (const RayDiagnostic& d : diags) {
    IntVec e = vec_scale(d.multipliers.front(), d.ray);
    total = vec_add(total, e);
    ray_elems.push_back(std::move(e));
  }

  std::vector<IntVec> base_points;
  {
    BoxIter it(total);
    IntVec r;
    while (it.next(r)) {
      if (s.cone().contains(r)) base_points.push_back(r);
    }
  }

  std::vector<SaturationEntry> table;
  for (const IntVec& r : base_points) {
    SaturationEntry entry;
    entry.base = r;
    for (const IntVec& e : ray_elems) {
      Int n = 0;
      IntVec x = r;
      bool found = false;
      while (n <= n_max) {
        if (s.contains(x)) {
          found = true;
          break;
        }
        x = vec_add(x, e);
        n += 1;
      }
      if (!found) {
        v.status = CSemStatus::Unknown;
        v.exhausted_bound = n_max;
        return v;
      }
      entry.steps.push_back(n);
    }
    table.push_back(std::move(entry));
  }

  std::vector<IntVec> gaps;
  for (const SaturationEntry& entry : table) {
    // Product walk over 0 <= n_j < steps[j]; empty when any step count is 0.
    bool empty = false;
    for (const Int& st : entry.steps)
      if (st == 0) empty = true;
    if (empty && !entry.steps.empty()) continue;
    std::vector<Int> n(entry.steps.size(), 0);
    while (true) {
      IntVec x = entry.base;
      for (std::size_t j = 0; j < n.size(); ++j)
        x = vec_add(x, vec_scale(n[j], ray_elems[j]));
      if (!s.contains(x)) gaps.push_back(std::move(x));
      std::size_t j = 0;
      while (j < n.size()) {
        n[j] += 1;
        if (n[j] < entry.steps[j]) break;
        n[j] = 0;
        ++j;
      }
      if (j == n.size()) break;
    }
  }
  canonicalize(gaps);

  v.status = CSemStatus::Yes;
  v.gaps = std::move(gaps);
  v.ray_elements = std::move(ray_elems);
  v.saturation = std::move(table);
  return v;
}

std::vector<IntVec> gap_set(const AffineSemigroup& s, const Int& n_max) {
  CSemVerdict v = decide_c_semigroup(s, n_max);
  if (v.status != CSemStatus::Yes) throw gap_state_error(std::move(v));
  return v.gaps;
}

} // namespace affsg
