#include "affsg/frobenius.hpp"

#include <algorithm>
#include <set>

#include "affsg/errors.hpp"
#include "affsg/rational_lp.hpp"

namespace affsg {

IntVec default_box(const AffineSemigroup& s) {
  IntVec box(s.dim(), 0);
  for (const IntVec& g : s.gens())
    for (std::size_t i = 0; i < box.size(); ++i)
      if (g[i] > box[i]) box[i] = g[i];
  for (Int& b : box) b *= 4;
  return box;
}

// ---------------------------------------------------------------------------
// Apery sets
// ---------------------------------------------------------------------------

namespace {

// Classical Apery set of a semigroup living on a single ray, computed
// through the numerical semigroup of ray multipliers. Always finite.
std::vector<IntVec> ray_classical_apery(const AffineSemigroup& s,
                                        const IntVec& b) {
  auto diags = ray_diagnostics(s);
  if (diags.size() != 1 || diags[0].multipliers.empty())
    throw internal_error("ray apery: unexpected ray structure");
  const IntVec& ray = diags[0].ray;
  std::size_t nz = 0;
  while (ray[nz] == 0) ++nz;

  const Int g = diags[0].multiplier_gcd;
  std::vector<unsigned long> reduced;
  for (const Int& m : diags[0].multipliers) {
    Int q = m / g;
    if (!q.fits_ulong_p())
      throw input_error("apery: ray multiplier too large for the exact sieve");
    reduced.push_back(q.get_ui());
  }
  Int bt = b[nz] / ray[nz];
  if (bt % g != 0) throw internal_error("ray apery: base off the ray lattice");
  Int t_big = bt / g;

  unsigned long mn = reduced[0], mx = reduced[0];
  for (unsigned long m : reduced) {
    mn = std::min(mn, m);
    mx = std::max(mx, m);
  }
  Int limit_big = t_big + Int(mn) * Int(mx) + 1;
  if (!limit_big.fits_ulong_p() || limit_big > 1000000)
    throw input_error("apery: sieve bound too large for the exact sieve");
  const unsigned long t = t_big.get_ui();
  const unsigned long limit = limit_big.get_ui();
  std::vector<bool> in(limit + 1, false);
  in[0] = true;
  for (unsigned long v = 1; v <= limit; ++v)
    for (unsigned long m : reduced)
      if (m <= v && in[v - m]) {
        in[v] = true;
        break;
      }

  std::vector<IntVec> out;
  for (unsigned long v = 0; v <= limit; ++v) {
    if (!in[v]) continue;
    if (v >= t && in[v - t]) continue;
    out.push_back(vec_scale(Int(v) * g, ray));
  }
  return out;
}

} // namespace

AperySet apery(const AffineSemigroup& s, const IntVec& b, AperyVariant variant,
               std::optional<IntVec> box, const Int& n_max) {
  if (vec_is_zero(b) || !s.contains(b))
    throw precondition_error("apery: base must be a nonzero member");

  AperySet ap;
  ap.base = b;
  ap.variant = variant;

  if (variant == AperyVariant::Restricted) {
    CSemVerdict v = decide_c_semigroup(s, n_max);
    if (v.status == CSemStatus::Yes) {
      for (const IntVec& h : v.gaps) {
        IntVec x = vec_add(h, b);
        if (s.contains(x)) ap.elements.push_back(std::move(x));
      }
      canonicalize(ap.elements);
      ap.complete = true;
      return ap;
    }
    IntVec bx = box ? *box : vec_add(default_box(s), b);
    ap.search_box = bx;
    BoxIter it(bx);
    IntVec x;
    while (it.next(x)) {
      if (!s.contains(x)) continue;
      IntVec diff = vec_sub(x, b);
      if (s.cone().contains(diff) && !s.contains(diff))
        ap.elements.push_back(x);
    }
    canonicalize(ap.elements);
    ap.complete = false;
    return ap;
  }

  // Classical variant: exact when provably finite, box-truncated otherwise.
  if (s.cone().span_dim() <= 1 && !s.gens().empty()) {
    ap.elements = ray_classical_apery(s, b);
    canonicalize(ap.elements);
    ap.complete = true;
    return ap;
  }
  if (is_pi_monoid_core(s) && b == multiplicity_vector(s)) {
    // The Apery set of the multiplicity lists exactly the other minimal
    // generators, plus the origin.
    ap.elements.push_back(IntVec(s.dim(), 0));
    for (const IntVec& g : s.minimal_generators())
      if (g != b) ap.elements.push_back(g);
    canonicalize(ap.elements);
    ap.complete = true;
    return ap;
  }

  IntVec bx = box ? *box : vec_add(default_box(s), b);
  ap.search_box = bx;
  std::set<IntVec> elems;
  BoxIter it(bx);
  IntVec x;
  while (it.next(x)) {
    if (s.contains(x) && !s.contains(vec_sub(x, b))) elems.insert(x);
  }
  // The restricted set is contained in the classical one; keep it exact
  // even when it reaches beyond the box.
  CSemVerdict v = decide_c_semigroup(s, n_max);
  if (v.status == CSemStatus::Yes) {
    for (const IntVec& h : v.gaps) {
      IntVec y = vec_add(h, b);
      if (s.contains(y)) elems.insert(std::move(y));
    }
  }
  ap.elements.assign(elems.begin(), elems.end());
  canonicalize(ap.elements);
  ap.complete = false;
  return ap;
}

std::pair<Int, IntVec> apery_decompose(const AffineSemigroup& s,
                                       const IntVec& b, const IntVec& x) {
  if (vec_is_zero(b) || !s.contains(b))
    throw precondition_error("apery_decompose: base must be a nonzero member");
  if (!s.contains(x))
    throw precondition_error("apery_decompose: x must be a member");
  Int k = s.grading_value(x) / s.grading_value(b);
  while (k > 0) {
    IntVec c = vec_sub(x, vec_scale(k, b));
    if (vec_is_nonneg(c) && s.contains(c)) return {k, c};
    k -= 1;
  }
  return {Int(0), x};
}

// ---------------------------------------------------------------------------
// Pseudo-Frobenius elements
// ---------------------------------------------------------------------------

PFResult pseudo_frobenius_csem(const AffineSemigroup& s, const Int& n_max) {
  std::vector<IntVec> gaps = gap_set(s, n_max);
  PFResult pf;
  pf.method = PFMethod::GapFilter;
  pf.complete = true;
  for (const IntVec& h : gaps) {
    bool ok = true;
    for (const IntVec& g : s.gens()) {
      if (!s.contains(vec_add(h, g))) {
        ok = false;
        break;
      }
    }
    if (ok) pf.elements.push_back(h);
  }
  canonicalize(pf.elements);
  return pf;
}

PFResult pseudo_frobenius_apery(const AffineSemigroup& s, const IntVec& b,
                                const Int& n_max) {
  AperySet ap = apery(s, b, AperyVariant::Restricted, std::nullopt, n_max);
  if (!ap.complete)
    throw state_error("pseudo_frobenius_apery: restricted Apery set incomplete");
  PFResult pf;
  pf.method = PFMethod::AperyMaximals;
  pf.complete = true;
  for (const IntVec& m : s.maximals(ap.elements))
    pf.elements.push_back(vec_sub(m, b));
  canonicalize(pf.elements);
  return pf;
}

PFEvidence is_pseudo_frobenius(const AffineSemigroup& s, const IntVec& a) {
  PFEvidence ev;
  ev.in_cone = vec_is_nonneg(a) && s.cone().contains(a);
  ev.is_member = s.contains(a);
  if (!ev.in_cone || ev.is_member) return ev;
  ev.is_pf = true;
  for (const IntVec& g : s.gens()) {
    MembershipResult m = s.member(vec_add(a, g));
    if (!m.member) ev.is_pf = false;
    ev.generator_witnesses.push_back(std::move(m));
    if (!ev.is_pf) break;
  }
  return ev;
}

PFResult pseudo_frobenius_bounded(const AffineSemigroup& s,
                                  const IntVec& box) {
  if (!vec_is_nonneg(box))
    throw input_error("pseudo_frobenius_bounded: negative box");
  PFResult pf;
  pf.method = PFMethod::BoundedSearch;
  pf.complete = false;
  pf.search_box = box;
  BoxIter it(box);
  IntVec x;
  while (it.next(x)) {
    if (is_pseudo_frobenius(s, x).is_pf) pf.elements.push_back(x);
  }
  canonicalize(pf.elements);
  return pf;
}

std::optional<PFResult> pseudo_frobenius_saturated(const AffineSemigroup& s,
                                                   const Int& n_max) {
  auto diags = ray_diagnostics(s);
  const Lattice group = s.group();
  std::vector<IntVec> ray_elems;
  IntVec total(s.dim(), 0);
  for (const RayDiagnostic& d : diags) {
    if (d.multipliers.empty()) return std::nullopt;
    // The group must meet the ray exactly in the multiples generated by the
    // on-ray semigroup, otherwise the group gaps on the ray are infinite.
    Lattice ray_lat = Lattice::from_generators(s.dim(), {d.ray});
    Lattice meet = lattice_intersect(group, ray_lat);
    if (meet.rank() != 1) return std::nullopt;
    std::size_t nz = 0;
    while (d.ray[nz] == 0) ++nz;
    Int c = meet.basis()[0][nz] / d.ray[nz];
    if (c != d.multiplier_gcd) return std::nullopt;

    IntVec e = vec_scale(d.multipliers.front(), d.ray);
    total = vec_add(total, e);
    ray_elems.push_back(std::move(e));
  }

  std::vector<IntVec> base_points;
  {
    BoxIter it(total);
    IntVec r;
    while (it.next(r)) {
      if (s.cone().contains(r) && group.member(r)) base_points.push_back(r);
    }
  }

  std::vector<IntVec> group_gaps;
  for (const IntVec& r : base_points) {
    std::vector<Int> steps;
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
      if (!found) return std::nullopt;
      steps.push_back(n);
    }
    bool empty = false;
    for (const Int& st : steps)
      if (st == 0) empty = true;
    if (empty && !steps.empty()) continue;
    std::vector<Int> n(steps.size(), 0);
    while (true) {
      IntVec x = r;
      for (std::size_t j = 0; j < n.size(); ++j)
        x = vec_add(x, vec_scale(n[j], ray_elems[j]));
      if (!s.contains(x)) group_gaps.push_back(std::move(x));
      std::size_t j = 0;
      while (j < n.size()) {
        n[j] += 1;
        if (n[j] < steps[j]) break;
        n[j] = 0;
        ++j;
      }
      if (j == n.size()) break;
    }
  }
  canonicalize(group_gaps);

  PFResult pf;
  pf.method = PFMethod::GapFilter;
  pf.complete = true;
  for (const IntVec& h : group_gaps) {
    bool ok = true;
    for (const IntVec& g : s.gens()) {
      if (!s.contains(vec_add(h, g))) {
        ok = false;
        break;
      }
    }
    if (ok) pf.elements.push_back(h);
  }
  canonicalize(pf.elements);
  return pf;
}

MpdVerdict is_mpd(const AffineSemigroup& s, const Int& n_max,
                  std::optional<IntVec> box) {
  MpdVerdict verdict;
  CSemVerdict v = decide_c_semigroup(s, n_max);
  if (v.status == CSemStatus::Yes) {
    PFResult pf = pseudo_frobenius_csem(s, n_max);
    if (!pf.elements.empty()) {
      verdict.status = MpdStatus::Yes;
      verdict.reason = "finite gap set with nonempty pseudo-Frobenius set";
    } else {
      if (!v.gaps.empty())
        throw internal_error("is_mpd: finite nonempty gap set with empty "
                             "pseudo-Frobenius set");
      verdict.status = MpdStatus::No;
      verdict.reason = "the semigroup equals the lattice points of its cone";
    }
    verdict.pf = std::move(pf);
    return verdict;
  }

  if (auto sat = pseudo_frobenius_saturated(s, n_max)) {
    verdict.status =
        sat->elements.empty() ? MpdStatus::No : MpdStatus::Yes;
    verdict.reason =
        "group saturation certified; group gaps enumerated exactly";
    verdict.pf = std::move(*sat);
    return verdict;
  }

  PFResult bounded = pseudo_frobenius_bounded(s, box ? *box : default_box(s));
  if (!bounded.elements.empty()) {
    verdict.status = MpdStatus::Yes;
    verdict.reason = "bounded search exhibited a pseudo-Frobenius element";
    verdict.pf = std::move(bounded);
    return verdict;
  }
  verdict.status = MpdStatus::Unknown;
  verdict.reason = "no certificate within the bound and box";
  verdict.pf = std::move(bounded);
  return verdict;
}

// ---------------------------------------------------------------------------
// Syzygy witness degrees and the length bound
// ---------------------------------------------------------------------------

SyzygyWitness syzygy_witness_degrees(const AffineSemigroup& s,
                                     const PFResult& pf) {
  if (pf.elements.empty())
    throw precondition_error("syzygy_witness_degrees: empty pseudo-Frobenius set");
  const std::size_t n = s.gens().size();
  if (n > 24)
    throw precondition_error("syzygy_witness_degrees: too many generators for "
                             "exhaustive subset verification");
  IntVec total(s.dim(), 0);
  for (const IntVec& g : s.gens()) total = vec_add(total, g);

  SyzygyWitness w;
  for (const IntVec& a : pf.elements) w.degrees.push_back(vec_add(a, total));
  canonicalize(w.degrees);
  w.subset_checks_per_degree = (std::size_t{1} << n) - 2;

  for (const IntVec& b : w.degrees) {
    if (!s.contains(b))
      throw internal_error("syzygy witness: degree not a member");
    if (s.contains(vec_sub(b, total)))
      throw internal_error("syzygy witness: full generator sum stays inside");
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      IntVec sub(s.dim(), 0);
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) sub = vec_add(sub, s.gens()[i]);
      if (!s.contains(vec_sub(b, sub)))
        throw internal_error("syzygy witness: proper subset check failed at " +
                             vec_str(b));
    }
  }
  w.checked = true;
  return w;
}

Int matrix_inf_norm(const AffineSemigroup& s) {
  Int norm = 0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Int row = 0;
    for (const IntVec& g : s.gens()) row += abs(g[i]);
    if (row > norm) norm = row;
  }
  return norm;
}

Int pf_length_bound(const AffineSemigroup& s) {
  const std::size_t n = s.gens().size();
  if (n == 0) throw precondition_error("pf_length_bound: no generators");
  Int base = 1 + 4 * matrix_inf_norm(s);
  unsigned long exp =
      static_cast<unsigned long>(s.dim()) * static_cast<unsigned long>(n - 1);
  Int pow;
  mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), exp);
  return pow + Int(n) * Int(n) - 1;
}

// ---------------------------------------------------------------------------
// Frobenius elements, term orders, Selmer
// ---------------------------------------------------------------------------

std::vector<FrobeniusCert> frobenius_elements(const AffineSemigroup& s,
                                              const Int& n_max) {
  std::vector<IntVec> gaps = gap_set(s, n_max);
  std::vector<FrobeniusCert> out;
  if (gaps.empty()) return out;

  // Only componentwise-maximal gaps can be order maxima.
  std::vector<IntVec> candidates;
  for (const IntVec& f : gaps) {
    bool dominated = false;
    for (const IntVec& g : gaps) {
      if (g == f) continue;
      if (vec_is_nonneg(vec_sub(g, f))) {
        dominated = true;
        break;
      }
    }
    if (!dominated) candidates.push_back(f);
  }

  const std::size_t d = s.dim();
  for (const IntVec& f : candidates) {
    std::vector<LinIneq> sys;
    for (std::size_t i = 0; i < d; ++i) {
      LinIneq c;
      c.coeffs.assign(d, Rat(0));
      c.coeffs[i] = 1;
      c.rhs = 1;
      sys.push_back(std::move(c));
    }
    for (const IntVec& g : gaps) {
      if (g == f) continue;
      LinIneq c;
      c.coeffs.resize(d);
      for (std::size_t i = 0; i < d; ++i) c.coeffs[i] = Rat(f[i] - g[i]);
      c.rhs = 0;
      sys.push_back(std::move(c));
    }
    if (auto w = feasible_point(sys, d)) out.push_back({f, std::move(*w)});
  }
  std::sort(out.begin(), out.end(),
            [](const FrobeniusCert& a, const FrobeniusCert& b) {
              return vec_graded_lex_less(a.f, b.f);
            });
  return out;
}

TermOrder TermOrder::lex(std::size_t d) {
  TermOrder t;
  t.tag = "lex";
  for (std::size_t i = 0; i < d; ++i) {
    RatVec r(d, Rat(0));
    r[i] = 1;
    t.rows.push_back(std::move(r));
  }
  return t;
}

TermOrder TermOrder::grlex(std::size_t d) {
  TermOrder t;
  t.tag = "grlex";
  t.rows.push_back(RatVec(d, Rat(1)));
  for (std::size_t i = 0; i + 1 < d; ++i) {
    RatVec r(d, Rat(0));
    r[i] = 1;
    t.rows.push_back(std::move(r));
  }
  return t;
}

TermOrder TermOrder::grevlex(std::size_t d) {
  TermOrder t;
  t.tag = "grevlex";
  t.rows.push_back(RatVec(d, Rat(1)));
  for (std::size_t i = d; i-- > 1;) {
    RatVec r(d, Rat(0));
    r[i] = -1;
    t.rows.push_back(std::move(r));
  }
  return t;
}

TermOrder TermOrder::weight_matrix(std::vector<RatVec> rows) {
  TermOrder t;
  t.tag = "weight-matrix";
  t.rows = std::move(rows);
  return t;
}

bool TermOrder::valid(std::size_t d) const {
  if (rows.empty()) return false;
  for (const RatVec& r : rows)
    if (r.size() != d) return false;
  for (std::size_t k = 0; k < d; ++k) {
    bool found = false;
    for (const RatVec& r : rows) {
      if (r[k] != 0) {
        if (r[k] < 0) return false;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  std::vector<RatVec> cols(d, RatVec(rows.size(), Rat(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) cols[j][i] = rows[i][j];
  return rat_rank(cols, rows.size()) == d;
}

int TermOrder::compare(const IntVec& a, const IntVec& b) const {
  for (const RatVec& r : rows) {
    Rat va = vec_dot(r, a), vb = vec_dot(r, b);
    if (va != vb) return va < vb ? -1 : 1;
  }
  return 0;
}

IntVec max_under_order(const std::vector<IntVec>& points,
                       const TermOrder& ord) {
  if (points.empty()) throw input_error("max_under_order: empty point set");
  if (!ord.valid(points[0].size()))
    throw input_error("max_under_order: invalid term order");
  IntVec best = points[0];
  for (const IntVec& p : points) {
    if (ord.compare(best, p) < 0) best = p;
  }
  return best;
}

bool selmer_check(const AffineSemigroup& s, const FrobeniusCert& cert,
                  const Int& n_max) {
  if (cert.w.size() != s.dim()) return false;
  for (const Rat& wi : cert.w)
    if (wi <= 0) return false;
  for (const IntVec& b : s.gens()) {
    AperySet ap = apery(s, b, AperyVariant::Restricted, std::nullopt, n_max);
    if (!ap.complete)
      throw state_error("selmer_check: restricted Apery sets not complete");
    IntVec fb = vec_add(cert.f, b);
    if (std::find(ap.elements.begin(), ap.elements.end(), fb) ==
        ap.elements.end())
      return false;
    Rat vf = vec_dot(cert.w, fb);
    for (const IntVec& a : ap.elements) {
      if (vec_dot(cert.w, a) > vf) return false;
    }
  }
  return true;
}

bool is_frobenius_vector_boxed(const AffineSemigroup& s, const IntVec& f,
                               const IntVec& box) {
  Lattice g = s.group();
  if (!g.member(f)) return false;
  if (s.contains(f)) return false;
  BoxIter it(box);
  IntVec p;
  while (it.next(p)) {
    if (!s.cone().relint_contains(p)) continue;
    if (!g.member(p)) continue;
    if (!s.contains(vec_add(f, p))) return false;
  }
  return true;
}

bool revalidate(const AffineSemigroup& s, const FrobeniusCert& cert,
                const std::vector<IntVec>& gap_list) {
  if (cert.w.size() != s.dim()) return false;
  for (const Rat& wi : cert.w)
    if (wi <= 0) return false;
  if (std::find(gap_list.begin(), gap_list.end(), cert.f) == gap_list.end())
    return false;
  Rat vf = vec_dot(cert.w, cert.f);
  for (const IntVec& g : gap_list)
    if (vec_dot(cert.w, g) > vf) return false;
  return true;
}

} // namespace affsg
