#include "affsg/rational_lp.hpp"

#include <algorithm>
#include <set>

#include "affsg/errors.hpp"

namespace affsg {

namespace {

// Canonical integer form of a constraint for deduplication: scale so the
// entries plus rhs form a primitive integer vector.
IntVec canonical_key(const LinIneq& c) {
  RatVec all = c.coeffs;
  all.push_back(c.rhs);
  return rat_to_primitive_int(all);
}

// Drops trivial constraints and duplicates; returns false on a constraint
// 0 >= rhs with rhs > 0 (infeasible).
bool simplify(std::vector<LinIneq>& sys) {
  std::vector<LinIneq> out;
  std::set<IntVec> seen;
  for (LinIneq& c : sys) {
    bool zero = true;
    for (const Rat& a : c.coeffs)
      if (a != 0) {
        zero = false;
        break;
      }
    if (zero) {
      if (c.rhs > 0) return false;
      continue;
    }
    IntVec key = canonical_key(c);
    if (seen.insert(std::move(key)).second) out.push_back(std::move(c));
  }
  sys = std::move(out);
  return true;
}

constexpr std::size_t kConstraintCap = 200000;

} // namespace

std::optional<RatVec> feasible_point(const std::vector<LinIneq>& system,
                                     std::size_t nvars) {
  for (const LinIneq& c : system)
    if (c.coeffs.size() != nvars)
      throw input_error("feasible_point: constraint arity mismatch");

  // levels[v] holds the system over variables 0..v before eliminating var v.
  std::vector<std::vector<LinIneq>> levels(nvars);
  std::vector<LinIneq> cur = system;
  if (!simplify(cur)) return std::nullopt;

  for (std::size_t v = nvars; v-- > 0;) {
    levels[v] = cur;
    std::vector<LinIneq> next;
    std::vector<const LinIneq*> pos, neg;
    for (const LinIneq& c : cur) {
      if (c.coeffs[v] > 0)
        pos.push_back(&c);
      else if (c.coeffs[v] < 0)
        neg.push_back(&c);
      else {
        LinIneq z = c;
        z.coeffs.resize(v);
        next.push_back(std::move(z));
      }
    }
    for (const LinIneq* p : pos) {
      for (const LinIneq* n : neg) {
        // p scaled by -n_v plus n scaled by p_v eliminates variable v.
        const Rat a = p->coeffs[v], b = n->coeffs[v];
        LinIneq c;
        c.coeffs.resize(v);
        for (std::size_t j = 0; j < v; ++j)
          c.coeffs[j] = -b * p->coeffs[j] + a * n->coeffs[j];
        c.rhs = -b * p->rhs + a * n->rhs;
        next.push_back(std::move(c));
        if (next.size() > kConstraintCap)
          throw internal_error("feasible_point: elimination blow-up");
      }
    }
    if (!simplify(next)) return std::nullopt;
    cur = std::move(next);
  }

  // Back substitution: assign variables 0, 1, ..., nvars-1 in order.
  RatVec x;
  x.reserve(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    bool has_lo = false, has_hi = false;
    Rat lo = 0, hi = 0;
    for (const LinIneq& c : levels[v]) {
      if (c.coeffs[v] == 0) continue;
      Rat rest = c.rhs;
      for (std::size_t j = 0; j < v; ++j) rest -= c.coeffs[j] * x[j];
      Rat bound = rest / c.coeffs[v];
      if (c.coeffs[v] > 0) {
        if (!has_lo || bound > lo) {
          lo = bound;
          has_lo = true;
        }
      } else {
        if (!has_hi || bound < hi) {
          hi = bound;
          has_hi = true;
        }
      }
    }
    if (has_lo && has_hi && lo > hi)
      throw internal_error("feasible_point: back substitution out of range");
    if (has_lo)
      x.push_back(lo);
    else if (has_hi)
      x.push_back(std::min(hi, Rat(0)));
    else
      x.push_back(Rat(0));
  }
  return x;
}

bool in_rational_cone(const std::vector<IntVec>& rays, const IntVec& target) {
  const std::size_t k = rays.size();
  const std::size_t d = target.size();
  for (const IntVec& r : rays)
    if (r.size() != d) throw input_error("in_rational_cone: dimension mismatch");
  if (vec_is_zero(target)) return true;
  if (k == 0) return false;

  // Parametrize the solutions of rays * lambda = target as lambda0 + N t and
  // eliminate only the free variables; keeping the equalities out of the
  // Fourier-Motzkin stage avoids needless constraint blow-up.
  std::vector<RatVec> cols;
  cols.reserve(k);
  for (const IntVec& r : rays) cols.push_back(to_rat(r));
  auto base = rat_solve(cols, d, to_rat(target));
  if (!base) return false;
  std::vector<RatVec> null = rat_nullspace(cols, d);
  if (null.empty()) {
    for (const Rat& l : *base)
      if (l < 0) return false;
    return true;
  }

  std::vector<LinIneq> sys;
  for (std::size_t i = 0; i < k; ++i) {
    LinIneq c;
    c.coeffs.resize(null.size());
    for (std::size_t j = 0; j < null.size(); ++j) c.coeffs[j] = null[j][i];
    c.rhs = -(*base)[i];
    sys.push_back(std::move(c));
  }
  return feasible_point(sys, null.size()).has_value();
}

} // namespace affsg
