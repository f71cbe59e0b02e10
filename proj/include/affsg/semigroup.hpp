#ifndef AFFSG_SEMIGROUP_HPP
#define AFFSG_SEMIGROUP_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "affsg/cone.hpp"
#include "affsg/linalg.hpp"

namespace affsg {

/// Outcome of a membership query. When `member` is true the witness u
/// satisfies sum_i u[i] * gens[i] = x exactly, indexed in generator order.
/// When false, `explored_levels` is the grading bound below which every
/// candidate representation has been (implicitly) exhausted.
struct MembershipResult {
  bool member = false;
  std::optional<IntVec> witness;
  Int explored_levels = 0;
};

/// A finitely generated submonoid of N^d, given by an ordered list of
/// nonzero generators. Values are immutable; the internal membership cache
/// is observationally pure and safe under concurrent queries.
class AffineSemigroup {
public:
  AffineSemigroup(std::size_t dim, std::vector<IntVec> gens);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& gens() const { return gens_; }
  const Cone& cone() const { return cone_; }
  const IntVec& grading() const { return grading_; }

  Int grading_value(const IntVec& x) const { return vec_dot(grading_, x); }

  /// Exact membership with witness: depth-first search subtracting
  /// generators, memoized on residual vectors; residuals are pruned when a
  /// coordinate goes negative or the residual leaves the cone. Termination:
  /// each subtraction strictly decreases the grading value.
  MembershipResult member(const IntVec& x) const;

  bool contains(const IntVec& x) const { return member(x).member; }

  /// The generators that are not members of the semigroup generated by the
  /// others; independent of deletion order.
  std::vector<IntVec> minimal_generators() const;

  /// The group G(S) spanned by the generators in Z^d.
  Lattice group() const;

  /// x divides y in S: y - x is a member.
  bool leq(const IntVec& x, const IntVec& y) const;

  /// Elements of f with no other element of f above them in the S-order.
  std::vector<IntVec> maximals(const std::vector<IntVec>& f) const;

  /// All members componentwise below box, canonically sorted.
  std::vector<IntVec> enumerate_upto(const IntVec& box) const;

private:
  struct Cache;

  std::size_t dim_;
  std::vector<IntVec> gens_;
  Cone cone_;
  IntVec grading_;
  std::shared_ptr<Cache> cache_;
};

/// Componentwise infimum of S minus the origin; equals the componentwise
/// minimum over the generators and need not belong to S.
IntVec multiplicity_vector(const AffineSemigroup& s);

/// Core predicate behind the principal-ideal structure: the multiplicity is
/// a nonzero member and g_i + g_j - m stays in S for every pair of minimal
/// generators. The pairwise reduction suffices by induction on
/// representation length.
bool is_pi_monoid_core(const AffineSemigroup& s);

/// Iterates x over the integer box [0, box] componentwise.
class BoxIter {
public:
  explicit BoxIter(const IntVec& box);
  bool next(IntVec& out);

private:
  IntVec box_;
  IntVec cur_;
  bool first_ = true;
  bool done_ = false;
};

} // namespace affsg

#endif
