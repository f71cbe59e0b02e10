#ifndef AFFSG_FROBENIUS_HPP
#define AFFSG_FROBENIUS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affsg/gaps.hpp"
#include "affsg/semigroup.hpp"

namespace affsg {

/// The two Apery variants relative to a base b in S minus the origin:
/// restricted keeps a in S with a - b in pos(S) and not in S; classical only
/// requires a - b not in S. Restricted sets are finite exactly when the gap
/// set is; classical sets are generally infinite and get box-truncated,
/// except in the cases where finiteness is provable.
enum class AperyVariant { Restricted, Classical };

struct AperySet {
  IntVec base;
  AperyVariant variant = AperyVariant::Restricted;
  std::vector<IntVec> elements;
  bool complete = false;
  std::optional<IntVec> search_box;
};

enum class PFMethod { GapFilter, AperyMaximals, BoundedSearch };

struct PFResult {
  std::vector<IntVec> elements;
  bool complete = false;
  PFMethod method = PFMethod::GapFilter;
  std::optional<IntVec> search_box;
};

/// A matrix term order on N^d: compare by the rows in sequence. Valid when
/// the rows span Q^d and, for every coordinate, the first row with a nonzero
/// entry there has it positive.
struct TermOrder {
  std::vector<RatVec> rows;
  std::string tag;

  static TermOrder lex(std::size_t d);
  static TermOrder grlex(std::size_t d);
  static TermOrder grevlex(std::size_t d);
  static TermOrder weight_matrix(std::vector<RatVec> rows);

  bool valid(std::size_t d) const;
  /// Negative, zero, or positive as a <, =, > b.
  int compare(const IntVec& a, const IntVec& b) const;
};

/// A gap f together with a strictly positive rational weight w such that
/// w.f >= w.g over the whole gap set; re-checkable by direct comparison.
struct FrobeniusCert {
  IntVec f;
  RatVec w;
};

/// Degrees a + sum of generators for a ranging over the pseudo-Frobenius
/// set, verified against the subset-membership criterion (for each degree b,
/// b minus the full generator sum is not a member while b minus every proper
/// partial sum is).
struct SyzygyWitness {
  std::vector<IntVec> degrees;
  bool checked = false;
  std::size_t subset_checks_per_degree = 0;
};

/// Evidence for one pseudo-Frobenius test: the element must be a gap and
/// every generator translate must land in S (witnesses recorded per
/// generator).
struct PFEvidence {
  bool is_pf = false;
  bool in_cone = false;
  bool is_member = false;
  std::vector<MembershipResult> generator_witnesses;
};

enum class MpdStatus { Yes, No, Unknown };

struct MpdVerdict {
  MpdStatus status = MpdStatus::Unknown;
  std::optional<PFResult> pf;
  std::string reason;
};

/// Default search box for bounded scans: four times the largest generator
/// entry, per coordinate.
IntVec default_box(const AffineSemigroup& s);

AperySet apery(const AffineSemigroup& s, const IntVec& b, AperyVariant variant,
               std::optional<IntVec> box = std::nullopt,
               const Int& n_max = 1024);

/// Unique (k, c) with x = k*b + c, k maximal with x - k*b in S; c lies in
/// the classical Apery set of b.
std::pair<Int, IntVec> apery_decompose(const AffineSemigroup& s,
                                       const IntVec& b, const IntVec& x);

/// Complete pseudo-Frobenius set of a semigroup with finite gap set, via
/// the gap filter.
PFResult pseudo_frobenius_csem(const AffineSemigroup& s,
                               const Int& n_max = 1024);

/// Complete pseudo-Frobenius set via maximals of the restricted Apery set
/// relative to b; base-independent and equal to the gap filter route.
PFResult pseudo_frobenius_apery(const AffineSemigroup& s, const IntVec& b,
                                const Int& n_max = 1024);

PFEvidence is_pseudo_frobenius(const AffineSemigroup& s, const IntVec& a);

/// All pseudo-Frobenius elements inside the box; each element is exact even
/// though the list may be partial.
PFResult pseudo_frobenius_bounded(const AffineSemigroup& s, const IntVec& box);

/// Complete pseudo-Frobenius set through saturation over the group of S:
/// every pseudo-Frobenius element lies in the group, so when every group
/// point of the cone saturates into S within n_max steps the finitely many
/// group gaps enumerate the candidates exactly. Empty result when the
/// certification cannot be established.
std::optional<PFResult> pseudo_frobenius_saturated(const AffineSemigroup& s,
                                                   const Int& n_max = 1024);

MpdVerdict is_mpd(const AffineSemigroup& s, const Int& n_max = 1024,
                  std::optional<IntVec> box = std::nullopt);

SyzygyWitness syzygy_witness_degrees(const AffineSemigroup& s,
                                     const PFResult& pf);

/// Exact value of (1 + 4 * ||A||_inf)^(d (n - 1)) + n^2 - 1 where ||A||_inf
/// is the maximum row sum of absolute entries of the generator matrix.
Int pf_length_bound(const AffineSemigroup& s);

Int matrix_inf_norm(const AffineSemigroup& s);

/// Every gap admitting a strictly positive weight vector w (normalized
/// w_i >= 1) with w.f >= w.g over the gap set, with a feasible w attached.
/// Candidates are pre-filtered to gaps maximal under the componentwise
/// order.
std::vector<FrobeniusCert> frobenius_elements(const AffineSemigroup& s,
                                              const Int& n_max = 1024);

IntVec max_under_order(const std::vector<IntVec>& points, const TermOrder& ord);

/// Checks that f + b is weight-maximal inside the restricted Apery set of
/// every generator b, using the certificate weight as leading row.
bool selmer_check(const AffineSemigroup& s, const FrobeniusCert& cert,
                  const Int& n_max = 1024);

/// Bounded verification that f is a Frobenius vector: f in G(S) minus S and
/// f + p in S for every group point p of the relative interior within box.
bool is_frobenius_vector_boxed(const AffineSemigroup& s, const IntVec& f,
                               const IntVec& box);

bool revalidate(const AffineSemigroup& s, const FrobeniusCert& cert,
                const std::vector<IntVec>& gap_list);

} // namespace affsg

#endif
