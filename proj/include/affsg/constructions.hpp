#ifndef AFFSG_CONSTRUCTIONS_HPP
#define AFFSG_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "affsg/frobenius.hpp"
#include "affsg/semigroup.hpp"

namespace affsg {

/// Certificate that S1 + S2 is glued along d_vec: the two groups meet in
/// exactly the rank-one lattice generated by d_vec, which is a member of
/// both sides.
struct GluingCert {
  IntVec d_vec;
  Lattice intersection;
  MembershipResult d_in_s1;
  MembershipResult d_in_s2;
  AffineSemigroup glued;
};

enum class GluingFailure {
  DNotInIntersection,
  IntersectionRankNotOne,
  IntersectionGeneratorMismatch,
  TrivialDecomposition,
};

struct GluingCheck {
  std::optional<GluingCert> cert;
  std::optional<GluingFailure> failure;
  std::string detail;
};

GluingCheck check_gluing(const AffineSemigroup& s1, const AffineSemigroup& s2,
                         const IntVec& d_vec);

/// b1 + b2 + d, verified to be pseudo-Frobenius in the glued semigroup.
IntVec pf_of_gluing(const GluingCert& cert, const AffineSemigroup& s1,
                    const AffineSemigroup& s2, const IntVec& b1,
                    const IntVec& b2);

/// The semigroup generated by the generators of s plus the pseudo-Frobenius
/// element a with 2a in S; as a set it is S with exactly a added.
AffineSemigroup adjoin_special_gap(const AffineSemigroup& s, const IntVec& a);

enum class IrrStatus { CIrreducible, NotIrreducible, Unknown };

struct IrreducibilityVerdict {
  IrrStatus status = IrrStatus::Unknown;
  std::string reason;
  std::optional<PFResult> pf;
  /// CIrreducible: the pseudo-Frobenius shape plus Frobenius certificates.
  std::string shape;
  std::vector<FrobeniusCert> frobenius;
  /// NotIrreducible: two gaps whose adjunctions intersect back to S.
  std::optional<IntVec> witness_a1;
  std::optional<IntVec> witness_a2;
  std::optional<IntVec> verify_box;
};

IrreducibilityVerdict irreducibility_verdict(const AffineSemigroup& s,
                                             const Int& n_max = 1024);

/// The monoid (a + T) union {0} for a finitely generated T and a nonzero
/// member a of T; the monoid itself need not be finitely generated.
class PIMonoid {
public:
  PIMonoid(IntVec a, AffineSemigroup t);

  const IntVec& offset() const { return a_; }
  const AffineSemigroup& t() const { return t_; }
  const MembershipResult& offset_witness() const { return a_witness_; }
  std::size_t dim() const { return t_.dim(); }

  bool contains(const IntVec& x) const;

private:
  IntVec a_;
  AffineSemigroup t_;
  MembershipResult a_witness_;
};

struct PiCheck {
  bool is_pi = false;
  IntVec m;
  bool m_is_member = false;
  std::optional<std::pair<IntVec, IntVec>> failing_pair;
  std::size_t pairs_checked = 0;
};

/// Componentwise infimum of the nonzero elements.
IntVec multiplicity(const AffineSemigroup& s);
IntVec multiplicity(const PIMonoid& p);

/// Pairwise closure test over minimal generators.
PiCheck is_pi_monoid(const AffineSemigroup& s);

PIMonoid pi_construct(std::size_t dim, const std::vector<IntVec>& t_gens,
                      const IntVec& a);

/// The unique (a, T) with S = (a + T) union {0}: a is the multiplicity and
/// T is generated by the shifted minimal generators together with a.
PIMonoid pi_decompose(const AffineSemigroup& s);

/// The principal-ideal monoid (min_lex(S \ {0}) + S) union {0}.
PIMonoid canonical_pi_of(const AffineSemigroup& s);

struct PiGenerators {
  std::vector<IntVec> elements;
  bool complete = false;
  std::optional<IntVec> search_box;
};

/// Minimal generating system {m} union (Apery of m minus the origin);
/// truncated to the box when the Apery set is not provably finite.
PiGenerators pi_minimal_generators(const PIMonoid& p,
                                   std::optional<IntVec> box = std::nullopt);

/// Apery set of the monoid relative to its multiplicity.
AperySet pi_apery(const PIMonoid& p, std::optional<IntVec> box = std::nullopt);

/// Pseudo-Frobenius set, with each element re-verified against the
/// principal-ideal membership predicate.
PFResult pi_pseudo_frobenius(const PIMonoid& p,
                             std::optional<IntVec> box = std::nullopt);

bool pi_is_pseudo_frobenius(const PIMonoid& p, const IntVec& x);

struct DirectLimitPiece {
  AffineSemigroup semigroup;
  MpdVerdict mpd;
  std::vector<MembershipResult> generators_in_monoid;
};

/// The affine semigroup generated by lambda plus the multiplicity, for
/// lambda a finite subset of m + PF; its generators are verified to lie in
/// the monoid and its MPD verdict is attached.
DirectLimitPiece direct_limit_family(const PIMonoid& p,
                                     const std::vector<IntVec>& lambda,
                                     const Int& n_max = 1024);

} // namespace affsg

#endif
