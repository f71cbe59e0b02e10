#include "affsg/constructions.hpp"

#include <algorithm>
#include <set>

#include "affsg/errors.hpp"

namespace affsg {

// ---------------------------------------------------------------------------
// Gluings
// ---------------------------------------------------------------------------

namespace {

std::vector<IntVec> dedupe_concat(const std::vector<IntVec>& a,
                                  const std::vector<IntVec>& b) {
  std::vector<IntVec> out;
  std::set<IntVec> seen;
  for (const IntVec& g : a)
    if (seen.insert(g).second) out.push_back(g);
  for (const IntVec& g : b)
    if (seen.insert(g).second) out.push_back(g);
  return out;
}

} // namespace

GluingCheck check_gluing(const AffineSemigroup& s1, const AffineSemigroup& s2,
                         const IntVec& d_vec) {
  if (s1.dim() != s2.dim() || d_vec.size() != s1.dim())
    throw input_error("check_gluing: dimension mismatch");
  GluingCheck res;

  MembershipResult w1 = s1.member(d_vec);
  MembershipResult w2 = s2.member(d_vec);
  if (!w1.member || !w2.member) {
    res.failure = GluingFailure::DNotInIntersection;
    res.detail = std::string("d is not a member of ") +
                 (!w1.member ? "S1" : "S2");
    return res;
  }

  Lattice meet = lattice_intersect(s1.group(), s2.group());
  if (meet.rank() != 1) {
    res.failure = GluingFailure::IntersectionRankNotOne;
    res.detail = "group intersection has rank " + std::to_string(meet.rank());
    return res;
  }
  const IntVec& gen = meet.basis()[0];
  IntVec neg(gen.size());
  for (std::size_t i = 0; i < gen.size(); ++i) neg[i] = -gen[i];
  if (gen != d_vec && neg != d_vec) {
    res.failure = GluingFailure::IntersectionGeneratorMismatch;
    res.detail = "group intersection is generated by " + vec_str(gen) +
                 ", not by d";
    return res;
  }

  AffineSemigroup glued(s1.dim(), dedupe_concat(s1.gens(), s2.gens()));

  // The minimal generators of the glued semigroup must split nontrivially:
  // each side has to contribute one the other side's list lacks.
  std::set<IntVec> set1(s1.gens().begin(), s1.gens().end());
  std::set<IntVec> set2(s2.gens().begin(), s2.gens().end());
  bool own1 = false, own2 = false;
  for (const IntVec& g : glued.minimal_generators()) {
    if (!set2.count(g)) own1 = true;
    if (!set1.count(g)) own2 = true;
  }
  if (!own1 || !own2) {
    res.failure = GluingFailure::TrivialDecomposition;
    res.detail = "one side contributes no minimal generator of its own";
    return res;
  }

  res.cert = GluingCert{d_vec, std::move(meet), std::move(w1), std::move(w2),
                        std::move(glued)};
  return res;
}

IntVec pf_of_gluing(const GluingCert& cert, const AffineSemigroup& s1,
                    const AffineSemigroup& s2, const IntVec& b1,
                    const IntVec& b2) {
  if (!is_pseudo_frobenius(s1, b1).is_pf)
    throw precondition_error("pf_of_gluing: b1 is not pseudo-Frobenius in S1");
  if (!is_pseudo_frobenius(s2, b2).is_pf)
    throw precondition_error("pf_of_gluing: b2 is not pseudo-Frobenius in S2");
  IntVec g = vec_add(vec_add(b1, b2), cert.d_vec);
  if (!is_pseudo_frobenius(cert.glued, g).is_pf)
    throw internal_error("pf_of_gluing: verification failed for " + vec_str(g));
  return g;
}

// ---------------------------------------------------------------------------
// Special gaps and irreducibility
// ---------------------------------------------------------------------------

AffineSemigroup adjoin_special_gap(const AffineSemigroup& s, const IntVec& a) {
  if (!is_pseudo_frobenius(s, a).is_pf)
    throw precondition_error("adjoin_special_gap: a is not pseudo-Frobenius");
  if (!s.contains(vec_scale(2, a)))
    throw precondition_error("adjoin_special_gap: 2a is not a member");
  std::vector<IntVec> gens = s.gens();
  gens.push_back(a);
  return AffineSemigroup(s.dim(), gens);
}

IrreducibilityVerdict irreducibility_verdict(const AffineSemigroup& s,
                                             const Int& n_max) {
  IrreducibilityVerdict v;
  CSemVerdict csem = decide_c_semigroup(s, n_max);
  if (csem.status != CSemStatus::Yes) {
    v.status = IrrStatus::Unknown;
    v.reason = "gap set not certified finite";
    return v;
  }
  PFResult pf = pseudo_frobenius_csem(s, n_max);
  v.pf = pf;

  if (pf.elements.empty()) {
    if (!csem.gaps.empty())
      throw internal_error("irreducibility: finite nonempty gap set with "
                           "empty pseudo-Frobenius set");
    // No strictly larger submonoid shares the cone, so no decomposition
    // exists at all.
    v.status = IrrStatus::CIrreducible;
    v.shape = "saturated";
    v.reason = "the semigroup equals the lattice points of its cone";
    return v;
  }
  if (pf.elements.size() == 1) {
    v.status = IrrStatus::CIrreducible;
    v.shape = "singleton";
    v.reason = "pseudo-Frobenius set is a single element";
    v.frobenius = frobenius_elements(s, n_max);
    return v;
  }
  if (pf.elements.size() == 2) {
    const IntVec& p = pf.elements[0];
    const IntVec& q = pf.elements[1];
    if (vec_scale(2, p) == q || vec_scale(2, q) == p) {
      v.status = IrrStatus::CIrreducible;
      v.shape = "half-pair";
      v.reason = "pseudo-Frobenius set is {f, f/2}";
      v.frobenius = frobenius_elements(s, n_max);
      return v;
    }
  }

  std::vector<IntVec> doubled;
  for (const IntVec& a : pf.elements)
    if (s.contains(vec_scale(2, a))) doubled.push_back(a);
  if (doubled.size() >= 2) {
    const IntVec& a1 = doubled[0];
    const IntVec& a2 = doubled[1];
    AffineSemigroup t1 = adjoin_special_gap(s, a1);
    AffineSemigroup t2 = adjoin_special_gap(s, a2);
    IntVec box(s.dim(), 0);
    for (const IntVec& h : csem.gaps)
      for (std::size_t i = 0; i < box.size(); ++i)
        if (h[i] > box[i]) box[i] = h[i];
    for (const IntVec& g : s.gens()) box = vec_add(box, g);
    BoxIter it(box);
    IntVec x;
    while (it.next(x)) {
      bool in_both = t1.contains(x) && t2.contains(x);
      if (in_both != s.contains(x))
        throw internal_error("irreducibility: adjunction intersection differs "
                             "from S at " + vec_str(x));
    }
    v.status = IrrStatus::NotIrreducible;
    v.reason = "S is the intersection of the two strictly larger monoids "
               "adjoining the witnesses";
    v.witness_a1 = a1;
    v.witness_a2 = a2;
    v.verify_box = box;
    return v;
  }

  v.status = IrrStatus::Unknown;
  v.reason = "pseudo-Frobenius shape matches no decision rule";
  return v;
}

// ---------------------------------------------------------------------------
// PI-monoids
// ---------------------------------------------------------------------------

IntVec multiplicity(const AffineSemigroup& s) { return multiplicity_vector(s); }

IntVec multiplicity(const PIMonoid& p) { return p.offset(); }

PiCheck is_pi_monoid(const AffineSemigroup& s) {
  PiCheck c;
  if (s.gens().empty()) return c;
  c.m = multiplicity_vector(s);
  c.m_is_member = !vec_is_zero(c.m) && s.contains(c.m);
  if (!c.m_is_member) return c;
  std::vector<IntVec> mins = s.minimal_generators();
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i; j < mins.size(); ++j) {
      ++c.pairs_checked;
      IntVec x = vec_sub(vec_add(mins[i], mins[j]), c.m);
      if (!s.contains(x)) {
        c.failing_pair = {mins[i], mins[j]};
        return c;
      }
    }
  }
  c.is_pi = true;
  return c;
}

PIMonoid::PIMonoid(IntVec a, AffineSemigroup t)
    : a_(std::move(a)), t_(std::move(t)), a_witness_(t_.member(a_)) {
  if (vec_is_zero(a_) || !a_witness_.member)
    throw precondition_error("pi monoid: offset must be a nonzero member of T");
}

bool PIMonoid::contains(const IntVec& x) const {
  if (x.size() != dim()) throw input_error("pi contains: dimension mismatch");
  if (vec_is_zero(x)) return true;
  return t_.contains(vec_sub(x, a_));
}

PIMonoid pi_construct(std::size_t dim, const std::vector<IntVec>& t_gens,
                      const IntVec& a) {
  return PIMonoid(a, AffineSemigroup(dim, t_gens));
}

PIMonoid pi_decompose(const AffineSemigroup& s) {
  PiCheck c = is_pi_monoid(s);
  if (!c.is_pi)
    throw precondition_error("pi_decompose: not a principal-ideal monoid");
  std::vector<IntVec> t_gens;
  std::set<IntVec> seen;
  for (const IntVec& g : s.minimal_generators()) {
    if (g == c.m) continue;
    IntVec shifted = vec_sub(g, c.m);
    if (seen.insert(shifted).second) t_gens.push_back(std::move(shifted));
  }
  if (seen.insert(c.m).second) t_gens.push_back(c.m);
  AffineSemigroup t_raw(s.dim(), t_gens);
  return PIMonoid(c.m, AffineSemigroup(s.dim(), t_raw.minimal_generators()));
}

PIMonoid canonical_pi_of(const AffineSemigroup& s) {
  if (s.gens().empty())
    throw precondition_error("canonical_pi_of: the trivial monoid has no "
                             "nonzero element");
  // The lex-least nonzero element is componentwise minimal, hence a minimal
  // generator; the minimum over the generators is therefore exact.
  IntVec a = s.gens()[0];
  for (const IntVec& g : s.gens())
    if (vec_cmp_lex(g, a) < 0) a = g;
  return PIMonoid(a, s);
}

AperySet pi_apery(const PIMonoid& p, std::optional<IntVec> box) {
  // Ap(S, m) = {0} union (a + classical Apery of a in T): for x = a + t the
  // base shift x - a = t lies in S exactly when t = 0 or t - a is in T.
  AperySet inner =
      apery(p.t(), p.offset(), AperyVariant::Classical, std::move(box));
  AperySet ap;
  ap.base = p.offset();
  ap.variant = AperyVariant::Classical;
  ap.complete = inner.complete;
  ap.search_box = inner.search_box;
  ap.elements.push_back(IntVec(p.dim(), 0));
  for (const IntVec& t : inner.elements) {
    if (vec_is_zero(t)) continue;
    ap.elements.push_back(vec_add(p.offset(), t));
  }
  canonicalize(ap.elements);
  return ap;
}

PiGenerators pi_minimal_generators(const PIMonoid& p,
                                   std::optional<IntVec> box) {
  AperySet ap = pi_apery(p, std::move(box));
  PiGenerators out;
  out.complete = ap.complete;
  out.search_box = ap.search_box;
  out.elements.push_back(p.offset());
  for (const IntVec& x : ap.elements)
    if (!vec_is_zero(x)) out.elements.push_back(x);
  canonicalize(out.elements);
  return out;
}

bool pi_is_pseudo_frobenius(const PIMonoid& p, const IntVec& x) {
  // x + (a + T) stays in the monoid exactly when x + T is contained in T,
  // which for closed T reduces to membership of x itself.
  return !p.contains(x) && p.t().contains(x);
}

PFResult pi_pseudo_frobenius(const PIMonoid& p, std::optional<IntVec> box) {
  AperySet inner =
      apery(p.t(), p.offset(), AperyVariant::Classical, std::move(box));
  PFResult pf;
  pf.method = PFMethod::AperyMaximals;
  pf.complete = inner.complete;
  pf.search_box = inner.search_box;
  for (const IntVec& t : inner.elements) {
    if (vec_is_zero(t)) continue;
    if (!pi_is_pseudo_frobenius(p, t))
      throw internal_error("pi pseudo-Frobenius verification failed at " +
                           vec_str(t));
    pf.elements.push_back(t);
  }
  canonicalize(pf.elements);
  return pf;
}

DirectLimitPiece direct_limit_family(const PIMonoid& p,
                                     const std::vector<IntVec>& lambda,
                                     const Int& n_max) {
  std::vector<IntVec> gens;
  gens.push_back(p.offset());
  std::set<IntVec> seen;
  seen.insert(p.offset());
  for (const IntVec& v : lambda) {
    IntVec x = vec_sub(v, p.offset());
    if (!vec_is_nonneg(x) || vec_is_zero(x) || !pi_is_pseudo_frobenius(p, x))
      throw precondition_error("direct_limit_family: " + vec_str(v) +
                               " is not multiplicity + pseudo-Frobenius");
    if (seen.insert(v).second) gens.push_back(v);
  }
  AffineSemigroup s_lambda(p.dim(), gens);

  DirectLimitPiece piece{s_lambda, is_mpd(s_lambda, n_max), {}};
  for (const IntVec& g : s_lambda.gens()) {
    if (!p.contains(g))
      throw internal_error("direct_limit_family: generator escapes the monoid");
    piece.generators_in_monoid.push_back(p.t().member(vec_sub(g, p.offset())));
  }
  return piece;
}

} // namespace affsg
