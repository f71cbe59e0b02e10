#ifndef AFFSG_GAPS_HPP
#define AFFSG_GAPS_HPP

#include <optional>
#include <vector>

#include "affsg/errors.hpp"
#include "affsg/semigroup.hpp"

namespace affsg {

/// Per-ray data: which generators sit on an extreme ray and the gcd of
/// their multipliers (0 when the ray carries none).
struct RayDiagnostic {
  IntVec ray;
  std::vector<Int> multipliers;
  Int multiplier_gcd;
};

enum class CSemStatus { Yes, No, Unknown };

enum class CSemNoReason {
  RayWithoutGenerator,
  RayMultiplierGcd,
  GroupIndex,
};

/// Saturation step counts for one base point: steps[j] is the least N with
/// base + N * ray_elements[j] in S.
struct SaturationEntry {
  IntVec base;
  std::vector<Int> steps;
};

/// Decision certificate for finiteness of the gap set.
///
/// Yes: `gaps` is exactly the gap set; the certificate is the chosen ray
/// elements plus the saturation table, from which the finite superset that
/// was filtered can be reconstructed.
/// No: `reason` is machine-checkable from the generator data alone.
/// Unknown: a saturation search exhausted `exhausted_bound`.
struct CSemVerdict {
  CSemStatus status = CSemStatus::Unknown;
  std::vector<IntVec> gaps;
  std::vector<IntVec> ray_elements;
  std::vector<SaturationEntry> saturation;
  std::optional<CSemNoReason> reason;
  std::optional<IntVec> reason_ray;
  std::optional<Int> reason_gcd;
  std::optional<Int> reason_index;
  Int exhausted_bound = 0;
};

/// A gap listing was requested without a positive finiteness verdict.
class gap_state_error : public state_error {
public:
  explicit gap_state_error(CSemVerdict v)
      : state_error("gap set requested without a Yes verdict"),
        verdict(std::move(v)) {}
  CSemVerdict verdict;
};

std::vector<RayDiagnostic> ray_diagnostics(const AffineSemigroup& s);

/// The sublattice of Z^d cut out by the span of the cone of s.
Lattice span_lattice(const AffineSemigroup& s);

/// Index of the group of s inside the span lattice.
Int group_index(const AffineSemigroup& s);

CSemVerdict decide_c_semigroup(const AffineSemigroup& s, const Int& n_max = 1024);

/// Exactly the gap set, sorted by grading then lexicographically; throws
/// gap_state_error carrying the verdict when it is not Yes.
std::vector<IntVec> gap_set(const AffineSemigroup& s, const Int& n_max = 1024);

} // namespace affsg

#endif
