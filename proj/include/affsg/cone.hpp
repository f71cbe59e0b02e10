#ifndef AFFSG_CONE_HPP
#define AFFSG_CONE_HPP

#include <vector>

#include "affsg/linalg.hpp"

namespace affsg {

/// The rational polyhedral cone spanned by nonnegative integer generators.
///
/// The cone is described inside its linear span: `span_equations` cut out the
/// span, `facets` are primitive inward integer normals lying in the span, and
/// `extreme_rays` are the primitive generator directions on one-dimensional
/// faces. Extreme rays and facets are canonical: the same set of rational
/// directions always yields identical, canonically sorted lists.
class Cone {
public:
  static Cone of(std::size_t dim, const std::vector<IntVec>& generators);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t span_dim() const { return span_dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  const std::vector<IntVec>& extreme_rays() const { return extreme_rays_; }
  const std::vector<IntVec>& facets() const { return facets_; }
  const std::vector<IntVec>& span_equations() const { return span_equations_; }

  bool contains(const IntVec& v) const;
  bool contains(const RatVec& v) const;
  bool relint_contains(const IntVec& v) const;
  bool relint_contains(const RatVec& v) const;

private:
  Cone() = default;

  std::size_t dim_ = 0;
  std::size_t span_dim_ = 0;
  std::vector<IntVec> generators_;
  std::vector<IntVec> extreme_rays_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> span_equations_;
};

/// A nonnegative integer functional positive on every generator; the
/// all-ones vector always qualifies for generators in N^d minus the origin.
IntVec positive_functional(const Cone& c);

bool is_positive_functional(const Cone& c, const IntVec& w);

} // namespace affsg

#endif
