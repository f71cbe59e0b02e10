#ifndef AFFSG_RATIONAL_LP_HPP
#define AFFSG_RATIONAL_LP_HPP

#include <optional>
#include <vector>

#include "affsg/linalg.hpp"

namespace affsg {

/// One linear constraint: coeffs . x >= rhs, everything exact rational.
struct LinIneq {
  RatVec coeffs;
  Rat rhs;
};

/// Exact feasibility of a system of >= constraints by Fourier-Motzkin
/// elimination with back substitution. Returns a feasible point or nothing.
std::optional<RatVec> feasible_point(const std::vector<LinIneq>& system,
                                     std::size_t nvars);

/// Feasibility of { lambda >= 0 : sum_i lambda_i rays[i] = target } over Q.
bool in_rational_cone(const std::vector<IntVec>& rays, const IntVec& target);

} // namespace affsg

#endif
