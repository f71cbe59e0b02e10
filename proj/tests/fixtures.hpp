#ifndef AFFSG_TEST_FIXTURES_HPP
#define AFFSG_TEST_FIXTURES_HPP

// The named example semigroups used across the test suites.

#include "affsg/semigroup.hpp"

namespace affsg::fixtures {

// Five generators in N^2 with twelve gaps and a single pseudo-Frobenius
// element (7,2).
inline AffineSemigroup ex_irr() {
  return AffineSemigroup(2, {{3, 0}, {5, 0}, {0, 1}, {1, 3}, {2, 3}});
}

inline const std::vector<IntVec>& ex_irr_gaps() {
  static const std::vector<IntVec> gaps = {
      {1, 0}, {1, 1}, {2, 0}, {1, 2}, {2, 1}, {2, 2},
      {4, 0}, {4, 1}, {4, 2}, {7, 0}, {7, 1}, {7, 2}};
  return gaps;
}

// Even-coordinate-sum semigroup: empty pseudo-Frobenius set.
inline AffineSemigroup degenerate() {
  return AffineSemigroup(2, {{2, 0}, {1, 1}, {0, 2}});
}

// Twelve-generator multiple convex body semigroup; not finite-gap, yet
// (13,4) is pseudo-Frobenius.
inline AffineSemigroup convex12() {
  return AffineSemigroup(2, {{18, 9},
                             {18, 3},
                             {4, 1},
                             {20, 8},
                             {23, 10},
                             {8, 3},
                             {11, 5},
                             {11, 2},
                             {10, 3},
                             {14, 3},
                             {7, 2},
                             {7, 3}});
}

// Ten-generator multiple convex body semigroup with pseudo-Frobenius set
// {(11,0), (12,1)}.
inline AffineSemigroup sec2_10gen() {
  return AffineSemigroup(2, {{3, 0},
                             {4, 1},
                             {4, 2},
                             {5, 2},
                             {7, 0},
                             {7, 3},
                             {7, 4},
                             {7, 5},
                             {8, 1},
                             {9, 2}});
}

// The two glued pieces in N^3.
inline AffineSemigroup glue_s1() {
  return AffineSemigroup(3, {{2, 0, 0}, {3, 0, 0}, {0, 1, 0}, {1, 1, 0}});
}

inline AffineSemigroup glue_s2() {
  return AffineSemigroup(3, {{1, 1, 0}, {1, 1, 1}, {0, 0, 2}, {0, 0, 3}});
}

// The diagonal monoid <(2,2),(3,3)>, a finitely generated PI monoid.
inline AffineSemigroup s1_diag() {
  return AffineSemigroup(2, {{2, 2}, {3, 3}});
}

// Numerical semigroup <3,5> embedded as d = 1.
inline AffineSemigroup n35() { return AffineSemigroup(1, {{3}, {5}}); }

// N^2 \ {(1,0),(0,1)}: two gaps, both pseudo-Frobenius, both with doubles
// inside, so the irreducibility verdict has explicit witnesses.
inline AffineSemigroup two_pf_fixture() {
  return AffineSemigroup(
      2, {{2, 0}, {3, 0}, {0, 2}, {0, 3}, {1, 1}, {2, 1}, {1, 2}});
}

} // namespace affsg::fixtures

#endif
