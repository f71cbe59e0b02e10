#include <doctest.h>

#include <algorithm>
#include <random>

#include "affsg/cone.hpp"
#include "affsg/errors.hpp"
#include "affsg/rational_lp.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace affsg;

TEST_CASE("full quadrant from mixed generators") {
  Cone c = Cone::of(2, {{3, 0}, {5, 0}, {0, 1}, {1, 3}, {2, 3}});
  CHECK(c.span_dim() == 2);
  CHECK(c.extreme_rays() == std::vector<IntVec>{{0, 1}, {1, 0}});
  CHECK(c.extreme_rays() ==
        oracle::extreme_rays_2d_slopes({{3, 0}, {5, 0}, {0, 1}, {1, 3}, {2, 3}}));
  CHECK(c.contains(IntVec{7, 2}));
  CHECK(c.contains(IntVec{0, 0}));
  CHECK(c.relint_contains(IntVec{1, 1}));
  CHECK_FALSE(c.relint_contains(IntVec{3, 0}));
}

TEST_CASE("a single generator spans a ray") {
  Cone c = Cone::of(2, {{1, 1}});
  CHECK(c.span_dim() == 1);
  CHECK(c.extreme_rays() == std::vector<IntVec>{{1, 1}});
  CHECK(c.contains(IntVec{4, 4}));
  CHECK_FALSE(c.contains(IntVec{4, 5}));
  CHECK(c.relint_contains(IntVec{2, 2}));
  CHECK_FALSE(c.relint_contains(IntVec{0, 0}));
}

TEST_CASE("twelve-generator cone has extreme rays (2,1) and (6,1)") {
  auto s = fixtures::convex12();
  const Cone& c = s.cone();
  CHECK(c.extreme_rays() == std::vector<IntVec>{{2, 1}, {6, 1}});
  CHECK(c.extreme_rays() == oracle::extreme_rays_2d_slopes(s.gens()));
  CHECK_FALSE(c.contains(IntVec{1, 1})); // slope 1 exceeds 1/2
  CHECK(c.relint_contains(IntVec{4, 1}));
}

TEST_CASE("empty generator list yields the zero cone") {
  Cone c = Cone::of(3, {});
  CHECK(c.span_dim() == 0);
  CHECK(c.contains(IntVec{0, 0, 0}));
  CHECK_FALSE(c.contains(IntVec{1, 0, 0}));
  CHECK(c.relint_contains(IntVec{0, 0, 0}));
}

TEST_CASE("lower-dimensional cone in N^3 works inside its span") {
  // The z = 0 quadrant.
  Cone c = Cone::of(3, {{2, 0, 0}, {3, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(c.span_dim() == 2);
  CHECK(c.contains(IntVec{5, 7, 0}));
  CHECK_FALSE(c.contains(IntVec{5, 7, 1}));
  CHECK(c.relint_contains(IntVec{1, 1, 0}));
  CHECK_FALSE(c.relint_contains(IntVec{0, 1, 0}));
  CHECK(c.extreme_rays() == std::vector<IntVec>{{0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("every generator passes contains; extreme rays avoid the interior") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(0, 7);
  std::uniform_int_distribution<std::size_t> count(1, 6);
  for (int iter = 0; iter < 80; ++iter) {
    std::vector<IntVec> gens;
    std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
      IntVec g{entry(rng), entry(rng), entry(rng)};
      if (!vec_is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Cone c = Cone::of(3, gens);
    for (const IntVec& g : gens) CHECK(c.contains(g));
    for (const IntVec& r : c.extreme_rays()) {
      CHECK(c.contains(r));
      if (c.facets().size() >= 2) CHECK_FALSE(c.relint_contains(r));
    }
  }
}

TEST_CASE("double description cross-check against exact cone feasibility") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> entry(0, 6);
  std::uniform_int_distribution<int> pt(-3, 8);
  std::uniform_int_distribution<std::size_t> count(1, 5);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<IntVec> gens;
    std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
      IntVec g{entry(rng), entry(rng)};
      if (!vec_is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Cone c = Cone::of(2, gens);
    for (int t = 0; t < 25; ++t) {
      IntVec v{pt(rng), pt(rng)};
      CHECK(c.contains(v) == in_rational_cone(c.extreme_rays(), v));
    }
  }
}

TEST_CASE("cone construction ignores generator order") {
  std::vector<IntVec> gens = {{3, 0}, {5, 0}, {0, 1}, {1, 3}, {2, 3}};
  Cone a = Cone::of(2, gens);
  std::mt19937 rng(3);
  for (int iter = 0; iter < 10; ++iter) {
    std::shuffle(gens.begin(), gens.end(), rng);
    Cone b = Cone::of(2, gens);
    CHECK(a.extreme_rays() == b.extreme_rays());
    CHECK(a.facets() == b.facets());
  }
}

TEST_CASE("positive functional defaults to all-ones") {
  Cone c = Cone::of(2, {{3, 0}, {0, 1}});
  CHECK(positive_functional(c) == IntVec{1, 1});
  CHECK(vec_dot(positive_functional(c), IntVec{3, 0}) == 3);
  CHECK(is_positive_functional(c, {1, 1}));
  CHECK_FALSE(is_positive_functional(c, {1, 0})); // kills (0,1)
}

TEST_CASE("invalid generators are rejected") {
  CHECK_THROWS_AS((void)Cone::of(2, {{0, 0}}), input_error);
  CHECK_THROWS_AS((void)Cone::of(2, {{1}}), input_error);
  CHECK_THROWS_AS((void)Cone::of(2, {{-1, 2}}), input_error);
}
