#include <doctest.h>

#include <random>
#include <set>

#include "affsg/gaps.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace affsg;

TEST_CASE("ray diagnostics read off multipliers") {
  auto d1 = ray_diagnostics(fixtures::ex_irr());
  REQUIRE(d1.size() == 2);
  // Canonical ray order: (0,1) before (1,0).
  CHECK(d1[0].ray == IntVec{0, 1});
  CHECK(d1[0].multipliers == std::vector<Int>{1});
  CHECK(d1[0].multiplier_gcd == 1);
  CHECK(d1[1].ray == IntVec{1, 0});
  CHECK(d1[1].multipliers == std::vector<Int>{3, 5});
  CHECK(d1[1].multiplier_gcd == 1);

  auto d2 = ray_diagnostics(fixtures::degenerate());
  REQUIRE(d2.size() == 2);
  CHECK(d2[0].ray == IntVec{0, 1});
  CHECK(d2[0].multipliers == std::vector<Int>{2});
  CHECK(d2[0].multiplier_gcd == 2);
  CHECK(d2[1].multipliers == std::vector<Int>{2});

  auto d3 = ray_diagnostics(fixtures::convex12());
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].ray == IntVec{2, 1});
  CHECK(d3[0].multipliers == std::vector<Int>{9}); // (18,9) = 9 * (2,1)
  CHECK(d3[0].multiplier_gcd == 9);
}

TEST_CASE("the five-generator example has exactly the twelve known gaps") {
  CSemVerdict v = decide_c_semigroup(fixtures::ex_irr());
  REQUIRE(v.status == CSemStatus::Yes);
  CHECK(v.gaps == fixtures::ex_irr_gaps());
}

TEST_CASE("the even-sum semigroup is rejected with a ray certificate") {
  CSemVerdict v = decide_c_semigroup(fixtures::degenerate());
  REQUIRE(v.status == CSemStatus::No);
  REQUIRE(v.reason.has_value());
  CHECK(*v.reason == CSemNoReason::RayMultiplierGcd);
  CHECK(*v.reason_gcd == 2);
  // The group index certificate is independently valid too.
  CHECK(group_index(fixtures::degenerate()) == 2);
}

TEST_CASE("the twelve-generator semigroup is rejected by ray gcd") {
  CSemVerdict v = decide_c_semigroup(fixtures::convex12());
  REQUIRE(v.status == CSemStatus::No);
  CHECK(*v.reason == CSemNoReason::RayMultiplierGcd);
  CHECK(*v.reason_gcd == 9);
}

TEST_CASE("the ten-generator semigroup exhausts the saturation bound") {
  CSemVerdict v = decide_c_semigroup(fixtures::sec2_10gen(), 12);
  CHECK(v.status == CSemStatus::Unknown);
  CHECK(v.exhausted_bound == 12);
}

TEST_CASE("N^2 has no gaps") {
  AffineSemigroup n2(2, {{1, 0}, {0, 1}});
  CHECK(gap_set(n2).empty());
}

TEST_CASE("the trivial monoid has no gaps") {
  AffineSemigroup trivial(2, {});
  CSemVerdict v = decide_c_semigroup(trivial);
  CHECK(v.status == CSemStatus::Yes);
  CHECK(v.gaps.empty());
}

TEST_CASE("numerical semigroup <3,5> has gaps 1,2,4,7") {
  auto gaps = gap_set(fixtures::n35());
  std::vector<IntVec> expect = {{1}, {2}, {4}, {7}};
  CHECK(gaps == expect);
}

TEST_CASE("gap listing without a Yes verdict raises a state error") {
  try {
    (void)gap_set(fixtures::degenerate());
    FAIL("expected gap_state_error");
  } catch (const gap_state_error& e) {
    CHECK(e.verdict.status == CSemStatus::No);
  }
}

TEST_CASE("larger bounds never flip a definite verdict") {
  for (const Int& nmax : {Int(1), Int(8), Int(64), Int(1024)}) {
    CHECK(decide_c_semigroup(fixtures::degenerate(), nmax).status ==
          CSemStatus::No);
  }
  // Yes answers are stable once reached.
  CSemVerdict small = decide_c_semigroup(fixtures::ex_irr(), 4);
  CSemVerdict big = decide_c_semigroup(fixtures::ex_irr(), 4096);
  REQUIRE(small.status == CSemStatus::Yes);
  REQUIRE(big.status == CSemStatus::Yes);
  CHECK(small.gaps == big.gaps);
  // Unknown is the only status a larger bound may resolve.
  CHECK(decide_c_semigroup(fixtures::sec2_10gen(), 3).status ==
        CSemStatus::Unknown);
}

TEST_CASE("random cofinite monoids: gap sets match the tracked truth") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 40; ++iter) {
    auto fix = oracle::random_cofinite_n2(rng, 1 + iter % 5);
    AffineSemigroup s(2, fix.gens);
    CSemVerdict v = decide_c_semigroup(s);
    REQUIRE(v.status == CSemStatus::Yes);
    CHECK(v.gaps == fix.gaps);
  }
}

TEST_CASE("yes-verdict completeness spot-check outside the superset") {
  auto s = fixtures::ex_irr();
  CSemVerdict v = decide_c_semigroup(s);
  REQUIRE(v.status == CSemStatus::Yes);
  std::set<IntVec> superset;
  for (const SaturationEntry& e : v.saturation) {
    bool empty = false;
    for (const Int& st : e.steps)
      if (st == 0) empty = true;
    if (empty) continue;
    std::vector<Int> n(e.steps.size(), 0);
    while (true) {
      IntVec x = e.base;
      for (std::size_t j = 0; j < n.size(); ++j)
        x = vec_add(x, vec_scale(n[j], v.ray_elements[j]));
      superset.insert(x);
      std::size_t j = 0;
      while (j < n.size()) {
        n[j] += 1;
        if (n[j] < e.steps[j]) break;
        n[j] = 0;
        ++j;
      }
      if (j == n.size()) break;
    }
  }
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> entry(0, 40);
  int checked = 0;
  while (checked < 1000) {
    IntVec x{entry(rng), entry(rng)};
    if (!s.cone().contains(x) || superset.count(x)) continue;
    CHECK(s.contains(x));
    ++checked;
  }
}

TEST_CASE("gaps are cone points outside the semigroup, in canonical order") {
  auto s = fixtures::ex_irr();
  auto gaps = gap_set(s);
  for (const IntVec& h : gaps) {
    CHECK(s.cone().contains(h));
    CHECK_FALSE(s.contains(h));
  }
  for (std::size_t i = 1; i < gaps.size(); ++i)
    CHECK(vec_graded_lex_less(gaps[i - 1], gaps[i]));
}

TEST_CASE("d=1 gap sets agree with the classical sieve") {
  std::mt19937 rng(47);
  for (int iter = 0; iter < 25; ++iter) {
    auto gens = oracle::random_numerical_gens(rng);
    std::vector<IntVec> cols;
    for (unsigned long g : gens) cols.push_back(IntVec{Int(g)});
    AffineSemigroup s(1, cols);
    auto sieve = oracle::numerical_sieve(gens);
    auto gaps = gap_set(s);
    auto expect = oracle::sieve_gaps(sieve);
    REQUIRE(gaps.size() == expect.size());
    for (std::size_t i = 0; i < gaps.size(); ++i)
      CHECK(gaps[i][0] == Int(expect[i]));
  }
}
