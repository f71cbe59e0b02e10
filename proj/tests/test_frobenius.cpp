#include <doctest.h>

#include <algorithm>
#include <random>

#include "affsg/errors.hpp"
#include "affsg/frobenius.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace affsg;

TEST_CASE("classical Apery of the diagonal monoid") {
  auto s1 = fixtures::s1_diag();
  AperySet ap = apery(s1, {2, 2}, AperyVariant::Classical);
  CHECK(ap.complete);
  CHECK(ap.elements == std::vector<IntVec>{{0, 0}, {3, 3}});
}

TEST_CASE("restricted Apery of the diagonal monoid excludes the origin") {
  auto s1 = fixtures::s1_diag();
  AperySet ap = apery(s1, {2, 2}, AperyVariant::Restricted);
  CHECK(ap.complete);
  CHECK(ap.elements == std::vector<IntVec>{{3, 3}});
}

TEST_CASE("classical Apery of N^2 is the truncated axis pattern") {
  AffineSemigroup n2(2, {{1, 0}, {0, 1}});
  AperySet ap = apery(n2, {1, 1}, AperyVariant::Classical, IntVec{4, 4});
  CHECK_FALSE(ap.complete);
  std::vector<IntVec> expect = {{0, 0}};
  for (int k = 1; k <= 4; ++k) {
    expect.push_back({0, k});
    expect.push_back({k, 0});
  }
  canonicalize(expect);
  CHECK(ap.elements == expect);
}

TEST_CASE("restricted Apery matches the definition filter") {
  auto s = fixtures::ex_irr();
  AperySet ap = apery(s, {3, 0}, AperyVariant::Restricted);
  REQUIRE(ap.complete);
  std::vector<IntVec> expect = {{5, 0}, {5, 1}, {5, 2}, {10, 0}, {10, 1}, {10, 2}};
  CHECK(ap.elements == expect);
  // Definition filter oracle over a box.
  std::vector<IntVec> brute;
  BoxIter it(IntVec{14, 10});
  IntVec x;
  while (it.next(x)) {
    if (!s.contains(x)) continue;
    IntVec diff = vec_sub(x, {3, 0});
    if (s.cone().contains(diff) && !s.contains(diff)) brute.push_back(x);
  }
  canonicalize(brute);
  CHECK(ap.elements == brute);
  // Restricted elements are classical elements for the same base.
  AperySet cl = apery(s, {3, 0}, AperyVariant::Classical, IntVec{14, 10});
  for (const IntVec& a : ap.elements)
    CHECK(std::find(cl.elements.begin(), cl.elements.end(), a) !=
          cl.elements.end());
  // The unique maximal element is the pseudo-Frobenius translate.
  CHECK(s.maximals(ap.elements) == std::vector<IntVec>{{10, 2}});
}

TEST_CASE("apery rejects bases outside the semigroup") {
  auto s1 = fixtures::s1_diag();
  CHECK_THROWS_AS((void)apery(s1, {1, 1}, AperyVariant::Classical),
                  precondition_error);
  CHECK_THROWS_AS((void)apery(s1, {0, 0}, AperyVariant::Classical),
                  precondition_error);
}

TEST_CASE("apery decomposition on the diagonal monoid") {
  auto s1 = fixtures::s1_diag();
  auto [k, c] = apery_decompose(s1, {2, 2}, {7, 7});
  CHECK(k == 2);
  CHECK(c == IntVec{3, 3});
  auto [k0, c0] = apery_decompose(s1, {2, 2}, {0, 0});
  CHECK(k0 == 0);
  CHECK(c0 == IntVec{0, 0});
  auto [k1, c1] = apery_decompose(s1, {2, 2}, {2, 2});
  CHECK(k1 == 1);
  CHECK(c1 == IntVec{0, 0});
}

TEST_CASE("apery decomposition against a descending-scan oracle") {
  std::mt19937 rng(53);
  auto s = fixtures::ex_irr();
  std::vector<IntVec> bases = {{3, 0}, {0, 1}, {1, 3}};
  auto members = s.enumerate_upto({8, 6});
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (int iter = 0; iter < 100; ++iter) {
    const IntVec& b = bases[iter % bases.size()];
    const IntVec& x = members[pick(rng)];
    auto [k, c] = apery_decompose(s, b, x);
    // Oracle: scan k downward using exhaustive membership.
    Int expected_k = -1;
    Int kmax = s.grading_value(x) / s.grading_value(b);
    for (Int t = kmax; t >= 0; t -= 1) {
      IntVec cand = vec_sub(x, vec_scale(t, b));
      if (!vec_is_nonneg(cand)) continue;
      long fuel = Int(s.grading_value(cand)).get_si();
      if (oracle::member_exhaustive(s.gens(), cand, fuel)) {
        expected_k = t;
        break;
      }
    }
    CHECK(k == expected_k);
    CHECK(vec_add(vec_scale(k, b), c) == x);
    CHECK(s.contains(c));
    CHECK_FALSE(s.contains(vec_sub(c, b)));
  }
}

TEST_CASE("gap filter finds the unique pseudo-Frobenius element") {
  PFResult pf = pseudo_frobenius_csem(fixtures::ex_irr());
  CHECK(pf.complete);
  CHECK(pf.elements == std::vector<IntVec>{{7, 2}});
  CHECK(pf.method == PFMethod::GapFilter);
}

TEST_CASE("N^2 has no pseudo-Frobenius elements") {
  AffineSemigroup n2(2, {{1, 0}, {0, 1}});
  CHECK(pseudo_frobenius_csem(n2).elements.empty());
}

TEST_CASE("numerical semigroup <3,5> has pseudo-Frobenius number 7") {
  PFResult pf = pseudo_frobenius_csem(fixtures::n35());
  CHECK(pf.elements == std::vector<IntVec>{{7}});
}

TEST_CASE("Apery maximals route is base independent") {
  auto s = fixtures::ex_irr();
  for (const IntVec& b : s.gens()) {
    PFResult pf = pseudo_frobenius_apery(s, b);
    CHECK(pf.elements == std::vector<IntVec>{{7, 2}});
    CHECK(pf.complete);
  }
  PFResult viaS1 = pseudo_frobenius_apery(fixtures::s1_diag(), {2, 2});
  CHECK(viaS1.elements == std::vector<IntVec>{{1, 1}});
  // Without a finite gap set the restricted Apery set stays incomplete.
  CHECK_THROWS_AS((void)pseudo_frobenius_apery(fixtures::convex12(), {7, 2}),
                  state_error);
}

TEST_CASE("pointwise pseudo-Frobenius evidence") {
  auto big = fixtures::convex12();
  PFEvidence ev = is_pseudo_frobenius(big, {13, 4});
  CHECK(ev.is_pf);
  CHECK(ev.generator_witnesses.size() == big.gens().size());
  for (std::size_t i = 0; i < big.gens().size(); ++i) {
    REQUIRE(ev.generator_witnesses[i].member);
    CHECK(oracle::mat_apply(big.gens(), *ev.generator_witnesses[i].witness) ==
          vec_add(IntVec{13, 4}, big.gens()[i]));
  }
  CHECK_FALSE(is_pseudo_frobenius(fixtures::ex_irr(), {4, 2}).is_pf);
  CHECK_FALSE(is_pseudo_frobenius(fixtures::ex_irr(), {3, 0}).is_pf);
}

TEST_CASE("bounded search on the named examples") {
  PFResult big = pseudo_frobenius_bounded(fixtures::convex12(), {30, 15});
  CHECK(std::find(big.elements.begin(), big.elements.end(), IntVec{13, 4}) !=
        big.elements.end());
  CHECK_FALSE(big.complete);

  PFResult ten = pseudo_frobenius_bounded(fixtures::sec2_10gen(), {30, 15});
  CHECK(ten.elements == std::vector<IntVec>{{11, 0}, {12, 1}});

  PFResult none = pseudo_frobenius_bounded(fixtures::degenerate(), {50, 50});
  CHECK(none.elements.empty());
}

TEST_CASE("group saturation proves the even-sum semigroup has empty PF") {
  auto sat = pseudo_frobenius_saturated(fixtures::degenerate());
  REQUIRE(sat.has_value());
  CHECK(sat->complete);
  CHECK(sat->elements.empty());
}

TEST_CASE("group saturation finds a complete PF despite infinite gaps") {
  // Even-sum cone points except (1,1): every odd-sum point is a gap, yet
  // the only group gap (1,1) absorbs all generators.
  AffineSemigroup s(2, {{2, 0}, {0, 2}, {3, 1}, {1, 3}});
  CHECK(decide_c_semigroup(s).status == CSemStatus::No);
  auto sat = pseudo_frobenius_saturated(s);
  REQUIRE(sat.has_value());
  CHECK(sat->complete);
  CHECK(sat->elements == std::vector<IntVec>{{1, 1}});
  CHECK(is_pseudo_frobenius(s, {1, 1}).is_pf);
  CHECK(pseudo_frobenius_bounded(s, {25, 25}).elements ==
        std::vector<IntVec>{{1, 1}});
  MpdVerdict v = is_mpd(s);
  CHECK(v.status == MpdStatus::Yes);
  CHECK(v.pf->complete);
}

TEST_CASE("mpd verdicts on the named examples") {
  MpdVerdict yes = is_mpd(fixtures::ex_irr());
  CHECK(yes.status == MpdStatus::Yes);
  CHECK(yes.pf->elements == std::vector<IntVec>{{7, 2}});
  CHECK(yes.pf->complete);

  MpdVerdict no = is_mpd(fixtures::degenerate());
  CHECK(no.status == MpdStatus::No);
  CHECK(no.pf->complete);
  CHECK(no.pf->elements.empty());

  MpdVerdict ten = is_mpd(fixtures::sec2_10gen(), 12);
  CHECK(ten.status == MpdStatus::Yes);
  CHECK_FALSE(ten.pf->complete);
  CHECK(ten.pf->elements == std::vector<IntVec>{{11, 0}, {12, 1}});

  MpdVerdict twelve = is_mpd(fixtures::convex12(), 12);
  CHECK(twelve.status == MpdStatus::Yes);
  CHECK(std::find(twelve.pf->elements.begin(), twelve.pf->elements.end(),
                  IntVec{13, 4}) != twelve.pf->elements.end());
}

TEST_CASE("syzygy witness degrees") {
  auto ten = fixtures::sec2_10gen();
  PFResult pf = pseudo_frobenius_bounded(ten, {30, 15});
  SyzygyWitness w = syzygy_witness_degrees(ten, pf);
  CHECK(w.checked);
  CHECK(w.degrees == std::vector<IntVec>{{72, 20}, {73, 21}});
  CHECK(w.subset_checks_per_degree == 1022);

  auto s = fixtures::ex_irr();
  SyzygyWitness w2 = syzygy_witness_degrees(s, pseudo_frobenius_csem(s));
  CHECK(w2.degrees == std::vector<IntVec>{{18, 9}});

  PFResult empty;
  CHECK_THROWS_AS((void)syzygy_witness_degrees(s, empty), precondition_error);
}

TEST_CASE("length bound evaluates exactly") {
  AffineSemigroup tiny(1, {{2}});
  CHECK(pf_length_bound(tiny) == 1);

  auto s = fixtures::ex_irr();
  CHECK(matrix_inf_norm(s) == 11);
  Int expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), 45, 8);
  expect += 24;
  CHECK(pf_length_bound(s) == expect);

  // Row-sum oracle.
  Int rows[2] = {0, 0};
  for (const IntVec& g : s.gens()) {
    rows[0] += abs(g[0]);
    rows[1] += abs(g[1]);
  }
  CHECK(matrix_inf_norm(s) == std::max(rows[0], rows[1]));
}

TEST_CASE("witness lengths respect the bound") {
  auto s = fixtures::ex_irr();
  IntVec total(2, 0);
  for (const IntVec& g : s.gens()) total = vec_add(total, g);
  for (const IntVec& a : pseudo_frobenius_csem(s).elements) {
    auto m = s.member(vec_add(a, total));
    REQUIRE(m.member);
    Int len = vec_sum(*m.witness) - Int(s.gens().size());
    CHECK(len <= pf_length_bound(s));
  }
}

TEST_CASE("frobenius elements with re-validating weights") {
  auto s = fixtures::ex_irr();
  auto certs = frobenius_elements(s);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].f == IntVec{7, 2});
  CHECK(revalidate(s, certs[0], gap_set(s)));

  auto n35 = fixtures::n35();
  auto c1 = frobenius_elements(n35);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].f == IntVec{7});

  // A singleton gap set: its element is Frobenius with the all-ones weight.
  AffineSemigroup s2(2, {{2, 0}, {3, 0}, {0, 1}, {1, 1}});
  auto single = frobenius_elements(s2);
  REQUIRE(single.size() == 1);
  CHECK(single[0].f == IntVec{1, 0});
}

TEST_CASE("term orders compare points") {
  auto gaps = gap_set(fixtures::ex_irr());
  CHECK(max_under_order(gaps, TermOrder::grlex(2)) == IntVec{7, 2});
  CHECK(max_under_order(gaps, TermOrder::grevlex(2)) == IntVec{7, 2});
  CHECK(max_under_order({IntVec{5, 5}}, TermOrder::lex(2)) == IntVec{5, 5});
  CHECK(max_under_order({IntVec{1, 0}, IntVec{0, 1}}, TermOrder::lex(2)) ==
        IntVec{1, 0});
  TermOrder bad = TermOrder::weight_matrix({{Rat(-1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK_THROWS_AS((void)max_under_order(gaps, bad), input_error);
  TermOrder low_rank = TermOrder::weight_matrix({{Rat(1), Rat(1)}});
  CHECK_THROWS_AS((void)max_under_order(gaps, low_rank), input_error);
}

TEST_CASE("selmer check on the five-generator example") {
  auto s = fixtures::ex_irr();
  auto certs = frobenius_elements(s);
  REQUIRE(certs.size() == 1);
  CHECK(selmer_check(s, certs[0]));

  FrobeniusCert tampered = certs[0];
  tampered.w[0] = 0;
  CHECK_FALSE(selmer_check(s, tampered));

  FrobeniusCert wrong{IntVec{4, 2}, RatVec{Rat(1), Rat(1)}};
  CHECK_FALSE(selmer_check(s, wrong));
}

TEST_CASE("boxed Frobenius vector verification") {
  auto s = fixtures::ex_irr();
  CHECK(is_frobenius_vector_boxed(s, {7, 2}, {20, 20}));
  CHECK_FALSE(is_frobenius_vector_boxed(s, {3, 0}, {10, 10})); // member
  for (const auto& cert : frobenius_elements(s))
    CHECK(is_frobenius_vector_boxed(s, cert.f, {15, 15}));
}

TEST_CASE("F(S) inside PF(S) inside H(S) on random cofinite monoids") {
  std::mt19937 rng(59);
  for (int iter = 0; iter < 30; ++iter) {
    auto fix = oracle::random_cofinite_n2(rng, 1 + iter % 4);
    AffineSemigroup s(2, fix.gens);
    auto gaps = gap_set(s);
    auto pf = pseudo_frobenius_csem(s);
    for (const auto& cert : frobenius_elements(s)) {
      CHECK(std::find(pf.elements.begin(), pf.elements.end(), cert.f) !=
            pf.elements.end());
      CHECK(revalidate(s, cert, gaps));
      CHECK(selmer_check(s, cert));
    }
    for (const IntVec& a : pf.elements)
      CHECK(std::find(gaps.begin(), gaps.end(), a) != gaps.end());
    // Base independence and agreement with the gap filter.
    for (const IntVec& b : s.minimal_generators()) {
      CHECK(pseudo_frobenius_apery(s, b).elements == pf.elements);
    }
  }
}
