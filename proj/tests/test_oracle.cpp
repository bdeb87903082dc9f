// SPDX-License-Identifier: MIT
#include <random>

#include "doctest.h"
#include "skewroots/error.hpp"
#include "skewroots/oracle.hpp"

using namespace skewroots;

TEST_CASE("brute counters on hand checked polynomials") {
  auto f = Field::create(2, 1, 4, 1);
  // x^(sigma^2) - x: kernel F_4, four roots
  LinearizedPoly fixed2(f, {f->one(), f->zero(), f->one()});
  BruteLinear bl = brute_roots_lin(fixed2);
  CHECK(bl.roots == 4);
  CHECK(bl.nullity == 2);
  // its projective form y^(sigma+1) = 1 on sixteen elements: three roots
  CHECK(brute_roots_proj(fixed2) == 3);

  // x alone never vanishes away from zero
  LinearizedPoly unit(f, {f->one(), f->one()});
  CHECK(brute_roots_lin(unit).roots >= 1);

  CHECK_THROWS_AS((void)brute_roots_lin(LinearizedPoly::zero(f)), Error);
  // refuse blowing the budget
  CHECK_THROWS_AS((void)brute_roots_lin(fixed2, 8), Error);
}

TEST_CASE("crosscheck agrees with itself on random polynomials") {
  auto run = [](const std::shared_ptr<const Field>& f, unsigned deg,
                uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<FieldElement> c;
      c.push_back(f->element(1 + draw_below(rng, f->order() - 1)));
      for (unsigned i = 1; i < deg; ++i)
        c.push_back(f->element(draw_below(rng, f->order())));
      c.push_back(f->element(1 + draw_below(rng, f->order() - 1)));
      LinearizedPoly l(f, std::move(c));
      CrossCheck cc = crosscheck(l);
      CHECK(cc.agree);
      CHECK(cc.note.empty());
      CHECK(cc.brute_nullity == cc.nullity_generic);
      CHECK(cc.brute_nullity == cc.nullity_dickson);
      CHECK(cc.brute_proj == cc.proj_eigen);
      CHECK(cc.brute_proj == cc.proj_gcrc);
      if (cc.nullity_closed) CHECK(*cc.nullity_closed == cc.brute_nullity);
      if (cc.proj_closed) CHECK(*cc.proj_closed == cc.brute_proj);
      CHECK(cc.chi_certified);
      CHECK(cc.det_identity);
      CHECK(cc.closed_matrix_match);
      CHECK(cc.admissible);
      CHECK(!cc.case_tag.empty());
    }
  };
  run(Field::create(2, 1, 3, 1), 2, 501, 60);
  run(Field::create(3, 1, 3, 1), 2, 502, 60);
  run(Field::create(3, 1, 3, 1), 3, 503, 60);
  run(Field::create(2, 1, 5, 2), 3, 504, 40);
  run(Field::create(2, 2, 3, 1), 1, 505, 40);
  run(Field::create(2, 1, 4, 1), 4, 506, 40);  // above the closed forms
}

TEST_CASE("exhaustive sweep totals and determinism") {
  SweepPlan plan;
  plan.spec = Field::create(2, 1, 3, 1);
  plan.degree = 2;
  plan.exhaustive = true;
  SweepSummary s1 = run_sweep(plan);
  // a and c range over units, b over everything: 7 * 8 * 7 tuples
  CHECK(s1.tuples == 392);
  CHECK(s1.disagreements == 0);
  CHECK(s1.examples.empty());
  uint64_t case_total = 0;
  for (const auto& [tag, cnt] : s1.by_case) case_total += cnt;
  CHECK(case_total == s1.tuples);
  uint64_t proj_total = 0;
  for (const auto& [cnt, times] : s1.by_proj_count) proj_total += times;
  CHECK(proj_total == s1.tuples);

  // frozen distribution for this tower
  CHECK(s1.by_proj_count.at(0) == 147);
  CHECK(s1.by_proj_count.at(1) == 196);
  CHECK(s1.by_proj_count.at(3) == 49);

  SweepSummary s2 = run_sweep(plan);
  CHECK(s2.tuples == s1.tuples);
  CHECK(s2.by_case == s1.by_case);
  CHECK(s2.by_proj_count == s1.by_proj_count);
  CHECK(s2.by_nullity == s1.by_nullity);
}

TEST_CASE("random sweeps are reproducible from the seed") {
  SweepPlan plan;
  plan.spec = Field::create(3, 1, 4, 1);
  plan.degree = 3;
  plan.exhaustive = false;
  plan.samples = 200;
  plan.seed = 42;
  SweepSummary s1 = run_sweep(plan);
  SweepSummary s2 = run_sweep(plan);
  CHECK(s1.tuples == 200);
  CHECK(s1.disagreements == 0);
  CHECK(s1.by_case == s2.by_case);
  CHECK(s1.by_proj_count == s2.by_proj_count);
  CHECK(s1.by_nullity == s2.by_nullity);

  plan.seed = 43;
  SweepSummary s3 = run_sweep(plan);
  CHECK((s3.by_case != s1.by_case || s3.by_proj_count != s1.by_proj_count));
}

TEST_CASE("full split search matches a brute filter") {
  auto f = Field::create(2, 1, 3, 1);
  std::vector<LinearizedPoly> hits = search_full_split(f, 2);
  // brute: monic tuples whose projective count is (q^2-1)/(q-1) = 3
  uint64_t expect = 0;
  for (uint64_t a = 1; a < 8; ++a)
    for (uint64_t b = 0; b < 8; ++b) {
      LinearizedPoly l(f, {f->element(a), f->element(b), f->one()});
      if (brute_roots_proj(l) == 3) ++expect;
    }
  CHECK(hits.size() == expect);
  CHECK(!hits.empty());
  for (const LinearizedPoly& l : hits) {
    CHECK(l.leading() == f->one());
    CHECK(brute_roots_proj(l) == 3);
    CHECK(full_kernel_check(l).projective_full_split);
  }
}

TEST_CASE("bounded draws are uniform enough and in range") {
  std::mt19937_64 rng(77);
  std::vector<uint64_t> counts(7, 0);
  for (int i = 0; i < 7000; ++i) {
    uint64_t v = draw_below(rng, 7);
    REQUIRE(v < 7);
    ++counts[v];
  }
  for (uint64_t c : counts) CHECK(c > 800);

  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 100; ++i)
    CHECK(draw_below(a, 1000) == draw_below(b, 1000));
}
