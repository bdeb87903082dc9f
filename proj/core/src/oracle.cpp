// SPDX-License-Identifier: MIT
#include "skewroots/oracle.hpp"

#include <chrono>

#include "skewroots/codec.hpp"

namespace skewroots {

BruteLinear brute_roots_lin(const LinearizedPoly& l, uint64_t budget) {
  if (l.is_zero())
    fail(Errc::ZeroPolynomial, "every element is a root of the zero polynomial");
  const Field& f = *l.spec();
  if (f.order() > budget)
    fail(Errc::BudgetExceeded, "field order " + std::to_string(f.order()) +
                                   " exceeds the brute-force budget");
  uint64_t roots = 0;
  for (uint64_t e = 0; e < f.order(); ++e)
    if (l.eval_linear(f.element(e)).is_zero()) ++roots;

  uint64_t pw = 1;
  unsigned v = 0;
  while (pw < roots) {
    pw *= f.subfield_order();
    ++v;
  }
  if (pw != roots)
    fail(Errc::InternalCheck, "kernel size is not a power of q");
  return {roots, v};
}

uint64_t brute_roots_proj(const LinearizedPoly& l, uint64_t budget) {
  if (l.is_zero())
    fail(Errc::ZeroPolynomial, "every element is a root of the zero polynomial");
  const Field& f = *l.spec();
  if (f.order() > budget)
    fail(Errc::BudgetExceeded, "field order " + std::to_string(f.order()) +
                                   " exceeds the brute-force budget");
  uint64_t roots = 0;
  for (uint64_t e = 0; e < f.order(); ++e)
    if (l.eval_projective(f.element(e)).is_zero()) ++roots;
  return roots;
}

CrossCheck crosscheck(const LinearizedPoly& l, uint64_t budget) {
  CrossCheck r;
  const Field& f = *l.spec();
  const unsigned d = l.degree() ? *l.degree() : 0;
  if (d == 0) fail(Errc::DegreeZero, "cross-check needs sigma-degree >= 1");

  BruteLinear bl = brute_roots_lin(l, budget);
  r.brute_nullity = bl.nullity;
  r.brute_proj = brute_roots_proj(l, budget);

  RootCountReport rep = root_count_report(l);
  r.nullity_generic = rep.nullity;
  r.proj_eigen = rep.roots_projective;
  r.proj_gcrc = rep.roots_projective_gcrc;
  r.norm_balance_ok = !rep.norm_balance_checked || rep.norm_balance;
  r.admissible =
      admissible_proj_counts(d, f.subfield_order()).count(r.brute_proj) > 0;

  SqMatrix am = a_matrix(l);
  CharPoly chi = char_poly(am);
  r.chi_certified = chi.base_field_certified();
  FieldElement ratio = l.coeff(0) / l.leading();
  if (d % 2 == 1) ratio = -ratio;
  r.det_identity = det(am) == norm(ratio);

  r.nullity_dickson = nullity(dickson_matrix(fold_degree(l)));

  r.case_tag = "generic";
  if (d == 2) {
    LinClassification lc = classify_lin_deg2(l);
    ProjClassification pc = classify_proj_deg2(l);
    r.nullity_closed = lc.nullity;
    r.proj_closed = pc.count;
    r.case_tag = pc.case_tag;
    if (!l.coeff(1).is_zero()) {
      r.closed_matrix_match =
          a_matrix_deg2(l) == am && chi_deg2(l).coeffs == chi.coeffs;
    }
  } else if (d == 3) {
    LinClassification lc = classify_lin_deg3(l);
    ProjClassification pc = classify_proj_deg3(l);
    r.nullity_closed = lc.nullity;
    r.proj_closed = pc.count;
    r.case_tag = pc.case_tag;
    if (!l.coeff(1).is_zero() && !l.coeff(2).is_zero()) {
      r.closed_matrix_match =
          a_matrix_deg3(l) == am && chi_deg3(l).coeffs == chi.coeffs;
    }
  }

  std::string note;
  auto check = [&note](bool ok, const char* what) {
    if (!ok && note.empty()) note = what;
    return ok;
  };
  bool ok = true;
  ok &= check(r.nullity_generic == r.brute_nullity, "nullity: companion route");
  ok &= check(r.nullity_dickson == r.brute_nullity, "nullity: Dickson route");
  ok &= check(!r.nullity_closed || *r.nullity_closed == r.brute_nullity,
              "nullity: closed form");
  ok &= check(bl.roots == rep.roots_linear, "linear root count");
  ok &= check(r.proj_eigen == r.brute_proj, "projective: eigen route");
  ok &= check(r.proj_gcrc == r.brute_proj, "projective: gcrc route");
  ok &= check(!r.proj_closed || *r.proj_closed == r.brute_proj,
              "projective: closed form");
  ok &= check(r.chi_certified, "char poly certificate");
  ok &= check(r.det_identity, "determinant identity");
  ok &= check(r.closed_matrix_match, "closed-form matrix");
  ok &= check(r.norm_balance_ok, "norm balance on a full kernel");
  ok &= check(r.admissible, "admissible projective count");
  r.agree = ok;
  r.note = std::move(note);
  return r;
}

SweepSummary run_sweep(const SweepPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  SweepSummary out;
  const auto& spec = plan.spec;
  const Field& f = *spec;
  const unsigned d = plan.degree;
  if (d == 0) fail(Errc::DegreeZero, "sweeps need sigma-degree >= 1");
  const uint64_t order = f.order();

  auto visit = [&](const std::vector<uint64_t>& enc) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(enc.size());
    for (uint64_t e : enc) coeffs.push_back(f.element(e));
    LinearizedPoly l(spec, std::move(coeffs));
    CrossCheck r = crosscheck(l, plan.budget);
    ++out.tuples;
    ++out.by_case[r.case_tag];
    ++out.by_proj_count[r.brute_proj];
    ++out.by_nullity[r.brute_nullity];
    if (!r.agree) {
      ++out.disagreements;
      if (out.examples.size() < 8)
        out.examples.push_back(format_poly(l) + " : " + r.note);
    }
  };

  if (plan.exhaustive) {
    std::vector<uint64_t> idx(d + 1, 0);
    idx[0] = idx[d] = 1;
    while (true) {
      visit(idx);
      unsigned pos = 0;
      while (pos <= d) {
        ++idx[pos];
        if (idx[pos] < order) break;
        idx[pos] = (pos == 0 || pos == d) ? 1 : 0;
        ++pos;
      }
      if (pos > d) break;
    }
  } else {
    std::mt19937_64 rng(plan.seed);
    std::vector<uint64_t> enc(d + 1);
    for (uint64_t i = 0; i < plan.samples; ++i) {
      enc[0] = 1 + draw_below(rng, order - 1);
      for (unsigned j = 1; j < d; ++j) enc[j] = draw_below(rng, order);
      enc[d] = 1 + draw_below(rng, order - 1);
      visit(enc);
    }
  }

  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

std::vector<LinearizedPoly> search_full_split(
    const std::shared_ptr<const Field>& spec, unsigned degree,
    uint64_t budget) {
  if (degree == 0) fail(Errc::DegreeZero, "search needs sigma-degree >= 1");
  const Field& f = *spec;
  const uint64_t order = f.order();
  const unsigned n = f.n();
  const uint64_t want = geometric_sum(f.subfield_order(), degree);
  std::vector<LinearizedPoly> hits;

  std::vector<uint64_t> idx(degree + 1, 0);
  idx[0] = 1;
  idx[degree] = f.one().value();
  while (true) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(idx.size());
    for (uint64_t e : idx) coeffs.push_back(f.element(e));
    LinearizedPoly l(spec, std::move(coeffs));

    bool candidate = true;
    if (degree == 2 && n >= 2) {
      candidate = classify_proj_deg2(l).count == want;
    } else if (degree == 3 && n >= 3 && !l.coeff(1).is_zero() &&
               !l.coeff(2).is_zero()) {
      Deg3State st = deg3_state(l);
      candidate = st.h[n - 1].is_zero() && st.h[n - 2].is_zero() &&
                  in_base_field(st.h[n]);
    }
    if (candidate && full_kernel_check(l).projective_full_split) {
      if (brute_roots_proj(l, budget) != want)
        fail(Errc::InternalCheck,
             "scalar product but the brute projective count disagrees");
      hits.push_back(l);
    }

    // advance a_0 fastest, then the middle coefficients; the leading
    // coefficient stays 1
    unsigned pos = 0;
    while (pos < degree) {
      ++idx[pos];
      if (idx[pos] < order) break;
      idx[pos] = pos == 0 ? 1 : 0;
      ++pos;
    }
    if (pos >= degree) break;
  }
  return hits;
}

uint64_t draw_below(std::mt19937_64& rng, uint64_t bound) {
  if (bound == 0) fail(Errc::BadRange, "draw_below needs a positive bound");
  const uint64_t limit = bound * (UINT64_MAX / bound);
  uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

}  // namespace skewroots
