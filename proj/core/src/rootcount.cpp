// SPDX-License-Identifier: MIT
#include "skewroots/rootcount.hpp"

namespace skewroots {

unsigned nullity_of(const LinearizedPoly& l) {
  if (l.is_zero()) fail(Errc::ZeroPolynomial, "nullity of the zero map");
  LinearizedPoly norm = normalize_constant(l);
  if (*norm.degree() == 0) return 0;  // injective
  const auto& spec = norm.spec();
  SqMatrix a = a_matrix(norm);
  return nullity(a - SqMatrix::identity(spec, a.dim()));
}

unsigned nullity_twisted(const LinearizedPoly& l, const FieldElement& alpha) {
  if (l.is_zero()) fail(Errc::ZeroPolynomial, "nullity of the zero map");
  if (alpha.is_zero()) fail(Errc::ZeroAlpha, "twist by zero");
  LinearizedPoly nl = normalize_constant(l);
  if (*nl.degree() == 0) return 0;
  const auto& spec = nl.spec();
  SqMatrix a = a_matrix(nl);
  FieldElement lambda = norm(alpha);
  return nullity(a - SqMatrix::scalar(spec, a.dim(), lambda));
}

uint64_t geometric_sum(uint64_t q, unsigned g) {
  uint64_t acc = 0, pw = 1;
  for (unsigned i = 0; i < g; ++i) {
    acc += pw;
    pw *= q;
  }
  return acc;
}

uint64_t count_proj_roots(const LinearizedPoly& l) {
  if (l.is_zero() || *l.degree() == 0)
    fail(Errc::DegreeZero, "projective reading needs sigma-degree >= 1");
  if (l.coeff(0).is_zero())
    fail(Errc::ZeroConstant,
         "projective reading is undefined for zero constant coefficient");
  const auto& spec = l.spec();
  EigenProfile profile = eigen_profile(a_matrix(l));
  uint64_t q = spec->subfield_order();
  uint64_t total = 0;
  for (const auto& [value, mult] : profile.by_eigenvalue)
    total += geometric_sum(q, mult.geometric);
  return total;
}

std::map<uint64_t, unsigned> gcrc_degrees(const LinearizedPoly& l) {
  if (l.is_zero() || *l.degree() == 0)
    fail(Errc::DegreeZero, "projective reading needs sigma-degree >= 1");
  if (l.coeff(0).is_zero())
    fail(Errc::ZeroConstant,
         "projective reading is undefined for zero constant coefficient");
  const auto& spec = l.spec();
  if (spec->base_field().empty())
    fail(Errc::FieldTooLarge, "middle field too large to enumerate");
  std::map<uint64_t, unsigned> out;
  for (const FieldElement& lambda : spec->base_field()) {
    if (lambda.is_zero()) continue;
    LinearizedPoly central =
        LinearizedPoly::monomial(spec, spec->n(), spec->one()) +
        LinearizedPoly::monomial(spec, 0, spec->neg(lambda));
    unsigned d = *gcrc(l, central).degree();
    if (d > 0) out[lambda.value()] = d;
  }
  return out;
}

uint64_t count_proj_roots_gcrc(const LinearizedPoly& l) {
  uint64_t q = l.spec()->subfield_order();
  uint64_t total = 0;
  for (const auto& [value, d] : gcrc_degrees(l)) total += geometric_sum(q, d);
  return total;
}

FullKernelResult full_kernel_check(const LinearizedPoly& l) {
  FullKernelResult out;
  SqMatrix a = a_matrix(l);
  auto sc = a.as_scalar();
  if (!sc) return out;
  if (!in_base_field(*sc))
    fail(Errc::InternalCheck, "scalar product with entry outside F_q");
  out.projective_full_split = true;
  out.lambda = *sc;
  out.linear_full_kernel = (*sc == l.spec()->one());
  return out;
}

const char* to_string(FullKernelResult::Tag tag) {
  switch (tag) {
    case FullKernelResult::Tag::FullKernelLinear: return "FullKernelLinear";
    case FullKernelResult::Tag::FullSplitProjective:
      return "FullSplitProjective";
    case FullKernelResult::Tag::Neither: return "Neither";
  }
  return "Neither";
}

bool norm_balance_holds(const LinearizedPoly& l) {
  if (l.is_zero() || *l.degree() == 0)
    fail(Errc::DegreeZero, "norm balance needs sigma-degree >= 1");
  const auto& spec = l.spec();
  unsigned d = *l.degree();
  FieldElement lhs = norm(l.coeff(0));
  FieldElement rhs = norm(l.leading());
  if ((uint64_t{spec->n()} * d) % 2 == 1) rhs = spec->neg(rhs);
  return lhs == rhs;
}

std::set<uint64_t> admissible_proj_counts(unsigned d, uint64_t q) {
  std::vector<std::set<uint64_t>> sums(d + 1);
  sums[0] = {0};
  for (unsigned total = 1; total <= d; ++total) {
    sums[total] = sums[total - 1];
    for (unsigned part = 1; part <= total; ++part)
      for (uint64_t s : sums[total - part])
        sums[total].insert(s + geometric_sum(q, part));
  }
  return sums[d];
}

RootCountReport root_count_report(const LinearizedPoly& l) {
  RootCountReport rep;
  const auto& spec = l.spec();
  uint64_t q = spec->subfield_order();

  SqMatrix a = a_matrix(l);  // validates degree and constant coefficient
  rep.profile = eigen_profile(a);
  rep.roots_projective = 0;
  for (const auto& [value, mult] : rep.profile.by_eigenvalue)
    rep.roots_projective += geometric_sum(q, mult.geometric);

  rep.gcrc_degree_by_lambda = gcrc_degrees(l);
  rep.roots_projective_gcrc = 0;
  for (const auto& [value, deg] : rep.gcrc_degree_by_lambda)
    rep.roots_projective_gcrc += geometric_sum(q, deg);

  auto it = rep.profile.by_eigenvalue.find(spec->one().value());
  rep.nullity = it == rep.profile.by_eigenvalue.end() ? 0 : it->second.geometric;
  rep.roots_linear = 1;
  for (unsigned i = 0; i < rep.nullity; ++i) rep.roots_linear *= q;

  rep.kernel_class = full_kernel_check(l);
  if (rep.nullity == *l.degree()) {
    rep.norm_balance_checked = true;
    rep.norm_balance = norm_balance_holds(l);
  }
  rep.methods = {"companion-eigen", "gcrc-degrees"};
  rep.methods_agree = rep.roots_projective == rep.roots_projective_gcrc &&
                      admissible_proj_counts(*l.degree(), q)
                          .count(rep.roots_projective) > 0;
  return rep;
}

}  // namespace skewroots
