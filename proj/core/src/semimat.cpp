// SPDX-License-Identifier: MIT
#include "skewroots/semimat.hpp"

namespace skewroots {

SqMatrix companion(const LinearizedPoly& l) {
  if (l.is_zero() || *l.degree() == 0)
    fail(Errc::DegreeZero, "companion matrix needs sigma-degree >= 1");
  const auto& spec = l.spec();
  unsigned d = *l.degree();
  FieldElement lead = l.leading();
  if (lead.is_zero()) fail(Errc::ZeroLeading, "leading coefficient is zero");
  FieldElement lead_inv = spec->inv(lead);

  SqMatrix c(spec, d);
  for (unsigned i = 0; i + 1 < d; ++i) c.at(i + 1, i) = spec->one();
  for (unsigned r = 0; r < d; ++r)
    c.at(r, d - 1) = spec->neg(l.coeff(r) * lead_inv);
  return c;
}

SqMatrix partial_product(const LinearizedPoly& l, unsigned k) {
  const auto& spec = l.spec();
  if (k > spec->n())
    fail(Errc::BadRange, "partial product index must lie in [0, n]");
  SqMatrix c = companion(l);
  SqMatrix right = SqMatrix::identity(spec, c.dim());
  SqMatrix left = right;
  for (unsigned step = 0; step < k; ++step) {
    right = right * sigma_entrywise(c, static_cast<int64_t>(step));
    left = c * sigma_entrywise(left, 1);
  }
  if (right != left)
    fail(Errc::InternalCheck, "product recursions disagree");
  return right;
}

SqMatrix a_matrix(const LinearizedPoly& l) {
  if (l.is_zero() || *l.degree() == 0)
    fail(Errc::DegreeZero, "companion matrix needs sigma-degree >= 1");
  if (l.coeff(0).is_zero())
    fail(Errc::ZeroConstant,
         "constant coefficient is zero; strip it with normalize_constant");
  return partial_product(l, l.spec()->n());
}

}  // namespace skewroots
