// SPDX-License-Identifier: MIT
#include "skewroots/skewpoly.hpp"

#include <algorithm>

namespace skewroots {

LinearizedPoly::LinearizedPoly(std::shared_ptr<const Field> spec,
                               std::vector<FieldElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (&c.field() != spec_.get())
      fail(Errc::MixedFields, "coefficient from a different field object");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LinearizedPoly LinearizedPoly::zero(std::shared_ptr<const Field> spec) {
  return LinearizedPoly(std::move(spec), {});
}

LinearizedPoly LinearizedPoly::monomial(std::shared_ptr<const Field> spec,
                                        unsigned k, const FieldElement& c) {
  std::vector<FieldElement> coeffs(k + 1, spec->zero());
  coeffs[k] = c;
  return LinearizedPoly(std::move(spec), std::move(coeffs));
}

std::optional<unsigned> LinearizedPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

FieldElement LinearizedPoly::coeff(unsigned i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return spec_->zero();
}

FieldElement LinearizedPoly::leading() const {
  if (coeffs_.empty()) fail(Errc::ZeroPolynomial, "zero polynomial");
  return coeffs_.back();
}

LinearizedPoly LinearizedPoly::scaled(const FieldElement& c) const {
  std::vector<FieldElement> out(coeffs_);
  for (auto& a : out) a = c * a;
  return LinearizedPoly(spec_, std::move(out));
}

LinearizedPoly LinearizedPoly::monic() const {
  return scaled(spec_->inv(leading()));
}

FieldElement LinearizedPoly::eval_linear(const FieldElement& x) const {
  FieldElement acc = spec_->zero();
  FieldElement conj = x;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) conj = frobenius(conj, 1);
    if (!coeffs_[i].is_zero()) acc = acc + coeffs_[i] * conj;
  }
  return acc;
}

FieldElement LinearizedPoly::eval_projective(const FieldElement& y) const {
  FieldElement acc = spec_->zero();
  FieldElement bracket = spec_->one();  // y^[i]
  FieldElement conj = y;                // y^(sigma^(i-1)) while stepping
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) {
      bracket = bracket * conj;
      conj = frobenius(conj, 1);
    }
    if (!coeffs_[i].is_zero()) acc = acc + coeffs_[i] * bracket;
  }
  return acc;
}

LinearizedPoly operator+(const LinearizedPoly& a, const LinearizedPoly& b) {
  if (a.spec().get() != b.spec().get())
    fail(Errc::MixedFields, "polynomials over different field objects");
  const auto& spec = a.spec();
  std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()),
                                spec->zero());
  for (size_t i = 0; i < a.coeffs().size(); ++i) out[i] = out[i] + a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) out[i] = out[i] + b.coeffs()[i];
  return LinearizedPoly(spec, std::move(out));
}

LinearizedPoly operator-(const LinearizedPoly& a, const LinearizedPoly& b) {
  return a + b.scaled(b.spec()->from_int(-1));
}

LinearizedPoly compose(const LinearizedPoly& l, const LinearizedPoly& m) {
  if (l.spec().get() != m.spec().get())
    fail(Errc::MixedFields, "polynomials over different field objects");
  const auto& spec = l.spec();
  if (l.is_zero() || m.is_zero()) return LinearizedPoly::zero(spec);
  auto a = l.coeffs();
  auto b = m.coeffs();
  std::vector<FieldElement> out(a.size() + b.size() - 1, spec->zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      FieldElement tw = frobenius(b[j], static_cast<int64_t>(i));
      out[i + j] = out[i + j] + a[i] * tw;
    }
  }
  return LinearizedPoly(spec, std::move(out));
}

RightDivision divide_right(const LinearizedPoly& m, const LinearizedPoly& l) {
  if (m.spec().get() != l.spec().get())
    fail(Errc::MixedFields, "polynomials over different field objects");
  if (l.is_zero()) fail(Errc::ZeroDivisor, "right division by zero");
  const auto& spec = m.spec();
  unsigned dl = *l.degree();

  std::vector<FieldElement> rem(m.coeffs().begin(), m.coeffs().end());
  std::vector<FieldElement> quot;
  if (rem.size() > dl) quot.assign(rem.size() - dl, spec->zero());

  while (rem.size() > dl && rem.size() >= 1) {
    // drop an exactly-zero top first
    if (rem.back().is_zero()) {
      rem.pop_back();
      continue;
    }
    unsigned e = static_cast<unsigned>(rem.size() - 1);
    unsigned j = e - dl;
    FieldElement lead_tw = frobenius(l.leading(), j);
    FieldElement q = rem[e] / lead_tw;
    quot[j] = q;
    // subtract (q x^(sigma^j)) o L
    for (unsigned i = 0; i <= dl; ++i) {
      FieldElement t = q * frobenius(l.coeffs()[i], j);
      rem[j + i] = rem[j + i] - t;
    }
    rem.pop_back();  // the leading term cancels by construction
  }
  return RightDivision{LinearizedPoly(spec, std::move(quot)),
                       LinearizedPoly(spec, std::move(rem))};
}

LinearizedPoly gcrc(const LinearizedPoly& l, const LinearizedPoly& m) {
  if (l.spec().get() != m.spec().get())
    fail(Errc::MixedFields, "polynomials over different field objects");
  if (l.is_zero() && m.is_zero())
    fail(Errc::BothZero, "gcrc of two zero polynomials");
  LinearizedPoly a = l, b = m;
  while (!b.is_zero()) {
    LinearizedPoly r = divide_right(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

LinearizedPoly lclc(const LinearizedPoly& l, const LinearizedPoly& m) {
  if (l.spec().get() != m.spec().get())
    fail(Errc::MixedFields, "polynomials over different field objects");
  if (l.is_zero() || m.is_zero())
    fail(Errc::ZeroInput, "lclc requires two non-zero polynomials");
  const auto& spec = l.spec();
  unsigned dl = *l.degree();
  unsigned dm = *m.degree();
  unsigned dg = *gcrc(l, m).degree();
  unsigned target = dl + dm - dg;
  if (target == 0) return LinearizedPoly::monomial(spec, 0, spec->one());

  // A monic candidate N of the target degree is determined by requiring a
  // zero remainder against both inputs.  The remainder map is linear in the
  // coefficients of N, one column per x^(sigma^i) mod divisor.
  std::vector<std::vector<FieldElement>> rows(dl + dm,
                                              std::vector<FieldElement>());
  for (auto& r : rows) r.assign(target, spec->zero());
  std::vector<FieldElement> rhs(dl + dm, spec->zero());

  auto fill = [&](const LinearizedPoly& divisor, unsigned row_base,
                  unsigned rows_count) {
    for (unsigned i = 0; i <= target; ++i) {
      LinearizedPoly mono = LinearizedPoly::monomial(spec, i, spec->one());
      LinearizedPoly rem = divide_right(mono, divisor).remainder;
      for (unsigned r = 0; r < rows_count; ++r) {
        FieldElement v = rem.coeff(r);
        if (i == target)
          rhs[row_base + r] = spec->neg(v);
        else
          rows[row_base + r][i] = v;
      }
    }
  };
  fill(l, 0, dl);
  fill(m, dl, dm);

  auto sol = solve_linear(std::move(rows), std::move(rhs));
  if (!sol)
    fail(Errc::InternalCheck, "no composition of the predicted degree");
  std::vector<FieldElement> coeffs = std::move(*sol);
  coeffs.push_back(spec->one());
  LinearizedPoly out(spec, std::move(coeffs));
  if (!divide_right(out, l).remainder.is_zero() ||
      !divide_right(out, m).remainder.is_zero())
    fail(Errc::InternalCheck, "candidate is not a common left composition");
  return out;
}

LinearizedPoly twist(const LinearizedPoly& l, const FieldElement& alpha) {
  if (&alpha.field() != l.spec().get())
    fail(Errc::MixedFields, "twist scalar from a different field object");
  if (alpha.is_zero()) fail(Errc::ZeroAlpha, "twist by zero");
  const auto& spec = l.spec();
  std::vector<FieldElement> out(l.coeffs().begin(), l.coeffs().end());
  FieldElement bracket = spec->one();  // alpha^[i]
  FieldElement conj = alpha;
  for (size_t i = 0; i < out.size(); ++i) {
    if (i > 0) {
      bracket = bracket * conj;
      conj = frobenius(conj, 1);
    }
    out[i] = out[i] * bracket;
  }
  return LinearizedPoly(spec, std::move(out));
}

LinearizedPoly normalize_constant(const LinearizedPoly& l) {
  if (l.is_zero()) fail(Errc::ZeroPolynomial, "cannot normalize zero");
  auto c = l.coeffs();
  size_t k = 0;
  while (c[k].is_zero()) ++k;
  if (k == 0) return l;
  const auto& spec = l.spec();
  std::vector<FieldElement> out;
  out.reserve(c.size() - k);
  for (size_t i = k; i < c.size(); ++i)
    out.push_back(frobenius(c[i], -static_cast<int64_t>(k)));
  return LinearizedPoly(spec, std::move(out));
}

LinearizedPoly fold_degree(const LinearizedPoly& l) {
  const auto& spec = l.spec();
  unsigned n = spec->n();
  if (l.is_zero() || *l.degree() < n) return l;
  std::vector<FieldElement> out(n, spec->zero());
  auto c = l.coeffs();
  for (size_t i = 0; i < c.size(); ++i) out[i % n] = out[i % n] + c[i];
  return LinearizedPoly(spec, std::move(out));
}

SqMatrix dickson_matrix(const LinearizedPoly& l) {
  const auto& spec = l.spec();
  unsigned n = spec->n();
  if (!l.is_zero() && *l.degree() >= n)
    fail(Errc::DegreeTooLarge,
         "sigma-degree must be below n; fold higher terms first");
  SqMatrix d(spec, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      unsigned idx = (j + n - i % n) % n;
      d.at(i, j) = frobenius(l.coeff(idx), i);
    }
  return d;
}

}  // namespace skewroots
