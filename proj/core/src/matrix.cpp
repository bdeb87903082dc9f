// SPDX-License-Identifier: MIT
#include "skewroots/matrix.hpp"

#include <algorithm>
#include <bit>

namespace skewroots {

SqMatrix::SqMatrix(std::shared_ptr<const Field> spec, unsigned dim)
    : spec_(std::move(spec)), dim_(dim) {
  if (dim_ == 0) fail(Errc::BadRange, "matrix dimension must be positive");
  e_.assign(size_t{dim_} * dim_, spec_->zero());
}

SqMatrix SqMatrix::identity(std::shared_ptr<const Field> spec, unsigned dim) {
  return scalar(spec, dim, spec->one());
}

SqMatrix SqMatrix::scalar(std::shared_ptr<const Field> spec, unsigned dim,
                          const FieldElement& lambda) {
  SqMatrix m(std::move(spec), dim);
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = lambda;
  return m;
}

FieldElement SqMatrix::trace() const {
  FieldElement t = spec_->zero();
  for (unsigned i = 0; i < dim_; ++i) t = t + at(i, i);
  return t;
}

std::optional<FieldElement> SqMatrix::as_scalar() const {
  FieldElement lambda = at(0, 0);
  for (unsigned r = 0; r < dim_; ++r)
    for (unsigned c = 0; c < dim_; ++c) {
      if (r == c ? at(r, c) != lambda : !at(r, c).is_zero())
        return std::nullopt;
    }
  return lambda;
}

namespace {

void check_compatible(const SqMatrix& a, const SqMatrix& b) {
  if (a.spec().get() != b.spec().get())
    fail(Errc::MixedFields, "matrices over different field objects");
  if (a.dim() != b.dim())
    fail(Errc::BadRange, "matrix dimensions differ");
}

}  // namespace

SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) {
  check_compatible(a, b);
  unsigned d = a.dim();
  SqMatrix out(a.spec(), d);
  for (unsigned r = 0; r < d; ++r)
    for (unsigned c = 0; c < d; ++c) {
      FieldElement acc = a.spec()->zero();
      for (unsigned k = 0; k < d; ++k) acc = acc + a.at(r, k) * b.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

SqMatrix operator+(const SqMatrix& a, const SqMatrix& b) {
  check_compatible(a, b);
  SqMatrix out(a.spec(), a.dim());
  for (unsigned r = 0; r < a.dim(); ++r)
    for (unsigned c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  return out;
}

SqMatrix operator-(const SqMatrix& a, const SqMatrix& b) {
  check_compatible(a, b);
  SqMatrix out(a.spec(), a.dim());
  for (unsigned r = 0; r < a.dim(); ++r)
    for (unsigned c = 0; c < a.dim(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
  return out;
}

SqMatrix sigma_entrywise(const SqMatrix& a, int64_t k) {
  SqMatrix out(a.spec(), a.dim());
  for (unsigned r = 0; r < a.dim(); ++r)
    for (unsigned c = 0; c < a.dim(); ++c)
      out.at(r, c) = frobenius(a.at(r, c), k);
  return out;
}

unsigned rank(SqMatrix a) {
  unsigned d = a.dim();
  unsigned rk = 0;
  for (unsigned col = 0; col < d && rk < d; ++col) {
    unsigned sel = rk;
    while (sel < d && a.at(sel, col).is_zero()) ++sel;
    if (sel == d) continue;
    if (sel != rk)
      for (unsigned c = 0; c < d; ++c) std::swap(a.at(sel, c), a.at(rk, c));
    FieldElement piv_inv = a.spec()->inv(a.at(rk, col));
    for (unsigned c = col; c < d; ++c) a.at(rk, c) = a.at(rk, c) * piv_inv;
    for (unsigned r = rk + 1; r < d; ++r) {
      if (a.at(r, col).is_zero()) continue;
      FieldElement f = a.at(r, col);
      for (unsigned c = col; c < d; ++c)
        a.at(r, c) = a.at(r, c) - f * a.at(rk, c);
    }
    ++rk;
  }
  return rk;
}

unsigned nullity(const SqMatrix& a) { return a.dim() - rank(a); }

FieldElement det(SqMatrix a) {
  unsigned d = a.dim();
  FieldElement result = a.spec()->one();
  for (unsigned col = 0; col < d; ++col) {
    unsigned sel = col;
    while (sel < d && a.at(sel, col).is_zero()) ++sel;
    if (sel == d) return a.spec()->zero();
    if (sel != col) {
      for (unsigned c = 0; c < d; ++c) std::swap(a.at(sel, c), a.at(col, c));
      result = -result;
    }
    FieldElement piv = a.at(col, col);
    result = result * piv;
    FieldElement piv_inv = a.spec()->inv(piv);
    for (unsigned r = col + 1; r < d; ++r) {
      if (a.at(r, col).is_zero()) continue;
      FieldElement f = a.at(r, col) * piv_inv;
      for (unsigned c = col; c < d; ++c)
        a.at(r, c) = a.at(r, c) - f * a.at(col, c);
    }
  }
  return result;
}

// --- characteristic polynomial --------------------------------------------

namespace {

using PolyFF = std::vector<FieldElement>;  // ascending, may be empty for zero

PolyFF poly_add(const Field& f, const PolyFF& a, const PolyFF& b) {
  PolyFF out(std::max(a.size(), b.size()), f.zero());
  for (size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

PolyFF poly_mul(const Field& f, const PolyFF& a, const PolyFF& b) {
  if (a.empty() || b.empty()) return {};
  PolyFF out(a.size() + b.size() - 1, f.zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = out[i + j] + a[i] * b[j];
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

PolyFF poly_neg(const Field& f, PolyFF a) {
  for (auto& c : a) c = f.neg(c);
  return a;
}

}  // namespace

CharPoly char_poly(const SqMatrix& a) {
  unsigned d = a.dim();
  if (d > kMaxCharPolyDim)
    fail(Errc::DimTooLarge,
         "characteristic polynomial limited to dimension " +
             std::to_string(kMaxCharPolyDim));
  const Field& f = *a.spec();

  // entries of xI - A as univariate polynomials
  std::vector<PolyFF> entries(size_t{d} * d);
  for (unsigned r = 0; r < d; ++r)
    for (unsigned c = 0; c < d; ++c) {
      PolyFF e;
      FieldElement low = f.neg(a.at(r, c));
      if (r == c) {
        e = {low, f.one()};
      } else if (!low.is_zero()) {
        e = {low};
      }
      entries[size_t{r} * d + c] = std::move(e);
    }

  // Laplace expansion along the first unused row, memoized on the set of
  // used columns (the row index is the popcount of the mask).
  std::vector<PolyFF> memo(size_t{1} << d);
  std::vector<bool> have(size_t{1} << d, false);
  auto full = (uint32_t{1} << d) - 1;
  memo[full] = {f.one()};
  have[full] = true;

  auto rec = [&](auto&& self, uint32_t used) -> const PolyFF& {
    if (have[used]) return memo[used];
    unsigned row = static_cast<unsigned>(std::popcount(used));
    PolyFF acc;
    bool negApply = false;
    for (unsigned c = 0; c < d; ++c) {
      if (used & (uint32_t{1} << c)) continue;
      const PolyFF& entry = entries[size_t{row} * d + c];
      if (!entry.empty()) {
        PolyFF term = poly_mul(f, entry, self(self, used | (uint32_t{1} << c)));
        if (negApply) term = poly_neg(f, std::move(term));
        acc = poly_add(f, acc, term);
      }
      negApply = !negApply;
    }
    memo[used] = std::move(acc);
    have[used] = true;
    return memo[used];
  };

  PolyFF chi = rec(rec, 0);
  chi.resize(d + 1, f.zero());

  CharPoly out;
  out.coeffs = std::move(chi);
  out.in_base.reserve(out.coeffs.size());
  for (const auto& c : out.coeffs) out.in_base.push_back(in_base_field(c));
  if (out.coeffs.back() != f.one())
    fail(Errc::InternalCheck, "characteristic polynomial is not monic");
  return out;
}

FieldElement CharPoly::eval(const FieldElement& x) const {
  const Field& f = x.field();
  FieldElement acc = f.zero();
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

EigenProfile eigen_profile(const SqMatrix& a) {
  const Field& f = *a.spec();
  if (f.base_field().empty())
    fail(Errc::FieldTooLarge, "middle field too large to enumerate");
  CharPoly chi = char_poly(a);

  EigenProfile profile;
  std::vector<FieldElement> work = chi.coeffs;
  unsigned resolved = 0;
  for (const FieldElement& lambda : f.base_field()) {
    unsigned ma = 0;
    while (work.size() > 1) {
      // synthetic division of work by (x - lambda)
      std::vector<FieldElement> quot(work.size() - 1, f.zero());
      FieldElement carry = f.zero();
      for (size_t i = work.size(); i-- > 1;) {
        carry = work[i] + carry * lambda;
        quot[i - 1] = carry;
      }
      FieldElement rem = work[0] + carry * lambda;
      if (!rem.is_zero()) break;
      work = std::move(quot);
      ++ma;
    }
    if (ma == 0) continue;
    resolved += ma;
    unsigned mg = nullity(a - SqMatrix::scalar(a.spec(), a.dim(), lambda));
    if (mg == 0 || mg > ma)
      fail(Errc::InternalCheck, "eigenvalue multiplicities are inconsistent");
    profile.by_eigenvalue[lambda.value()] = {ma, mg};
  }
  profile.unresolved_degree = a.dim() - resolved;
  return profile;
}

std::optional<std::vector<FieldElement>> solve_linear(
    std::vector<std::vector<FieldElement>> m, std::vector<FieldElement> rhs) {
  size_t rows = m.size();
  if (rows == 0 || rhs.size() != rows) fail(Errc::BadRange, "bad system shape");
  size_t cols = m[0].size();
  const Field& f = rhs[0].field();

  size_t rk = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < cols && rk < rows; ++col) {
    size_t sel = rk;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rk]);
    std::swap(rhs[sel], rhs[rk]);
    FieldElement piv_inv = f.inv(m[rk][col]);
    for (size_t c = col; c < cols; ++c) m[rk][c] = m[rk][c] * piv_inv;
    rhs[rk] = rhs[rk] * piv_inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rk || m[r][col].is_zero()) continue;
      FieldElement fac = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - fac * m[rk][c];
      rhs[r] = rhs[r] - fac * rhs[rk];
    }
    pivot_col.push_back(col);
    ++rk;
  }
  for (size_t r = rk; r < rows; ++r)
    if (!rhs[r].is_zero()) return std::nullopt;

  std::vector<FieldElement> x(cols, f.zero());
  for (size_t r = 0; r < rk; ++r) x[pivot_col[r]] = rhs[r];
  return x;
}

}  // namespace skewroots
