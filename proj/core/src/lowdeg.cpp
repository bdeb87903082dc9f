// SPDX-License-Identifier: MIT
#include "skewroots/lowdeg.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace skewroots {

namespace {

void require_degree(const LinearizedPoly& l, unsigned d) {
  if (!l.degree() || *l.degree() != d)
    fail(Errc::WrongDegree, "polynomial does not have the expected sigma-degree");
}

// a c != 0 for degree 2, a d != 0 for degree 3.
void require_outer(const FieldElement& lo, const FieldElement& hi) {
  if (lo.is_zero() || hi.is_zero())
    fail(Errc::ZeroOuterCoefficient,
         "outermost coefficients must be non-zero (strip a zero constant "
         "with normalize_constant first)");
}

}  // namespace

std::vector<FieldElement> deg2_sequence(const FieldElement& u, unsigned k_max) {
  const Field& f = u.field();
  std::vector<FieldElement> g;
  g.reserve(k_max + 1);
  g.push_back(f.one());
  if (k_max >= 1) g.push_back(-f.one());
  FieldElement uc = u;  // u^(sigma^(k-2)) when computing g[k]
  for (unsigned k = 2; k <= k_max; ++k) {
    g.push_back(-(g[k - 1] + uc * g[k - 2]));
    uc = frobenius(uc, 1);
  }
  // Same sequence with the twist moved from the multiplier to the history.
  std::vector<FieldElement> t;
  t.reserve(k_max + 1);
  t.push_back(f.one());
  if (k_max >= 1) t.push_back(-f.one());
  for (unsigned k = 2; k <= k_max; ++k)
    t.push_back(-(frobenius(t[k - 1], 1) + u * frobenius(t[k - 2], 2)));
  if (g != t) fail(Errc::InternalCheck, "degree-2 recursion variants disagree");
  return g;
}

Deg2State deg2_state(const LinearizedPoly& l) {
  require_degree(l, 2);
  const Field& f = *l.spec();
  const unsigned n = f.n();
  if (n < 2) fail(Errc::UnsupportedN, "degree-2 closed forms need n >= 2");
  FieldElement a = l.coeff(0), b = l.coeff(1), c = l.coeff(2);
  require_outer(a, c);
  if (b.is_zero())
    fail(Errc::ZeroMiddleCoefficient,
         "the middle coefficient is zero; use the norm criteria instead");

  FieldElement u = frobenius(a, 1) * c / (frobenius(b, 1) * b);
  std::vector<FieldElement> g = deg2_sequence(u, n);

  if (frobenius(g[n], 2) - g[n] != frobenius(g[n - 1], 1) - frobenius(g[n - 1], 2))
    fail(Errc::InternalCheck, "degree-2 boundary identity failed");
  FieldElement nu = norm(u);
  if (frobenius(u, -1) *
          (frobenius(g[n - 1], 1) * g[n - 1] - g[n] * frobenius(g[n - 2], 1)) !=
      nu)
    fail(Errc::InternalCheck, "degree-2 norm identity failed");

  FieldElement nbc = norm(b / c);
  FieldElement trace = nbc * (g[n] + frobenius(g[n], 1) + frobenius(g[n - 1], 1));
  FieldElement det = norm(a / c);
  if (det != nbc * nbc * nu)
    fail(Errc::InternalCheck, "determinant factorization failed");
  if (!in_base_field(trace) || !in_base_field(det))
    fail(Errc::InternalCheck, "trace or determinant left the middle field");

  Deg2State st{u, std::move(g), trace, det, std::nullopt, std::nullopt};
  if (f.p() != 2) {
    st.delta = trace * trace - f.from_int(4) * det;
  } else if (!trace.is_zero()) {
    st.lambda_ratio = det / (trace * trace);
  }
  return st;
}

SqMatrix a_matrix_deg2(const LinearizedPoly& l) {
  Deg2State st = deg2_state(l);
  const auto& spec = l.spec();
  const unsigned n = spec->n();
  FieldElement a = l.coeff(0), b = l.coeff(1), c = l.coeff(2);
  FieldElement nbc = norm(b / c);
  SqMatrix mat(spec, 2);
  mat.at(0, 0) = nbc * -(frobenius(st.u, -1) * frobenius(st.g[n - 2], 1));
  mat.at(0, 1) = nbc * -(a / b * frobenius(st.g[n - 1], 1));
  mat.at(1, 0) = nbc * frobenius(c / b, -1) * st.g[n - 1];
  mat.at(1, 1) = nbc * st.g[n];
  return mat;
}

CharPoly chi_deg2(const LinearizedPoly& l) {
  Deg2State st = deg2_state(l);
  const Field& f = *l.spec();
  CharPoly chi;
  chi.coeffs = {st.det, -st.trace, f.one()};
  for (const FieldElement& c : chi.coeffs)
    chi.in_base.push_back(in_base_field(c));
  return chi;
}

FieldElement trace_formula_deg2(const LinearizedPoly& l, unsigned selector) {
  require_degree(l, 2);
  const Field& f = *l.spec();
  if (selector < 4 || selector > 7 || f.n() != selector)
    fail(Errc::UnsupportedN, "trace formulas exist for n = 4..7 and the "
                             "selector must match the field");
  FieldElement a = l.coeff(0), b = l.coeff(1), c = l.coeff(2);
  require_outer(a, c);
  if (b.is_zero())
    fail(Errc::ZeroMiddleCoefficient, "the trace formulas require b != 0");
  FieldElement u = frobenius(a, 1) * c / (frobenius(b, 1) * b);
  FieldElement one = f.one();
  FieldElement inner = f.zero();
  switch (selector) {
    case 4:
      inner = one - partial_trace(u, 4) + partial_trace(u * frobenius(u, 2), 2);
      break;
    case 5:
      inner = partial_trace(u - u * frobenius(u, 2), 5) - one;
      break;
    case 6:
      inner = one - partial_trace(u - u * frobenius(u, 2), 6) +
              partial_trace(u * frobenius(u, 3), 3) -
              partial_trace(u * frobenius(u, 2) * frobenius(u, 4), 2);
      break;
    case 7:
      inner = partial_trace(u - frobenius(u, 2) * u - frobenius(u, 3) * u +
                                frobenius(u, 4) * frobenius(u, 2) * u,
                            7) -
              one;
      break;
  }
  return norm(b / c) * inner;
}

ProjClassification classify_proj_deg2(const LinearizedPoly& l) {
  require_degree(l, 2);
  const Field& f = *l.spec();
  FieldElement a = l.coeff(0), b = l.coeff(1), c = l.coeff(2);
  require_outer(a, c);
  const uint64_t q = f.subfield_order();

  if (b.is_zero()) {
    // Roots of y^(sigma+1) = -a/c.  The map y -> y^(q^s + 1) on the
    // nonzero elements has image of index gcd(q^s + 1, q^n - 1), which is
    // gcd(2, q - 1) for odd n and q + 1 for even n, and every attained
    // value is hit by exactly that many y.
    FieldElement y = -a / c;
    if (f.n() % 2 == 1) {
      if (f.p() == 2) return {1, "deg2-proj:b0:odd-n:one"};
      if (is_nonzero_square_in_base(norm(y)))
        return {2, "deg2-proj:b0:odd-n:two"};
      return {0, "deg2-proj:b0:odd-n:none"};
    }
    if (in_base_field(norm_to_quadratic(y)))
      return {q + 1, "deg2-proj:b0:even-n:full-split"};
    return {0, "deg2-proj:b0:even-n:none"};
  }

  Deg2State st = deg2_state(l);
  const unsigned n = f.n();
  // The characteristic polynomial x^2 - trace x + det has a double root
  // exactly when delta = 0 (q odd) or trace = 0 (q even); in the double
  // case the count is q + 1 when the product matrix is scalar, which
  // happens exactly when g[n-1] = 0, and 1 otherwise.
  if (f.p() != 2) {
    const FieldElement& delta = *st.delta;
    if (delta.is_zero()) {
      if (st.g[n - 1].is_zero()) {
        if (!in_base_field(st.g[n]))
          fail(Errc::InternalCheck, "scalar product with g[n] outside F_q");
        return {q + 1, "deg2-proj:odd-q:repeated:full-split"};
      }
      return {1, "deg2-proj:odd-q:repeated:one"};
    }
    if (is_nonzero_square_in_base(delta)) return {2, "deg2-proj:odd-q:two"};
    return {0, "deg2-proj:odd-q:none"};
  }

  if (st.trace.is_zero()) {
    if (st.g[n - 1].is_zero()) {
      if (!in_base_field(st.g[n]))
        fail(Errc::InternalCheck, "scalar product with g[n] outside F_q");
      return {q + 1, "deg2-proj:even-q:repeated:full-split"};
    }
    return {1, "deg2-proj:even-q:repeated:one"};
  }
  if (absolute_trace_is_one(*st.lambda_ratio))
    return {0, "deg2-proj:even-q:none"};
  return {2, "deg2-proj:even-q:two"};
}

LinClassification classify_lin_deg2(const LinearizedPoly& l) {
  require_degree(l, 2);
  const Field& f = *l.spec();
  FieldElement a = l.coeff(0), b = l.coeff(1), c = l.coeff(2);
  require_outer(a, c);
  if (b.is_zero()) return {nullity_of(l), "deg2-lin:b0:generic"};

  Deg2State st = deg2_state(l);
  const unsigned n = f.n();
  FieldElement nbc = norm(b / c);
  if (st.g[n - 1].is_zero() && nbc * st.g[n] == f.one())
    return {2, "deg2-lin:full-kernel"};
  if ((f.one() - st.trace + st.det).is_zero())
    return {1, "deg2-lin:one-dim"};
  return {0, "deg2-lin:trivial"};
}

std::vector<FieldElement> deg3_sequence(const FieldElement& w,
                                        const FieldElement& z, unsigned k_max) {
  const Field& f = w.field();
  std::vector<FieldElement> h;
  h.reserve(k_max + 1);
  h.push_back(f.one());
  if (k_max >= 1) h.push_back(-f.one());
  if (k_max >= 2) h.push_back(f.one() - z);
  FieldElement wc = w, zc = z;  // w, z to the power sigma^(k-2)
  FieldElement zc_prev = z;     // z^(sigma^(k-3))
  for (unsigned k = 3; k <= k_max; ++k) {
    wc = frobenius(wc, 1);
    zc_prev = zc;
    zc = frobenius(zc, 1);
    h.push_back(-(h[k - 1] + zc * h[k - 2] + wc * zc * zc_prev * h[k - 3]));
  }
  std::vector<FieldElement> t;
  t.reserve(k_max + 1);
  t.push_back(f.one());
  if (k_max >= 1) t.push_back(-f.one());
  if (k_max >= 2) t.push_back(f.one() - z);
  FieldElement wzz = frobenius(w, 1) * frobenius(z, 1) * z;  // w^sigma z^(sigma+1)
  for (unsigned k = 3; k <= k_max; ++k)
    t.push_back(-(frobenius(t[k - 1], 1) + z * frobenius(t[k - 2], 2) +
                  wzz * frobenius(t[k - 3], 3)));
  if (h != t) fail(Errc::InternalCheck, "degree-3 recursion variants disagree");
  return h;
}

Deg3State deg3_state(const LinearizedPoly& l) {
  require_degree(l, 3);
  const Field& f = *l.spec();
  const unsigned n = f.n();
  if (n < 3) fail(Errc::UnsupportedN, "degree-3 closed forms need n >= 3");
  FieldElement a = l.coeff(0), b = l.coeff(1), c = l.coeff(2), d = l.coeff(3);
  require_outer(a, d);
  if (b.is_zero() || c.is_zero())
    fail(Errc::ZeroInnerCoefficient,
         "the inner coefficients must be non-zero for the closed forms");

  FieldElement w = frobenius(a, 1) * c / (frobenius(b, 1) * b);
  FieldElement z = frobenius(b, 1) * d / (frobenius(c, 1) * c);
  if (w * z != frobenius(a, 1) * d / (b * frobenius(c, 1)))
    fail(Errc::InternalCheck, "invariant product identity failed");
  FieldElement wzz = frobenius(w, 1) * frobenius(z, 1) * z;
  if (wzz != frobenius(a, 2) * frobenius(d, 1) * d /
                 (frobenius(c, 2) * frobenius(c, 1) * c))
    fail(Errc::InternalCheck, "twisted invariant product identity failed");

  std::vector<FieldElement> h = deg3_sequence(w, z, n);

  // Boundary identity tying the two recursions together at k = n.
  if (frobenius(h[n], 3) + frobenius(h[n - 1], 3) +
          frobenius(z, 1) * frobenius(h[n - 2], 3) !=
      h[n] + frobenius(h[n - 1], 1) + z * frobenius(h[n - 2], 2))
    fail(Errc::InternalCheck, "degree-3 boundary identity failed");

  FieldElement ncd = norm(c / d);
  FieldElement chi0 = norm(-a / d);
  if (chi0 != ncd * ncd * ncd * norm(-w) * norm(z) * norm(z))
    fail(Errc::InternalCheck, "determinant factorization failed");

  FieldElement chi2 =
      ncd * (frobenius(h[n], 2) + frobenius(h[n], 1) + h[n] +
             frobenius(h[n - 1], 1) + frobenius(h[n - 1], 2) +
             z * frobenius(h[n - 2], 2));

  // Every product involving h[n] enters with a minus sign; the signs were
  // pinned by solving against the companion-matrix product over several
  // towers in both characteristics.
  FieldElement wzz2 = frobenius(w, 2) * frobenius(z, 1) * frobenius(z, 2);
  FieldElement a1 =
      wzz * (frobenius(h[n - 1], 1) * frobenius(h[n - 2], 3) +
             frobenius(h[n - 2], 2) * frobenius(h[n - 2], 3) +
             frobenius(z, 1) * frobenius(h[n - 2], 3) * frobenius(h[n - 3], 3) +
             wzz2 * frobenius(h[n - 3], 3) * frobenius(h[n - 3], 4));
  FieldElement a2 =
      wzz * (frobenius(h[n - 1], 3) * frobenius(h[n - 2], 2) -
             frobenius(h[n], 2) * frobenius(h[n - 3], 3));
  FieldElement a3 =
      wzz2 * (frobenius(h[n - 1], 2) * frobenius(h[n - 2], 4) -
              frobenius(h[n], 2) * frobenius(h[n - 3], 4)) +
      frobenius(z, 1) * (frobenius(h[n - 1], 2) * frobenius(h[n - 1], 3) -
                         frobenius(h[n], 2) * frobenius(h[n - 2], 3));
  FieldElement chi1 = ncd * ncd * (a1 + a2 + a3);

  if (!in_base_field(chi0) || !in_base_field(chi1) || !in_base_field(chi2))
    fail(Errc::InternalCheck,
         "characteristic coefficient left the middle field");

  return Deg3State{w, z, std::move(h), chi0, chi1, chi2};
}

SqMatrix a_matrix_deg3(const LinearizedPoly& l) {
  Deg3State st = deg3_state(l);
  const auto& spec = l.spec();
  const unsigned n = spec->n();
  FieldElement a = l.coeff(0), b = l.coeff(1), c = l.coeff(2), d = l.coeff(3);
  FieldElement ncd = norm(c / d);
  const auto& h = st.h;
  SqMatrix mat(spec, 3);
  mat.at(0, 0) = ncd * (frobenius(h[n], -2) + frobenius(h[n - 1], -1) +
                        frobenius(st.z, -2) * h[n - 2]);
  mat.at(0, 1) = ncd * -(a / b * frobenius(st.z, -1) * frobenius(h[n - 2], 1));
  mat.at(0, 2) = ncd * -(a / c * frobenius(h[n - 1], 1));
  mat.at(1, 0) =
      ncd * frobenius(d / c, -2) * (frobenius(h[n - 1], -1) + h[n - 2]);
  mat.at(1, 1) = ncd * (frobenius(h[n], -1) + h[n - 1]);
  mat.at(1, 2) = ncd * -(b / c * (st.w * st.z * frobenius(h[n - 2], 2) +
                                  frobenius(h[n - 1], 1)));
  mat.at(2, 0) = ncd * frobenius(d / c, -1) * frobenius(d / c, -2) * h[n - 2];
  mat.at(2, 1) = ncd * frobenius(d / c, -1) * h[n - 1];
  mat.at(2, 2) = ncd * h[n];
  return mat;
}

CharPoly chi_deg3(const LinearizedPoly& l) {
  Deg3State st = deg3_state(l);
  const Field& f = *l.spec();
  CharPoly chi;
  chi.coeffs = {-st.chi0, st.chi1, -st.chi2, f.one()};
  for (const FieldElement& c : chi.coeffs)
    chi.in_base.push_back(in_base_field(c));
  return chi;
}

namespace {

// The two conditions equivalent, at n = 5, to the full projective split of
// a degree-3 polynomial with all coefficients non-zero.
bool deg3_n5_split_conditions(const Deg3State& st) {
  const Field& f = st.z.field();
  FieldElement one = f.one();
  bool c1 = (frobenius(st.z, 2) * st.z + frobenius(st.z, 1) - one).is_zero();
  bool c2 = (frobenius(st.z, 1) + st.z - one -
             frobenius(st.w, 1) * st.z * frobenius(st.z, 1))
                .is_zero();
  return c1 && c2;
}

std::string eigen_signature(const EigenProfile& prof) {
  std::vector<std::pair<unsigned, unsigned>> sig;
  for (const auto& [enc, mult] : prof.by_eigenvalue)
    sig.emplace_back(mult.algebraic, mult.geometric);
  std::sort(sig.begin(), sig.end());
  if (sig.empty()) return "none";
  std::string out;
  for (size_t i = 0; i < sig.size(); ++i) {
    if (i) out += '+';
    out += '(' + std::to_string(sig[i].first) + ',' +
           std::to_string(sig[i].second) + ')';
  }
  return out;
}

}  // namespace

ProjClassification classify_proj_deg3(const LinearizedPoly& l) {
  require_degree(l, 3);
  const Field& f = *l.spec();
  require_outer(l.coeff(0), l.coeff(3));

  SqMatrix am = a_matrix(l);
  EigenProfile prof = eigen_profile(am);
  const uint64_t q = f.subfield_order();
  uint64_t count = 0;
  for (const auto& [enc, mult] : prof.by_eigenvalue)
    count += geometric_sum(q, mult.geometric);

  std::string sig = eigen_signature(prof);
  static const std::set<std::string> kAllowed = {
      "none",        "(1,1)", "(1,1)+(1,1)+(1,1)", "(1,1)+(2,1)",
      "(1,1)+(2,2)", "(3,1)", "(3,2)",             "(3,3)"};
  if (!kAllowed.count(sig))
    fail(Errc::InternalCheck, "impossible eigenvalue signature " + sig);

  FieldElement b = l.coeff(1), c = l.coeff(2);
  if (!b.is_zero() && !c.is_zero()) {
    Deg3State st = deg3_state(l);
    const unsigned n = f.n();
    bool split = st.h[n - 1].is_zero() && st.h[n - 2].is_zero() &&
                 in_base_field(st.h[n]);
    if (split != (count == q * q + q + 1))
      fail(Errc::InternalCheck,
           "full-split criterion disagrees with the eigenvalue profile");
    if (n == 5 && deg3_n5_split_conditions(st) != split)
      fail(Errc::InternalCheck, "n = 5 split conditions disagree");
  }
  return {count, "deg3-proj:" + sig};
}

LinClassification classify_lin_deg3(const LinearizedPoly& l) {
  require_degree(l, 3);
  const Field& f = *l.spec();
  require_outer(l.coeff(0), l.coeff(3));

  SqMatrix am = a_matrix(l);
  EigenProfile prof = eigen_profile(am);
  auto it = prof.by_eigenvalue.find(f.one().value());
  unsigned g = it == prof.by_eigenvalue.end() ? 0 : it->second.geometric;

  CharPoly chi = char_poly(am);
  if (chi.eval(f.one()).is_zero() != (g > 0))
    fail(Errc::InternalCheck,
         "permutation criterion disagrees with the eigenvalue profile");

  FieldElement b = l.coeff(1), c = l.coeff(2), d = l.coeff(3);
  if (!b.is_zero() && !c.is_zero()) {
    Deg3State st = deg3_state(l);
    if (chi.coeffs[0] != -st.chi0 || chi.coeffs[1] != st.chi1 ||
        chi.coeffs[2] != -st.chi2)
      fail(Errc::InternalCheck,
           "closed-form characteristic coefficients disagree");
    const unsigned n = f.n();
    bool full = st.h[n - 1].is_zero() && st.h[n - 2].is_zero() &&
                st.h[n] * norm(c / d) == f.one();
    if (full != (g == 3))
      fail(Errc::InternalCheck,
           "full-kernel criterion disagrees with the eigenvalue profile");
    if (n == 5) {
      bool cond = deg3_n5_split_conditions(st);
      if (cond && st.h[5] != -norm(st.z))
        fail(Errc::InternalCheck, "n = 5 sequence-tail identity failed");
      bool full5 = cond && norm(st.z) * norm(c / d) == f.from_int(-1);
      if (full5 != (g == 3))
        fail(Errc::InternalCheck,
             "n = 5 full-kernel conditions disagree with the profile");
    }
  }

  static const char* kTags[4] = {"deg3-lin:trivial", "deg3-lin:one-dim",
                                 "deg3-lin:two-dim", "deg3-lin:full-kernel"};
  return {g, kTags[g]};
}

bool absolute_trace_is_one(const FieldElement& y) {
  const Field& f = y.field();
  if (f.p() != 2)
    fail(Errc::BadRange, "absolute trace to F_2 needs characteristic 2");
  if (!f.in_base_field(y))
    fail(Errc::BadRange, "absolute trace argument must lie in the middle field");
  FieldElement acc = f.zero();
  for (unsigned j = 0; j < f.m(); ++j) acc = acc + f.frobenius_p(y, j);
  if (!acc.is_zero() && acc != f.one())
    fail(Errc::InternalCheck, "absolute trace landed outside F_2");
  return acc == f.one();
}

bool is_nonzero_square_in_base(const FieldElement& y) {
  const Field& f = y.field();
  if (!f.in_base_field(y))
    fail(Errc::BadRange, "square test argument must lie in the middle field");
  if (y.is_zero()) return false;
  if (f.p() == 2) return true;
  return f.pow(y, (f.subfield_order() - 1) / 2) == f.one();
}

FieldElement norm_to_quadratic(const FieldElement& y) {
  const Field& f = y.field();
  if (f.n() % 2 != 0)
    fail(Errc::BadRange, "quadratic relative norm needs even n");
  FieldElement acc = f.one();
  for (unsigned j = 0; 2 * j < f.n(); ++j)
    acc = acc * f.frobenius(y, 2 * int64_t{j});
  return acc;
}

}  // namespace skewroots
