// SPDX-License-Identifier: MIT
#include "skewroots/field.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace skewroots {
namespace {

constexpr uint64_t kTableLimit = uint64_t{1} << 16;
constexpr uint64_t kBaseFieldLimit = uint64_t{1} << 20;
constexpr uint32_t kNoLog = 0xffffffffu;

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- dense polynomials over F_p, used only during construction ---

using Poly = std::vector<uint32_t>;  // ascending coefficients

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<uint32_t>(
          (prod[i + j] + uint64_t{a[i]} * b[j]) % p);
  }
  size_t df = f.size() - 1;  // f monic
  for (size_t i = prod.size(); i-- > df;) {
    uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (size_t j = 0; j < df; ++j)
      prod[i - df + j] = static_cast<uint32_t>(
          (prod[i - df + j] + (p - f[j]) % p * c) % p);
  }
  prod.resize(df);
  trim(prod);
  return prod;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
  Poly result{1};
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& b, uint64_t p) {
  // b non-zero; divides in place
  trim(a);
  size_t db = b.size() - 1;
  uint64_t lead_inv = 1;
  {  // inverse of b's leading coefficient mod p
    uint64_t x = b.back(), r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    lead_inv = r;
  }
  while (a.size() > db) {
    uint64_t c = a.back() * lead_inv % p;
    size_t shift = a.size() - 1 - db;
    if (c)
      for (size_t j = 0; j < b.size(); ++j)
        a[shift + j] = static_cast<uint32_t>(
            (a[shift + j] + (p - b[j]) % p * c) % p);
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<uint64_t> prime_factors64(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Monic f of degree N is irreducible over F_p iff t^(p^N) = t mod f and
// gcd(t^(p^(N/r)) - t, f) = 1 for every prime r dividing N.
bool is_irreducible(const Poly& f, uint64_t p) {
  size_t N = f.size() - 1;
  if (N == 0) return false;
  Poly t{0, 1};
  auto p_pow = [&](unsigned e) {
    uint64_t r = 1;
    while (e--) r *= p;
    return r;
  };
  Poly tp = poly_powmod(t, p_pow(static_cast<unsigned>(N)), f, p);
  if (tp != t) return false;
  for (unsigned r : prime_factors(static_cast<unsigned>(N))) {
    Poly h = poly_powmod(t, p_pow(static_cast<unsigned>(N / r)), f, p);
    // h - t
    if (h.size() < 2) h.resize(2, 0);
    h[1] = static_cast<uint32_t>((h[1] + p - 1) % p);
    trim(h);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::create(uint64_t p, unsigned m, unsigned n,
                                           unsigned s,
                                           std::vector<uint32_t> modulus,
                                           uint64_t size_bound) {
  if (!is_prime(p)) fail(Errc::NonPrime, "p = " + std::to_string(p));
  if (m == 0 || n == 0)
    fail(Errc::BadRange, "tower degrees m and n must be positive");
  if (s == 0 || std::gcd(static_cast<uint64_t>(s), static_cast<uint64_t>(n)) != 1)
    fail(Errc::BadSigma,
         "s = " + std::to_string(s) + " with n = " + std::to_string(n) +
             " does not generate the relative Galois group");

  unsigned deg = m * n;
  uint64_t hard_cap = std::min<uint64_t>(size_bound, uint64_t{1} << kMaxExtDegree);
  uint64_t order = 1;
  for (unsigned i = 0; i < deg; ++i) {
    if (order > hard_cap / p)
      fail(Errc::SizeBoundExceeded,
           "p^(m*n) exceeds the size bound " + std::to_string(size_bound));
    order *= p;
  }
  if (order > hard_cap)
    fail(Errc::SizeBoundExceeded,
         "p^(m*n) exceeds the size bound " + std::to_string(size_bound));

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->m_ = m;
  f->n_ = n;
  f->s_ = s;
  f->deg_ = deg;
  f->order_ = order;
  f->q_ = 1;
  for (unsigned i = 0; i < m; ++i) f->q_ *= p;
  f->one_ = 1;

  if (!modulus.empty()) {
    if (modulus.size() != deg + 1)
      fail(Errc::BadRange, "modulus must list m*n+1 coefficients");
    for (uint32_t c : modulus)
      if (c >= p) fail(Errc::BadRange, "modulus coefficient out of range");
    if (modulus.back() != 1)
      fail(Errc::BadRange, "modulus must be monic");
    if (!is_irreducible(modulus, p))
      fail(Errc::ReducibleModulus, "supplied modulus factors over F_p");
    f->modulus_ = std::move(modulus);
  } else {
    // least monic irreducible: smallest integer encoding of the non-leading
    // coefficient vector
    Poly cand(deg + 1, 0);
    cand[deg] = 1;
    bool found = false;
    for (uint64_t e = 0; e < order; ++e) {
      uint64_t v = e;
      for (unsigned i = 0; i < deg; ++i) {
        cand[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      if (is_irreducible(cand, p)) {
        found = true;
        break;
      }
    }
    if (!found)
      fail(Errc::InternalCheck, "no irreducible modulus found");  // unreachable
    f->modulus_ = cand;
  }

  f->build_frobenius();
  if (order <= kTableLimit) f->build_tables();
  f->build_base_field();
  return f;
}

// --- digit helpers -------------------------------------------------------

namespace {

using Digits = std::array<uint32_t, Field::kMaxExtDegree>;

void to_digits(uint64_t v, uint64_t p, unsigned deg, Digits& d) {
  for (unsigned i = 0; i < deg; ++i) {
    d[i] = static_cast<uint32_t>(v % p);
    v /= p;
  }
}

uint64_t from_digits(const Digits& d, uint64_t p, unsigned deg) {
  uint64_t v = 0;
  for (unsigned i = deg; i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

// --- construction helpers ------------------------------------------------

void Field::build_frobenius() {
  // column c of matrix j holds the digits of (t^c)^(p^j) mod modulus
  frob_mats_.assign(deg_, std::vector<uint32_t>(size_t{deg_} * deg_, 0));
  // matrix 0 is the identity
  for (unsigned c = 0; c < deg_; ++c) frob_mats_[0][size_t{c} * deg_ + c] = 1;
  if (deg_ == 1) return;

  Poly tp = poly_powmod(Poly{0, 1}, p_, modulus_, p_);
  // matrix 1: columns are t^(c*p) = (t^p)^c
  Poly col{1};
  for (unsigned c = 0; c < deg_; ++c) {
    for (size_t i = 0; i < col.size(); ++i)
      frob_mats_[1][size_t{c} * deg_ + i] = col[i];
    col = poly_mulmod(col, tp, modulus_, p_);
  }
  // matrix j = matrix 1 applied to matrix j-1, columnwise
  for (unsigned j = 2; j < deg_; ++j) {
    for (unsigned c = 0; c < deg_; ++c)
      for (unsigned r = 0; r < deg_; ++r) {
        uint64_t acc = 0;
        for (unsigned k = 0; k < deg_; ++k)
          acc += uint64_t{frob_mats_[1][size_t{k} * deg_ + r]} *
                 frob_mats_[j - 1][size_t{c} * deg_ + k];
        frob_mats_[j][size_t{c} * deg_ + r] = static_cast<uint32_t>(acc % p_);
      }
  }
}

uint32_t Field::mul_nt(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (deg_ == 1) return static_cast<uint32_t>(uint64_t{a} * b % p_);
  Digits da, db;
  to_digits(a, p_, deg_, da);
  to_digits(b, p_, deg_, db);
  std::array<uint64_t, 2 * Field::kMaxExtDegree> prod{};
  for (unsigned i = 0; i < deg_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < deg_; ++j)
      prod[i + j] += uint64_t{da[i]} * db[j];
  }
  for (unsigned i = 2 * deg_ - 1; i-- > deg_;) {
    uint64_t c = prod[i] % p_;
    prod[i] = 0;
    if (c == 0) continue;
    for (unsigned j = 0; j < deg_; ++j)
      prod[i - deg_ + j] += (p_ - modulus_[j]) % p_ * c;
  }
  Digits out;
  for (unsigned i = 0; i < deg_; ++i)
    out[i] = static_cast<uint32_t>(prod[i] % p_);
  return static_cast<uint32_t>(from_digits(out, p_, deg_));
}

uint32_t Field::pow_nt(uint32_t a, uint64_t e) const {
  uint32_t result = one_;
  uint32_t base = a;
  while (e) {
    if (e & 1) result = mul_nt(result, base);
    base = mul_nt(base, base);
    e >>= 1;
  }
  return result;
}

void Field::build_tables() {
  tabled_ = true;
  uint64_t group = order_ - 1;
  exp_table_.resize(group);
  log_table_.assign(order_, kNoLog);
  p_pow_mod_.resize(deg_);
  uint64_t pm = 1 % group;
  for (unsigned j = 0; j < deg_; ++j) {
    p_pow_mod_[j] = pm;
    pm = pm * (p_ % group) % group;
  }

  uint32_t g = one_;
  if (group > 1) {
    auto factors = prime_factors64(group);
    for (uint64_t v = 2; v < order_; ++v) {
      bool ok = true;
      for (uint64_t r : factors)
        if (pow_nt(static_cast<uint32_t>(v), group / r) == one_) {
          ok = false;
          break;
        }
      if (ok) {
        g = static_cast<uint32_t>(v);
        break;
      }
    }
  }
  uint32_t e = one_;
  for (uint64_t i = 0; i < group; ++i) {
    exp_table_[i] = e;
    log_table_[e] = static_cast<uint32_t>(i);
    e = mul_nt(e, g);
  }
}

void Field::build_base_field() {
  if (q_ > kBaseFieldLimit) return;  // enumeration refused by callers that need it
  std::vector<uint64_t> values;
  if (n_ == 1) {
    values.resize(order_);
    for (uint64_t v = 0; v < order_; ++v) values[v] = v;
  } else {
    // kernel of (q-power Frobenius - identity) over F_p, via row reduction
    unsigned N = deg_;
    const auto& M = frob_mats_[m_ % N];
    std::vector<std::vector<uint32_t>> rows(N, std::vector<uint32_t>(N, 0));
    for (unsigned r = 0; r < N; ++r)
      for (unsigned c = 0; c < N; ++c) {
        uint64_t v = M[size_t{c} * N + r];
        if (r == c) v = (v + p_ - 1) % p_;
        rows[r][c] = static_cast<uint32_t>(v);
      }
    auto inv_mod_p = [&](uint64_t x) {
      uint64_t r = 1, e = p_ - 2;
      while (e) {
        if (e & 1) r = r * x % p_;
        x = x * x % p_;
        e >>= 1;
      }
      return r;
    };
    std::vector<int> pivot_col;
    unsigned row = 0;
    for (unsigned col = 0; col < N && row < N; ++col) {
      unsigned sel = row;
      while (sel < N && rows[sel][col] == 0) ++sel;
      if (sel == N) continue;
      std::swap(rows[sel], rows[row]);
      uint64_t iv = inv_mod_p(rows[row][col]);
      for (unsigned c = 0; c < N; ++c)
        rows[row][c] = static_cast<uint32_t>(rows[row][c] * iv % p_);
      for (unsigned r = 0; r < N; ++r) {
        if (r == row || rows[r][col] == 0) continue;
        uint64_t fmul = rows[r][col];
        for (unsigned c = 0; c < N; ++c) {
          uint64_t sub = fmul * rows[row][c] % p_;
          rows[r][c] = static_cast<uint32_t>((rows[r][c] + p_ - sub) % p_);
        }
      }
      pivot_col.push_back(static_cast<int>(col));
      ++row;
    }
    // free columns span the kernel
    std::vector<char> is_pivot(N, 0);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<Digits> basis;
    for (unsigned col = 0; col < N; ++col) {
      if (is_pivot[col]) continue;
      Digits v{};
      v[col] = 1;
      for (unsigned r = 0; r < pivot_col.size(); ++r) {
        uint32_t entry = rows[r][col];
        if (entry)
          v[static_cast<unsigned>(pivot_col[r])] =
              static_cast<uint32_t>((p_ - entry) % p_);
      }
      basis.push_back(v);
    }
    // enumerate all F_p-combinations of the kernel basis
    size_t dim = basis.size();
    uint64_t count = 1;
    for (size_t i = 0; i < dim; ++i) count *= p_;
    values.reserve(count);
    std::vector<uint32_t> coef(dim, 0);
    for (uint64_t it = 0; it < count; ++it) {
      Digits acc{};
      uint64_t v = it;
      for (size_t b = 0; b < dim; ++b) {
        uint32_t c = static_cast<uint32_t>(v % p_);
        v /= p_;
        if (c)
          for (unsigned i = 0; i < N; ++i)
            acc[i] = static_cast<uint32_t>((acc[i] + uint64_t{c} * basis[b][i]) % p_);
      }
      values.push_back(from_digits(acc, p_, N));
    }
    std::sort(values.begin(), values.end());
  }
  base_field_.reserve(values.size());
  for (uint64_t v : values)
    base_field_.push_back(FieldElement(this, static_cast<uint32_t>(v)));
}

// --- element construction and codecs -------------------------------------

FieldElement Field::element(uint64_t value) const {
  if (value >= order_)
    fail(Errc::ParseError, "element encoding " + std::to_string(value) +
                               " is not below the field order " +
                               std::to_string(order_));
  return FieldElement(this, static_cast<uint32_t>(value));
}

FieldElement Field::from_int(int64_t k) const {
  int64_t r = k % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return FieldElement(this, static_cast<uint32_t>(r));
}

FieldElement Field::element_from_coeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() != deg_)
    fail(Errc::ParseError, "coefficient vector must have length m*n");
  Digits d{};
  for (unsigned i = 0; i < deg_; ++i) {
    if (coeffs[i] >= p_)
      fail(Errc::ParseError, "coefficient out of range");
    d[i] = coeffs[i];
  }
  return FieldElement(this, static_cast<uint32_t>(from_digits(d, p_, deg_)));
}

std::vector<uint32_t> Field::coeffs_of(const FieldElement& x) const {
  check_same(x, zero());
  Digits d;
  to_digits(x.value(), p_, deg_, d);
  return std::vector<uint32_t>(d.begin(), d.begin() + deg_);
}

// --- arithmetic -----------------------------------------------------------

void Field::check_same(const FieldElement& a, const FieldElement& b) const {
  if (a.field_ != this || b.field_ != this)
    fail(Errc::MixedFields, "elements belong to different field objects");
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check_same(a, b);
  if (p_ == 2)
    return FieldElement(this, static_cast<uint32_t>(a.value() ^ b.value()));
  Digits da, db;
  to_digits(a.value(), p_, deg_, da);
  to_digits(b.value(), p_, deg_, db);
  for (unsigned i = 0; i < deg_; ++i)
    da[i] = static_cast<uint32_t>((da[i] + db[i]) % p_);
  return FieldElement(this, static_cast<uint32_t>(from_digits(da, p_, deg_)));
}

FieldElement Field::neg(const FieldElement& a) const {
  check_same(a, a);
  if (p_ == 2) return a;
  Digits d;
  to_digits(a.value(), p_, deg_, d);
  for (unsigned i = 0; i < deg_; ++i)
    d[i] = static_cast<uint32_t>((p_ - d[i]) % p_);
  return FieldElement(this, static_cast<uint32_t>(from_digits(d, p_, deg_)));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check_same(a, b);
  if (tabled_) {
    if (a.is_zero() || b.is_zero()) return zero();
    uint64_t idx = log_table_[a.value()] + uint64_t{log_table_[b.value()]};
    uint64_t group = order_ - 1;
    if (idx >= group) idx -= group;
    return FieldElement(this, exp_table_[idx]);
  }
  return FieldElement(this, mul_nt(static_cast<uint32_t>(a.value()),
                                   static_cast<uint32_t>(b.value())));
}

FieldElement Field::inv(const FieldElement& a) const {
  check_same(a, a);
  if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  if (tabled_) {
    uint64_t group = order_ - 1;
    uint64_t idx = (group - log_table_[a.value()]) % group;
    return FieldElement(this, exp_table_[idx]);
  }
  return FieldElement(this, pow_nt(static_cast<uint32_t>(a.value()), order_ - 2));
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  check_same(a, b);
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

FieldElement Field::pow(const FieldElement& a, uint64_t e) const {
  check_same(a, a);
  if (tabled_) {
    if (a.is_zero()) return e == 0 ? one() : zero();
    uint64_t group = order_ - 1;
    uint64_t idx = static_cast<uint64_t>(
        static_cast<unsigned __int128>(log_table_[a.value()]) * (e % group) %
        group);
    return FieldElement(this, exp_table_[idx]);
  }
  return FieldElement(this, pow_nt(static_cast<uint32_t>(a.value()), e));
}

uint32_t Field::apply_p_power(uint32_t v, unsigned j) const {
  j %= deg_;
  if (j == 0 || v == 0) return v;
  if (tabled_) {
    uint64_t group = order_ - 1;
    uint64_t idx = log_table_[v] * p_pow_mod_[j] % group;
    return exp_table_[idx];
  }
  const auto& M = frob_mats_[j];
  Digits d, out{};
  to_digits(v, p_, deg_, d);
  for (unsigned c = 0; c < deg_; ++c) {
    if (d[c] == 0) continue;
    for (unsigned r = 0; r < deg_; ++r)
      out[r] = static_cast<uint32_t>(
          (out[r] + uint64_t{d[c]} * M[size_t{c} * deg_ + r]) % p_);
  }
  return static_cast<uint32_t>(from_digits(out, p_, deg_));
}

FieldElement Field::frobenius(const FieldElement& x, int64_t k) const {
  check_same(x, x);
  int64_t kk = k % static_cast<int64_t>(n_);
  if (kk < 0) kk += n_;
  unsigned j = static_cast<unsigned>(
      (uint64_t{m_} * s_ % deg_) * static_cast<uint64_t>(kk) % deg_);
  return FieldElement(this, apply_p_power(static_cast<uint32_t>(x.value()), j));
}

FieldElement Field::frobenius_p(const FieldElement& x, uint64_t j) const {
  check_same(x, x);
  return FieldElement(this, apply_p_power(static_cast<uint32_t>(x.value()),
                                          static_cast<unsigned>(j % deg_)));
}

FieldElement Field::norm(const FieldElement& x) const {
  check_same(x, x);
  FieldElement acc = x;
  FieldElement conj = x;
  for (unsigned j = 1; j < n_; ++j) {
    conj = frobenius(conj, 1);
    acc = mul(acc, conj);
  }
  return acc;
}

FieldElement Field::partial_trace(const FieldElement& x, unsigned d) const {
  check_same(x, x);
  if (d < 1 || d > n_)
    fail(Errc::BadRange, "partial trace length must lie in [1, n]");
  FieldElement acc = x;
  FieldElement conj = x;
  for (unsigned j = 1; j < d; ++j) {
    conj = frobenius(conj, 1);
    acc = add(acc, conj);
  }
  return acc;
}

bool Field::in_base_field(const FieldElement& x) const {
  check_same(x, x);
  return apply_p_power(static_cast<uint32_t>(x.value()), m_ % deg_) == x.value();
}

}  // namespace skewroots
