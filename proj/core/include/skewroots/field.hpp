// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "skewroots/error.hpp"

namespace skewroots {

class Field;

// One element of a Field, held in canonical form.  The value is the integer
// encoding of the polynomial-basis coefficient vector (c_0, ..., c_{mn-1})
// over F_p, ascending powers:  value = sum c_i * p^i.  Two elements compare
// equal exactly when they belong to the same Field object and their
// coefficient vectors agree.
//
// Elements are cheap value types; they hold a pointer into their Field and
// must not outlive it.
class FieldElement {
 public:
  FieldElement() = default;  // singular; assign before use

  uint64_t value() const { return v_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return v_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  friend class Field;
  FieldElement(const Field* f, uint32_t v) : field_(f), v_(v) {}

  const Field* field_ = nullptr;
  uint32_t v_ = 0;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

// The tower F_p < F_q < F_{q^n} with q = p^m, realized as the single
// extension F_p[t]/(modulus) of degree m*n.  The distinguished generator of
// Gal(F_{q^n}/F_q) is sigma: x -> x^(q^s) with gcd(s, n) = 1; the middle
// field F_q is the fixed set of x -> x^(p^m), and both characterizations of
// F_q coincide because sigma generates the full relative Galois group.
//
// All arithmetic is exact.  Construction precomputes the p-power Frobenius
// as an F_p-linear operator on coefficient vectors; fields with at most
// 2^16 elements additionally carry discrete-log tables, which makes
// multiplication, inversion and sigma-powers O(1) in the hot sweep loops.
//
// Field objects are immutable after creation and safe to share across
// threads; use create() and keep the shared_ptr alive for as long as any
// element, polynomial or matrix refers to it.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static constexpr uint64_t kDefaultSizeBound = uint64_t{1} << 24;
  static constexpr unsigned kMaxExtDegree = 28;

  // Builds the tower.  The modulus, when supplied, lists all m*n+1
  // coefficients of a monic irreducible polynomial over F_p, ascending.
  // When omitted, the least monic irreducible of degree m*n is chosen,
  // "least" meaning the smallest integer encoding of the non-leading
  // coefficient vector; the choice is deterministic.
  static std::shared_ptr<const Field> create(
      uint64_t p, unsigned m, unsigned n, unsigned s,
      std::vector<uint32_t> modulus = {},
      uint64_t size_bound = kDefaultSizeBound);

  uint64_t p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned n() const { return n_; }
  unsigned s() const { return s_; }
  unsigned ext_degree() const { return deg_; }        // m*n
  uint64_t order() const { return order_; }           // p^(m*n)
  uint64_t subfield_order() const { return q_; }      // q = p^m
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement(this, 0); }
  FieldElement one() const { return FieldElement(this, one_); }

  // Integer codec.  element() accepts any value < order().
  FieldElement element(uint64_t value) const;
  // Embeds k mod p through the prime field; from_int(-1) is the additive
  // inverse of one() in every characteristic.
  FieldElement from_int(int64_t k) const;
  FieldElement element_from_coeffs(std::span<const uint32_t> coeffs) const;
  std::vector<uint32_t> coeffs_of(const FieldElement& x) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, uint64_t e) const;

  // x^(sigma^k) for any integer k; k is reduced mod n, so negative k gives
  // the inverse automorphism.  sigma^k is x -> x^(p^(m*s*k)).
  FieldElement frobenius(const FieldElement& x, int64_t k) const;
  // x^(p^j) for 0 <= j.
  FieldElement frobenius_p(const FieldElement& x, uint64_t j) const;

  // Relative norm onto F_q: product of x^(sigma^j) over j = 0..n-1.
  FieldElement norm(const FieldElement& x) const;
  // Sum of x^(sigma^j) over j = 0..d-1; d = n gives the relative trace.
  // Requires 1 <= d <= n.
  FieldElement partial_trace(const FieldElement& x, unsigned d) const;
  bool in_base_field(const FieldElement& x) const;

  // The middle field F_q, all q elements, ascending by integer encoding.
  const std::vector<FieldElement>& base_field() const { return base_field_; }

 private:
  Field() = default;

  void build_tables();
  void build_frobenius();
  void build_base_field();

  uint32_t mul_nt(uint32_t a, uint32_t b) const;   // no-table multiply
  uint32_t pow_nt(uint32_t a, uint64_t e) const;
  uint32_t apply_p_power(uint32_t v, unsigned j) const;
  void check_same(const FieldElement& a, const FieldElement& b) const;

  uint64_t p_ = 0;
  unsigned m_ = 0, n_ = 0, s_ = 0, deg_ = 0;
  uint64_t order_ = 0, q_ = 0;
  uint32_t one_ = 0;
  std::vector<uint32_t> modulus_;

  // x -> x^(p^j) as column-major matrices over F_p, one per j in [0, deg).
  std::vector<std::vector<uint32_t>> frob_mats_;

  bool tabled_ = false;
  std::vector<uint32_t> exp_table_;   // g^i, i in [0, order-1)
  std::vector<uint32_t> log_table_;   // inverse of exp_table_, log(0) = sentinel
  std::vector<uint64_t> p_pow_mod_;   // p^j mod (order-1), for log-space Frobenius

  std::vector<FieldElement> base_field_;
};

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return a.field().add(a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a.field().sub(a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return a.field().mul(a, b);
}
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a.field().div(a, b);
}
inline FieldElement operator-(const FieldElement& a) {
  return a.field().neg(a);
}

inline FieldElement frobenius(const FieldElement& x, int64_t k) {
  return x.field().frobenius(x, k);
}
inline FieldElement norm(const FieldElement& x) { return x.field().norm(x); }
inline FieldElement partial_trace(const FieldElement& x, unsigned d) {
  return x.field().partial_trace(x, d);
}
inline bool in_base_field(const FieldElement& x) {
  return x.field().in_base_field(x);
}

}  // namespace skewroots
