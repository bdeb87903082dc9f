// SPDX-License-Identifier: MIT
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "skewroots/field.hpp"
#include "skewroots/matrix.hpp"

namespace skewroots {

// A sigma-linearized polynomial L(x) = sum a_i x^(sigma^i) over F_{q^n},
// stored as its coefficient vector a_0..a_d with a_d != 0 (empty vector for
// the zero polynomial).  These form a non-commutative ring under addition
// and composition; composition twists the right-hand coefficients by powers
// of sigma.
class LinearizedPoly {
 public:
  LinearizedPoly() = default;
  LinearizedPoly(std::shared_ptr<const Field> spec,
                 std::vector<FieldElement> coeffs);

  static LinearizedPoly zero(std::shared_ptr<const Field> spec);
  // c * x^(sigma^k)
  static LinearizedPoly monomial(std::shared_ptr<const Field> spec, unsigned k,
                                 const FieldElement& c);

  const std::shared_ptr<const Field>& spec() const { return spec_; }
  bool is_zero() const { return coeffs_.empty(); }
  // sigma-degree; disengaged for the zero polynomial
  std::optional<unsigned> degree() const;
  std::span<const FieldElement> coeffs() const { return coeffs_; }
  // a_i, with zero returned beyond the degree
  FieldElement coeff(unsigned i) const;
  FieldElement leading() const;

  LinearizedPoly scaled(const FieldElement& c) const;  // x -> c * L(x)
  LinearizedPoly monic() const;

  FieldElement eval_linear(const FieldElement& x) const;
  // P_L(y) = sum a_i y^[i] with y^[i] = y^(1 + sigma + ... + sigma^(i-1))
  FieldElement eval_projective(const FieldElement& y) const;

  friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
    return a.spec_.get() == b.spec_.get() && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LinearizedPoly& a, const LinearizedPoly& b) {
    return !(a == b);
  }

 private:
  std::shared_ptr<const Field> spec_;
  std::vector<FieldElement> coeffs_;
};

LinearizedPoly operator+(const LinearizedPoly& a, const LinearizedPoly& b);
LinearizedPoly operator-(const LinearizedPoly& a, const LinearizedPoly& b);

// (L o M)(x) = L(M(x)); coefficient k is sum_i a_i * b_{k-i}^(sigma^i).
LinearizedPoly compose(const LinearizedPoly& l, const LinearizedPoly& m);

// M = Q o L + R with sigma-degree of R below that of L; the pair is unique.
struct RightDivision {
  LinearizedPoly quotient;
  LinearizedPoly remainder;
};
RightDivision divide_right(const LinearizedPoly& m, const LinearizedPoly& l);

// Monic greatest common right component: the highest-degree monic D with
// L = L' o D and M = M' o D.  Kernel of D is the intersection of kernels.
LinearizedPoly gcrc(const LinearizedPoly& l, const LinearizedPoly& m);

// Monic least common left composition: the lowest-degree monic N that both
// L and M right-divide.  Degrees satisfy
//   deg L + deg M = deg gcrc(L, M) + deg lclc(L, M).
LinearizedPoly lclc(const LinearizedPoly& l, const LinearizedPoly& m);

// L_alpha(x) = sum a_i alpha^[i] x^(sigma^i); alpha must be non-zero.
// Twisting is a composition homomorphism and P_{L_alpha}(y) = P_L(alpha y).
LinearizedPoly twist(const LinearizedPoly& l, const FieldElement& alpha);

// Strips leading zero coefficients a_0 = ... = a_{k-1} = 0 by un-twisting
// with sigma^(-k):  L(x) = (L'(x))^(sigma^k) with L' returned here.  The
// kernel is unchanged.  Refuses the zero polynomial.
LinearizedPoly normalize_constant(const LinearizedPoly& l);

// The n x n matrix with entry (i, j) = a_{(j-i) mod n}^(sigma^i); its
// nullity equals the nullity of L on the field.  Requires sigma-degree
// below n (fold higher coefficients first; x^(sigma^n) acts as the
// identity map).
SqMatrix dickson_matrix(const LinearizedPoly& l);

// L with every exponent sigma^i replaced by sigma^(i mod n); as maps on the
// field the two polynomials are identical.
LinearizedPoly fold_degree(const LinearizedPoly& l);

// L read as the projective polynomial P_L.  For non-zero x,
// L(x) = x * P_L(x^(sigma - 1)).
struct ProjectiveView {
  const LinearizedPoly* poly;
  FieldElement operator()(const FieldElement& y) const {
    return poly->eval_projective(y);
  }
};

}  // namespace skewroots
