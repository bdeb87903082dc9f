// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "skewroots/field.hpp"

namespace skewroots {

// Dense square matrix over one Field, row-major.  Dimensions stay small
// (companion and Dickson matrices), so everything here is straightforward
// exact arithmetic; elimination uses field division, which is exact.
class SqMatrix {
 public:
  SqMatrix(std::shared_ptr<const Field> spec, unsigned dim);
  static SqMatrix identity(std::shared_ptr<const Field> spec, unsigned dim);
  static SqMatrix scalar(std::shared_ptr<const Field> spec, unsigned dim,
                         const FieldElement& lambda);

  unsigned dim() const { return dim_; }
  const std::shared_ptr<const Field>& spec() const { return spec_; }

  FieldElement& at(unsigned r, unsigned c) { return e_[size_t{r} * dim_ + c]; }
  const FieldElement& at(unsigned r, unsigned c) const {
    return e_[size_t{r} * dim_ + c];
  }

  FieldElement trace() const;
  // lambda when the matrix is lambda * identity
  std::optional<FieldElement> as_scalar() const;

  friend bool operator==(const SqMatrix& a, const SqMatrix& b) {
    return a.dim_ == b.dim_ && a.spec_.get() == b.spec_.get() && a.e_ == b.e_;
  }
  friend bool operator!=(const SqMatrix& a, const SqMatrix& b) {
    return !(a == b);
  }

 private:
  std::shared_ptr<const Field> spec_;
  unsigned dim_ = 0;
  std::vector<FieldElement> e_;
};

SqMatrix operator*(const SqMatrix& a, const SqMatrix& b);
SqMatrix operator+(const SqMatrix& a, const SqMatrix& b);
SqMatrix operator-(const SqMatrix& a, const SqMatrix& b);

// Applies sigma^k to every entry.
SqMatrix sigma_entrywise(const SqMatrix& a, int64_t k);

unsigned rank(SqMatrix a);
unsigned nullity(const SqMatrix& a);
FieldElement det(SqMatrix a);

// Monic characteristic polynomial det(xI - A), ascending coefficients,
// computed by Laplace expansion over the univariate polynomial ring so that
// no division by integer constants ever occurs.  Each coefficient carries a
// middle-field membership certificate.
struct CharPoly {
  std::vector<FieldElement> coeffs;
  std::vector<bool> in_base;

  bool base_field_certified() const {
    for (bool b : in_base)
      if (!b) return false;
    return true;
  }
  FieldElement eval(const FieldElement& x) const;
};

constexpr unsigned kMaxCharPolyDim = 8;

CharPoly char_poly(const SqMatrix& a);

// Algebraic and geometric multiplicity of every middle-field eigenvalue.
// Algebraic multiplicities come from repeated synthetic division of the
// characteristic polynomial; geometric ones from nullity(A - lambda I).
// unresolved_degree is what remains of the characteristic polynomial after
// all middle-field roots are divided out.
struct EigenProfile {
  struct Mult {
    unsigned algebraic = 0;
    unsigned geometric = 0;
  };
  std::map<uint64_t, Mult> by_eigenvalue;  // keyed by element encoding
  unsigned unresolved_degree = 0;
};

EigenProfile eigen_profile(const SqMatrix& a);

// One solution of M x = rhs (M given as rows), or nullopt when inconsistent.
std::optional<std::vector<FieldElement>> solve_linear(
    std::vector<std::vector<FieldElement>> m, std::vector<FieldElement> rhs);

}  // namespace skewroots
