// SPDX-License-Identifier: MIT
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewroots/matrix.hpp"
#include "skewroots/skewpoly.hpp"

namespace skewroots {

// Text forms used on the command line and in reports.
//
//   field        p=2,m=1,n=5,s=2          optionally ,mod=c0,c1,...,ck
//   element      its integer encoding, sum of c_i p^i
//   polynomial   e0;e1;...;ed             element encodings, ascending
//   matrix       rows joined by '|', entries within a row joined by ','
//
// Parsers throw Error with Errc::ParseError on malformed input.

struct FieldParams {
  uint64_t p = 0;
  unsigned m = 1;
  unsigned n = 1;
  unsigned s = 1;
  std::vector<uint32_t> modulus;  // empty selects the default modulus
};

FieldParams parse_field_params(const std::string& text);
std::shared_ptr<const Field> make_field(
    const FieldParams& params, uint64_t size_bound = Field::kDefaultSizeBound);

// p=..,m=..,n=..,s=..  (the modulus is reported separately when needed)
std::string format_field_params(const Field& f);
std::string format_modulus(const Field& f);  // c0,c1,...,ck

LinearizedPoly parse_poly(const std::shared_ptr<const Field>& spec,
                          const std::string& text);
std::string format_poly(const LinearizedPoly& l);

std::string format_element(const FieldElement& x);
std::string format_matrix(const SqMatrix& m);

}  // namespace skewroots
