// SPDX-License-Identifier: MIT
#pragma once

#include "skewroots/matrix.hpp"
#include "skewroots/skewpoly.hpp"

namespace skewroots {

// The d x d companion matrix of L = sum a_i x^(sigma^i), sigma-degree d:
// ones on the subdiagonal, last column -a_0/a_d ... -a_{d-1}/a_d.  It is
// the matrix of M -> x^sigma o M mod L on the basis x, x^sigma, ...,
// x^(sigma^(d-1)), a sigma-semilinear map.
SqMatrix companion(const LinearizedPoly& l);

// Product C * C^sigma * ... * C^(sigma^(k-1)) of companion conjugates,
// with the empty product being the identity.  Built by both one-step
// recursions (append on the right, absorb on the left), which must agree.
SqMatrix partial_product(const LinearizedPoly& l, unsigned k);

// The n-fold product: the matrix of the linear map
// M -> x^(sigma^n) o M mod L.  Its eigenstructure over the middle field
// determines the root counts of L and of P_L.  Requires a_0 != 0.
SqMatrix a_matrix(const LinearizedPoly& l);

}  // namespace skewroots
