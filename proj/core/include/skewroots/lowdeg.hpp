// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewroots/rootcount.hpp"

namespace skewroots {

// --- sigma-degree 2:  L = a x + b x^sigma + c x^(sigma^2) ---------------
//
// Everything here is driven by the invariant u = a^sigma c / b^(sigma+1)
// and a length-(n+1) sequence defined by a three-term recursion with
// sigma-twisted multipliers.  The sequence determines the n-fold companion
// product, its characteristic polynomial, and the complete classification
// of root counts.  Requires b != 0 and n >= 2.

struct Deg2State {
  FieldElement u;
  // g[0] = 1, g[1] = -1, g[k] = -g[k-1] - u^(sigma^(k-2)) g[k-2], up to n.
  // Construction recomputes the sequence through the sigma-twisted variant
  // g[k] = -g[k-1]^sigma - u g[k-2]^(sigma^2) and checks the two agree.
  std::vector<FieldElement> g;
  FieldElement trace;  // trace of the n-fold product
  FieldElement det;    // its determinant, the norm of a/c
  std::optional<FieldElement> delta;         // q odd: trace^2 - 4 det
  std::optional<FieldElement> lambda_ratio;  // q even, trace != 0: det/trace^2
};

Deg2State deg2_state(const LinearizedPoly& l);

// The bare sequence for a given invariant, g[0..k_max], computed by both
// recursion variants and checked for agreement.  Useful for stress-testing
// the recursions without building a polynomial.
std::vector<FieldElement> deg2_sequence(const FieldElement& u, unsigned k_max);

// Closed form for the n-fold companion product, entrywise in the sequence.
SqMatrix a_matrix_deg2(const LinearizedPoly& l);

// x^2 - trace x + det, with middle-field certificates.
CharPoly chi_deg2(const LinearizedPoly& l);

// The product trace through relative-trace identities, available for
// n in {4, 5, 6, 7}; the selector must match the field's n.
FieldElement trace_formula_deg2(const LinearizedPoly& l, unsigned selector);

struct ProjClassification {
  uint64_t count = 0;
  std::string case_tag;
};
// Number of roots of P_L from the closed forms alone (no matrix work,
// except none at all: b = 0 reduces to norm conditions).  a c != 0.
ProjClassification classify_proj_deg2(const LinearizedPoly& l);

struct LinClassification {
  unsigned nullity = 0;
  std::string case_tag;
};
// Kernel dimension of L from the closed forms; in {0, 1, 2}.  a c != 0.
// For b = 0 this falls back to the generic matrix route.
LinClassification classify_lin_deg2(const LinearizedPoly& l);

// --- sigma-degree 3:  L = a x + b x^sigma + c x^(sigma^2) + d x^(sigma^3)
//
// Two invariants w = a^sigma c / b^(sigma+1), z = b^sigma d / c^(sigma+1)
// and a four-term recursion h[0..n].  Requires all four coefficients
// non-zero and n >= 3.

struct Deg3State {
  FieldElement w, z;
  // h[0] = 1, h[1] = -1, h[2] = 1 - z, then
  // h[k] = -h[k-1] - z^(sigma^(k-2)) h[k-2]
  //        - w^(sigma^(k-2)) z^(sigma^(k-2)+sigma^(k-3)) h[k-3].
  // Cross-checked against the sigma-twisted variant and the k = n
  // boundary identity.
  std::vector<FieldElement> h;
  FieldElement chi0, chi1, chi2;  // char poly x^3 - chi2 x^2 + chi1 x - chi0
};

Deg3State deg3_state(const LinearizedPoly& l);

// h[0..k_max] for given invariants, both recursion variants checked.
std::vector<FieldElement> deg3_sequence(const FieldElement& w,
                                        const FieldElement& z, unsigned k_max);

SqMatrix a_matrix_deg3(const LinearizedPoly& l);

CharPoly chi_deg3(const LinearizedPoly& l);

// Root count of P_L via the eigenvalue profile, validated against the
// closed-form full-split criterion (h[n-1] = h[n-2] = 0 and h[n] in F_q)
// whenever the inner coefficients are non-zero, and against the special
// n = 5 conditions.  Requires a d != 0.
ProjClassification classify_proj_deg3(const LinearizedPoly& l);

// Kernel dimension in {0, 1, 2, 3}, with the permutation criterion
// chi(1) != 0 and the full-kernel criterion cross-checked.  a d != 0.
LinClassification classify_lin_deg3(const LinearizedPoly& l);

// --- shared helpers -------------------------------------------------------

// Absolute trace of y down to the prime field F_2; q must be even and y
// must lie in the middle field.
bool absolute_trace_is_one(const FieldElement& y);

// Whether y (in the middle field) is a non-zero square there.  Every
// non-zero element is a square when q is even.
bool is_nonzero_square_in_base(const FieldElement& y);

// Relative norm onto the quadratic subfield (fixed field of sigma^2);
// n must be even.
FieldElement norm_to_quadratic(const FieldElement& y);

}  // namespace skewroots
