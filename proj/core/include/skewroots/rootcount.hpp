// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "skewroots/semimat.hpp"

namespace skewroots {

// Dimension over the middle field F_q of the kernel of L in F_{q^n};
// L must be non-zero.  A run of zero low-order coefficients is stripped
// first (a kernel-preserving normalization), then the count is the nullity
// of (A_L - I).
unsigned nullity_of(const LinearizedPoly& l);

// Kernel dimension of the alpha-twist L_alpha, alpha != 0, computed without
// forming the twist: it equals nullity(A_L - N(alpha) I).
unsigned nullity_twisted(const LinearizedPoly& l, const FieldElement& alpha);

// Number of roots in F_{q^n} of the projective polynomial P_L.  Requires
// a_0 != 0 (the projective reading is refused otherwise) and degree >= 1.
// Sums (q^g - 1)/(q - 1) over the eigenvalue geometric multiplicities g
// of A_L.
uint64_t count_proj_roots(const LinearizedPoly& l);

// The same count along an independent route: for every lambda in F_q^*,
// the degree of gcrc(L, x^(sigma^n) - lambda x) is the geometric
// multiplicity of lambda.
std::map<uint64_t, unsigned> gcrc_degrees(const LinearizedPoly& l);
uint64_t count_proj_roots_gcrc(const LinearizedPoly& l);

// Scalar test on A_L.  A_L = I means L has the largest possible kernel,
// q^d roots; A_L = lambda I means P_L fully splits with (q^d-1)/(q-1)
// roots.  The identity case reports as FullKernelLinear.
struct FullKernelResult {
  enum class Tag { FullKernelLinear, FullSplitProjective, Neither };

  bool projective_full_split = false;  // A_L is scalar
  bool linear_full_kernel = false;     // A_L is the identity
  std::optional<FieldElement> lambda;

  Tag tag() const {
    if (linear_full_kernel) return Tag::FullKernelLinear;
    if (projective_full_split) return Tag::FullSplitProjective;
    return Tag::Neither;
  }
};
FullKernelResult full_kernel_check(const LinearizedPoly& l);
const char* to_string(FullKernelResult::Tag tag);

// The norm identity N(a_0) = (-1)^(n d) N(a_d), which a full kernel forces.
// It is necessary, not sufficient.
bool norm_balance_holds(const LinearizedPoly& l);

// Every projective root count realizable at sigma-degree d over middle
// field size q: all sums of (q^j - 1)/(q - 1) with the part sizes j
// totalling at most d.  For d = 2 this is {0, 1, 2, q + 1}.
std::set<uint64_t> admissible_proj_counts(unsigned d, uint64_t q);

// (q^g - 1)/(q - 1) summed without division.
uint64_t geometric_sum(uint64_t q, unsigned g);

struct RootCountReport {
  unsigned nullity = 0;
  uint64_t roots_linear = 0;  // q^nullity
  uint64_t roots_projective = 0;
  uint64_t roots_projective_gcrc = 0;
  EigenProfile profile;
  std::map<uint64_t, unsigned> gcrc_degree_by_lambda;
  FullKernelResult kernel_class;
  bool norm_balance_checked = false;  // only meaningful when kernel is full
  bool norm_balance = false;
  bool methods_agree = false;
  std::vector<std::string> methods;
};

// Counts along every implemented route and cross-checks them.  Requires
// a_0 != 0 and degree >= 1, like count_proj_roots.
RootCountReport root_count_report(const LinearizedPoly& l);

}  // namespace skewroots
