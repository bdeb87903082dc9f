// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewroots/lowdeg.hpp"

namespace skewroots {

// Brute-force ground truth and sweep machinery.  The brute counters share
// nothing with the counting routes except field arithmetic and polynomial
// evaluation, which is what makes the cross-checks meaningful.

constexpr uint64_t kDefaultBruteBudget = uint64_t{1} << 26;

struct BruteLinear {
  uint64_t roots = 0;    // always a power of q: the kernel is a subspace
  unsigned nullity = 0;  // log_q(roots)
};

// Counts zeros of L over the whole field by evaluation.  Refuses fields
// larger than the budget and the zero polynomial.
BruteLinear brute_roots_lin(const LinearizedPoly& l,
                            uint64_t budget = kDefaultBruteBudget);

// Zeros of the projective form P_L, again by plain evaluation.
uint64_t brute_roots_proj(const LinearizedPoly& l,
                          uint64_t budget = kDefaultBruteBudget);

// Every implemented route for one polynomial, with the brute force as
// referee.  Requires a_0 != 0 and sigma-degree >= 1.  Disagreements are
// recorded, not thrown, so sweeps can tally them.
struct CrossCheck {
  unsigned brute_nullity = 0;
  uint64_t brute_proj = 0;

  unsigned nullity_generic = 0;  // nullity(A_L - I)
  unsigned nullity_dickson = 0;  // corank of the Dickson matrix
  std::optional<unsigned> nullity_closed;  // degree 2/3 classifiers

  uint64_t proj_eigen = 0;
  uint64_t proj_gcrc = 0;
  std::optional<uint64_t> proj_closed;

  bool chi_certified = false;       // char poly coefficients in F_q
  bool det_identity = false;        // det A_L = N((-1)^d a_0 / a_d)
  bool closed_matrix_match = true;  // closed-form A_L where applicable
  bool norm_balance_ok = true;      // necessary condition on a full kernel
  bool admissible = false;          // projective count in the realizable set

  std::string case_tag;  // classifier branch, "generic" for other degrees
  bool agree = false;
  std::string note;  // names the first failing leg
};
CrossCheck crosscheck(const LinearizedPoly& l,
                      uint64_t budget = kDefaultBruteBudget);

struct SweepPlan {
  std::shared_ptr<const Field> spec;
  unsigned degree = 2;
  bool exhaustive = true;  // every tuple with a_0 a_d != 0
  uint64_t samples = 0;    // random mode sample count
  uint64_t seed = 0;
  uint64_t budget = kDefaultBruteBudget;
};

// Everything below except seconds is a deterministic function of the plan:
// two runs with the same plan produce identical summaries.
struct SweepSummary {
  uint64_t tuples = 0;
  uint64_t disagreements = 0;
  std::map<std::string, uint64_t> by_case;
  std::map<uint64_t, uint64_t> by_proj_count;
  std::map<unsigned, uint64_t> by_nullity;
  std::vector<std::string> examples;  // first few disagreeing polynomials
  double seconds = 0.0;
};
SweepSummary run_sweep(const SweepPlan& plan);

// All monic polynomials of the given sigma-degree with a_0 != 0 whose
// projective form fully splits (the n-fold companion product is a scalar
// matrix).  Candidates pass a closed-form filter where one exists, then the
// scalar-matrix test, then brute-force re-verification.
std::vector<LinearizedPoly> search_full_split(
    const std::shared_ptr<const Field>& spec, unsigned degree,
    uint64_t budget = kDefaultBruteBudget);

// Uniform draw from [0, bound) by rejection; fully determined by the seed
// and portable, since mt19937_64 itself is pinned by the standard.
uint64_t draw_below(std::mt19937_64& rng, uint64_t bound);

}  // namespace skewroots
