// SPDX-License-Identifier: MIT
#include <random>

#include "doctest.h"
#include "skewroots/error.hpp"
#include "skewroots/semimat.hpp"

using namespace skewroots;

namespace {

LinearizedPoly random_poly_nonzero_const(const std::shared_ptr<const Field>& f,
                                         unsigned deg, std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  c.push_back(f->element(1 + rng() % (f->order() - 1)));
  for (unsigned i = 1; i < deg; ++i)
    c.push_back(f->element(rng() % f->order()));
  c.push_back(f->element(1 + rng() % (f->order() - 1)));
  return LinearizedPoly(f, std::move(c));
}

}  // namespace

TEST_CASE("degree one product is the norm") {
  // L = a x + c x^sigma has one-by-one companion -a/c; the full product
  // telescopes to the norm of -a/c down to the middle field
  auto f = Field::create(3, 1, 4, 1);
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    FieldElement a = f->element(1 + rng() % 80);
    FieldElement c = f->element(1 + rng() % 80);
    LinearizedPoly l(f, {a, c});
    SqMatrix prod = a_matrix(l);
    REQUIRE(prod.dim() == 1);
    CHECK(prod.at(0, 0) == norm(-(a / c)));
  }
}

TEST_CASE("partial products satisfy both one step recursions") {
  auto run = [](const std::shared_ptr<const Field>& f, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 15; ++trial) {
      LinearizedPoly l =
          random_poly_nonzero_const(f, 1 + trial % 3, rng);
      SqMatrix c = companion(l);
      SqMatrix left = SqMatrix::identity(f, c.dim());
      for (unsigned k = 0; k < f->n(); ++k) {
        SqMatrix pk = partial_product(l, k);
        CHECK(pk == left);
        // extend on the right with the k-fold twist, or on the left
        SqMatrix right_ext = pk * sigma_entrywise(c, static_cast<int64_t>(k));
        SqMatrix left_ext = c * sigma_entrywise(pk, 1);
        CHECK(right_ext == partial_product(l, k + 1));
        CHECK(left_ext == partial_product(l, k + 1));
        left = right_ext;
      }
      CHECK(partial_product(l, f->n()) == a_matrix(l));
      CHECK_THROWS_AS((void)partial_product(l, f->n() + 1), Error);
    }
  };
  run(Field::create(2, 1, 3, 1), 71);
  run(Field::create(3, 1, 3, 1), 72);
  run(Field::create(2, 1, 5, 2), 73);
}

TEST_CASE("full product columns reduce the big twist monomials") {
  // column i of the full product holds the coefficients of
  // x^(sigma^n) o x^(sigma^i) reduced mod L, in the basis x, x^sigma, ...
  auto run = [](const std::shared_ptr<const Field>& f, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 12; ++trial) {
      unsigned d = 1 + trial % 3;
      LinearizedPoly l = random_poly_nonzero_const(f, d, rng);
      SqMatrix full = a_matrix(l);
      REQUIRE(full.dim() == d);
      LinearizedPoly big = LinearizedPoly::monomial(f, f->n(), f->one());
      for (unsigned i = 0; i < d; ++i) {
        LinearizedPoly shifted =
            compose(big, LinearizedPoly::monomial(f, i, f->one()));
        LinearizedPoly rem = divide_right(shifted, l).remainder;
        for (unsigned r = 0; r < d; ++r)
          CHECK(full.at(r, i) == rem.coeff(r));
      }
    }
  };
  run(Field::create(2, 1, 3, 1), 81);
  run(Field::create(3, 1, 3, 1), 82);
  run(Field::create(2, 1, 4, 1), 83);
  run(Field::create(3, 1, 4, 3), 84);
}

TEST_CASE("determinant of the full product is a signed norm") {
  auto run = [](const std::shared_ptr<const Field>& f, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 15; ++trial) {
      unsigned d = 1 + trial % 3;
      LinearizedPoly l = random_poly_nonzero_const(f, d, rng);
      FieldElement sign = f->from_int(d * f->n() % 2 == 0 ? 1 : -1);
      CHECK(det(a_matrix(l)) == sign * norm(l.coeff(0) / l.leading()));
    }
  };
  run(Field::create(2, 1, 3, 1), 91);
  run(Field::create(3, 1, 3, 1), 92);
  run(Field::create(3, 1, 5, 2), 93);
}

TEST_CASE("half length products square when coefficients live downstairs") {
  // with n = 2k and all coefficients fixed by sigma^k, the full product is
  // the square of the half product
  auto run = [](const std::shared_ptr<const Field>& f) {
    unsigned half = f->n() / 2;
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<FieldElement> c;
      unsigned d = 1 + trial % 2;
      for (unsigned i = 0; i <= d; ++i) {
        FieldElement y = f->element(rng() % f->order());
        c.push_back(y + frobenius(y, static_cast<int64_t>(half)));
      }
      if (c.front().is_zero() || c.back().is_zero()) continue;
      LinearizedPoly l(f, std::move(c));
      SqMatrix p = partial_product(l, half);
      CHECK(partial_product(l, 2 * half) == p * p);
    }
  };
  run(Field::create(2, 1, 10, 1));
  run(Field::create(3, 1, 6, 1));
  run(Field::create(2, 2, 6, 1));
}

TEST_CASE("full product demands an invertible map structure") {
  auto f = Field::create(2, 1, 3, 1);
  LinearizedPoly no_const(f, {f->zero(), f->one(), f->one()});
  CHECK_THROWS_AS((void)a_matrix(no_const), Error);
  CHECK_THROWS_AS((void)companion(LinearizedPoly::zero(f)), Error);
}
