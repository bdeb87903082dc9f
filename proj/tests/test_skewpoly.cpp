// SPDX-License-Identifier: MIT
#include <random>

#include "doctest.h"
#include "skewroots/error.hpp"
#include "skewroots/skewpoly.hpp"

using namespace skewroots;

namespace {

std::shared_ptr<const Field> f8() { return Field::create(2, 1, 3, 1); }
std::shared_ptr<const Field> f27() { return Field::create(3, 1, 3, 1); }
std::shared_ptr<const Field> f32() { return Field::create(2, 1, 5, 1); }

LinearizedPoly random_poly(const std::shared_ptr<const Field>& f, unsigned deg,
                           std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  for (unsigned i = 0; i < deg; ++i) c.push_back(f->element(rng() % f->order()));
  c.push_back(f->element(1 + rng() % (f->order() - 1)));  // leading non-zero
  return LinearizedPoly(f, std::move(c));
}

unsigned brute_nullity(const LinearizedPoly& l) {
  const Field& f = *l.spec();
  uint64_t roots = 0;
  for (uint64_t e = 0; e < f.order(); ++e)
    if (l.eval_linear(f.element(e)).is_zero()) ++roots;
  unsigned g = 0;
  while (roots > 1) {
    roots /= f.subfield_order();
    ++g;
  }
  return g;
}

}  // namespace

TEST_CASE("construction trims and reports degree") {
  auto f = f8();
  LinearizedPoly l(f, {f->one(), f->element(2), f->zero()});
  REQUIRE(l.degree().has_value());
  CHECK(*l.degree() == 1);
  CHECK(l.coeff(0) == f->one());
  CHECK(l.coeff(1) == f->element(2));
  CHECK(l.coeff(5).is_zero());  // beyond the degree
  CHECK(l.leading() == f->element(2));

  CHECK(LinearizedPoly::zero(f).is_zero());
  CHECK(!LinearizedPoly::zero(f).degree().has_value());
  LinearizedPoly mono = LinearizedPoly::monomial(f, 3, f->element(5));
  CHECK(*mono.degree() == 3);
  CHECK(mono.coeff(3) == f->element(5));
  CHECK(mono.coeff(0).is_zero());
}

TEST_CASE("monic and scaled") {
  auto f = f27();
  LinearizedPoly l(f, {f->element(5), f->element(7), f->element(2)});
  LinearizedPoly m = l.monic();
  CHECK(m.leading() == f->one());
  CHECK(l.scaled(f->inv(f->element(2))) == m);
  // scaling never changes the kernel
  for (uint64_t e = 0; e < 27; ++e) {
    FieldElement x = f->element(e);
    CHECK(l.eval_linear(x).is_zero() == m.eval_linear(x).is_zero());
  }
}

TEST_CASE("known kernel of x^(sigma^2) - x over F_32") {
  // sigma^2 fixes F_4; inside F_32 that intersects to F_2, so 2 roots
  auto f = f32();
  LinearizedPoly l(f, {-f->one(), f->zero(), f->one()});
  uint64_t roots = 0;
  for (uint64_t e = 0; e < 32; ++e)
    if (l.eval_linear(f->element(e)).is_zero()) ++roots;
  CHECK(roots == 2);
}

TEST_CASE("projective form satisfies L(x) = x P_L(x^(sigma-1))") {
  auto run = [](const std::shared_ptr<const Field>& f) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      LinearizedPoly l = random_poly(f, 1 + trial % 3, rng);
      for (uint64_t e = 1; e < f->order(); ++e) {
        FieldElement x = f->element(e);
        FieldElement y = frobenius(x, 1) / x;
        CHECK(l.eval_linear(x) == x * l.eval_projective(y));
      }
    }
  };
  run(f8());
  run(f27());
  run(Field::create(2, 1, 5, 2));  // sigma = x -> x^4
}

TEST_CASE("composition agrees with pointwise application") {
  auto f = f27();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    LinearizedPoly l = random_poly(f, 1 + trial % 2, rng);
    LinearizedPoly m = random_poly(f, 1 + (trial / 2) % 3, rng);
    LinearizedPoly lm = compose(l, m);
    CHECK(*lm.degree() == *l.degree() + *m.degree());
    for (uint64_t e = 0; e < 27; ++e) {
      FieldElement x = f->element(e);
      CHECK(lm.eval_linear(x) == l.eval_linear(m.eval_linear(x)));
    }
  }
}

TEST_CASE("composition is associative but not commutative") {
  auto f = f8();
  std::mt19937_64 rng(9);
  LinearizedPoly a = random_poly(f, 1, rng);
  LinearizedPoly b = random_poly(f, 2, rng);
  LinearizedPoly c = random_poly(f, 1, rng);
  CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  // t x composed with x^sigma: coefficients twist on one side only
  LinearizedPoly tx(f, {f->element(2)});
  LinearizedPoly xs = LinearizedPoly::monomial(f, 1, f->one());
  CHECK(compose(tx, xs) != compose(xs, tx));
}

TEST_CASE("right division reconstructs and bounds the remainder") {
  auto check_div = [](const std::shared_ptr<const Field>& f, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 40; ++trial) {
      LinearizedPoly m = random_poly(f, 2 + trial % 3, rng);
      LinearizedPoly l = random_poly(f, 1 + trial % 2, rng);
      RightDivision qr = divide_right(m, l);
      CHECK(compose(qr.quotient, l) + qr.remainder == m);
      if (!qr.remainder.is_zero())
        CHECK(*qr.remainder.degree() < *l.degree());
    }
  };
  check_div(f8(), 1);
  check_div(f27(), 2);
  check_div(Field::create(3, 1, 5, 2), 3);
  auto f = f8();
  std::mt19937_64 rng(4);
  CHECK_THROWS_AS(
      (void)divide_right(random_poly(f, 2, rng), LinearizedPoly::zero(f)),
      Error);
}

TEST_CASE("gcrc kernel is the kernel intersection") {
  auto f = f8();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    LinearizedPoly l = random_poly(f, 1 + trial % 3, rng);
    LinearizedPoly m = random_poly(f, 1 + (trial / 3) % 3, rng);
    LinearizedPoly g = gcrc(l, m);
    CHECK(g.leading() == f->one());
    // every common root is a root of g and conversely
    for (uint64_t e = 0; e < 8; ++e) {
      FieldElement x = f->element(e);
      bool common =
          l.eval_linear(x).is_zero() && m.eval_linear(x).is_zero();
      if (common) CHECK(g.eval_linear(x).is_zero());
      if (g.eval_linear(x).is_zero()) {
        CHECK(l.eval_linear(x).is_zero());
        CHECK(m.eval_linear(x).is_zero());
      }
    }
    // g right-divides both
    CHECK(divide_right(l, g).remainder.is_zero());
    CHECK(divide_right(m, g).remainder.is_zero());
  }
}

TEST_CASE("nullity equals the gcrc degree against x^(sigma^n) - x") {
  auto run = [](const std::shared_ptr<const Field>& f, uint64_t seed) {
    std::mt19937_64 rng(seed);
    LinearizedPoly full =
        LinearizedPoly::monomial(f, f->n(), f->one()) -
        LinearizedPoly::monomial(f, 0, f->one());
    for (int trial = 0; trial < 30; ++trial) {
      LinearizedPoly l = random_poly(f, 1 + trial % 3, rng);
      CHECK(*gcrc(full, l).degree() == brute_nullity(l));
    }
  };
  run(f8(), 21);
  run(f27(), 22);
  run(Field::create(2, 1, 5, 2), 23);
}

TEST_CASE("lclc degree identity and divisibility") {
  auto f = f27();
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    LinearizedPoly l = random_poly(f, 1 + trial % 2, rng);
    LinearizedPoly m = random_poly(f, 1 + (trial / 2) % 2, rng);
    LinearizedPoly g = gcrc(l, m);
    LinearizedPoly n = lclc(l, m);
    CHECK(*l.degree() + *m.degree() == *g.degree() + *n.degree());
    CHECK(n.leading() == f->one());
    CHECK(divide_right(n, l).remainder.is_zero());
    CHECK(divide_right(n, m).remainder.is_zero());
  }
}

TEST_CASE("twist is a composition homomorphism") {
  auto run = [](const std::shared_ptr<const Field>& f, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 25; ++trial) {
      LinearizedPoly l = random_poly(f, 1 + trial % 2, rng);
      LinearizedPoly m = random_poly(f, 1 + (trial / 2) % 2, rng);
      FieldElement alpha = f->element(1 + rng() % (f->order() - 1));
      CHECK(twist(compose(l, m), alpha) ==
            compose(twist(l, alpha), twist(m, alpha)));
      CHECK(twist(gcrc(l, m), alpha).monic() ==
            gcrc(twist(l, alpha), twist(m, alpha)));
      // P_{L_alpha}(y) = P_L(alpha y)
      for (int k = 0; k < 5; ++k) {
        FieldElement y = f->element(rng() % f->order());
        CHECK(twist(l, alpha).eval_projective(y) ==
              l.eval_projective(alpha * y));
      }
    }
  };
  run(f8(), 41);
  run(f27(), 42);
  run(Field::create(2, 1, 5, 2), 43);
}

TEST_CASE("normalize constant strips low zeros and keeps the kernel") {
  auto f = f8();
  // t x^sigma + x^(sigma^2): lowest coefficient zero
  LinearizedPoly l(f, {f->zero(), f->element(2), f->one()});
  LinearizedPoly norm = normalize_constant(l);
  CHECK(!norm.coeff(0).is_zero());
  CHECK(*norm.degree() == 1);
  for (uint64_t e = 0; e < 8; ++e) {
    FieldElement x = f->element(e);
    CHECK(l.eval_linear(x).is_zero() == norm.eval_linear(x).is_zero());
  }
  CHECK_THROWS_AS((void)normalize_constant(LinearizedPoly::zero(f)), Error);
}

TEST_CASE("dickson matrix nullity equals the brute kernel dimension") {
  auto run = [](const std::shared_ptr<const Field>& f, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 40; ++trial) {
      LinearizedPoly l = random_poly(f, 1 + trial % (f->n() - 1), rng);
      CHECK(nullity(dickson_matrix(l)) == brute_nullity(l));
    }
  };
  run(f8(), 51);
  run(f27(), 52);
  run(Field::create(2, 1, 5, 2), 53);
}

TEST_CASE("degree folding preserves the induced map") {
  auto f = f8();
  // x^(sigma^4) acts as x^sigma on F_8 (n = 3)
  LinearizedPoly high(f, {f->one(), f->zero(), f->zero(), f->zero(),
                          f->element(2)});
  LinearizedPoly folded = fold_degree(high);
  REQUIRE(folded.degree().has_value());
  CHECK(*folded.degree() < f->n());
  for (uint64_t e = 0; e < 8; ++e) {
    FieldElement x = f->element(e);
    CHECK(high.eval_linear(x) == folded.eval_linear(x));
  }
  // folding makes the Dickson matrix available
  CHECK(nullity(dickson_matrix(folded)) == brute_nullity(high));
}
