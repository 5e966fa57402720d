#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "test_util.hpp"
#include "unitary/arith_func.hpp"

using namespace unitary;
using testutil::random_dense;
using testutil::random_sparse;
using testutil::random_unit;

TEST_CASE("coefficient field arithmetic") {
  Coeff a = Coeff::rational(1, 2);
  Coeff b = Coeff::rational(-3, 4);
  CHECK(a + b == Coeff::rational(-1, 4));
  CHECK(a * b == Coeff::rational(-3, 8));
  CHECK(a / b == Coeff::rational(-2, 3));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a / Coeff(), std::domain_error);

  Coeff i(mpq_class(0), mpq_class(1));
  CHECK(i * i == Coeff(-1));
  CHECK((Coeff(1) / i) * i == Coeff(1));
}

TEST_CASE("coefficient text round trip") {
  for (const char* text : {"0/1", "5/3", "-7/2", "1/2+-3/4i", "0/1+1/1i"}) {
    Coeff c = Coeff::parse(text);
    CHECK(Coeff::parse(c.str()) == c);
  }
  CHECK(Coeff::parse("3") == Coeff(3));
  CHECK_THROWS_AS(Coeff::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Coeff::parse("1/0"), std::invalid_argument);
}

TEST_CASE("constructors e, zero, one") {
  std::mt19937_64 rng(1);
  ArithFunc f = random_dense(rng, 10);
  CHECK(uconv(ArithFunc::e(1, 10), f) == f);
  CHECK(add(ArithFunc::zero(10), f) == f);
  for (long n = 1; n <= 6; ++n) CHECK(ArithFunc::one(6)[n] == Coeff(1));
  CHECK_THROWS_AS(ArithFunc::e(11, 10), std::domain_error);
}

TEST_CASE("add and scale are pointwise") {
  ArithFunc s = add(ArithFunc::e(2, 10), ArithFunc::e(3, 10));
  CHECK(s.support() == std::vector<long>{2, 3});
  std::mt19937_64 rng(2);
  ArithFunc f = random_dense(rng, 10);
  CHECK(scale(Coeff(), f).is_zero());
  CHECK(scale(Coeff::rational(2, 3), ArithFunc::e(4, 10))[4] ==
        Coeff::rational(2, 3));
}

TEST_CASE("uconv on indicators") {
  long N = 30;
  CHECK(uconv(ArithFunc::e(2, N), ArithFunc::e(3, N)) == ArithFunc::e(6, N));
  CHECK(uconv(ArithFunc::e(2, N), ArithFunc::e(4, N)).is_zero());
  CHECK(uconv(ArithFunc::e(2, N), ArithFunc::e(2, N)).is_zero());
}

TEST_CASE("e_k1 (+) e_k2 = e_{k1 k2} or zero, all pairs in bound") {
  long N = 60;
  for (long k1 = 1; k1 <= N; ++k1) {
    for (long k2 = 1; k1 * k2 <= N; ++k2) {
      ArithFunc prod = uconv(ArithFunc::e(k1, N), ArithFunc::e(k2, N));
      if (std::gcd(k1, k2) == 1) {
        CHECK(prod == ArithFunc::e(k1 * k2, N));
      } else {
        CHECK(prod.is_zero());
      }
    }
  }
}

TEST_CASE("dconv on indicators") {
  long N = 10;
  CHECK(dconv(ArithFunc::e(2, N), ArithFunc::e(2, N)) == ArithFunc::e(4, N));
  CHECK(dconv(ArithFunc::e(2, N), ArithFunc::e(3, N)) == ArithFunc::e(6, N));
  std::mt19937_64 rng(3);
  ArithFunc f = random_dense(rng, N);
  CHECK(dconv(ArithFunc::e(1, N), f) == f);
}

TEST_CASE("mixed bounds are rejected") {
  CHECK_THROWS_AS(add(ArithFunc::zero(5), ArithFunc::zero(6)),
                  std::invalid_argument);
  CHECK_THROWS_AS(uconv(ArithFunc::zero(5), ArithFunc::zero(6)),
                  std::invalid_argument);
}

TEST_CASE("upow") {
  long N = 250;
  ArithFunc f = add(ArithFunc::e(2, N), ArithFunc::e(3, N));
  CHECK(upow(f, 2) == scale(Coeff(2), ArithFunc::e(6, N)));
  CHECK(upow(f, 3).is_zero());
  CHECK(upow(f, 1) == f);
  CHECK(upow(f, 0) == ArithFunc::e(1, N));
}

TEST_CASE("order, norm, degree") {
  long N = 40;
  CHECK(order(ArithFunc::e(6, N)) == 6);
  CHECK(norm(ArithFunc::e(6, N)) == mpq_class(1, 6));
  CHECK(degree(ArithFunc::e(30, N)) == 3);
  CHECK(order(ArithFunc::zero(N)) == std::nullopt);
  CHECK(norm(ArithFunc::zero(N)) == 0);
  CHECK(degree(ArithFunc::zero(N)) == std::nullopt);
  CHECK(degree(ArithFunc::one(N)) == 0);
}

TEST_CASE("norm of a combination is 1 over the least support index") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    ArithFunc f = random_sparse(rng, 200, 6, 1, 200);
    auto supp = f.support();
    if (supp.empty()) continue;
    CHECK(norm(f) == mpq_class(1, supp.front()));
  }
}

TEST_CASE("units") {
  long N = 10;
  CHECK(is_unit(ArithFunc::one(N)));
  CHECK_FALSE(is_unit(ArithFunc::e(2, N)));
  CHECK(is_unit(add(ArithFunc::e(1, N), ArithFunc::e(2, N))));
}

TEST_CASE("inverse") {
  long N = 200;
  CHECK(inverse(ArithFunc::e(1, N)) == ArithFunc::e(1, N));
  CHECK(inverse(ArithFunc::one(N)) == mobius_star(N));
  CHECK_THROWS_AS(inverse(ArithFunc::e(2, N)), std::domain_error);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    ArithFunc f = random_unit(rng, N, 8);
    ArithFunc g = inverse(f);
    CHECK(uconv(f, g) == ArithFunc::e(1, N));
    CHECK(inverse(g) == f);
  }
}

TEST_CASE("geometric_inverse agrees with inverse") {
  long N = 200;
  CHECK(geometric_inverse(ArithFunc::one(N)) == mobius_star(N));
  CHECK(geometric_inverse(ArithFunc::e(1, N)) == ArithFunc::e(1, N));
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    ArithFunc f = random_unit(rng, N, 8);
    CHECK(geometric_inverse(f) == inverse(f));
  }
}

TEST_CASE("mobius_star values") {
  ArithFunc mu = mobius_star(30);
  CHECK(mu[1] == Coeff(1));
  CHECK(mu[12] == Coeff(1));
  CHECK(mu[30] == Coeff(-1));
}

TEST_CASE("multiplicative_from") {
  long N = 60;
  const Sieve& sv = Sieve::standard();
  CHECK(multiplicative_from({}, N) == ArithFunc::e(1, N));

  std::map<std::pair<long, long>, Coeff> ones, minus;
  for (long n = 2; n <= N; ++n) {
    for (const auto& [p, a] : sv.factor(n).pairs()) {
      ones[{sv.prime_index(p), a}] = Coeff(1);
      minus[{sv.prime_index(p), a}] = Coeff(-1);
    }
  }
  CHECK(multiplicative_from(ones, N) == ArithFunc::one(N));
  CHECK(multiplicative_from(minus, N) == mobius_star(N));
}

TEST_CASE("multiplicative functions form a group") {
  long N = 100;
  const Sieve& sv = Sieve::standard();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    std::map<std::pair<long, long>, Coeff> ta, tb;
    for (long n = 2; n <= N; ++n) {
      for (const auto& [p, a] : sv.factor(n).pairs()) {
        ta[{sv.prime_index(p), a}] = testutil::random_rational(rng);
        tb[{sv.prime_index(p), a}] = testutil::random_rational(rng);
      }
    }
    ArithFunc f = multiplicative_from(ta, N);
    ArithFunc g = multiplicative_from(tb, N);
    CHECK(is_multiplicative(f));
    CHECK(is_multiplicative(g));
    CHECK(is_multiplicative(uconv(f, g)));
    CHECK(is_multiplicative(inverse(f)));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(8);
  long N = 120;
  for (int t = 0; t < 10; ++t) {
    ArithFunc f = random_dense(rng, N);
    ArithFunc g = random_dense(rng, N);
    ArithFunc h = random_dense(rng, N);
    CHECK(uconv(f, g) == uconv(g, f));
    CHECK(uconv(uconv(f, g), h) == uconv(f, uconv(g, h)));
    CHECK(uconv(f, add(g, h)) == add(uconv(f, g), uconv(f, h)));
    CHECK(uconv(ArithFunc::e(1, N), f) == f);
    CHECK(uconv(ArithFunc::zero(N), f).is_zero());
  }
}

TEST_CASE("order and degree under convolution (valuation lemma)") {
  std::mt19937_64 rng(9);
  long N = 400;
  for (int t = 0; t < 60; ++t) {
    // Positive coefficients rule out cancellation, so the minimal
    // witnesses survive and the full-ring identities hold verbatim.
    ArithFunc f(N), g(N);
    std::uniform_int_distribution<long> idx(2, 18);
    for (int i = 0; i < 4; ++i) {
      f.set(idx(rng), testutil::random_positive_rational(rng));
      g.set(idx(rng), testutil::random_positive_rational(rng));
    }
    long i = *order(f), j = *order(g);

    CHECK(*order(dconv(f, g)) == i * j);
    auto ou = order(uconv(f, g));
    if (ou) {
      CHECK(i * j <= *ou);
      if (std::gcd(i, j) == 1) CHECK(*ou == i * j);
      CHECK(*ou >= std::max(i, j));
      CHECK(*ou > std::max(i, j));  // both non-units here
    }
    if (std::gcd(i, j) == 1) CHECK(*order(uconv(f, g)) == i * j);

    long df = *degree(f), dg = *degree(g);
    // omega(kl) >= max(omega k, omega l), with equality to the sum only
    // for coprime k, l; so the product degree dominates the max and the
    // unitary product degree dominates the sum.
    CHECK(*degree(dconv(f, g)) >= std::max(df, dg));
    if (ou) CHECK(*degree(uconv(f, g)) >= df + dg);
    CHECK(*degree(add(f, g)) >= std::min(df, dg));
  }
}

TEST_CASE("order of difference and scaling") {
  std::mt19937_64 rng(10);
  long N = 200;
  for (int t = 0; t < 40; ++t) {
    ArithFunc f = random_sparse(rng, N, 5, 1, N);
    ArithFunc g = random_sparse(rng, N, 5, 1, N);
    auto of = order(f), og = order(g), od = order(sub(f, g));
    if (of && og && od) CHECK(*od >= std::min(*of, *og));
    if (of) {
      CHECK(order(scale(Coeff::rational(-7, 3), f)) == of);
      CHECK((*of == 1) == is_unit(f));
      CHECK((*degree(f) == 0) == is_unit(f));
    }
  }
}

TEST_CASE("non-units are topologically nilpotent at truncation") {
  std::mt19937_64 rng(11);
  long N = 500;
  for (int t = 0; t < 15; ++t) {
    ArithFunc f = random_sparse(rng, N, 4, 2, 30);
    ArithFunc power = f;
    long prev = *order(f);
    while (true) {
      power = uconv(power, f);
      auto o = order(power);
      if (!o) break;
      CHECK(*o > prev);  // strictly increasing until the power vanishes
      prev = *o;
    }
  }
}

TEST_CASE("square of a non-unit beats the squared norm") {
  std::mt19937_64 rng(12);
  long N = 500;
  for (int t = 0; t < 30; ++t) {
    ArithFunc f = random_sparse(rng, N, 4, 2, 22);
    ArithFunc sq = uconv(f, f);
    auto o = order(sq);
    if (o) CHECK(*o > (*order(f)) * (*order(f)));
  }
}
