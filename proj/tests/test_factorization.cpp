#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "semigauss/errors.hpp"
#include "semigauss/factorization.hpp"

using namespace semigauss;

TEST_CASE("factor examples") {
  const auto& N = natural_numbers();
  const auto f12 = factor(N, 12);
  CHECK(f12.unit == 1);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == PrimePower{2, 2});
  CHECK(f12.factors[1] == PrimePower{3, 1});

  const auto f1 = factor(N, 1);
  CHECK(f1.unit == 1);
  CHECK(f1.factors.empty());

  const auto f18 = factor(integers(), -18);
  CHECK(f18.unit == -1);
  REQUIRE(f18.factors.size() == 2);
  CHECK(f18.factors[0] == PrimePower{2, 1});
  CHECK(f18.factors[1] == PrimePower{3, 2});
  CHECK(to_string(f18) == "-1 * 2 * 3^2");
}

TEST_CASE("factor errors") {
  try {
    factor(natural_numbers(), 0);
    FAIL("zero accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::zero_input);
  }
  SemiringInstance s = natural_numbers();
  s.factor = nullptr;
  try {
    factor(s, 6);
    FAIL("non-factorial accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::not_factorial);
  }
  CHECK_THROWS_AS(factor(natural_numbers(), -6), AlgebraError);
}

TEST_CASE("factor agrees with naive exponents") {
  for (long n = 1; n <= 3000; ++n) {
    const auto f = factor(natural_numbers(), n);
    long rebuilt = 1;
    for (const auto& pp : f.factors) {
      const long p = pp.prime.get_si();
      CHECK(oracle::is_prime_by_trial(p));
      CHECK(static_cast<long>(pp.exponent) == oracle::exponent_of(p, n));
      for (unsigned long i = 0; i < pp.exponent; ++i) rebuilt *= p;
    }
    CHECK(rebuilt == n);
  }
}

TEST_CASE("factor beyond machine words") {
  Element big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 70);
  big *= 243;       // 3^5
  big *= 1000003;   // prime
  const auto f = factor(natural_numbers(), big);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == PrimePower{2, 70});
  CHECK(f.factors[1] == PrimePower{3, 5});
  CHECK(f.factors[2] == PrimePower{1000003, 1});
  CHECK(multiply_out(natural_numbers(), f) == big);
}

TEST_CASE("multiply_out") {
  const auto& N = natural_numbers();
  CHECK(multiply_out(N, Factorization{1, {{2, 2}, {3, 1}}}) == 12);
  CHECK(multiply_out(N, Factorization{1, {}}) == 1);
  CHECK(multiply_out(integers(), Factorization{-1, {{5, 1}}}) == -5);
  for (long n = -200; n <= 200; ++n)
    if (n != 0) CHECK(multiply_out(integers(), factor(integers(), n)) == n);
}

TEST_CASE("gcd") {
  const auto& N = natural_numbers();
  CHECK(gcd(N, std::vector<Element>{6, 4, 10}) == 2);
  CHECK(oracle::euclid(oracle::euclid(6, 4), 10) == 2);
  for (long a = 1; a <= 20; ++a) CHECK(gcd(N, std::vector<Element>{a}) == a);
  CHECK(gcd(N, std::vector<Element>{0, 9}) == 9);
  CHECK(gcd(integers(), std::vector<Element>{-6, 9}) == 3);
  CHECK(gcd(integers(), std::vector<Element>{-7}) == 7);
  try {
    gcd(N, std::vector<Element>{0, 0});
    FAIL("all-zero accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::all_zero_input);
  }

  SUBCASE("matches Euclid on a grid") {
    for (long a = -40; a <= 40; ++a)
      for (long b = -40; b <= 40; ++b) {
        if (a == 0 && b == 0) continue;
        CHECK(gcd(integers(), std::vector<Element>{a, b}) == oracle::euclid(a, b));
      }
  }
}

TEST_CASE("euclid oracle") {
  CHECK(gcd_euclid_oracle(6, 4) == 2);
  CHECK(gcd_euclid_oracle(19, 15) == 1);
  CHECK(gcd_euclid_oracle(-12, 0) == 12);
  CHECK(gcd_euclid_oracle(0, 7) == 7);
  CHECK_THROWS_AS(gcd_euclid_oracle(0, 0), AlgebraError);
}

TEST_CASE("gcd_factorization keeps common primes only") {
  const std::vector<Factorization> fs{{1, {{2, 3}, {5, 1}, {7, 2}}}, {1, {{2, 1}, {7, 4}}},
                                      {1, {{2, 2}, {3, 1}, {7, 1}}}};
  const auto g = gcd_factorization(fs);
  CHECK(g == Factorization{1, {{2, 1}, {7, 1}}});
}
