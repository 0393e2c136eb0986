#include <doctest.h>

#include "semigauss/errors.hpp"
#include "semigauss/fraction.hpp"

using namespace semigauss;

TEST_CASE("fraction examples") {
  const auto sum = frac_add(frac_make(1, 2), frac_make(1, 3));
  CHECK(sum.num() == 5);
  CHECK(sum.den() == 6);
  const auto x = frac_make(7, 9);
  CHECK(frac_add(x, frac_make(0, 1)) == x);
  CHECK(frac_eq(frac_make(2, 4), frac_make(1, 2)));
  CHECK_FALSE(frac_eq(frac_make(2, 4), frac_make(1, 3)));
}

TEST_CASE("fractions are stored reduced with positive denominator") {
  const auto x = frac_make(6, -4);
  CHECK(x.num() == -3);
  CHECK(x.den() == 2);
  CHECK(reduce(x) == x);
  CHECK(reduce(reduce(x)) == reduce(x));
  CHECK(frac_make(0, 5) == Fraction(0));
  CHECK(frac_make(12, 3).is_integral());
}

TEST_CASE("fraction errors") {
  try {
    frac_make(1, 0);
    FAIL("zero denominator accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::zero_denominator);
  }
  try {
    frac_inv(Fraction(0));
    FAIL("inverse of zero accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::inverse_of_zero);
  }
}

TEST_CASE("inverse and embedding") {
  for (long n = -6; n <= 6; ++n)
    for (long d = 1; d <= 6; ++d) {
      if (n == 0) continue;
      const auto x = frac_make(n, d);
      CHECK(frac_mul(x, frac_inv(x)) == Fraction(1));
    }
  for (long a = 0; a <= 10; ++a)
    for (long b = 0; b <= 10; ++b) {
      CHECK(frac_add(Fraction(a), Fraction(b)) == Fraction(a + b));
      CHECK(frac_mul(Fraction(a), Fraction(b)) == Fraction(a * b));
    }
}

TEST_CASE("powers and parsing") {
  CHECK(frac_pow(3, -2) == frac_make(1, 9));
  CHECK(frac_pow(2, 3) == Fraction(8));
  CHECK(frac_pow(5, 0) == Fraction(1));
  CHECK(parse_fraction("9/4") == frac_make(9, 4));
  CHECK(parse_fraction("12") == Fraction(12));
  CHECK_THROWS_AS(parse_fraction("1/0"), AlgebraError);
  CHECK_THROWS_AS(parse_fraction("x"), AlgebraError);
}
