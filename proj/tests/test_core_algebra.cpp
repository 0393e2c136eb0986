#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "semigauss/core_algebra.hpp"
#include "semigauss/errors.hpp"

using namespace semigauss;

namespace {

std::vector<Element> range(long lo, long hi) {
  std::vector<Element> out;
  for (long i = lo; i <= hi; ++i) out.emplace_back(i);
  return out;
}

SemiringInstance broken_absorption() {
  SemiringInstance s = natural_numbers();
  s.name = "broken";
  s.kind = InstanceKind::custom;
  s.mul = [](const Element& a, const Element& b) { return b == 0 ? a : Element(a * b); };
  return s;
}

}  // namespace

TEST_CASE("axiom suite on the shipped instances") {
  const auto nat = axiom_suite(natural_numbers(), range(0, 3));
  CHECK(nat.ok());
  CHECK(nat.equations_checked > 0);

  const auto z = axiom_suite(integers(), range(-2, 2));
  CHECK(z.ok());
  CHECK(z.cancellation_confirmed);
}

TEST_CASE("axiom suite reports an injected absorption defect") {
  const auto report = axiom_suite(broken_absorption(), range(0, 3));
  REQUIRE_FALSE(report.ok());
  const AxiomFailure* absorption = nullptr;
  for (const auto& f : report.failures)
    if (f.axiom == "absorption") absorption = &f;
  REQUIRE(absorption != nullptr);
  REQUIRE(absorption->witnesses.size() == 1);
  CHECK(absorption->witnesses[0] == 1);
}

TEST_CASE("axiom suite needs samples") {
  CHECK_THROWS_AS(axiom_suite(natural_numbers(), std::vector<Element>{}), AlgebraError);
}

TEST_CASE("divides") {
  const auto& N = natural_numbers();
  CHECK(divides(N, 3, 12) == oracle::divides_by_search(3, 12, 12, false));
  CHECK(divides(N, 3, 12));
  CHECK_FALSE(divides(N, 5, 12));
  CHECK(oracle::divides_by_search(5, 12, 12, false) == false);
  for (long a = 1; a <= 5; ++a) CHECK(divides(N, a, 0));
  CHECK(divides(integers(), -4, 0));

  SUBCASE("agrees with exhaustive search") {
    for (long a = 0; a <= 30; ++a)
      for (long b = 0; b <= 60; ++b)
        CHECK(divides(N, a, b) == oracle::divides_by_search(a, b, 60, false));
    for (long a = -12; a <= 12; ++a)
      for (long b = -24; b <= 24; ++b)
        CHECK(divides(integers(), a, b) == oracle::divides_by_search(a, b, 24, true));
  }
}

TEST_CASE("divisibility needs a decision procedure") {
  SemiringInstance s = natural_numbers();
  s.factor = nullptr;
  CHECK_THROWS_WITH_AS(divides(s, 2, 4), doctest::Contains("divisibility"), AlgebraError);
  try {
    divides(s, 2, 4);
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::undecidable_instance);
  }
}

TEST_CASE("associates") {
  CHECK(associates(integers(), 3, -3));
  CHECK_FALSE(associates(natural_numbers(), 2, 3));
  for (long a = -5; a <= 5; ++a) CHECK(associates(integers(), a, a));
  for (long a = 0; a <= 5; ++a) CHECK(associates(natural_numbers(), a, a));
  // Over N the only unit is 1.
  for (long a = 0; a <= 8; ++a)
    for (long b = 0; b <= 8; ++b) CHECK(associates(natural_numbers(), a, b) == (a == b));
  CHECK(associates(natural_numbers(), 0, 0));
}

TEST_CASE("irreducible and prime elements") {
  const auto& N = natural_numbers();
  CHECK(is_irreducible(N, 7));
  CHECK_FALSE(is_irreducible(N, 1));
  CHECK_FALSE(is_irreducible(N, 6));
  CHECK_FALSE(is_irreducible(N, 0));
  CHECK(is_prime_element(N, 5));
  CHECK_FALSE(is_prime_element(N, 4));
  CHECK(is_prime_element(integers(), -3));
  CHECK_FALSE(is_prime_element(integers(), -1));

  for (long n = 1; n <= 500; ++n) CHECK(is_prime_element(N, n) == oracle::is_prime_by_trial(n));

  try {
    is_prime_element(N, 0);
    FAIL("zero accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::zero_excluded);
    CHECK(std::string(e.what()).find("zero excluded by convention") != std::string::npos);
  }
}

TEST_CASE("ideal membership by bounded search") {
  const FinitelyGeneratedIdeal i23(natural_numbers(), {Element(2), Element(3)});
  CHECK(ideal_contains(i23, 5, 10) == Membership::yes);
  CHECK(ideal_contains(i23, 1, 10) == Membership::no);
  CHECK(ideal_contains(i23, 0, 10) == Membership::yes);
  // 2 * 11 needs a coefficient beyond the bound for the single generator 2.
  const FinitelyGeneratedIdeal i2(natural_numbers(), {Element(2)});
  CHECK(ideal_contains(i2, 22, 10) == Membership::unknown);
  CHECK(ideal_contains(i2, 21, 100) == Membership::no);

  const FinitelyGeneratedIdeal z6(integers(), {Element(4), Element(6)});
  CHECK(ideal_contains(z6, -2, 5) == Membership::yes);
  CHECK(ideal_contains(z6, 3, 5) == Membership::no);
  CHECK(ideal_contains(z6, 0, 0) == Membership::yes);

  SUBCASE("agrees with enumeration over N") {
    const std::vector<std::vector<long>> gen_sets{{2, 3}, {4, 6}, {5}, {3, 7, 0}, {0}};
    for (const auto& gens : gen_sets) {
      std::vector<Element> g(gens.begin(), gens.end());
      const FinitelyGeneratedIdeal ideal(natural_numbers(), g);
      for (long x = 0; x <= 40; ++x) {
        const bool expected = oracle::nat_combination(gens, x, 40);
        CHECK(ideal_contains(ideal, x, 40) == (expected ? Membership::yes : Membership::no));
      }
    }
  }
}

TEST_CASE("ideal search rejects custom instances") {
  SemiringInstance s = natural_numbers();
  s.kind = InstanceKind::custom;
  const FinitelyGeneratedIdeal ideal(s, {Element(2)});
  CHECK_THROWS_AS(ideal_contains(ideal, 2, 3), AlgebraError);
  CHECK_THROWS_AS(is_subtractive_ideal(ideal, 3), AlgebraError);
}

TEST_CASE("subtractive ideals") {
  const auto r = is_subtractive_ideal(FinitelyGeneratedIdeal(natural_numbers(), {Element(2), Element(3)}), 100);
  CHECK(r.verdict == Subtractivity::not_subtractive);
  REQUIRE(r.witness);
  CHECK(r.witness->first == 2);
  CHECK(r.witness->second == 1);

  const auto even = is_subtractive_ideal(FinitelyGeneratedIdeal(natural_numbers(), {Element(2)}), 100);
  CHECK(even.verdict == Subtractivity::subtractive_up_to_bound);
  CHECK_FALSE(even.witness);

  const auto z = is_subtractive_ideal(FinitelyGeneratedIdeal(integers(), {Element(2), Element(3)}), 100);
  CHECK(z.verdict == Subtractivity::subtractive);
}

TEST_CASE("divisor subtraction") {
  const auto& N = natural_numbers();
  CHECK(divisor_subtraction_check(N, 3, 6, 9));
  for (long a = 0; a <= 10; ++a)
    for (long b = 0; b <= 10; ++b) CHECK(divisor_subtraction_check(N, 1, a, b));
  // Antecedent fails: vacuous.
  CHECK(divisor_subtraction_check(N, 3, 4, 5));

  for (long d = -12; d <= 12; ++d) {
    if (d == 0) continue;
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b) CHECK(divisor_subtraction_check(integers(), d, a, b));
  }
}

TEST_CASE("divides is a preorder on a small range") {
  const auto& N = natural_numbers();
  for (long a = 1; a <= 12; ++a) {
    CHECK(divides(N, a, a));
    for (long b = 1; b <= 12; ++b)
      for (long c = 1; c <= 24; ++c)
        if (divides(N, a, b) && divides(N, b, c)) CHECK(divides(N, a, c));
  }
}
