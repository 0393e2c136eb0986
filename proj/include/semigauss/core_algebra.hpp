#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semigauss/instance.hpp"

namespace semigauss {

struct AxiomFailure {
  std::string axiom;
  std::vector<Element> witnesses;
};

struct AxiomReport {
  std::size_t equations_checked = 0;
  std::vector<AxiomFailure> failures;
  // Set when the instance claims to be a semidomain and every sampled
  // cancellation instance held.
  bool cancellation_confirmed = false;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks the eight semiring equations (additive and multiplicative
/// associativity, commutativity and identity, distributivity, absorption)
/// on every ordered triple of samples, plus 1 != 0 and, for instances flagged
/// as semidomains, multiplicative cancellation.
AxiomReport axiom_suite(const SemiringInstance& s, std::span<const Element> samples);

bool divides(const SemiringInstance& s, const Element& a, const Element& b);
bool associates(const SemiringInstance& s, const Element& a, const Element& b);
bool is_irreducible(const SemiringInstance& s, const Element& a);
/// Zero is rejected with ErrorKind::zero_excluded.
bool is_prime_element(const SemiringInstance& s, const Element& p);

/// Lemma check for one triple: (d | a and d | a+b) implies d | b.
bool divisor_subtraction_check(const SemiringInstance& s, const Element& d,
                               const Element& a, const Element& b);

enum class Membership { yes, no, unknown };

const char* to_string(Membership m) noexcept;

/// Bounded search for x = sum s_i g_i with 0 <= s_i <= bound (N) or
/// |s_i| <= bound (Z).
Membership ideal_contains(const FinitelyGeneratedIdeal& ideal, const Element& x,
                          unsigned long bound);

enum class Subtractivity {
  subtractive,            // proven (every ideal of a ring is subtractive)
  subtractive_up_to_bound,
  not_subtractive,
};

const char* to_string(Subtractivity v) noexcept;

struct SubtractivityResult {
  Subtractivity verdict = Subtractivity::subtractive;
  // a in I, a+b in I, b not in I.
  std::optional<std::pair<Element, Element>> witness;
};

/// Searches 0 <= a, b <= bound for a counterexample to subtractivity.
SubtractivityResult is_subtractive_ideal(const FinitelyGeneratedIdeal& ideal,
                                         unsigned long bound);

}  // namespace semigauss
