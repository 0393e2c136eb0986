#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "semigauss/fraction.hpp"
#include "semigauss/instance.hpp"
#include "semigauss/polynomial.hpp"

namespace semigauss {

/// Content of a polynomial: the canonical (positive) representative of
/// prod p^ord_p(f). Zero exactly for the zero polynomial.
struct ContentValue {
  Fraction value;
  // Which unit normalization produced `value` for this instance.
  std::string unit_normalization;

  friend bool operator==(const ContentValue& x, const ContentValue& y) {
    return x.value == y.value;
  }
};

/// Primes that can carry a nonzero order for f: those dividing some
/// denominator, together with those dividing the numerator of smallest
/// magnitude (a prime of positive order divides every numerator). Sorted.
std::vector<Element> support_primes(const SemiringInstance& s, const Polynomial& f);

/// prod p^ord_p(f) taken over `primes`, multiplied in the given order.
Fraction content_over(const SemiringInstance& s, const Polynomial& f,
                      std::span<const Element> primes);

ContentValue content(const SemiringInstance& s, const Polynomial& f);

/// p^ord_p(f) with unit 1. Throws zero_polynomial for f = 0.
Fraction p_content(const SemiringInstance& s, const Element& p, const Polynomial& f);

struct PrimitiveDecomposition {
  ContentValue content;
  Polynomial primitive;
};

/// f = c * f1 with content(f1) = 1 and f1 in S[X]. Throws zero_polynomial.
PrimitiveDecomposition primitive_decompose(const SemiringInstance& s, const Polynomial& f);

bool is_primitive(const SemiringInstance& s, const Polynomial& f);

/// x = u * y for some unit u of S.
bool associated_fractions(const SemiringInstance& s, const Fraction& x, const Fraction& y);

struct GaussReport {
  bool holds = false;
  Fraction lhs;  // content(fg)
  Fraction rhs;  // content(f) * content(g)
};

/// Requires s.is_divisor_subtractive (instance_property otherwise).
GaussReport gauss_check(const SemiringInstance& s, const Polynomial& f, const Polynomial& g);

/// The coefficient singled out for a prime p in the multiplicativity argument
/// for primitive f and g: r (resp. s) is the highest index whose coefficient
/// is not divisible by p, and c_k with k = r + s is shown not divisible by p.
struct GaussWitness {
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t k = 0;
  Element c_k;
  Element lead_term;  // a_r * b_s, not divisible by p
  Element rest;       // c_k - a_r * b_s, summed directly from the other terms
  bool rest_divisible = false;
  bool p_divides_c_k = true;

  bool holds() const { return !p_divides_c_k && rest_divisible; }
};

/// Throws non_primitive unless f and g are primitive, non_prime for bad p.
GaussWitness gauss_witness(const SemiringInstance& s, const Polynomial& f,
                           const Polynomial& g, const Element& p);

/// Principal-ideal form of the multiplicativity identity for f, g in S[X]:
/// (cont fg) = (cont f)(cont g). Throws outside_semiring for non-integral
/// coefficients.
bool gaussian_ideal_check(const SemiringInstance& s, const Polynomial& f, const Polynomial& g);

}  // namespace semigauss
