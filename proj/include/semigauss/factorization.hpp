#pragma once

#include <span>
#include <vector>

#include "semigauss/instance.hpp"

namespace semigauss {

/// Prime factors of n > 0 by trial division, ascending.
std::vector<PrimePower> trial_division(const Element& n);

/// Canonical factorization of a nonzero element. Throws zero_input for a = 0
/// and not_factorial for instances without a factorization procedure.
Factorization factor(const SemiringInstance& s, const Element& a);

Element multiply_out(const SemiringInstance& s, const Factorization& f);

/// Prime-wise minimum of exponents; the unit of the result is 1.
Factorization gcd_factorization(std::span<const Factorization> fs);
Factorization gcd_factorization(const Factorization& a, const Factorization& b);

/// Canonical gcd of a list with at least one nonzero entry. Zeros are
/// absorbed since every element divides 0.
Element gcd(const SemiringInstance& s, std::span<const Element> elements);

/// Classical Euclidean algorithm on |a|, |b|. Kept independent of the
/// factorization route so the two can be cross-checked.
Element gcd_euclid_oracle(const Element& a, const Element& b);

}  // namespace semigauss
