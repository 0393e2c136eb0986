#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace semigauss {

/// Values of the shipped instances are arbitrary-precision integers; the
/// natural-number instance restricts the carrier to the nonnegative ones.
using Element = mpz_class;

struct PrimePower {
  Element prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// unit * prod(prime^exponent), primes canonical and strictly increasing.
struct Factorization {
  Element unit{1};
  std::vector<PrimePower> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

std::string to_string(const Element& a);
std::string to_string(const Factorization& f);

}  // namespace semigauss
