#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "semigauss/element.hpp"

namespace semigauss {

/// Element of the semifield of fractions, stored reduced with a positive
/// denominator. Only addition, multiplication and inversion are exposed:
/// nothing here needs additive inverses.
class Fraction {
 public:
  Fraction() = default;
  Fraction(const Element& n) : value_(n) {}  // NOLINT: s -> s/1 embedding
  Fraction(long n) : value_(n) {}  // NOLINT

  const Element& num() const { return value_.get_num(); }
  const Element& den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integral() const { return den() == 1; }
  int sign() const { return sgn(value_); }

  const mpq_class& raw() const { return value_; }

  friend bool operator==(const Fraction& x, const Fraction& y) { return x.value_ == y.value_; }

  std::string str() const { return value_.get_str(); }

 private:
  friend Fraction frac_make(const Element&, const Element&);
  friend Fraction frac_add(const Fraction&, const Fraction&);
  friend Fraction frac_mul(const Fraction&, const Fraction&);
  friend Fraction frac_inv(const Fraction&);

  explicit Fraction(mpq_class q) : value_(std::move(q)) {}

  mpq_class value_{0};
};

/// Throws zero_denominator for den = 0.
Fraction frac_make(const Element& num, const Element& den);
Fraction frac_add(const Fraction& x, const Fraction& y);
Fraction frac_mul(const Fraction& x, const Fraction& y);
/// Throws inverse_of_zero for x = 0.
Fraction frac_inv(const Fraction& x);
/// Cross-multiplication: a/b = c/d iff a*d = c*b.
bool frac_eq(const Fraction& x, const Fraction& y);
Fraction reduce(const Fraction& x);

/// Integer power with a possibly negative exponent (p^-k = 1/p^k).
Fraction frac_pow(const Element& base, long exponent);

/// "a" or "a/b".
Fraction parse_fraction(std::string_view text);

}  // namespace semigauss
