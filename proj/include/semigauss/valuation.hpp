#pragma once

#include <compare>
#include <optional>
#include <string>

#include "semigauss/fraction.hpp"
#include "semigauss/instance.hpp"
#include "semigauss/polynomial.hpp"

namespace semigauss {

/// Order of an element at a prime: an integer, or infinity for zero.
class OrderValue {
 public:
  static OrderValue finite(long v) { return OrderValue(v); }
  static OrderValue infinity() { return OrderValue(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Precondition: is_finite().
  long value() const { return *value_; }

  friend bool operator==(const OrderValue&, const OrderValue&) = default;
  friend std::strong_ordering operator<=>(const OrderValue& x, const OrderValue& y) {
    if (x.is_infinite() || y.is_infinite())
      return x.is_infinite() <=> y.is_infinite();
    return *x.value_ <=> *y.value_;
  }

  friend OrderValue operator+(const OrderValue& x, const OrderValue& y) {
    if (x.is_infinite() || y.is_infinite()) return infinity();
    return finite(*x.value_ + *y.value_);
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(*value_); }

 private:
  OrderValue() = default;
  explicit OrderValue(long v) : value_(v) {}

  std::optional<long> value_;
};

inline OrderValue min(const OrderValue& x, const OrderValue& y) { return y < x ? y : x; }

/// Throws non_prime unless p is a prime in canonical (positive) form.
void require_canonical_prime(const SemiringInstance& s, const Element& p);

/// Exponent of p in a by repeated exact division.
unsigned long multiplicity(const Element& p, Element a);

OrderValue ord_element(const SemiringInstance& s, const Element& p, const Element& a);
OrderValue ord_fraction(const SemiringInstance& s, const Element& p, const Fraction& x);
/// Minimum over the nonzero coefficients; infinity for the zero polynomial.
OrderValue ord_poly(const SemiringInstance& s, const Element& p, const Polynomial& f);

}  // namespace semigauss
