#include "semigauss/fraction.hpp"

#include "semigauss/errors.hpp"

namespace semigauss {

Fraction frac_make(const Element& num, const Element& den) {
  if (den == 0) throw AlgebraError(ErrorKind::zero_denominator, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Fraction(std::move(q));
}

Fraction frac_add(const Fraction& x, const Fraction& y) { return Fraction(x.value_ + y.value_); }

Fraction frac_mul(const Fraction& x, const Fraction& y) { return Fraction(x.value_ * y.value_); }

Fraction frac_inv(const Fraction& x) {
  if (x.is_zero()) throw AlgebraError(ErrorKind::inverse_of_zero, "inverse of zero");
  return Fraction(mpq_class(1) / x.value_);
}

bool frac_eq(const Fraction& x, const Fraction& y) {
  return x.num() * y.den() == y.num() * x.den();
}

Fraction reduce(const Fraction& x) { return frac_make(x.num(), x.den()); }

Fraction frac_pow(const Element& base, long exponent) {
  Element power;
  const unsigned long magnitude =
      exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), magnitude);
  return exponent < 0 ? frac_make(1, power) : Fraction(power);
}

Fraction parse_fraction(std::string_view text) {
  auto to_element = [](std::string_view digits) {
    Element out;
    std::string buf(digits);
    if (buf.empty() || out.set_str(buf, 10) != 0)
      throw AlgebraError(ErrorKind::syntax, "not an integer: '" + buf + "'");
    return out;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(to_element(text));
  return frac_make(to_element(text.substr(0, slash)), to_element(text.substr(slash + 1)));
}

}  // namespace semigauss
