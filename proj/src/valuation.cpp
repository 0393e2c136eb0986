#include "semigauss/valuation.hpp"

#include "semigauss/core_algebra.hpp"
#include "semigauss/errors.hpp"

namespace semigauss {

void require_canonical_prime(const SemiringInstance& s, const Element& p) {
  require_member(s, p);
  if (s.eq(p, s.zero) || !s.is_factorial() || !s.eq(s.canonical(p), p) ||
      !is_prime_element(s, p))
    throw AlgebraError(ErrorKind::non_prime, p.get_str() + " is not a canonical prime of " + s.name);
}

unsigned long multiplicity(const Element& p, Element a) {
  if (a == 0) return 0;
  return mpz_remove(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
}

namespace {

long fraction_order(const Element& p, const Fraction& x) {
  return static_cast<long>(multiplicity(p, x.num())) - static_cast<long>(multiplicity(p, x.den()));
}

}  // namespace

OrderValue ord_element(const SemiringInstance& s, const Element& p, const Element& a) {
  require_canonical_prime(s, p);
  require_member(s, a);
  if (s.eq(a, s.zero)) return OrderValue::infinity();
  return OrderValue::finite(static_cast<long>(multiplicity(p, a)));
}

OrderValue ord_fraction(const SemiringInstance& s, const Element& p, const Fraction& x) {
  require_canonical_prime(s, p);
  if (x.is_zero()) return OrderValue::infinity();
  return OrderValue::finite(fraction_order(p, x));
}

OrderValue ord_poly(const SemiringInstance& s, const Element& p, const Polynomial& f) {
  require_canonical_prime(s, p);
  auto order = OrderValue::infinity();
  for (const auto& c : f.coefficients())
    if (!c.is_zero()) order = min(order, OrderValue::finite(fraction_order(p, c)));
  return order;
}

}  // namespace semigauss
