#include "semigauss/content.hpp"

#include <algorithm>

#include "semigauss/core_algebra.hpp"
#include "semigauss/errors.hpp"
#include "semigauss/factorization.hpp"
#include "semigauss/valuation.hpp"

namespace semigauss {

namespace {

const char* unit_normalization(const SemiringInstance& s) {
  switch (s.kind) {
    case InstanceKind::natural: return "unit 1 (the only unit)";
    case InstanceKind::integer: return "positive representative";
    case InstanceKind::custom: break;
  }
  return "instance canonical form";
}

// Order of f at a prime already known to be canonical.
long poly_order(const Element& p, const Polynomial& f) {
  long best = 0;
  bool first = true;
  for (const auto& c : f.coefficients()) {
    if (c.is_zero()) continue;
    const long v = static_cast<long>(multiplicity(p, c.num())) -
                   static_cast<long>(multiplicity(p, c.den()));
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

void require_gauss_instance(const SemiringInstance& s) {
  if (!s.is_divisor_subtractive)
    throw AlgebraError(ErrorKind::instance_property,
                       s.name + " is not flagged divisor-subtractive");
}

}  // namespace

std::vector<Element> support_primes(const SemiringInstance& s, const Polynomial& f) {
  if (!s.is_factorial())
    throw AlgebraError(ErrorKind::not_factorial, s.name + " has no factorization procedure");
  std::vector<Element> primes;
  const Fraction* smallest = nullptr;
  std::vector<Element> seen_dens;
  for (const auto& c : f.coefficients()) {
    if (c.is_zero()) continue;
    if (smallest == nullptr || abs(c.num()) < abs(smallest->num())) smallest = &c;
    if (c.den() == 1 ||
        std::find(seen_dens.begin(), seen_dens.end(), c.den()) != seen_dens.end())
      continue;
    seen_dens.push_back(c.den());
    for (auto& pp : s.factor(c.den()).factors) primes.push_back(std::move(pp.prime));
  }
  if (smallest != nullptr && abs(smallest->num()) != 1)
    for (auto& pp : s.factor(smallest->num()).factors) primes.push_back(std::move(pp.prime));
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

Fraction content_over(const SemiringInstance& s, const Polynomial& f,
                      std::span<const Element> primes) {
  (void)s;
  if (f.is_zero()) return Fraction{};
  Fraction c(1);
  for (const auto& p : primes) {
    const long v = poly_order(p, f);
    if (v != 0) c = frac_mul(c, frac_pow(p, v));
  }
  return c;
}

ContentValue content(const SemiringInstance& s, const Polynomial& f) {
  if (f.is_zero()) return {Fraction{}, unit_normalization(s)};
  const auto primes = support_primes(s, f);
  return {content_over(s, f, primes), unit_normalization(s)};
}

Fraction p_content(const SemiringInstance& s, const Element& p, const Polynomial& f) {
  require_canonical_prime(s, p);
  if (f.is_zero()) throw AlgebraError(ErrorKind::zero_polynomial, "p-content of the zero polynomial");
  return frac_pow(p, poly_order(p, f));
}

PrimitiveDecomposition primitive_decompose(const SemiringInstance& s, const Polynomial& f) {
  if (f.is_zero())
    throw AlgebraError(ErrorKind::zero_polynomial, "the zero polynomial has no primitive part");
  auto c = content(s, f);
  auto f1 = poly_scale(frac_inv(c.value), f);
  return {std::move(c), std::move(f1)};
}

bool is_primitive(const SemiringInstance& s, const Polynomial& f) {
  return content(s, f).value == Fraction(1);
}

bool associated_fractions(const SemiringInstance& s, const Fraction& x, const Fraction& y) {
  for (const auto& u : s.units)
    if (frac_eq(x, frac_mul(Fraction(u), y))) return true;
  return false;
}

GaussReport gauss_check(const SemiringInstance& s, const Polynomial& f, const Polynomial& g) {
  require_gauss_instance(s);
  GaussReport report;
  report.lhs = content(s, poly_mul(f, g)).value;
  report.rhs = frac_mul(content(s, f).value, content(s, g).value);
  report.holds = associated_fractions(s, report.lhs, report.rhs);
  return report;
}

GaussWitness gauss_witness(const SemiringInstance& s, const Polynomial& f, const Polynomial& g,
                           const Element& p) {
  require_canonical_prime(s, p);
  if (&f.instance() != &g.instance())
    throw AlgebraError(ErrorKind::mixed_instance, "witness needs polynomials over one instance");
  if (!is_primitive(s, f) || !is_primitive(s, g))
    throw AlgebraError(ErrorKind::non_primitive, "witness needs primitive polynomials");

  // Primitive polynomials have coefficients in S and at least one of them
  // escapes p, so both searches succeed.
  auto leftmost_unit_at_p = [&](const Polynomial& h) {
    const auto& c = h.coefficients();
    for (std::size_t i = c.size(); i-- > 0;)
      if (!c[i].is_zero() && !divides(s, p, c[i].num())) return i;
    throw AlgebraError(ErrorKind::non_primitive, "every coefficient is divisible by p");
  };

  GaussWitness w;
  w.r = leftmost_unit_at_p(f);
  w.s = leftmost_unit_at_p(g);
  w.k = w.r + w.s;
  w.lead_term = f.coefficient(w.r).num() * g.coefficient(w.s).num();
  w.rest = 0;
  for (std::size_t i = 0; i <= w.k; ++i) {
    if (i == w.r) continue;
    w.rest += f.coefficient(i).num() * g.coefficient(w.k - i).num();
  }
  w.c_k = convolution_coefficient(f, g, w.k).num();
  w.rest_divisible = divides(s, p, w.rest);
  w.p_divides_c_k = divides(s, p, w.c_k);
  return w;
}

bool gaussian_ideal_check(const SemiringInstance& s, const Polynomial& f, const Polynomial& g) {
  require_gauss_instance(s);
  if (!f.has_integral_coefficients() || !g.has_integral_coefficients())
    throw AlgebraError(ErrorKind::outside_semiring, "coefficients must lie in " + s.name);
  const auto lhs = content(s, poly_mul(f, g)).value;
  const auto rhs = frac_mul(content(s, f).value, content(s, g).value);
  return associates(s, lhs.num(), rhs.num());
}

}  // namespace semigauss
