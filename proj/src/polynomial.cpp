#include "semigauss/polynomial.hpp"

#include <algorithm>

#include "semigauss/errors.hpp"

namespace semigauss {

namespace {

void require_same(const Polynomial& f, const Polynomial& g) {
  if (&f.instance() != &g.instance())
    throw AlgebraError(ErrorKind::mixed_instance,
                       "polynomials over " + f.instance().name + " and " + g.instance().name);
}

void require_admissible(const SemiringInstance& s, const Fraction& c) {
  if (s.kind == InstanceKind::natural && c.sign() < 0)
    throw AlgebraError(ErrorKind::outside_semiring,
                       "negative coefficient " + c.str() + " over " + s.name);
}

}  // namespace

Polynomial::Polynomial(const SemiringInstance& s, std::vector<Fraction> coefficients)
    : instance_(&s), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) require_admissible(s, c);
  trim();
}

Polynomial::Polynomial(const SemiringInstance& s, std::initializer_list<long> coefficients)
    : instance_(&s) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) {
    coeffs_.emplace_back(c);
    require_admissible(s, coeffs_.back());
  }
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Fraction Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Fraction{};
}

bool Polynomial::has_integral_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Fraction& c) { return c.is_integral(); });
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  std::vector<Fraction> out(std::max(f.coefficients().size(), g.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = frac_add(f.coefficient(i), g.coefficient(i));
  return Polynomial(f.instance(), std::move(out));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.instance());
  const auto& a = f.coefficients();
  const auto& b = g.coefficients();
  std::vector<Fraction> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = frac_add(out[i + j], frac_mul(a[i], b[j]));
  }
  return Polynomial(f.instance(), std::move(out));
}

Polynomial poly_scale(const Fraction& b, const Polynomial& f) {
  std::vector<Fraction> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) out.push_back(frac_mul(b, c));
  return Polynomial(f.instance(), std::move(out));
}

std::optional<std::size_t> degree(const Polynomial& f) { return f.degree(); }

Fraction coefficient(const Polynomial& f, std::size_t i) { return f.coefficient(i); }

Fraction convolution_coefficient(const Polynomial& f, const Polynomial& g, std::size_t k) {
  require_same(f, g);
  Fraction sum;
  const std::size_t n = f.coefficients().size();
  for (std::size_t i = 0; i <= k && i < n; ++i)
    sum = frac_add(sum, frac_mul(f.coefficient(i), g.coefficient(k - i)));
  return sum;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c[i].str();
      continue;
    }
    if (c[i] == Fraction(1)) {
      out += "X";
    } else if (c[i] == Fraction(-1)) {
      out += "-X";
    } else {
      out += c[i].str() + "*X";
    }
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace semigauss
