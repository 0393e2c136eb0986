#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "semigauss/fraction.hpp"
#include "semigauss/instance.hpp"

namespace semigauss {

/// Dense univariate polynomial over the fraction semifield of a registered
/// instance. Coefficients a_0..a_n, with a_n != 0; the zero polynomial has no
/// coefficients. Polynomials whose coefficients are all integral are the
/// elements of S[X].
class Polynomial {
 public:
  explicit Polynomial(const SemiringInstance& s) : instance_(&s) {}
  /// Throws outside_semiring if a coefficient is negative over N.
  Polynomial(const SemiringInstance& s, std::vector<Fraction> coefficients);
  Polynomial(const SemiringInstance& s, std::initializer_list<long> coefficients);

  const SemiringInstance& instance() const { return *instance_; }
  const std::vector<Fraction>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// a_i, zero beyond the degree.
  Fraction coefficient(std::size_t i) const;
  /// Every coefficient lies in S.
  bool has_integral_coefficients() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.instance_ == g.instance_ && f.coeffs_ == g.coeffs_;
  }

 private:
  void trim();

  const SemiringInstance* instance_;
  std::vector<Fraction> coeffs_;
};

/// The binary operations throw mixed_instance when the operands belong to
/// different instances.
Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Fraction& b, const Polynomial& f);
std::optional<std::size_t> degree(const Polynomial& f);
Fraction coefficient(const Polynomial& f, std::size_t i);

/// c_k = sum_{i+j=k} a_i b_j, without forming the whole product.
Fraction convolution_coefficient(const Polynomial& f, const Polynomial& g, std::size_t k);

/// Renders in the input grammar, highest power first, e.g. "6*X^2 + 4*X + 10".
std::string format_polynomial(const Polynomial& f);

}  // namespace semigauss
