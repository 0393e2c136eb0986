#include "semigauss/factorization.hpp"

#include <algorithm>
#include <cstdint>

#include "semigauss/errors.hpp"

namespace semigauss {

namespace {

void trial_division_u64(std::uint64_t n, std::vector<PrimePower>& out) {
  auto strip = [&](std::uint64_t d) {
    unsigned long e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.push_back({Element(static_cast<unsigned long>(d)), e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel.
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.push_back({Element(static_cast<unsigned long>(n)), 1});
}

}  // namespace

std::vector<PrimePower> trial_division(const Element& n) {
  if (sgn(n) <= 0)
    throw AlgebraError(ErrorKind::zero_input, "trial division needs a positive integer");
  std::vector<PrimePower> out;
  if (n.fits_ulong_p()) {
    trial_division_u64(n.get_ui(), out);
    return out;
  }
  Element rest = n;
  Element d = 2;
  while (d * d <= rest) {
    if (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      unsigned long e = 0;
      do {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), d.get_mpz_t());
        ++e;
      } while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t()));
      out.push_back({d, e});
      if (rest.fits_ulong_p()) {
        // Finish in machine words; every remaining factor exceeds d.
        std::vector<PrimePower> tail;
        trial_division_u64(rest.get_ui(), tail);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
      }
    }
    d += (d == 2) ? 1 : 2;
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

Factorization factor(const SemiringInstance& s, const Element& a) {
  if (!s.is_factorial())
    throw AlgebraError(ErrorKind::not_factorial, s.name + " has no factorization procedure");
  require_member(s, a);
  if (s.eq(a, s.zero)) throw AlgebraError(ErrorKind::zero_input, "cannot factor zero");
  return s.factor(a);
}

Element multiply_out(const SemiringInstance& s, const Factorization& f) {
  Element out = f.unit;
  Element power;
  for (const auto& pp : f.factors) {
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    out = s.mul(out, power);
  }
  return out;
}

Factorization gcd_factorization(const Factorization& a, const Factorization& b) {
  Factorization out;
  auto it = b.factors.begin();
  for (const auto& pp : a.factors) {
    while (it != b.factors.end() && it->prime < pp.prime) ++it;
    if (it == b.factors.end()) break;
    if (it->prime == pp.prime) out.factors.push_back({pp.prime, std::min(pp.exponent, it->exponent)});
  }
  return out;
}

Factorization gcd_factorization(std::span<const Factorization> fs) {
  if (fs.empty()) return {};
  Factorization out{Element(1), fs.front().factors};
  for (const auto& f : fs.subspan(1)) {
    if (out.factors.empty()) break;
    out = gcd_factorization(out, f);
  }
  return out;
}

Element gcd(const SemiringInstance& s, std::span<const Element> elements) {
  if (!s.is_factorial())
    throw AlgebraError(ErrorKind::not_factorial, s.name + " has no factorization procedure");
  std::vector<Factorization> fs;
  for (const auto& a : elements) {
    require_member(s, a);
    if (!s.eq(a, s.zero)) fs.push_back(s.factor(a));
  }
  if (fs.empty())
    throw AlgebraError(ErrorKind::all_zero_input, "gcd needs at least one nonzero element");
  return s.canonical(multiply_out(s, gcd_factorization(fs)));
}

Element gcd_euclid_oracle(const Element& x, const Element& y) {
  if (x == 0 && y == 0)
    throw AlgebraError(ErrorKind::all_zero_input, "gcd(0, 0) is undefined");
  if (mpz_cmpabs_ui(x.get_mpz_t(), ~0UL) <= 0 && mpz_cmpabs_ui(y.get_mpz_t(), ~0UL) <= 0) {
    unsigned long a = mpz_get_ui(x.get_mpz_t());
    unsigned long b = mpz_get_ui(y.get_mpz_t());
    while (b != 0) {
      const unsigned long r = a % b;
      a = b;
      b = r;
    }
    return Element(a);
  }
  Element a = abs(x);
  Element b = abs(y);
  while (b != 0) {
    mpz_tdiv_r(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_swap(a.get_mpz_t(), b.get_mpz_t());
  }
  return a;
}

}  // namespace semigauss
