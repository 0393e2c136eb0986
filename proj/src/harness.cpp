#include "semigauss/harness.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "semigauss/content.hpp"
#include "semigauss/core_algebra.hpp"
#include "semigauss/errors.hpp"
#include "semigauss/factorization.hpp"
#include "semigauss/valuation.hpp"

namespace semigauss {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Generator::Generator(const GeneratorConfig& cfg) : cfg_(cfg), engine_(splitmix64(cfg.seed)) {}

Generator::Generator(const GeneratorConfig& cfg, std::size_t trial)
    : cfg_(cfg), engine_(splitmix64(cfg.seed + trial)) {}

std::uint64_t Generator::uniform(std::uint64_t n) {
  if (n == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = n + 1;
  const std::uint64_t threshold = (0 - range) % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return x % range;
}

Element Generator::element() {
  const auto bound = cfg_.max_coefficient;
  if (cfg_.instance->kind == InstanceKind::integer) {
    Element x(static_cast<unsigned long>(uniform(2 * static_cast<std::uint64_t>(bound))));
    return x - bound;
  }
  return Element(static_cast<unsigned long>(uniform(bound)));
}

Element Generator::nonzero_element() {
  for (int i = 0; i < kPrimitiveRetryCap; ++i) {
    auto x = element();
    if (x != 0) return x;
  }
  throw AlgebraError(ErrorKind::retry_cap, "no nonzero element within the coefficient bound");
}

Fraction Generator::fraction() {
  auto num = element();
  const auto den_bound = std::max<unsigned long>(cfg_.max_denominator, 1);
  Element den(static_cast<unsigned long>(1 + uniform(den_bound - 1)));
  return frac_make(num, den);
}

Fraction Generator::nonzero_fraction() {
  auto x = fraction();
  while (x.is_zero()) x = frac_make(nonzero_element(), fraction().den());
  return x;
}

Polynomial Generator::polynomial() {
  const auto deg = uniform(cfg_.max_degree);
  std::vector<Fraction> coeffs;
  coeffs.reserve(deg + 1);
  for (std::uint64_t i = 0; i <= deg; ++i) coeffs.push_back(fraction());
  return Polynomial(*cfg_.instance, std::move(coeffs));
}

Polynomial Generator::nonzero_polynomial() {
  for (int i = 0; i < kPrimitiveRetryCap; ++i) {
    auto f = polynomial();
    if (!f.is_zero()) return f;
  }
  throw AlgebraError(ErrorKind::retry_cap, "no nonzero polynomial within the bounds");
}

Polynomial Generator::integral_polynomial() {
  const auto deg = uniform(cfg_.max_degree);
  std::vector<Fraction> coeffs;
  coeffs.reserve(deg + 1);
  for (std::uint64_t i = 0; i <= deg; ++i) coeffs.emplace_back(element());
  return Polynomial(*cfg_.instance, std::move(coeffs));
}

Polynomial Generator::primitive_polynomial() {
  for (int i = 0; i < kPrimitiveRetryCap; ++i) {
    auto f = integral_polynomial();
    if (!f.is_zero() && is_primitive(*cfg_.instance, f)) return f;
  }
  throw AlgebraError(ErrorKind::retry_cap,
                     "no primitive polynomial after " + std::to_string(kPrimitiveRetryCap) +
                         " draws");
}

Polynomial gen_polynomial(const GeneratorConfig& cfg) { return Generator(cfg).polynomial(); }

Polynomial gen_primitive_polynomial(const GeneratorConfig& cfg) {
  return Generator(cfg).primitive_polynomial();
}

Fraction gen_fraction(const GeneratorConfig& cfg) { return Generator(cfg).fraction(); }

bool SuiteReport::ok() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.failed == 0; });
}

namespace {

using Outcome = std::optional<std::string>;

std::string show(const Polynomial& f) { return "(" + format_polynomial(f) + ")"; }

// Distinct primes of the numerators and denominators of the given fractions.
std::vector<Element> primes_of(const SemiringInstance& s, std::initializer_list<Fraction> xs) {
  std::vector<Element> out;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    for (const auto* part : {&x.num(), &x.den()})
      if (abs(*part) != 1)
        for (auto& pp : s.factor(*part).factors) out.push_back(pp.prime);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Element euclid_fold(const Polynomial& f) {
  Element g = 0;
  for (const auto& c : f.coefficients())
    if (!c.is_zero()) g = (g == 0) ? Element(abs(c.num())) : gcd_euclid_oracle(g, c.num());
  return g;
}

// ---- axioms -------------------------------------------------------------

Outcome semiring_axioms(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  std::vector<Element> samples{gen.element(), gen.element(), gen.element(), s.zero, s.one};
  const auto report = axiom_suite(s, samples);
  if (report.ok() && report.cancellation_confirmed) return std::nullopt;
  std::ostringstream os;
  for (const auto& f : report.failures) {
    os << f.axiom << " fails at";
    for (const auto& w : f.witnesses) os << ' ' << w;
    os << "; ";
  }
  if (!report.cancellation_confirmed) os << "cancellation not confirmed";
  return os.str();
}

Outcome fraction_laws(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto x = gen.fraction(), y = gen.fraction(), z = gen.fraction();
  const auto a = gen.element(), b = gen.element();
  std::ostringstream os;
  os << "x=" << x.str() << " y=" << y.str() << " z=" << z.str() << " a=" << a << " b=" << b;
  auto fail = [&](const char* law) { return Outcome(std::string(law) + " with " + os.str()); };
  if (frac_add(frac_add(x, y), z) != frac_add(x, frac_add(y, z))) return fail("additive associativity");
  if (frac_add(x, y) != frac_add(y, x)) return fail("additive commutativity");
  if (frac_mul(frac_mul(x, y), z) != frac_mul(x, frac_mul(y, z)))
    return fail("multiplicative associativity");
  if (frac_mul(x, y) != frac_mul(y, x)) return fail("multiplicative commutativity");
  if (frac_mul(x, frac_add(y, z)) != frac_add(frac_mul(x, y), frac_mul(x, z)))
    return fail("distributivity");
  if (frac_add(x, Fraction(0)) != x || frac_mul(x, Fraction(1)) != x) return fail("identities");
  if (!frac_mul(x, Fraction(0)).is_zero()) return fail("absorption");
  if (!x.is_zero() && frac_mul(x, frac_inv(x)) != Fraction(1)) return fail("inverse");
  if (reduce(reduce(x)) != reduce(x) || !frac_eq(reduce(x), x)) return fail("reduce");
  if (Fraction(Element(a + b)) != frac_add(Fraction(a), Fraction(b)) ||
      Fraction(Element(a * b)) != frac_mul(Fraction(a), Fraction(b)))
    return fail("embedding homomorphism");
  return std::nullopt;
}

Outcome polynomial_laws(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto f = gen.polynomial(), g = gen.polynomial(), h = gen.polynomial();
  auto fail = [&](const char* law) {
    return Outcome(std::string(law) + " with f=" + show(f) + " g=" + show(g) + " h=" + show(h));
  };
  if (poly_add(poly_add(f, g), h) != poly_add(f, poly_add(g, h))) return fail("additive associativity");
  if (poly_add(f, g) != poly_add(g, f)) return fail("additive commutativity");
  if (poly_mul(poly_mul(f, g), h) != poly_mul(f, poly_mul(g, h)))
    return fail("multiplicative associativity");
  if (poly_mul(f, g) != poly_mul(g, f)) return fail("multiplicative commutativity");
  if (poly_mul(f, poly_add(g, h)) != poly_add(poly_mul(f, g), poly_mul(f, h)))
    return fail("distributivity");
  if (poly_mul(f, Polynomial(s, {1})) != f || poly_add(f, Polynomial(s)) != f)
    return fail("identities");
  if (!poly_mul(f, Polynomial(s)).is_zero()) return fail("absorption");
  return std::nullopt;
}

Outcome degree_additive(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto f = gen.nonzero_polynomial(), g = gen.nonzero_polynomial();
  const auto fg = poly_mul(f, g);
  if (degree(fg) == *degree(f) + *degree(g)) return std::nullopt;
  return "deg(fg) != deg f + deg g with f=" + show(f) + " g=" + show(g);
}

Outcome divisibility_preorder(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto a = gen.nonzero_element(), m = gen.element(), n = gen.element();
  const Element b = a * m, c = b * n;
  const auto x = gen.nonzero_element(), y = gen.element();
  std::ostringstream os;
  os << "a=" << a << " m=" << m << " n=" << n << " x=" << x << " y=" << y;
  if (!divides(s, a, a)) return "reflexivity " + os.str();
  if (!divides(s, a, b) || !divides(s, b, c) || !divides(s, a, c)) return "transitivity " + os.str();
  for (const auto& u : s.units)
    if (!associates(s, a, Element(u * a))) return "associates under units " + os.str();
  if (divides(s, x, y) != mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()))
    return "divides disagrees with exact division " + os.str();
  if (associates(s, x, y) != (abs(x) == abs(y))) return "associates disagrees with |x|=|y| " + os.str();
  return std::nullopt;
}

// ---- order --------------------------------------------------------------

Outcome logarithmic_property(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto x = gen.nonzero_fraction(), y = gen.nonzero_fraction();
  const auto xy = frac_mul(x, y);
  for (const auto& p : primes_of(s, {x, y}))
    if (ord_fraction(s, p, xy) != ord_fraction(s, p, x) + ord_fraction(s, p, y))
      return "ord_" + p.get_str() + "(xy) != ord(x) + ord(y) with x=" + x.str() + " y=" + y.str();
  return std::nullopt;
}

Outcome ultrametric(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto x = gen.fraction(), y = gen.fraction();
  const auto sum = frac_add(x, y);
  for (const auto& p : primes_of(s, {x, y, sum}))
    if (ord_fraction(s, p, sum) < min(ord_fraction(s, p, x), ord_fraction(s, p, y)))
      return "ord_" + p.get_str() + "(x+y) < min with x=" + x.str() + " y=" + y.str();
  return std::nullopt;
}

Outcome order_zero_iff_coprime(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto a = gen.nonzero_element();
  auto primes = primes_of(s, {Fraction(a)});
  for (long p : {2, 3, 5, 7, 11, 13}) primes.emplace_back(p);
  for (const auto& p : primes) {
    const bool zero = ord_element(s, p, a) == OrderValue::finite(0);
    if (zero == divides(s, p, a))
      return "ord_" + p.get_str() + "(a) = 0 disagrees with p does not divide a, a=" + a.get_str();
  }
  return std::nullopt;
}

Outcome finite_support(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto x = gen.nonzero_fraction();
  const auto support = primes_of(s, {x});
  auto candidates = support;
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) candidates.emplace_back(p);
  for (const auto& p : candidates) {
    const bool in_support = std::binary_search(support.begin(), support.end(), p);
    if ((ord_fraction(s, p, x) != OrderValue::finite(0)) != in_support)
      return "support mismatch at p=" + p.get_str() + " for x=" + x.str();
  }
  return std::nullopt;
}

Outcome factorization_roundtrip(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto a = gen.nonzero_element();
  const auto f = factor(s, a);
  if (multiply_out(s, f) != a) return "multiply_out(factor(a)) != a for a=" + a.get_str();
  if (!s.is_unit(f.unit)) return "non-unit unit part for a=" + a.get_str();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& p = f.factors[i].prime;
    if (i > 0 && !(f.factors[i - 1].prime < p)) return "unsorted primes for a=" + a.get_str();
    if (s.canonical(p) != p || !is_prime_element(s, p) || f.factors[i].exponent == 0)
      return "bad prime power " + p.get_str() + " in factor(" + a.get_str() + ")";
  }
  return std::nullopt;
}

Outcome factorization_merge(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto a = gen.nonzero_element(), b = gen.nonzero_element();
  const auto fa = factor(s, a), fb = factor(s, b);
  Factorization merged{fa.unit * fb.unit, fa.factors};
  for (const auto& pp : fb.factors) {
    auto it = std::find_if(merged.factors.begin(), merged.factors.end(),
                           [&](const PrimePower& q) { return !(q.prime < pp.prime); });
    if (it != merged.factors.end() && it->prime == pp.prime)
      it->exponent += pp.exponent;
    else
      merged.factors.insert(it, pp);
  }
  if (factor(s, Element(a * b)) == merged) return std::nullopt;
  return "factor(ab) is not the merge for a=" + a.get_str() + " b=" + b.get_str();
}

Outcome gcd_matches_euclid(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto a = gen.element(), b = gen.nonzero_element(), c = gen.element();
  const std::vector<Element> xs{a, b, c};
  const auto d = gcd(s, xs);
  const auto oracle = gcd_euclid_oracle(gcd_euclid_oracle(a, b), c);
  if (d != oracle) return "gcd != euclid for " + a.get_str() + "," + b.get_str() + "," + c.get_str();
  for (const auto& x : xs)
    if (!divides(s, d, x)) return "gcd does not divide " + x.get_str();
  return std::nullopt;
}

// ---- content ------------------------------------------------------------

Outcome homogeneity(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto b = gen.nonzero_fraction();
  const auto f = gen.polynomial();
  const auto lhs = content(s, poly_scale(b, f)).value;
  const auto rhs = frac_mul(b, content(s, f).value);
  if (associated_fractions(s, lhs, rhs)) return std::nullopt;
  return "cont(bf)=" + lhs.str() + " vs b cont(f)=" + rhs.str() + " with b=" + b.str() + " f=" + show(f);
}

Outcome decomposition_roundtrip(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto f = gen.nonzero_polynomial();
  const auto [c, f1] = primitive_decompose(s, f);
  auto fail = [&](const char* what) {
    return Outcome(std::string(what) + " for f=" + show(f) + " c=" + c.value.str() + " f1=" + show(f1));
  };
  if (poly_scale(c.value, f1) != f) return fail("c*f1 != f");
  if (content(s, f1).value != Fraction(1)) return fail("content(f1) != 1");
  if (!f1.has_integral_coefficients()) return fail("f1 has coefficients outside S");
  if (!s.is_unit(euclid_fold(f1))) return fail("gcd of f1 coefficients is not a unit");
  return std::nullopt;
}

Outcome oracle_equivalence(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  auto f = gen.integral_polynomial();
  if (f.is_zero()) f = Polynomial(s, {1});
  const auto c = content(s, f).value;
  const auto oracle = euclid_fold(f);
  if (c != Fraction(oracle))
    return "content " + c.str() + " != euclid " + oracle.get_str() + " for f=" + show(f);
  std::vector<Element> coeffs;
  for (const auto& x : f.coefficients()) coeffs.push_back(x.num());
  if (gcd(s, coeffs) != oracle) return "gcd(coefficients) != euclid for f=" + show(f);
  return std::nullopt;
}

Outcome well_defined(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto f = gen.nonzero_polynomial();
  const auto c = content(s, f).value;

  auto primes = support_primes(s, f);
  for (std::size_t i = primes.size(); i > 1; --i) std::swap(primes[i - 1], primes[gen.uniform(i - 1)]);
  if (content_over(s, f, primes) != c) return "permuted prime order changes content of " + show(f);

  // Every prime of every numerator and denominator.
  std::vector<Element> full;
  for (const auto& x : f.coefficients())
    for (const auto& p : primes_of(s, {x})) full.push_back(p);
  std::sort(full.begin(), full.end());
  full.erase(std::unique(full.begin(), full.end()), full.end());
  if (content_over(s, f, full) != c) return "full prime support changes content of " + show(f);

  std::vector<Fraction> reversed(f.coefficients().rbegin(), f.coefficients().rend());
  if (content(s, Polynomial(s, reversed)).value != c)
    return "reordering coefficients changes content of " + show(f);

  Fraction product(1);
  for (const auto& p : support_primes(s, f)) product = frac_mul(product, p_content(s, p, f));
  if (product != c) return "product of p-contents differs from content of " + show(f);
  return std::nullopt;
}

// ---- gauss --------------------------------------------------------------

Outcome multiplicativity(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto f = gen.polynomial(), g = gen.polynomial();
  const auto r = gauss_check(*cfg.instance, f, g);
  if (r.holds) return std::nullopt;
  return "cont(fg)=" + r.lhs.str() + " cont(f)cont(g)=" + r.rhs.str() + " with f=" + show(f) +
         " g=" + show(g);
}

Outcome primitive_closure(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto f = gen.primitive_polynomial(), g = gen.primitive_polynomial();
  if (is_primitive(*cfg.instance, poly_mul(f, g))) return std::nullopt;
  return "fg not primitive with f=" + show(f) + " g=" + show(g);
}

Outcome witness_soundness(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto f = gen.primitive_polynomial(), g = gen.primitive_polynomial();
  const auto fg = poly_mul(f, g);
  std::vector<Element> primes;
  for (const auto& c : fg.coefficients())
    for (const auto& p : primes_of(s, {c})) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes) {
    const auto w = gauss_witness(s, f, g, p);
    if (!w.holds() || ord_poly(s, p, fg) != OrderValue::finite(0))
      return "witness fails at p=" + p.get_str() + " (r=" + std::to_string(w.r) +
             " s=" + std::to_string(w.s) + " c_k=" + w.c_k.get_str() + ") with f=" + show(f) +
             " g=" + show(g);
  }
  return std::nullopt;
}

Outcome gaussian_ideal(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto f = gen.integral_polynomial(), g = gen.integral_polynomial();
  if (gaussian_ideal_check(*cfg.instance, f, g)) return std::nullopt;
  return "(cont fg) != (cont f)(cont g) with f=" + show(f) + " g=" + show(g);
}

Outcome divisor_subtraction(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const auto d = gen.nonzero_element(), a = gen.element(), b = gen.element();
  // Also a triple where both hypotheses hold.
  const Element a2 = d * gen.element(), b2 = d * gen.element();
  if (divisor_subtraction_check(s, d, a, b) && divisor_subtraction_check(s, d, a2, b2))
    return std::nullopt;
  return "d=" + d.get_str() + " a=" + a.get_str() + " b=" + b.get_str() + " a2=" + a2.get_str() +
         " b2=" + b2.get_str();
}

// ---- ideals -------------------------------------------------------------

Outcome subtractive_witness_valid(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const bool is_int = s.kind == InstanceKind::integer;
  std::vector<Element> gens;
  const auto count = 1 + gen.uniform(2);
  for (std::uint64_t i = 0; i < count; ++i)
    gens.emplace_back(is_int ? static_cast<long>(gen.uniform(40)) - 20
                             : static_cast<long>(1 + gen.uniform(19)));
  const FinitelyGeneratedIdeal ideal(s, gens);
  constexpr unsigned long bound = 30;
  const auto r = is_subtractive_ideal(ideal, bound);
  std::ostringstream os;
  os << "gens=";
  for (const auto& g : gens) os << g << ',';
  if (is_int) {
    if (r.verdict != Subtractivity::subtractive) return "ring ideal reported non-subtractive " + os.str();
    return std::nullopt;
  }
  if (!r.witness) return std::nullopt;
  const auto& [a, b] = *r.witness;
  if (ideal_contains(ideal, a, 2 * bound) != Membership::yes ||
      ideal_contains(ideal, Element(a + b), 2 * bound) != Membership::yes ||
      ideal_contains(ideal, b, 2 * bound) != Membership::no)
    return "invalid witness a=" + a.get_str() + " b=" + b.get_str() + " " + os.str();
  return std::nullopt;
}

Outcome membership_consistency(const GeneratorConfig& cfg, std::size_t trial) {
  Generator gen(cfg, trial);
  const auto& s = *cfg.instance;
  const bool is_int = s.kind == InstanceKind::integer;
  auto draw = [&] {
    return is_int ? static_cast<long>(gen.uniform(20)) - 10 : static_cast<long>(gen.uniform(10));
  };
  const long g1 = draw(), g2 = draw();
  const long x = is_int ? static_cast<long>(gen.uniform(80)) - 40 : static_cast<long>(gen.uniform(60));
  constexpr long bound = 6;
  bool found = false;
  for (long s1 = is_int ? -bound : 0; s1 <= bound; ++s1)
    for (long s2 = is_int ? -bound : 0; s2 <= bound; ++s2) found = found || (s1 * g1 + s2 * g2 == x);
  const auto m = ideal_contains(FinitelyGeneratedIdeal(s, {Element(g1), Element(g2)}), Element(x),
                                static_cast<unsigned long>(bound));
  if (found == (m == Membership::yes)) return std::nullopt;
  return "ideal_contains(" + std::to_string(g1) + "," + std::to_string(g2) + "; " +
         std::to_string(x) + ") = " + to_string(m) + " but brute force says " +
         (found ? "yes" : "not within bound");
}

std::vector<Property> build_properties() {
  return {
      {"axioms", "semiring_axioms", semiring_axioms},
      {"axioms", "fraction_laws", fraction_laws},
      {"axioms", "polynomial_laws", polynomial_laws},
      {"axioms", "degree_additive", degree_additive},
      {"axioms", "divisibility_preorder", divisibility_preorder},
      {"order", "logarithmic_property", logarithmic_property},
      {"order", "ultrametric", ultrametric},
      {"order", "order_zero_iff_coprime", order_zero_iff_coprime},
      {"order", "finite_support", finite_support},
      {"order", "factorization_roundtrip", factorization_roundtrip},
      {"order", "factorization_merge", factorization_merge},
      {"order", "gcd_matches_euclid", gcd_matches_euclid},
      {"content", "homogeneity", homogeneity},
      {"content", "decomposition_roundtrip", decomposition_roundtrip},
      {"content", "oracle_equivalence", oracle_equivalence},
      {"content", "well_defined", well_defined},
      {"gauss", "multiplicativity", multiplicativity},
      {"gauss", "primitive_closure", primitive_closure},
      {"gauss", "witness_soundness", witness_soundness},
      {"gauss", "gaussian_ideal", gaussian_ideal},
      {"gauss", "divisor_subtraction", divisor_subtraction},
      {"ideals", "subtractive_witness_valid", subtractive_witness_valid},
      {"ideals", "membership_consistency", membership_consistency},
  };
}

std::string ideal_finding(const SemiringInstance& s) {
  const FinitelyGeneratedIdeal ideal(s, {Element(2), Element(3)});
  const auto r = is_subtractive_ideal(ideal, 100);
  std::string line = s.name + " ideal (2,3), bound 100: " + to_string(r.verdict);
  if (r.witness)
    line += " (a=" + r.witness->first.get_str() + ", b=" + r.witness->second.get_str() + ")";
  line += std::string("; divisor-subtractive flag: ") + (s.is_divisor_subtractive ? "true" : "false");
  return line;
}

}  // namespace

const std::vector<Property>& standard_properties() {
  static const std::vector<Property> properties = build_properties();
  return properties;
}

const Property* find_property(std::string_view name) {
  for (const auto& p : standard_properties())
    if (p.name == name || p.suite + "/" + p.name == name) return &p;
  return nullptr;
}

std::optional<std::string> replay(const GeneratorConfig& cfg, const Property& property,
                                  std::size_t trial) {
  try {
    return property.check(cfg, trial);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

SuiteReport run_properties(const GeneratorConfig& cfg, std::span<const Property> properties) {
  SuiteReport report;
  report.config = cfg;
  const unsigned threads =
      cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  for (const auto& property : properties) {
    std::vector<std::optional<std::string>> outcomes(cfg.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t t = next++; t < cfg.trials; t = next++) outcomes[t] = replay(cfg, property, t);
    };
    if (threads <= 1 || cfg.trials < 2) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    PropertyResult result;
    result.suite = property.suite;
    result.name = property.name;
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
      if (!outcomes[t]) {
        ++result.passed;
        continue;
      }
      if (result.failed++ == 0) result.first_failure = Counterexample{t, cfg.seed, *outcomes[t]};
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

SuiteReport run_suite(const GeneratorConfig& cfg, std::span<const std::string> suites) {
  for (const auto& name : suites)
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), name) == kSuiteNames.end())
      throw std::invalid_argument("unknown suite '" + name + "'");
  std::vector<Property> selected;
  for (const auto& p : standard_properties())
    if (std::find(suites.begin(), suites.end(), p.suite) != suites.end()) selected.push_back(p);
  auto report = run_properties(cfg, selected);
  if (std::find(suites.begin(), suites.end(), "ideals") != suites.end())
    report.findings.push_back(ideal_finding(*cfg.instance));
  return report;
}

std::vector<std::string> format_report(const SuiteReport& report) {
  std::vector<std::string> lines;
  const auto& cfg = report.config;
  const std::string tail = " instance=" + cfg.instance->name + " seed=" + std::to_string(cfg.seed);
  for (const auto& r : report.results) {
    std::string line = std::string(r.failed == 0 ? "[PASS] " : "[FAIL] ") + r.suite + "/" + r.name +
                       " " + std::to_string(r.passed) + "/" + std::to_string(r.passed + r.failed) +
                       tail;
    if (r.first_failure)
      line += " first_failure: trial=" + std::to_string(r.first_failure->trial) + " " +
              r.first_failure->detail;
    lines.push_back(std::move(line));
  }
  for (const auto& f : report.findings) lines.push_back("[NOTE] " + f + tail);
  return lines;
}

}  // namespace semigauss
