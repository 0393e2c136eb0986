#include "semigauss/core_algebra.hpp"

#include <cstdint>
#include <numeric>

#include "semigauss/errors.hpp"
#include "semigauss/factorization.hpp"

namespace semigauss {

namespace {

void require_factorial(const SemiringInstance& s) {
  if (!s.is_factorial())
    throw AlgebraError(ErrorKind::undecidable_instance,
                       s.name + " provides no divisibility procedure");
}

}  // namespace

AxiomReport axiom_suite(const SemiringInstance& s, std::span<const Element> samples) {
  if (samples.empty()) throw AlgebraError(ErrorKind::zero_input, "axiom_suite needs samples");
  AxiomReport report;
  auto record = [&](const char* axiom, bool ok, std::vector<Element> witnesses) {
    ++report.equations_checked;
    if (ok) return;
    for (const auto& f : report.failures)
      if (f.axiom == axiom) return;
    report.failures.push_back({axiom, std::move(witnesses)});
  };
  const auto& add = s.add;
  const auto& mul = s.mul;
  const auto& eq = s.eq;

  record("one_neq_zero", !eq(s.one, s.zero), {s.one, s.zero});
  for (const auto& a : samples) {
    record("additive_identity", eq(add(a, s.zero), a), {a});
    record("multiplicative_identity", eq(mul(a, s.one), a), {a});
    record("absorption", eq(mul(a, s.zero), s.zero), {a});
    for (const auto& b : samples) {
      record("additive_commutativity", eq(add(a, b), add(b, a)), {a, b});
      record("multiplicative_commutativity", eq(mul(a, b), mul(b, a)), {a, b});
      for (const auto& c : samples) {
        record("additive_associativity", eq(add(add(a, b), c), add(a, add(b, c))), {a, b, c});
        record("multiplicative_associativity", eq(mul(mul(a, b), c), mul(a, mul(b, c))),
               {a, b, c});
        record("distributivity", eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))), {a, b, c});
      }
    }
  }
  if (s.is_semidomain) {
    bool cancellation_ok = true;
    for (const auto& a : samples) {
      if (eq(a, s.zero)) continue;
      for (const auto& b : samples)
        for (const auto& c : samples) {
          bool ok = !eq(mul(a, b), mul(a, c)) || eq(b, c);
          cancellation_ok = cancellation_ok && ok;
          record("cancellation", ok, {a, b, c});
        }
    }
    report.cancellation_confirmed = cancellation_ok;
  }
  return report;
}

bool divides(const SemiringInstance& s, const Element& a, const Element& b) {
  require_factorial(s);
  require_member(s, a);
  require_member(s, b);
  if (s.eq(b, s.zero)) return true;
  if (s.eq(a, s.zero)) return false;
  const auto fa = s.factor(a);
  const auto fb = s.factor(b);
  auto it = fb.factors.begin();
  for (const auto& pp : fa.factors) {
    while (it != fb.factors.end() && it->prime < pp.prime) ++it;
    if (it == fb.factors.end() || it->prime != pp.prime || it->exponent < pp.exponent)
      return false;
  }
  return true;
}

bool associates(const SemiringInstance& s, const Element& a, const Element& b) {
  require_factorial(s);
  require_member(s, a);
  require_member(s, b);
  for (const auto& u : s.units)
    if (s.eq(a, s.mul(u, b))) return true;
  return false;
}

bool is_irreducible(const SemiringInstance& s, const Element& a) {
  require_factorial(s);
  require_member(s, a);
  if (s.eq(a, s.zero) || s.is_unit(a)) return false;
  const auto f = s.factor(a);
  return f.factors.size() == 1 && f.factors.front().exponent == 1;
}

bool is_prime_element(const SemiringInstance& s, const Element& p) {
  require_factorial(s);
  if (s.eq(p, s.zero))
    throw AlgebraError(ErrorKind::zero_excluded, "zero excluded by convention");
  // In a factorial semidomain irreducible and prime coincide.
  return is_irreducible(s, p);
}

bool divisor_subtraction_check(const SemiringInstance& s, const Element& d, const Element& a,
                               const Element& b) {
  if (!divides(s, d, a) || !divides(s, d, s.add(a, b))) return true;
  return divides(s, d, b);
}

const char* to_string(Membership m) noexcept {
  switch (m) {
    case Membership::yes: return "yes";
    case Membership::no: return "no";
    case Membership::unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(Subtractivity v) noexcept {
  switch (v) {
    case Subtractivity::subtractive: return "subtractive";
    case Subtractivity::subtractive_up_to_bound: return "subtractive up to bound";
    case Subtractivity::not_subtractive: return "not subtractive";
  }
  return "unknown";
}

namespace {

// Searches over at most this many integer values.
constexpr std::int64_t kSearchLimit = std::int64_t{1} << 22;

void require_searchable(const SemiringInstance& s) {
  if (s.kind != InstanceKind::natural && s.kind != InstanceKind::integer)
    throw AlgebraError(ErrorKind::unsupported_instance,
                       "ideal search is only available for nat and int");
}

bool fits_search(const Element& a) {
  return a.fits_slong_p() && abs(a) <= kSearchLimit;
}

// One generator's worth of bounded multiples: out[v] is set when
// in[v - k*g] is set for some 0 <= k <= bound. `offset` maps index 0 to the
// smallest represented value (indices are values + offset). Direction +1
// shifts upward, -1 downward.
void shift_multiples(const std::vector<bool>& in, std::vector<bool>& out, std::int64_t g,
                     std::uint64_t bound, int direction) {
  const auto n = static_cast<std::int64_t>(in.size());
  if (g == 0) {
    for (std::int64_t i = 0; i < n; ++i)
      if (in[i]) out[i] = true;
    return;
  }
  // last[r] is the most recent index in residue class r where `in` was set.
  std::vector<std::int64_t> last(static_cast<std::size_t>(std::min<std::int64_t>(g, n)), -1);
  for (std::int64_t step = 0; step < n; ++step) {
    const std::int64_t i = direction > 0 ? step : n - 1 - step;
    const auto r = static_cast<std::size_t>(i % g);
    if (r >= last.size()) {
      if (in[i]) out[i] = true;
      continue;
    }
    if (in[i]) last[r] = i;
    if (last[r] >= 0) {
      const auto k = static_cast<std::uint64_t>((i > last[r] ? i - last[r] : last[r] - i) / g);
      if (k <= bound) out[i] = true;
    }
  }
}

// Values in [lo, hi] reachable as sum s_i g_i, with s_i in [0, bound]
// (nonnegative) or [-bound, bound] (signed).
std::vector<bool> reachable(const std::vector<std::int64_t>& gens, std::int64_t lo,
                            std::int64_t hi, std::uint64_t bound, bool signed_coeffs) {
  std::vector<bool> cur(static_cast<std::size_t>(hi - lo + 1), false);
  cur[static_cast<std::size_t>(-lo)] = true;
  for (auto g : gens) {
    g = g < 0 ? -g : g;
    std::vector<bool> next(cur.size(), false);
    shift_multiples(cur, next, g, bound, +1);
    if (signed_coeffs) shift_multiples(cur, next, g, bound, -1);
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::int64_t> small_generators(const FinitelyGeneratedIdeal& ideal) {
  std::vector<std::int64_t> gens;
  for (const auto& g : ideal.generators) {
    if (!fits_search(g)) return {};
    gens.push_back(g.get_si());
  }
  return gens;
}

}  // namespace

Membership ideal_contains(const FinitelyGeneratedIdeal& ideal, const Element& x,
                          unsigned long bound) {
  const auto& s = *ideal.instance;
  require_searchable(s);
  require_member(s, x);
  if (x == 0) return Membership::yes;

  if (s.kind == InstanceKind::integer) {
    // Every ideal of Z is principal, generated by the gcd of the generators.
    Element d = 0;
    for (const auto& g : ideal.generators)
      if (g != 0) d = (d == 0) ? Element(abs(g)) : gcd_euclid_oracle(d, g);
    if (d == 0 || !mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) return Membership::no;
    auto gens = small_generators(ideal);
    if (gens.size() != ideal.generators.size() || !fits_search(x)) return Membership::unknown;
    std::int64_t reach = 0;
    for (auto g : gens) reach += static_cast<std::int64_t>(bound) * (g < 0 ? -g : g);
    if (bound > static_cast<unsigned long>(kSearchLimit) || reach > kSearchLimit)
      return Membership::unknown;
    const auto xi = x.get_si();
    if (xi < -reach || xi > reach) return Membership::unknown;
    const auto table = reachable(gens, -reach, reach, bound, true);
    return table[static_cast<std::size_t>(xi + reach)] ? Membership::yes : Membership::unknown;
  }

  auto gens = small_generators(ideal);
  if (gens.size() != ideal.generators.size() || !fits_search(x)) return Membership::unknown;
  const auto xi = x.get_si();
  const auto table = reachable(gens, 0, xi, bound, false);
  if (table[static_cast<std::size_t>(xi)]) return Membership::yes;
  // Coefficients above the bound would overshoot x on their own.
  for (auto g : gens)
    if (g != 0 && (static_cast<Element>(bound) + 1) * g <= x) return Membership::unknown;
  return Membership::no;
}

SubtractivityResult is_subtractive_ideal(const FinitelyGeneratedIdeal& ideal,
                                         unsigned long bound) {
  const auto& s = *ideal.instance;
  require_searchable(s);
  if (s.kind == InstanceKind::integer) return {Subtractivity::subtractive, std::nullopt};

  const auto gens = small_generators(ideal);
  if (gens.size() != ideal.generators.size() ||
      bound > static_cast<unsigned long>(kSearchLimit / 2))
    throw AlgebraError(ErrorKind::unsupported_instance, "subtractivity search bound too large");
  const auto limit = static_cast<std::int64_t>(2 * bound);
  // With positive generators every representation of v <= limit uses
  // coefficients <= limit, so this table is exact membership.
  const auto member = reachable(gens, 0, limit, static_cast<std::uint64_t>(limit), false);
  for (std::int64_t a = 0; a <= static_cast<std::int64_t>(bound); ++a) {
    if (!member[a]) continue;
    for (std::int64_t b = 0; b <= static_cast<std::int64_t>(bound); ++b) {
      if (member[a + b] && !member[b])
        return {Subtractivity::not_subtractive,
                std::make_pair(Element(static_cast<long>(a)), Element(static_cast<long>(b)))};
    }
  }
  return {Subtractivity::subtractive_up_to_bound, std::nullopt};
}

}  // namespace semigauss
