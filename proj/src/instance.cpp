#include "semigauss/instance.hpp"

#include <utility>

#include "semigauss/errors.hpp"
#include "semigauss/factorization.hpp"

namespace semigauss {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::zero_input: return "zero_input";
    case ErrorKind::all_zero_input: return "all_zero_input";
    case ErrorKind::not_factorial: return "not_factorial";
    case ErrorKind::undecidable_instance: return "undecidable_instance";
    case ErrorKind::unsupported_instance: return "unsupported_instance";
    case ErrorKind::non_prime: return "non_prime";
    case ErrorKind::zero_excluded: return "zero_excluded";
    case ErrorKind::zero_denominator: return "zero_denominator";
    case ErrorKind::inverse_of_zero: return "inverse_of_zero";
    case ErrorKind::zero_polynomial: return "zero_polynomial";
    case ErrorKind::mixed_instance: return "mixed_instance";
    case ErrorKind::instance_property: return "instance_property";
    case ErrorKind::non_primitive: return "non_primitive";
    case ErrorKind::outside_semiring: return "outside_semiring";
    case ErrorKind::retry_cap: return "retry_cap";
    case ErrorKind::syntax: return "syntax";
  }
  return "unknown";
}

std::string to_string(const Element& a) { return a.get_str(); }

std::string to_string(const Factorization& f) {
  std::string out;
  if (f.unit != 1 || f.factors.empty()) out = f.unit.get_str();
  for (const auto& pp : f.factors) {
    if (!out.empty()) out += " * ";
    out += pp.prime.get_str();
    if (pp.exponent != 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

namespace {

Element add(const Element& a, const Element& b) { return a + b; }
Element mul(const Element& a, const Element& b) { return a * b; }
bool equal(const Element& a, const Element& b) { return a == b; }

SemiringInstance make_naturals() {
  SemiringInstance s;
  s.name = "nat";
  s.kind = InstanceKind::natural;
  s.add = add;
  s.mul = mul;
  s.eq = equal;
  s.is_unit = [](const Element& a) { return a == 1; };
  s.contains = [](const Element& a) { return sgn(a) >= 0; };
  s.units = {Element(1)};
  s.canonical = [](const Element& a) { return a; };
  s.factor = [](const Element& a) {
    return Factorization{Element(1), trial_division(a)};
  };
  s.is_semidomain = true;
  s.is_divisor_subtractive = true;
  return s;
}

SemiringInstance make_integers() {
  SemiringInstance s;
  s.name = "int";
  s.kind = InstanceKind::integer;
  s.add = add;
  s.mul = mul;
  s.eq = equal;
  s.is_unit = [](const Element& a) { return abs(a) == 1; };
  s.contains = [](const Element&) { return true; };
  s.units = {Element(1), Element(-1)};
  s.canonical = [](const Element& a) { return Element(abs(a)); };
  s.factor = [](const Element& a) {
    return Factorization{Element(sgn(a)), trial_division(Element(abs(a)))};
  };
  s.is_semidomain = true;
  s.is_divisor_subtractive = true;
  return s;
}

}  // namespace

const SemiringInstance& natural_numbers() {
  static const SemiringInstance instance = make_naturals();
  return instance;
}

const SemiringInstance& integers() {
  static const SemiringInstance instance = make_integers();
  return instance;
}

const SemiringInstance& instance_by_name(std::string_view name) {
  if (name == "nat") return natural_numbers();
  if (name == "int") return integers();
  throw AlgebraError(ErrorKind::unsupported_instance,
                     "unknown instance '" + std::string(name) + "' (expected nat or int)");
}

void require_member(const SemiringInstance& s, const Element& a) {
  if (s.contains && !s.contains(a))
    throw AlgebraError(ErrorKind::outside_semiring,
                       a.get_str() + " is not an element of " + s.name);
}

FinitelyGeneratedIdeal::FinitelyGeneratedIdeal(const SemiringInstance& s,
                                               std::vector<Element> gens)
    : instance(&s), generators(std::move(gens)) {
  if (generators.empty())
    throw AlgebraError(ErrorKind::zero_input, "an ideal needs at least one generator");
  for (const auto& g : generators) require_member(s, g);
}

}  // namespace semigauss
