#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "semigauss/element.hpp"

namespace semigauss {

enum class InstanceKind { natural, integer, custom };

using BinaryOp = std::function<Element(const Element&, const Element&)>;
using Relation = std::function<bool(const Element&, const Element&)>;
using Predicate = std::function<bool(const Element&)>;

/// A registered commutative semiring. The shipped instances (N and Z) are
/// immutable after construction; custom instances exist so the axiom checker
/// can be pointed at deliberately broken structures.
struct SemiringInstance {
  std::string name;
  InstanceKind kind = InstanceKind::custom;
  Element zero{0};
  Element one{1};
  BinaryOp add;
  BinaryOp mul;
  Relation eq;
  Predicate is_unit;
  // Carrier membership, e.g. a >= 0 for N.
  Predicate contains;
  // The (finite) group of units, used to decide associates by enumeration.
  std::vector<Element> units;
  // Representative of the associate class: N identity, Z absolute value.
  std::function<Element(const Element&)> canonical;
  // Empty for instances without a factorization procedure.
  std::function<Factorization(const Element&)> factor;
  bool is_semidomain = false;
  // Instance-wide: d | a and d | a+b imply d | b.
  bool is_divisor_subtractive = false;

  bool is_factorial() const noexcept { return static_cast<bool>(factor); }
};

const SemiringInstance& natural_numbers();
const SemiringInstance& integers();

/// "nat" or "int"; throws AlgebraError(unsupported_instance) otherwise.
const SemiringInstance& instance_by_name(std::string_view name);

/// Throws AlgebraError(outside_semiring) if a is not in the carrier.
void require_member(const SemiringInstance& s, const Element& a);

/// Ideal generated by finitely many elements: { sum s_i * g_i }.
struct FinitelyGeneratedIdeal {
  const SemiringInstance* instance = nullptr;
  std::vector<Element> generators;

  FinitelyGeneratedIdeal(const SemiringInstance& s, std::vector<Element> gens);
};

}  // namespace semigauss
