#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semigauss/fraction.hpp"
#include "semigauss/instance.hpp"
#include "semigauss/polynomial.hpp"

namespace semigauss {

struct GeneratorConfig {
  std::uint64_t seed = 42;
  const SemiringInstance* instance = &natural_numbers();
  unsigned max_degree = 8;
  // Bound on |numerator|; over Z numerators are drawn from [-max, max].
  unsigned long max_coefficient = 10000;
  // 1 means integral coefficients only.
  unsigned long max_denominator = 1000;
  std::size_t trials = 1000;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Rejection attempts before gen_primitive_polynomial gives up.
inline constexpr int kPrimitiveRetryCap = 10000;

/// Deterministic sampler. The engine is std::mt19937_64; bounded draws use
/// rejection on the raw 64-bit output, so sequences do not depend on the
/// standard library's distribution implementations. Trial t of a run uses
/// the stream seeded with splitmix64(seed + t), which makes every trial
/// independent of evaluation order.
class Generator {
 public:
  explicit Generator(const GeneratorConfig& cfg);
  Generator(const GeneratorConfig& cfg, std::size_t trial);

  /// Uniform on [0, n].
  std::uint64_t uniform(std::uint64_t n);
  /// Uniform over [0, max_coefficient] (N) or [-max, max] (Z).
  Element element();
  Element nonzero_element();
  Fraction fraction();
  Fraction nonzero_fraction();
  /// Degree uniform in [0, max_degree]; may come out zero.
  Polynomial polynomial();
  Polynomial nonzero_polynomial();
  /// Integral coefficients, resampled until primitive. Throws retry_cap.
  Polynomial primitive_polynomial();
  /// Same shape as polynomial() with denominators forced to 1.
  Polynomial integral_polynomial();

  const GeneratorConfig& config() const { return cfg_; }

 private:
  GeneratorConfig cfg_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

Polynomial gen_polynomial(const GeneratorConfig& cfg);
Polynomial gen_primitive_polynomial(const GeneratorConfig& cfg);
Fraction gen_fraction(const GeneratorConfig& cfg);

/// One executable law. `check` returns a description of the inputs when the
/// law fails on the given trial, and nothing when it holds.
struct Property {
  std::string suite;
  std::string name;
  std::function<std::optional<std::string>(const GeneratorConfig&, std::size_t trial)> check;
};

struct Counterexample {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string detail;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> first_failure;
};

struct SuiteReport {
  GeneratorConfig config;
  std::vector<PropertyResult> results;
  // Informational lines that are not pass/fail properties.
  std::vector<std::string> findings;

  bool ok() const;
};

inline const std::vector<std::string> kSuiteNames{"axioms", "order", "content", "gauss", "ideals"};

/// Every shipped property, grouped by suite.
const std::vector<Property>& standard_properties();

/// Looks up a shipped property by "suite/name" or bare name; null if absent.
const Property* find_property(std::string_view name);

/// Throws std::invalid_argument for names outside kSuiteNames.
SuiteReport run_suite(const GeneratorConfig& cfg, std::span<const std::string> suites);

SuiteReport run_properties(const GeneratorConfig& cfg, std::span<const Property> properties);

/// Re-runs a single trial.
std::optional<std::string> replay(const GeneratorConfig& cfg, const Property& property,
                                  std::size_t trial);

std::vector<std::string> format_report(const SuiteReport& report);

}  // namespace semigauss
