// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// All checks are exact; the only numeric thresholds are the trial counts,
// sweep bounds and wall-clock budgets pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "semigauss/cli.hpp"
#include "semigauss/content.hpp"
#include "semigauss/core_algebra.hpp"
#include "semigauss/factorization.hpp"
#include "semigauss/harness.hpp"

using namespace semigauss;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double budget_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && seconds > budget_seconds) {
    o.pass = false;
    o.detail += " (exceeded " + std::to_string(static_cast<int>(budget_seconds)) + " s budget)";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %s %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              seconds);
  std::fflush(stdout);
}

GeneratorConfig config(const SemiringInstance& s, std::size_t trials) {
  GeneratorConfig cfg;
  cfg.seed = kSeed;
  cfg.instance = &s;
  cfg.max_degree = 8;
  cfg.max_coefficient = 10000;
  cfg.max_denominator = 1000;
  cfg.trials = trials;
  return cfg;
}

// Runs named properties; passes only if every trial of every property holds.
Outcome all_trials(const GeneratorConfig& cfg, std::initializer_list<const char*> names) {
  std::vector<Property> props;
  for (const char* n : names) props.push_back(*find_property(n));
  const auto report = run_properties(cfg, props);
  Outcome o;
  for (const auto& r : report.results) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += cfg.instance->name + " " + r.name + " " + std::to_string(r.passed) + "/" +
                std::to_string(r.passed + r.failed);
    if (r.failed != 0 || r.passed != cfg.trials) {
      o.pass = false;
      if (r.first_failure)
        o.detail += " first failure trial " + std::to_string(r.first_failure->trial) + ": " +
                    r.first_failure->detail;
    }
  }
  return o;
}

Outcome merge(Outcome a, const Outcome& b) {
  a.pass = a.pass && b.pass;
  a.detail += "; " + b.detail;
  return a;
}

}  // namespace

int main() {
  const auto& N = natural_numbers();
  const auto& Z = integers();

  criterion("AC1", "content multiplicativity", 30.0, [&] {
    return merge(all_trials(config(N, 10000), {"multiplicativity"}),
                 all_trials(config(Z, 10000), {"multiplicativity"}));
  });

  criterion("AC2", "witness soundness", 0, [&] {
    return all_trials(config(N, 2000), {"witness_soundness"});
  });

  criterion("AC3", "primitive closure", 0, [&] {
    return all_trials(config(N, 5000), {"primitive_closure"});
  });

  criterion("AC4", "logarithmic property and ultrametric bound", 0, [&] {
    return all_trials(config(N, 10000), {"logarithmic_property", "ultrametric"});
  });

  criterion("AC5", "homogeneity", 0, [&] {
    return all_trials(config(N, 5000), {"homogeneity"});
  });

  criterion("AC6", "primitive decomposition round trip", 0, [&] {
    return all_trials(config(N, 5000), {"decomposition_roundtrip"});
  });

  criterion("AC7", "content equals folded Euclid gcd", 0, [&] {
    auto cfg = config(N, 10000);
    cfg.max_denominator = 1;
    return all_trials(cfg, {"oracle_equivalence"});
  });

  criterion("AC8", "factorization round trip and gcd oracle", 60.0, [&] {
    Outcome o;
    constexpr long kFactorLimit = 1000000;
    constexpr long kGcdLimit = 10000;
    long bad_factor = 0;
    for (long a = 1; a <= kFactorLimit; ++a)
      if (multiply_out(N, factor(N, a)) != a && bad_factor++ == 0)
        o.detail += "first round-trip failure at " + std::to_string(a) + "; ";
    std::vector<Factorization> cache(kGcdLimit + 1);
    std::vector<Element> values(kGcdLimit + 1);
    for (long a = 0; a <= kGcdLimit; ++a) values[a] = a;
    for (long a = 1; a <= kGcdLimit; ++a) cache[a] = factor(N, a);
    long bad_gcd = 0, pairs = 0;
    for (long a = 0; a <= kGcdLimit; ++a) {
      for (long b = 0; b <= kGcdLimit; ++b) {
        if (a == 0 && b == 0) continue;
        ++pairs;
        Element by_factorization;
        if (a == 0 || b == 0) {
          const std::vector<Element> xs{values[a], values[b]};
          by_factorization = gcd(N, xs);
        } else {
          by_factorization = multiply_out(N, gcd_factorization(cache[a], cache[b]));
        }
        if (by_factorization != gcd_euclid_oracle(values[a], values[b]) && bad_gcd++ == 0)
          o.detail += "first gcd mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "); ";
      }
    }
    o.pass = bad_factor == 0 && bad_gcd == 0;
    o.detail += "round trip 1.." + std::to_string(kFactorLimit) + " failures " +
                std::to_string(bad_factor) + "; gcd pairs " + std::to_string(pairs) +
                " mismatches " + std::to_string(bad_gcd);
    return o;
  });

  criterion("AC9", "divisor subtraction sweep", 0, [&] {
    long triples = 0, bad = 0;
    for (long d = -50; d <= 50; ++d) {
      if (d == 0) continue;
      for (long a = -50; a <= 50; ++a)
        for (long b = -50; b <= 50; ++b, ++triples)
          if (!divisor_subtraction_check(Z, d, a, b)) ++bad;
    }
    for (long d = 0; d <= 100; ++d)
      for (long a = 0; a <= 100; ++a)
        for (long b = 0; b <= 100; ++b, ++triples)
          if (!divisor_subtraction_check(N, d, a, b)) ++bad;
    return Outcome{bad == 0, std::to_string(triples) + " triples, " + std::to_string(bad) + " failures"};
  });

  criterion("AC10", "subtractivity counterexample for (2,3)", 0, [&] {
    std::ostringstream out, err;
    const int nat_code = cli::run({"semigauss", "ideal", "--instance", "nat", "--gens", "2,3",
                                   "--subtractive", "--bound", "100"},
                                  out, err);
    const std::string nat_text = out.str();
    const FinitelyGeneratedIdeal ideal(N, {Element(2), Element(3)});
    const auto r = is_subtractive_ideal(ideal, 100);
    bool witness_ok = r.witness.has_value();
    if (witness_ok) {
      const auto& [a, b] = *r.witness;
      witness_ok = ideal_contains(ideal, a, 200) == Membership::yes &&
                   ideal_contains(ideal, Element(a + b), 200) == Membership::yes &&
                   ideal_contains(ideal, b, 200) == Membership::no &&
                   nat_text == "NOT subtractive: a=" + a.get_str() + ", b=" + b.get_str() + "\n";
    }
    std::ostringstream zout, zerr;
    const int int_code = cli::run({"semigauss", "ideal", "--instance", "int", "--gens", "2,3",
                                   "--subtractive", "--bound", "100"},
                                  zout, zerr);
    const bool pass = nat_code == cli::kExitPropertyFailure && witness_ok && int_code == 0 &&
                      zout.str() == "subtractive\n";
    std::string detail = "nat: " + nat_text.substr(0, nat_text.size() - 1) + " (exit " +
                         std::to_string(nat_code) + "); int: " + zout.str();
    detail.pop_back();
    return Outcome{pass, detail};
  });

  criterion("AC11", "nat and int agree on nonnegative integer polynomials", 0, [&] {
    auto cfg = config(N, 2000);
    cfg.max_denominator = 1;
    long bad = 0;
    std::string first;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      Generator gen(cfg, t);
      const auto fn = gen.integral_polynomial(), gn = gen.integral_polynomial();
      const Polynomial fz(Z, fn.coefficients()), gz(Z, gn.coefficients());
      const auto rn = gauss_check(N, fn, gn), rz = gauss_check(Z, fz, gz);
      const bool agree = content(N, fn) == content(Z, fz) && content(N, gn) == content(Z, gz) &&
                         content(Z, fz).value.sign() >= 0 && rn.holds == rz.holds &&
                         rn.lhs == rz.lhs && rn.rhs == rz.rhs;
      if (!agree && bad++ == 0) first = " first disagreement at trial " + std::to_string(t);
    }
    return Outcome{bad == 0, "2000 pairs, " + std::to_string(bad) + " disagreements" + first};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
