#include "semigauss/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "semigauss/content.hpp"
#include "semigauss/core_algebra.hpp"
#include "semigauss/errors.hpp"
#include "semigauss/factorization.hpp"
#include "semigauss/harness.hpp"
#include "semigauss/parse.hpp"
#include "semigauss/valuation.hpp"

namespace semigauss::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string instance = "nat";
  bool json = false;
  std::vector<std::string> exprs;
  std::string prime;
  std::string gens;
  bool subtractive = false;
  std::string contains;
  unsigned long bound = 100;
  std::vector<std::string> suites;
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  unsigned max_degree = 8;
  unsigned long max_coefficient = 10000;
  unsigned long max_denominator = 1000;
  unsigned threads = 0;
};

// Writes either the human-readable text or one JSON object per line.
class Emitter {
 public:
  Emitter(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}

  void emit(const std::string& op, json inputs, json result, std::optional<bool> holds,
            const std::string& text) {
    if (!json_) {
      out_ << text << '\n';
      return;
    }
    json line{{"op", op}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
    line["holds"] = holds ? json(*holds) : json(nullptr);
    out_ << line.dump() << '\n';
  }

 private:
  std::ostream& out_;
  bool json_;
};

std::vector<Element> parse_list(const SemiringInstance& s, const std::string& text) {
  std::vector<Element> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_element(s, item));
  if (out.empty()) throw ParseError(0, "empty generator list");
  return out;
}

json factorization_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& pp : f.factors) factors.push_back({pp.prime.get_str(), pp.exponent});
  return {{"unit", f.unit.get_str()}, {"factors", std::move(factors)}};
}

int cmd_factor(const SemiringInstance& s, const Options& o, Emitter& e) {
  if (o.exprs.size() != 1) throw CLI::ValidationError("factor", "expects exactly one element");
  const auto a = parse_element(s, o.exprs[0]);
  const auto f = factor(s, a);
  e.emit("factor", {{"instance", s.name}, {"a", a.get_str()}}, factorization_json(f), std::nullopt,
         a.get_str() + " = " + to_string(f));
  return kExitOk;
}

int cmd_gcd(const SemiringInstance& s, const Options& o, Emitter& e) {
  if (o.exprs.empty()) throw CLI::ValidationError("gcd", "expects at least one element");
  std::vector<Element> xs;
  json inputs = json::array();
  for (const auto& t : o.exprs) {
    xs.push_back(parse_element(s, t));
    inputs.push_back(xs.back().get_str());
  }
  const auto d = gcd(s, xs);
  e.emit("gcd", {{"instance", s.name}, {"elements", inputs}}, d.get_str(), std::nullopt,
         d.get_str());
  return kExitOk;
}

int cmd_ord(const SemiringInstance& s, const Options& o, Emitter& e) {
  if (o.exprs.size() != 1) throw CLI::ValidationError("ord", "expects exactly one expression");
  const auto p = parse_element(s, o.prime);
  const auto f = parse_polynomial(s, o.exprs[0]);
  const auto v = ord_poly(s, p, f);
  e.emit("ord", {{"instance", s.name}, {"prime", p.get_str()}, {"expr", format_polynomial(f)}},
         v.is_infinite() ? json("inf") : json(v.value()), std::nullopt, v.str());
  return kExitOk;
}

int cmd_content(const SemiringInstance& s, const Options& o, Emitter& e) {
  if (o.exprs.size() != 1) throw CLI::ValidationError("content", "expects exactly one polynomial");
  const auto f = parse_polynomial(s, o.exprs[0]);
  const auto c = content(s, f);
  e.emit("content", {{"instance", s.name}, {"f", format_polynomial(f)}}, c.value.str(),
         std::nullopt, c.value.str());
  return kExitOk;
}

int cmd_primitive(const SemiringInstance& s, const Options& o, Emitter& e) {
  if (o.exprs.size() != 1)
    throw CLI::ValidationError("primitive", "expects exactly one polynomial");
  const auto f = parse_polynomial(s, o.exprs[0]);
  const auto [c, f1] = primitive_decompose(s, f);
  e.emit("primitive", {{"instance", s.name}, {"f", format_polynomial(f)}},
         {{"content", c.value.str()}, {"primitive", format_polynomial(f1)}}, std::nullopt,
         "content: " + c.value.str() + "\nprimitive: " + format_polynomial(f1));
  return kExitOk;
}

int cmd_gauss(const SemiringInstance& s, const Options& o, Emitter& e) {
  if (o.exprs.size() != 2) throw CLI::ValidationError("gauss", "expects two polynomials");
  const auto f = parse_polynomial(s, o.exprs[0]);
  const auto g = parse_polynomial(s, o.exprs[1]);
  const auto r = gauss_check(s, f, g);
  e.emit("gauss",
         {{"instance", s.name}, {"f", format_polynomial(f)}, {"g", format_polynomial(g)}},
         {{"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}}, r.holds,
         "lhs: " + r.lhs.str() + "\nrhs: " + r.rhs.str() + "\nholds: " + (r.holds ? "true" : "false"));
  return r.holds ? kExitOk : kExitPropertyFailure;
}

int cmd_witness(const SemiringInstance& s, const Options& o, Emitter& e) {
  if (o.exprs.size() != 2) throw CLI::ValidationError("witness", "expects two polynomials");
  const auto p = parse_element(s, o.prime);
  const auto f = parse_polynomial(s, o.exprs[0]);
  const auto g = parse_polynomial(s, o.exprs[1]);
  const auto w = gauss_witness(s, f, g, p);
  std::ostringstream text;
  text << "r=" << w.r << " s=" << w.s << " k=" << w.k << " c_k=" << w.c_k
       << " p_divides_c_k=" << (w.p_divides_c_k ? "true" : "false");
  e.emit("witness",
         {{"instance", s.name},
          {"prime", p.get_str()},
          {"f", format_polynomial(f)},
          {"g", format_polynomial(g)}},
         {{"r", w.r},
          {"s", w.s},
          {"k", w.k},
          {"c_k", w.c_k.get_str()},
          {"lead_term", w.lead_term.get_str()},
          {"rest", w.rest.get_str()},
          {"p_divides_c_k", w.p_divides_c_k}},
         w.holds(), text.str());
  return w.holds() ? kExitOk : kExitPropertyFailure;
}

int cmd_ideal(const SemiringInstance& s, const Options& o, Emitter& e) {
  if (o.gens.empty()) throw CLI::ValidationError("ideal", "--gens is required");
  if (!o.subtractive && o.contains.empty())
    throw CLI::ValidationError("ideal", "pass --subtractive and/or --contains X");
  const FinitelyGeneratedIdeal ideal(s, parse_list(s, o.gens));
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.get_str());
  int code = kExitOk;
  if (!o.contains.empty()) {
    const auto x = parse_element(s, o.contains);
    const auto m = ideal_contains(ideal, x, o.bound);
    e.emit("ideal_contains",
           {{"instance", s.name}, {"gens", gens}, {"x", x.get_str()}, {"bound", o.bound}},
           to_string(m), std::nullopt, to_string(m));
  }
  if (o.subtractive) {
    const auto r = is_subtractive_ideal(ideal, o.bound);
    const bool holds = r.verdict != Subtractivity::not_subtractive;
    json result{{"verdict", to_string(r.verdict)}};
    std::string text;
    if (r.witness) {
      result["witness"] = {{"a", r.witness->first.get_str()}, {"b", r.witness->second.get_str()}};
      text = "NOT subtractive: a=" + r.witness->first.get_str() +
             ", b=" + r.witness->second.get_str();
    } else if (r.verdict == Subtractivity::subtractive) {
      text = "subtractive";
    } else {
      text = "subtractive up to bound " + std::to_string(o.bound);
    }
    e.emit("ideal_subtractive", {{"instance", s.name}, {"gens", gens}, {"bound", o.bound}},
           std::move(result), holds, text);
    if (!holds) code = kExitPropertyFailure;
  }
  return code;
}

int cmd_verify(const SemiringInstance& s, const Options& o, Emitter& e) {
  GeneratorConfig cfg;
  cfg.seed = o.seed;
  cfg.instance = &s;
  cfg.max_degree = o.max_degree;
  cfg.max_coefficient = o.max_coefficient;
  cfg.max_denominator = o.max_denominator;
  cfg.trials = o.trials;
  cfg.threads = o.threads;
  std::vector<std::string> suites;
  for (const auto& item : o.suites) {
    std::stringstream in(item);
    std::string name;
    while (std::getline(in, name, ',')) suites.push_back(name);
  }
  if (o.suites.empty()) suites = kSuiteNames;
  for (const auto& name : suites)
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), name) == kSuiteNames.end())
      throw CLI::ValidationError("--suite", "unknown suite '" + name + "'");

  const auto report = run_suite(cfg, suites);
  const auto lines = format_report(report);
  std::size_t i = 0;
  for (const auto& r : report.results) {
    json inputs{{"instance", s.name}, {"suite", r.suite}, {"property", r.name},
                {"seed", cfg.seed}, {"trials", cfg.trials}};
    json result{{"passed", r.passed}, {"failed", r.failed}};
    if (r.first_failure)
      result["first_failure"] = {{"trial", r.first_failure->trial},
                                 {"detail", r.first_failure->detail}};
    e.emit("verify", std::move(inputs), std::move(result), r.failed == 0, lines[i++]);
  }
  for (const auto& f : report.findings)
    e.emit("verify", {{"instance", s.name}, {"seed", cfg.seed}}, {{"finding", f}}, std::nullopt,
           lines[i++]);
  return report.ok() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "ignoring non-numeric " << kSeedEnv << "=" << env << '\n';
    }
  }

  CLI::App app{"Exact content and Gauss-lemma toolkit over the semirings N and Z"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--instance", o.instance, "Semiring instance")
      ->check(CLI::IsMember({"nat", "int"}))
      ->capture_default_str();
  app.add_flag("--json", o.json, "One JSON object per result line");

  auto* factor_cmd = app.add_subcommand("factor", "Canonical prime factorization");
  factor_cmd->add_option("N", o.exprs)->required();
  auto* gcd_cmd = app.add_subcommand("gcd", "Greatest common divisor");
  gcd_cmd->add_option("elements", o.exprs)->required();
  auto* ord_cmd = app.add_subcommand("ord", "Order of an element, fraction or polynomial at p");
  ord_cmd->add_option("--prime", o.prime)->required();
  ord_cmd->add_option("EXPR", o.exprs)->required();
  auto* content_cmd = app.add_subcommand("content", "Content of a polynomial");
  content_cmd->add_option("POLY", o.exprs)->required();
  auto* primitive_cmd = app.add_subcommand("primitive", "Content and primitive part");
  primitive_cmd->add_option("POLY", o.exprs)->required();
  auto* gauss_cmd = app.add_subcommand("gauss", "Check cont(fg) = cont(f) cont(g)");
  gauss_cmd->add_option("POLYS", o.exprs)->required()->expected(2);
  auto* witness_cmd = app.add_subcommand("witness", "Coefficient of fg not divisible by p");
  witness_cmd->add_option("--prime", o.prime)->required();
  witness_cmd->add_option("POLYS", o.exprs)->required()->expected(2);
  auto* ideal_cmd = app.add_subcommand("ideal", "Bounded ideal membership and subtractivity");
  ideal_cmd->add_option("--gens", o.gens, "Comma-separated generators")->required();
  ideal_cmd->add_flag("--subtractive", o.subtractive);
  ideal_cmd->add_option("--contains", o.contains, "Element to test for membership");
  ideal_cmd->add_option("--bound", o.bound)->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized property suites");
  verify_cmd->add_option("--suite", o.suites, "axioms, order, content, gauss, ideals");
  verify_cmd->add_option("--trials", o.trials)->capture_default_str();
  verify_cmd->add_option("--seed", o.seed, std::string("Default from ") + kSeedEnv + " or 42");
  verify_cmd->add_option("--max-degree", o.max_degree)->capture_default_str();
  verify_cmd->add_option("--max-coefficient", o.max_coefficient)->capture_default_str();
  verify_cmd->add_option("--max-denominator", o.max_denominator)->capture_default_str();
  verify_cmd->add_option("--threads", o.threads, "0 uses all cores")->capture_default_str();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  Emitter emitter(out, o.json);
  try {
    const auto& s = instance_by_name(o.instance);
    if (factor_cmd->parsed()) return cmd_factor(s, o, emitter);
    if (gcd_cmd->parsed()) return cmd_gcd(s, o, emitter);
    if (ord_cmd->parsed()) return cmd_ord(s, o, emitter);
    if (content_cmd->parsed()) return cmd_content(s, o, emitter);
    if (primitive_cmd->parsed()) return cmd_primitive(s, o, emitter);
    if (gauss_cmd->parsed()) return cmd_gauss(s, o, emitter);
    if (witness_cmd->parsed()) return cmd_witness(s, o, emitter);
    if (ideal_cmd->parsed()) return cmd_ideal(s, o, emitter);
    if (verify_cmd->parsed()) return cmd_verify(s, o, emitter);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AlgebraError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace semigauss::cli
