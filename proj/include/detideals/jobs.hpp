#pragma once

// Command dispatch for the detideals command-line tool. Every command maps a set of
// JSON-valued options to a JSON result and an exit code.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charzero.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "frobenius.hpp"
#include "json_io.hpp"
#include "monomial.hpp"
#include "verify.hpp"

namespace detideals {

enum ExitCode : int { kExitOk = 0, kExitDomain = 2, kExitConsistency = 3, kExitGuard = 4 };

struct JobOptions {
  std::optional<std::string> context, flavor, sigmas, lambda, lambda_max, ideal, alpha, presentation;
  std::optional<std::int64_t> p, e_max, s;
};

struct JobResult {
  io::json output;
  int exit_code = kExitOk;
};

inline const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> names = {"fpt",        "lct",        "test-ideal",      "multiplier-ideal",
                                                 "integral-closure", "generators", "membership", "jumping-numbers",
                                                 "oracle-check", "verify"};
  return names;
}

namespace detail {

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing option --") + flag);
  return *v;
}

inline ProductIdealSpec product_spec(const JobOptions& o) {
  return ProductIdealSpec(io::context_from_json(io::parse(need(o.context, "context"), "--context")),
                          io::diagrams_from_json(io::parse(need(o.sigmas, "sigmas"), "--sigmas")));
}

inline InvariantIdealSpec flavor_spec(const JobOptions& o) {
  return io::flavor_from_json(io::parse(need(o.flavor, "flavor"), "--flavor"));
}

inline MonomialIdeal monomial(const JobOptions& o) {
  return io::monomial_from_json(io::parse(need(o.ideal, "ideal"), "--ideal"));
}

inline Rational rational_option(const std::optional<std::string>& v, const char* flag) {
  return parse_rational(need(v, flag));
}

inline io::json dispatch(const std::string& command, const JobOptions& o, int& exit_code) {
  using io::json;
  using io::to_json;
  if (command == "fpt") {
    if (o.ideal) return {{"fpt", to_json(fpt_monomial(monomial(o)))}};
    return {{"fpt", to_json(fpt(product_spec(o)))}};
  }
  if (command == "lct") {
    if (o.ideal) return {{"lct", to_json(fpt_monomial(monomial(o)))}, {"method", kCharZeroNote}};
    return {{"lct", to_json(lct(flavor_spec(o)))}, {"method", kCharZeroNote}};
  }
  if (command == "test-ideal") {
    const auto lam = rational_option(o.lambda, "lambda");
    if (o.ideal) return to_json(test_ideal_monomial(monomial(o), lam));
    return to_json(test_ideal(product_spec(o), lam));
  }
  if (command == "multiplier-ideal") {
    const auto lam = rational_option(o.lambda, "lambda");
    json out = o.ideal ? to_json(test_ideal_monomial(monomial(o), lam)) : to_json(multiplier_ideal(flavor_spec(o), lam));
    out["method"] = kCharZeroNote;
    return out;
  }
  if (command == "integral-closure") {
    const auto s = need(o.s, "s");
    if (s < 1) throw DomainError("--s must be a positive integer");
    return to_json(integral_closure(product_spec(o), s));
  }
  if (command == "generators") {
    if (o.presentation)
      return {{"shapes", to_json(minimal_generating_shapes(io::presentation_from_json(io::parse(*o.presentation, "--presentation"))))}};
    return {{"shapes", to_json(minimal_generating_shapes(test_ideal(product_spec(o), rational_option(o.lambda, "lambda"))))}};
  }
  if (command == "membership") {
    const auto alpha = io::diagram_from_json(io::parse(need(o.alpha, "alpha"), "--alpha"));
    return {{"member", membership(product_spec(o), rational_option(o.lambda, "lambda"), alpha)}};
  }
  if (command == "jumping-numbers") {
    const auto spec = product_spec(o);
    const auto lam_max = rational_option(o.lambda_max, "lambda-max");
    JumpReport r = jumping_numbers_sum(spec, lam_max);
    if (spec.sigmas().size() == 1) {
      const auto single = jumping_numbers(spec.context(), spec.sigmas().front(), lam_max);
      if (single != r.values) throw ConsistencyError("single-product jumps disagree with the threshold walk");
    }
    return {{"jumping_numbers", to_json(r.values)}, {"complete", r.complete}, {"method", r.method}};
  }
  if (command == "oracle-check") {
    const auto I = monomial(o);
    const auto lam = rational_option(o.lambda, "lambda");
    const auto report = tau_oracle(I, lam, need(o.p, "p"), static_cast<int>(o.e_max.value_or(5)));
    const auto engine = test_ideal_monomial(I, lam);
    const bool equal = report.tau == engine;
    if (report.stabilized && !equal) exit_code = kExitConsistency;
    return {{"match", report.stabilized && equal}, {"oracle", to_json(report)}, {"engine", to_json(engine)}};
  }
  if (command == "verify") {
    json checks = json::array();
    bool all = true;
    for (const auto& r : run_invariant_suite()) {
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all = all && r.pass;
    }
    if (!all) exit_code = kExitConsistency;
    return {{"pass", all}, {"checks", checks}};
  }
  throw DomainError("unknown command '" + command + "'");
}

inline io::json error_json(const char* kind, const std::string& reason) {
  return {{"error", {{"kind", kind}, {"reason", reason}}}};
}

}  // namespace detail

inline JobResult run(const std::string& command, const JobOptions& options) {
  JobResult r;
  try {
    r.output = detail::dispatch(command, options, r.exit_code);
  } catch (const DomainError& e) {
    r = {detail::error_json("domain", e.what()), kExitDomain};
  } catch (const ConsistencyError& e) {
    r = {detail::error_json("consistency", e.what()), kExitConsistency};
  } catch (const GuardError& e) {
    r = {detail::error_json("guard", e.what()), kExitGuard};
  }
  return r;
}

}  // namespace detideals
