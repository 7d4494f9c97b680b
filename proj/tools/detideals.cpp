// detideals: JSON command-line front end.
//
//   detideals fpt --context '{"kind":"generic","m":2,"n":2}' --sigmas '[[2]]'
//   detideals oracle-check --ideal '{"nvars":2,"gens":[[2,0],[0,3]]}' --lambda 1/1 --p 5

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "detideals/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Test ideals, multiplier ideals and thresholds of determinantal and monomial ideals"};
  app.require_subcommand(0);

  std::string command, out_path;
  detideals::JobOptions opts;
  std::string context, flavor, sigmas, lambda, lambda_max, ideal, alpha, presentation;
  std::int64_t p = 0, e_max = 0, s = 0;

  app.add_option("command", command, "one of: fpt lct test-ideal multiplier-ideal integral-closure generators "
                                     "membership jumping-numbers oracle-check verify")
      ->required();
  auto* o_context = app.add_option("--context", context, "ring context JSON");
  auto* o_flavor = app.add_option("--flavor", flavor, "invariant-ideal JSON (char 0)");
  auto* o_sigmas = app.add_option("--sigmas", sigmas, "JSON array of diagrams");
  auto* o_lambda = app.add_option("--lambda", lambda, "coefficient as p/q");
  auto* o_lambda_max = app.add_option("--lambda-max", lambda_max, "upper end for jumping numbers, p/q");
  auto* o_ideal = app.add_option("--ideal", ideal, "monomial ideal JSON");
  auto* o_alpha = app.add_option("--alpha", alpha, "shape for membership, JSON array");
  auto* o_pres = app.add_option("--presentation", presentation, "ideal presentation JSON");
  auto* o_p = app.add_option("--p", p, "prime for the Frobenius oracle");
  auto* o_e = app.add_option("--e-max", e_max, "Frobenius depth (default 5)");
  auto* o_s = app.add_option("--s", s, "power for integral-closure");
  app.add_option("--out", out_path, "write the JSON result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : detideals::kExitDomain;
  }

  auto take = [](CLI::Option* o, const std::string& v, std::optional<std::string>& dst) {
    if (o->count()) dst = v;
  };
  take(o_context, context, opts.context);
  take(o_flavor, flavor, opts.flavor);
  take(o_sigmas, sigmas, opts.sigmas);
  take(o_lambda, lambda, opts.lambda);
  take(o_lambda_max, lambda_max, opts.lambda_max);
  take(o_ideal, ideal, opts.ideal);
  take(o_alpha, alpha, opts.alpha);
  take(o_pres, presentation, opts.presentation);
  if (o_p->count()) opts.p = p;
  if (o_e->count()) opts.e_max = e_max;
  if (o_s->count()) opts.s = s;

  const auto result = detideals::run(command, opts);
  const std::string text = result.output.dump() + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << out_path << "\n";
      return detideals::kExitDomain;
    }
    f << text;
  }
  if (result.exit_code != detideals::kExitOk) std::cerr << result.output.dump() << "\n";
  return result.exit_code;
}
