#pragma once

// A quick cross-module invariant sweep, run by `detideals verify`.

#include <functional>
#include <string>
#include <vector>

#include "charzero.hpp"
#include "contexts.hpp"
#include "diagram.hpp"
#include "engine.hpp"
#include "frobenius.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace detideals {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::vector<RingContext> small_contexts() {
  std::vector<RingContext> cs;
  for (std::int64_t n = 1; n <= 4; ++n)
    for (std::int64_t m = 1; m <= n; ++m) cs.push_back(RingContext::generic(m, n));
  for (std::int64_t n = 1; n <= 4; ++n) cs.push_back(RingContext::symmetric(n));
  for (std::int64_t n = 2; n <= 6; ++n) cs.push_back(RingContext::skew_symmetric(n));
  return cs;
}

// Shapes of height <= k with at most `boxes` boxes.
inline std::vector<Diagram> shapes_for(const RingContext& c, std::int64_t boxes) {
  std::vector<Diagram> out;
  for_each_diagram(boxes, [&](const Diagram& d) {
    if (!d.empty()) out.push_back(d);
  }, 0, static_cast<std::int64_t>(c.k()));
  return out;
}

}  // namespace detail

inline std::vector<CheckResult> run_invariant_suite() {
  std::vector<CheckResult> results;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, false, {}};
    try {
      r.detail = body();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  };

  check("diagram identities", [] {
    std::string bad;
    for_each_diagram(10, [&](const Diagram& s) {
      if (!bad.empty()) return;
      const Diagram t = transpose(s);
      if (transpose(t) != s) bad = "transpose is not an involution at " + to_string(s);
      for (std::int64_t j = 1; j <= s.height() + 1 && bad.empty(); ++j) {
        std::int64_t cols = 0;
        for (std::int64_t i = j; i <= s.height(); ++i) cols += t.part(static_cast<std::size_t>(i - 1));
        if (gamma(s, j) != cols) bad = "column identity fails at " + to_string(s);
      }
    });
    return bad;
  });

  check("witness shapes", [] {
    for (const auto& c : detail::small_contexts()) {
      const auto w = witness_shape(c);
      if (gamma_vector(w, c.k()) != c.heights()) return "witness mismatch in " + c.describe();
    }
    return std::string();
  });

  check("singleton fpt equals min h_i / gamma_i", [] {
    for (const auto& c : detail::small_contexts())
      for (const auto& s : detail::shapes_for(c, 5)) {
        const auto g = gamma_vector(s, c.k());
        Rational best;
        bool first = true;
        for (std::size_t i = 0; i < c.k(); ++i) {
          if (g[i] == 0) continue;
          Rational r = make_rational(c.height(i + 1), g[i]);
          if (first || r < best) best = r;
          first = false;
        }
        if (fpt(ProductIdealSpec(c, {s})) != best) return "fpt mismatch for " + to_string(s) + " in " + c.describe();
        fpt_bounds_check(c, s);
      }
    return std::string();
  });

  check("closed form, floating property and membership", [] {
    const std::vector<Rational> grid = {make_rational(1, 2), make_rational(1), make_rational(3, 2),
                                        make_rational(2), make_rational(7, 2)};
    for (const auto& c : {RingContext::generic(2, 3), RingContext::symmetric(3), RingContext::skew_symmetric(5)})
      for (const auto& s : detail::shapes_for(c, 4))
        for (const auto& lam : grid) {
          const ProductIdealSpec spec(c, {s});
          const auto tau = test_ideal(spec, lam);
          if (!ideal_equal(tau, test_ideal_closed_form(c, s, lam)))
            return "closed form differs for " + to_string(s) + " in " + c.describe();
          if (!floating_check(spec, lam).equal) return "floating equality fails for " + to_string(s);
          for (const auto& alpha : detail::shapes_for(c, 4))
            if (membership(spec, lam, alpha) != tau.admits(alpha))
              return "membership routes disagree at " + to_string(alpha);
        }
    return std::string();
  });

  check("monomial oracle at p = 2, 3, 5", [] {
    const MonomialIdeal I(2, {{2, 0}, {0, 3}});
    if (fpt_monomial(I) != make_rational(5, 6)) return std::string("fpt(x^2, y^3) != 5/6");
    for (std::int64_t p : {2, 3, 5})
      for (const auto& lam : {make_rational(1, 2), make_rational(5, 6), make_rational(1)}) {
        const auto r = tau_oracle(I, lam, p, 4);
        if (!r.stabilized) return "oracle did not stabilize at p = " + std::to_string(p);
        if (!(r.tau == test_ideal_monomial(I, lam))) return "oracle disagrees at p = " + std::to_string(p);
      }
    return std::string();
  });

  check("Skoda", [] {
    const MonomialIdeal I(2, {{2, 1}, {1, 3}});
    for (const auto& lam : {make_rational(2), make_rational(5, 2), make_rational(3)})
      if (!(test_ideal_monomial(I, lam) == product(I, test_ideal_monomial(I, lam - 1))))
        return "Skoda fails at lambda = " + to_string(lam);
    return std::string();
  });

  check("lct agrees with fpt of the translation", [] {
    const auto spec = InvariantIdealSpec::symmetric_gl(3, {Diagram{2, 2}, Diagram{4}});
    if (lct(spec) != fpt(translate(spec))) return std::string("lct differs from fpt");
    return std::string();
  });

  return results;
}

}  // namespace detideals
