#pragma once

// GL-invariant ideals I(Sigma), J(Sigma), P(Sigma) in characteristic zero. Their
// integral closures coincide with those of product ideals of transformed shapes, and
// multiplier ideals are the test ideals of those (reduction mod p >> 0).

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "contexts.hpp"
#include "diagram.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace detideals {

inline constexpr const char* kCharZeroNote = "computed via reduction mod p >> 0";

class InvariantIdealSpec {
 public:
  enum class Flavor { GenericGL, SymmetricGL, SkewGL };

  static InvariantIdealSpec generic_gl(std::int64_t m, std::int64_t n, std::vector<Diagram> sigmas) {
    return InvariantIdealSpec(Flavor::GenericGL, RingContext::generic(m, n), std::move(sigmas));
  }
  static InvariantIdealSpec symmetric_gl(std::int64_t n, std::vector<Diagram> sigmas) {
    return InvariantIdealSpec(Flavor::SymmetricGL, RingContext::symmetric(n), std::move(sigmas));
  }
  static InvariantIdealSpec skew_gl(std::int64_t n, std::vector<Diagram> sigmas) {
    return InvariantIdealSpec(Flavor::SkewGL, RingContext::skew_symmetric(n), std::move(sigmas));
  }

  Flavor flavor() const { return flavor_; }
  const RingContext& context() const { return context_; }
  const std::vector<Diagram>& sigmas() const { return sigmas_; }

 private:
  InvariantIdealSpec(Flavor flavor, RingContext context, std::vector<Diagram> sigmas)
      : flavor_(flavor), context_(context), sigmas_(std::move(sigmas)) {
    if (sigmas_.empty()) throw DomainError("an invariant-ideal spec needs at least one shape");
    const auto rows = flavor_ == Flavor::GenericGL ? context_.m() : context_.n();
    for (const auto& s : sigmas_) {
      if (static_cast<std::int64_t>(s.num_parts()) > rows)
        throw DomainError("shape " + to_string(s) + " has more than " + std::to_string(rows) + " parts");
      if (flavor_ == Flavor::SymmetricGL && !s.all_parts_even())
        throw DomainError("shape " + to_string(s) + " has an odd row");
      if (flavor_ == Flavor::SkewGL && !transpose(s).all_parts_even())
        throw DomainError("shape " + to_string(s) + " has an odd column");
    }
    std::sort(sigmas_.begin(), sigmas_.end());
    sigmas_.erase(std::unique(sigmas_.begin(), sigmas_.end()), sigmas_.end());
  }

  Flavor flavor_;
  RingContext context_;
  std::vector<Diagram> sigmas_;
};

// GenericGL: sigma -> transpose; SymmetricGL: sigma -> sigma'; SkewGL: sigma -> sigma~.
inline ProductIdealSpec translate(const InvariantIdealSpec& spec) {
  std::vector<Diagram> shapes;
  for (const auto& s : spec.sigmas()) {
    switch (spec.flavor()) {
      case InvariantIdealSpec::Flavor::GenericGL: shapes.push_back(transpose(s)); break;
      case InvariantIdealSpec::Flavor::SymmetricGL: shapes.push_back(derived_symmetric(s)); break;
      case InvariantIdealSpec::Flavor::SkewGL: shapes.push_back(derived_skew(s)); break;
    }
  }
  return ProductIdealSpec(spec.context(), std::move(shapes));
}

inline IdealPresentation multiplier_ideal(const InvariantIdealSpec& spec, const Rational& lambda) {
  return test_ideal(translate(spec), lambda);
}

inline Rational lct(const InvariantIdealSpec& spec) { return fpt(translate(spec)); }

}  // namespace detideals
