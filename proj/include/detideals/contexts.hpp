#pragma once

// The three determinantal rings: generic m x n matrices, symmetric n x n matrices and
// skew-symmetric n x n matrices, each with its chain of prime ideals
//   generic:   I_1 > I_2 > ... > I_m        (t-minors)
//   symmetric: J_1 > ... > J_n              (t-minors)
//   skew:      P_2 > P_4 > ... > P_{2[n/2]} (2t-Pfaffians)
// Products of minors/Pfaffians are represented only by their shapes.

#include <cstdint>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "errors.hpp"

namespace detideals {

class RingContext {
 public:
  enum class Kind { Generic, Symmetric, SkewSymmetric };

  static RingContext generic(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw DomainError("generic context needs m, n >= 1");
    if (m > n) throw DomainError("generic context needs m <= n");
    return RingContext(Kind::Generic, m, n);
  }
  static RingContext symmetric(std::int64_t n) {
    if (n < 1) throw DomainError("symmetric context needs n >= 1");
    return RingContext(Kind::Symmetric, 0, n);
  }
  static RingContext skew_symmetric(std::int64_t n) {
    if (n < 2) throw DomainError("skew-symmetric context needs n >= 2");
    return RingContext(Kind::SkewSymmetric, 0, n);
  }

  Kind kind() const { return kind_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }

  // Length of the prime chain.
  std::size_t k() const {
    switch (kind_) {
      case Kind::Generic: return static_cast<std::size_t>(m_);
      case Kind::Symmetric: return static_cast<std::size_t>(n_);
      case Kind::SkewSymmetric: return static_cast<std::size_t>(n_ / 2);
    }
    return 0;
  }

  // Number of variables of the ambient polynomial ring.
  std::int64_t num_variables() const {
    switch (kind_) {
      case Kind::Generic: return m_ * n_;
      case Kind::Symmetric: return n_ * (n_ + 1) / 2;
      case Kind::SkewSymmetric: return n_ * (n_ - 1) / 2;
    }
    return 0;
  }

  // Height of the i-th prime, 1 <= i <= k.
  std::int64_t height(std::size_t i) const {
    if (i < 1 || i > k()) throw DomainError("prime index out of range");
    const auto t = static_cast<std::int64_t>(i);
    switch (kind_) {
      case Kind::Generic: return (m_ - t + 1) * (n_ - t + 1);
      case Kind::Symmetric: return (n_ - t + 2) * (n_ - t + 1) / 2;
      case Kind::SkewSymmetric: return (n_ - 2 * t + 2) * (n_ - 2 * t + 1) / 2;
    }
    return 0;
  }

  std::vector<std::int64_t> heights() const {
    std::vector<std::int64_t> h;
    for (std::size_t i = 1; i <= k(); ++i) h.push_back(height(i));
    return h;
  }

  // A shape is admissible when its largest part indexes a prime of the chain.
  void check_shape(const Diagram& alpha) const {
    if (alpha.height() > static_cast<std::int64_t>(k()))
      throw DomainError("shape " + to_string(alpha) + " is too tall for " + describe());
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::Generic: return "Generic(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
      case Kind::Symmetric: return "Symmetric(" + std::to_string(n_) + ")";
      case Kind::SkewSymmetric: return "SkewSymmetric(" + std::to_string(n_) + ")";
    }
    return {};
  }

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  RingContext(Kind kind, std::int64_t m, std::int64_t n) : kind_(kind), m_(m), n_(n) {}

  Kind kind_;
  std::int64_t m_;
  std::int64_t n_;
};

inline std::vector<std::int64_t> heights(const RingContext& c) { return c.heights(); }

// Does a product of shape alpha lie in the s-th symbolic power of the t-th prime?
inline bool symbolic_membership(const RingContext& c, const Diagram& alpha, std::size_t t, std::int64_t s) {
  if (t < 1 || t > c.k()) throw DomainError("prime index out of range");
  c.check_shape(alpha);
  return gamma(alpha, static_cast<std::int64_t>(t)) >= s;
}

// Shape of a product whose initial term is the product of all variables; its gamma
// vector equals the height vector.
inline Diagram witness_shape(const RingContext& c) {
  std::vector<Diagram::Part> parts;
  auto repeat = [&](Diagram::Part value, std::int64_t times) {
    for (std::int64_t i = 0; i < times; ++i) parts.push_back(value);
  };
  switch (c.kind()) {
    case RingContext::Kind::Generic:
      // (m^{n-m+1}, (m-1)^2, ..., 1^2)
      repeat(c.m(), c.n() - c.m() + 1);
      for (auto v = c.m() - 1; v >= 1; --v) repeat(v, 2);
      break;
    case RingContext::Kind::Symmetric:
      for (auto v = c.n(); v >= 1; --v) parts.push_back(v);
      break;
    case RingContext::Kind::SkewSymmetric: {
      const auto half = c.n() / 2;
      if (c.n() % 2 == 1) {
        // (h^3, (h-1)^4, ..., 1^4) with h = (n-1)/2
        repeat(half, 3);
      } else {
        // (h, (h-1)^4, ..., 1^4) with h = n/2
        repeat(half, 1);
      }
      for (auto v = half - 1; v >= 1; --v) repeat(v, 4);
      break;
    }
  }
  return Diagram(std::move(parts));
}

}  // namespace detideals
