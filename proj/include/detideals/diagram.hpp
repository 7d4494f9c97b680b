#pragma once

// Young diagrams stored as weakly decreasing part lists.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace detideals {

class Diagram {
 public:
  using Part = std::int64_t;

  Diagram() = default;
  Diagram(std::initializer_list<Part> parts) : Diagram(std::vector<Part>(parts)) {}
  explicit Diagram(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw DomainError("diagram parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("diagram parts must be weakly decreasing");
    }
  }

  // Builds a diagram from parts in any order; zero parts are dropped.
  static Diagram from_unsorted(std::vector<Part> parts) {
    std::erase_if(parts, [](Part p) { return p == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Diagram(std::move(parts));
  }

  // (value^count), e.g. rectangle(2, 3) == (2,2,2).
  static Diagram rectangle(Part value, std::size_t count) {
    if (value == 0 || count == 0) return {};
    return Diagram(std::vector<Part>(count, value));
  }

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t num_parts() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  // The largest part, called the height; 0 for the empty diagram.
  Part height() const { return parts_.empty() ? 0 : parts_.front(); }
  Part part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::int64_t boxes() const {
    std::int64_t s = 0;
    for (auto p : parts_) s += p;
    return s;
  }

  bool all_parts_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](Part p) { return p % 2 == 0; });
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Part> parts_;
};

inline std::string to_string(const Diagram& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.num_parts(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.parts()[i]);
  }
  return s + ")";
}

// gamma_t(sigma) = sum_i max(0, sigma_i - t + 1): the boxes lying in columns >= t.
inline std::int64_t gamma(const Diagram& sigma, std::int64_t t) {
  if (t < 1) throw DomainError("gamma index must be >= 1");
  std::int64_t s = 0;
  for (auto p : sigma.parts()) {
    if (p < t) break;
    s += p - t + 1;
  }
  return s;
}

// (gamma_1(sigma), ..., gamma_k(sigma)).
inline std::vector<std::int64_t> gamma_vector(const Diagram& sigma, std::size_t k) {
  if (k < 1) throw DomainError("gamma_vector needs k >= 1");
  std::vector<std::int64_t> out(k, 0);
  for (auto p : sigma.parts())
    for (std::int64_t t = 1; t <= std::min<std::int64_t>(p, static_cast<std::int64_t>(k)); ++t)
      out[t - 1] += p - t + 1;
  return out;
}

inline Diagram transpose(const Diagram& sigma) {
  std::vector<Diagram::Part> cols(static_cast<std::size_t>(sigma.height()), 0);
  for (auto p : sigma.parts())
    for (Diagram::Part i = 0; i < p; ++i) ++cols[i];
  return Diagram(std::move(cols));
}

// sigma * tau: all parts merged and re-sorted.
inline Diagram concat(const Diagram& sigma, const Diagram& tau) {
  std::vector<Diagram::Part> parts = sigma.parts();
  parts.insert(parts.end(), tau.parts().begin(), tau.parts().end());
  return Diagram::from_unsorted(std::move(parts));
}

// True iff sigma fits inside tau.
inline bool contains(const Diagram& tau, const Diagram& sigma) {
  if (sigma.num_parts() > tau.num_parts()) return false;
  for (std::size_t i = 0; i < sigma.num_parts(); ++i)
    if (sigma.parts()[i] > tau.parts()[i]) return false;
  return true;
}

// sigma' with i-th entry (transpose sigma)_{2i}. Requires every row of sigma even.
inline Diagram derived_symmetric(const Diagram& sigma) {
  if (!sigma.all_parts_even())
    throw DomainError("derived_symmetric: diagram " + to_string(sigma) + " has an odd row");
  const Diagram t = transpose(sigma);
  std::vector<Diagram::Part> out;
  for (std::size_t i = 1; i < t.num_parts(); i += 2) out.push_back(t.parts()[i]);
  return Diagram(std::move(out));
}

// sigma~ with i-th entry (transpose sigma)_i / 2. Requires every column of sigma even.
inline Diagram derived_skew(const Diagram& sigma) {
  const Diagram t = transpose(sigma);
  if (!t.all_parts_even())
    throw DomainError("derived_skew: diagram " + to_string(sigma) + " has an odd column");
  std::vector<Diagram::Part> out;
  out.reserve(t.num_parts());
  for (auto c : t.parts()) out.push_back(c / 2);
  return Diagram(std::move(out));
}

// Calls fn on every diagram with at most max_boxes boxes, at most max_parts parts and
// largest part at most max_height. Parameters <= 0 mean "unbounded" except max_boxes.
template <class Fn>
void for_each_diagram(std::int64_t max_boxes, Fn&& fn, std::int64_t max_parts = 0,
                      std::int64_t max_height = 0) {
  std::vector<Diagram::Part> parts;
  auto rec = [&](auto& self, std::int64_t remaining, Diagram::Part cap) -> void {
    fn(Diagram(parts));
    if (max_parts > 0 && static_cast<std::int64_t>(parts.size()) >= max_parts) return;
    for (Diagram::Part p = std::min(cap, remaining); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, max_boxes, max_height > 0 ? max_height : max_boxes);
}

}  // namespace detideals
