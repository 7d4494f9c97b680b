#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace detideals {

using Rational = mpq_class;
using QVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  r.canonicalize();
  return r;
}

inline std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw GuardError("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

inline mpz_class floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline mpz_class ceil_of(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline std::int64_t floor_int(const Rational& r) { return to_int64(floor_of(r)); }
inline std::int64_t ceil_int(const Rational& r) { return to_int64(ceil_of(r)); }

// Canonical "p/q" form, q > 0, lowest terms; integers keep the "/1".
inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p"; surrounding whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    return std::string(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw DomainError("malformed rational '" + std::string(text) + "'");
  mpz_class n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline QVector to_qvector(const IntVector& v) {
  QVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(make_rational(x));
  return out;
}

}  // namespace detideals
