#pragma once

// JSON encodings. Rationals are "p/q" strings, diagrams are integer arrays.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "charzero.hpp"
#include "contexts.hpp"
#include "diagram.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "frobenius.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace detideals::io {

using json = nlohmann::json;

inline json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError("malformed JSON in " + what + ": " + e.what());
  }
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::int64_t to_integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw DomainError(what + " must be an integer");
  return j.get<std::int64_t>();
}

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  throw DomainError("rationals must be \"p/q\" strings");
}

inline json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

inline json to_json(const Diagram& d) { return json(d.parts()); }

inline IntVector int_vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw DomainError(what + " must be an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(to_integer(x, what + " entry"));
  return v;
}

inline Diagram diagram_from_json(const json& j) {
  return Diagram(int_vector_from_json(j, "diagram"));
}

inline json to_json(const std::vector<Diagram>& ds) {
  json a = json::array();
  for (const auto& d : ds) a.push_back(to_json(d));
  return a;
}

inline std::vector<Diagram> diagrams_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("sigmas must be an array of diagrams");
  std::vector<Diagram> out;
  for (const auto& d : j) out.push_back(diagram_from_json(d));
  return out;
}

inline json to_json(const RingContext& c) {
  switch (c.kind()) {
    case RingContext::Kind::Generic: return {{"kind", "generic"}, {"m", c.m()}, {"n", c.n()}};
    case RingContext::Kind::Symmetric: return {{"kind", "symmetric"}, {"n", c.n()}};
    case RingContext::Kind::SkewSymmetric: return {{"kind", "skew_symmetric"}, {"n", c.n()}};
  }
  return {};
}

inline RingContext context_from_json(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw DomainError("context kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "generic") return RingContext::generic(to_integer(field(j, "m"), "m"), to_integer(field(j, "n"), "n"));
  if (k == "symmetric") return RingContext::symmetric(to_integer(field(j, "n"), "n"));
  if (k == "skew_symmetric" || k == "skew") return RingContext::skew_symmetric(to_integer(field(j, "n"), "n"));
  throw DomainError("unknown context kind '" + k + "'");
}

inline json to_json(const InvariantIdealSpec& s) {
  json j;
  switch (s.flavor()) {
    case InvariantIdealSpec::Flavor::GenericGL:
      j = {{"flavor", "generic_gl"}, {"m", s.context().m()}, {"n", s.context().n()}};
      break;
    case InvariantIdealSpec::Flavor::SymmetricGL: j = {{"flavor", "symmetric_gl"}, {"n", s.context().n()}}; break;
    case InvariantIdealSpec::Flavor::SkewGL: j = {{"flavor", "skew_gl"}, {"n", s.context().n()}}; break;
  }
  j["sigmas"] = to_json(s.sigmas());
  return j;
}

inline InvariantIdealSpec flavor_from_json(const json& j) {
  const json& flavor = field(j, "flavor");
  if (!flavor.is_string()) throw DomainError("flavor must be a string");
  const auto f = flavor.get<std::string>();
  auto sigmas = diagrams_from_json(field(j, "sigmas"));
  if (f == "generic_gl")
    return InvariantIdealSpec::generic_gl(to_integer(field(j, "m"), "m"), to_integer(field(j, "n"), "n"),
                                          std::move(sigmas));
  if (f == "symmetric_gl") return InvariantIdealSpec::symmetric_gl(to_integer(field(j, "n"), "n"), std::move(sigmas));
  if (f == "skew_gl") return InvariantIdealSpec::skew_gl(to_integer(field(j, "n"), "n"), std::move(sigmas));
  throw DomainError("unknown flavor '" + f + "'");
}

inline json to_json(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(json(v));
  return a;
}

inline json to_json(const IdealPresentation& p) {
  return {{"context", to_json(p.context())}, {"antichain", to_json(p.antichain())}};
}

inline IdealPresentation presentation_from_json(const json& j) {
  const auto c = context_from_json(field(j, "context"));
  const json& a = field(j, "antichain");
  if (!a.is_array()) throw DomainError("antichain must be an array of exponent vectors");
  std::vector<IntVector> vs;
  for (const auto& v : a) vs.push_back(int_vector_from_json(v, "antichain vector"));
  if (vs.empty()) throw DomainError("antichain must be nonempty");
  return IdealPresentation(c, std::move(vs));
}

inline json to_json(const MonomialIdeal& I) {
  return {{"nvars", I.nvars()}, {"gens", to_json(I.gens())}};
}

inline MonomialIdeal monomial_from_json(const json& j) {
  const auto n = to_integer(field(j, "nvars"), "nvars");
  if (n < 1) throw DomainError("nvars must be positive");
  const json& g = field(j, "gens");
  if (!g.is_array()) throw DomainError("gens must be an array of exponent vectors");
  std::vector<IntVector> gens;
  for (const auto& v : g) gens.push_back(int_vector_from_json(v, "generator"));
  return MonomialIdeal(static_cast<std::size_t>(n), std::move(gens));
}

inline json to_json(const OracleReport& r) {
  return {{"tau", to_json(r.tau)}, {"stabilized", r.stabilized}, {"chain_lengths", json(r.chain_lengths)}};
}

}  // namespace detideals::io
