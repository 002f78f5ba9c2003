#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "opflow/cohomology.hpp"
#include "opflow/deformation.hpp"
#include "opflow/dynamics.hpp"

namespace opflow::io {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become JSON integers; everything else a
/// "p/q" (or "p") string.
inline Json scalar_to_json(const Scalar& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_num().get_si()));
  return Json(format_scalar(x));
}

inline Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer() && !j.is_number_unsigned()) return Scalar(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (j.is_number_unsigned()) return Scalar(mpz_class(std::to_string(j.get<std::uint64_t>())));
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw ParseError("rational coefficient must be an integer or a \"p/q\" string, got " + j.dump());
}

namespace detail {
inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::int64_t integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}
}  // namespace detail

inline Json operation_to_json(const Operation& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(scalar_to_json(c));
  return Json{{"dim", f.dim()}, {"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

inline Operation operation_from_json(const Json& j) {
  const auto dim = detail::integer_field(j, "dim");
  const auto degree = detail::integer_field(j, "degree");
  if (dim < 1) throw DomainError("dim must be positive");
  if (degree < 0 || degree > 64) throw DomainError("degree out of range");
  const Json& cj = detail::field(j, "coeffs");
  if (!cj.is_array()) throw ParseError("field 'coeffs' must be an array");
  std::vector<Scalar> coeffs;
  coeffs.reserve(cj.size());
  for (const auto& c : cj) coeffs.push_back(scalar_from_json(c));
  return Operation(static_cast<std::size_t>(dim), static_cast<int>(degree), std::move(coeffs));
}

inline Json algebra_to_json(const AlgebraSpec& a) {
  return Json{{"dim", a.dim}, {"name", a.name}, {"mu", operation_to_json(a.mu)}};
}

inline AlgebraSpec algebra_from_json(const Json& j) {
  const auto dim = detail::integer_field(j, "dim");
  Operation mu = operation_from_json(detail::field(j, "mu"));
  if (mu.dim() != static_cast<std::size_t>(dim)) throw DimensionError("algebra dim does not match μ");
  std::string name;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw ParseError("field 'name' must be a string");
    name = it->get<std::string>();
  }
  return AlgebraSpec(std::move(mu), std::move(name));
}

inline Json cohomology_report_to_json(const CohomologyReport& r) {
  Json dims = Json::array(), ranks = Json::array();
  for (const auto& d : r.dims) dims.push_back(Json::array({d.n, d.dim}));
  for (const auto& k : r.ranks) ranks.push_back(Json::array({k.n, k.rank, k.nullity}));
  Json out{{"algebra", r.algebra.name}, {"dims", std::move(dims)}, {"ranks", std::move(ranks)}};
  if (r.representatives) {
    Json reps = Json::array();
    for (const auto& level : *r.representatives) {
      Json ops = Json::array();
      for (const auto& op : level) ops.push_back(operation_to_json(op));
      reps.push_back(std::move(ops));
    }
    out["representatives"] = std::move(reps);
  }
  return out;
}

/// {"operation": ..., "max_abs_coeff": ...}
inline Json residual_to_json(const Operation& op) {
  return Json{{"operation", operation_to_json(op)}, {"max_abs_coeff", scalar_to_json(max_abs_coeff(op))}};
}

inline Json deformation_report_to_json(const DeformationReport& r) {
  Json out{{"A", residual_to_json(r.A)},
           {"A0", residual_to_json(r.A0)},
           {"Omega", residual_to_json(r.Omega)},
           {"curvature", residual_to_json(r.curvature)},
           {"mc_residual", residual_to_json(r.mc_residual)},
           {"bianchi_residual", residual_to_json(r.bianchi_residual)}};
  if (r.gauge) {
    const auto& g = *r.gauge;
    out["dual_mode"] = to_string(g.dual_mode);
    out["dual"] = residual_to_json(g.dual);
    out["current"] = residual_to_json(g.current);
    out["gauge_residual_1"] = residual_to_json(g.residual1);
    out["gauge_residual_2"] = residual_to_json(g.residual2);
    out["conservation_residual"] = residual_to_json(g.conservation_residual);
  } else {
    out["dual_mode"] = nullptr;
  }
  return out;
}

inline Json trajectory_to_json(const Trajectory& t) {
  return Json{{"dim", t.dim}, {"degree", t.degree}, {"times", t.times}, {"states", t.states}};
}

inline Trajectory trajectory_from_json(const Json& j) {
  Trajectory t;
  t.dim = static_cast<std::size_t>(detail::integer_field(j, "dim"));
  t.degree = static_cast<int>(detail::integer_field(j, "degree"));
  try {
    t.times = detail::field(j, "times").get<std::vector<double>>();
    t.states = detail::field(j, "states").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed trajectory: ") + e.what());
  }
  return t;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace opflow::io
