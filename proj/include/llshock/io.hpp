#pragma once

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "llshock/majorization.hpp"
#include "llshock/shock_model.hpp"
#include "llshock/stoch_order.hpp"
#include "llshock/theorem_lab.hpp"

namespace llshock {

using Json = nlohmann::json;

namespace detail {

inline std::vector<double> real_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw std::invalid_argument(what + " must contain numbers only");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw std::invalid_argument(what + " entries must be finite");
    out.push_back(x);
  }
  return out;
}

}  // namespace detail

/// Parses a JSON array of finite numbers; throws std::invalid_argument on anything else.
inline std::vector<double> parse_real_vec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  std::vector<double> v = detail::real_array(j, "vector");
  if (v.empty()) throw std::invalid_argument("vector must be non-empty");
  return v;
}

/// Accepts `[[top...],[bottom...]]` or `{"top":[...],"bottom":[...]}`.
inline ParamMatrix parse_param_matrix(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_array() && j.size() == 2) {
    return ParamMatrix(detail::real_array(j[0], "top row"), detail::real_array(j[1], "bottom row"));
  }
  if (j.is_object() && j.size() == 2 && j.contains("top") && j.contains("bottom")) {
    return ParamMatrix(detail::real_array(j["top"], "top"), detail::real_array(j["bottom"], "bottom"));
  }
  throw std::invalid_argument("matrix must be [[...],[...]] or {\"top\":[...],\"bottom\":[...]}");
}

/// Square matrix given as an array of equally long rows.
inline SquareMatrix parse_square_matrix(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  std::vector<double> flat;
  for (const auto& row : j) {
    std::vector<double> r = detail::real_array(row, "matrix row");
    if (r.size() != n) throw std::invalid_argument("matrix must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return SquareMatrix(n, std::move(flat));
}

/// `{"sigma":[...], "lambda":[...], "p":[...]}` with exactly these keys and equal lengths.
inline SystemSpec system_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("system spec must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "sigma" && key != "lambda" && key != "p") {
      throw std::invalid_argument("unexpected key '" + key + "' in system spec");
    }
  }
  for (const char* key : {"sigma", "lambda", "p"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("system spec lacks key '") + key + "'");
  }
  return SystemSpec::from_arrays(detail::real_array(j["sigma"], "sigma"), detail::real_array(j["lambda"], "lambda"),
                                 detail::real_array(j["p"], "p"));
}

inline SystemSpec load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return system_from_json(j);
}

inline Json to_json(const SystemSpec& s) {
  Json sigma = Json::array(), lambda = Json::array(), p = Json::array();
  for (const auto& c : s) {
    sigma.push_back(c.ll.sigma());
    lambda.push_back(c.ll.lambda());
    p.push_back(c.p);
  }
  return {{"sigma", sigma}, {"lambda", lambda}, {"p", p}};
}

inline Json to_json(const MajorVerdict& v) {
  Json j{{"holds", v.holds}};
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  if (v.row) j["row"] = *v.row;
  return j;
}

inline Json to_json(const OrderVerdict& v) {
  auto opt = [](const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); };
  return {{"verdict", to_string(v.outcome)},
          {"max_positive_gap", v.max_positive_gap},
          {"max_negative_gap", v.max_negative_gap},
          {"positive_witness", opt(v.positive_witness)},
          {"negative_witness", opt(v.negative_witness)},
          {"tolerance", v.tolerance}};
}

inline Json to_json(const VerifyReport& r, std::size_t max_listed = 10) {
  Json viol = Json::array();
  for (std::size_t k = 0; k < r.violations.size() && k < max_listed; ++k) {
    const Violation& v = r.violations[k];
    viol.push_back({{"index", v.index},
                    {"n", v.instance.sys_x.size()},
                    {"cone", to_string(v.instance.cone)},
                    {"x", to_json(v.instance.sys_x)},
                    {"y", to_json(v.instance.sys_y)},
                    {"order", to_json(v.verdict)}});
  }
  return {{"theorem", to_string(r.id)},
          {"h", r.h_name},
          {"instances_run", r.instances_run},
          {"violation_count", r.violations.size()},
          {"violations", viol},
          {"pass", r.pass}};
}

/// `x,diff` CSV with round-trippable doubles.
inline void write_diff_csv(std::ostream& out, const std::vector<DiffPoint>& table) {
  out << "x,diff\n";
  out << std::setprecision(17);
  for (const auto& pt : table) out << pt.x << ',' << pt.diff << '\n';
}

inline void write_diff_csv(const std::string& path, const std::vector<DiffPoint>& table) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  write_diff_csv(out, table);
  out.flush();
  if (!out) throw std::invalid_argument("write to '" + path + "' failed");
}

}  // namespace llshock
