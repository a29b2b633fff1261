// Copyright 2026 The csmetric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csmetric/serialize.hpp"

#include <cmath>

#include "csmetric/error.hpp"

namespace csm {

namespace {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x == 0.0 ? 0.0 : x;  // no "-0.0" in reports
}

Json numbers(const std::vector<double>& xs) {
  Json arr = Json::array();
  for (double x : xs) arr.push_back(number(x));
  return arr;
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) {
    throw ConfigError(where + ": missing field '" + name + "'");
  }
  return *it;
}

double number_field(const Json& j, const char* name, const std::string& where) {
  const Json& v = field(j, name, where);
  if (!v.is_number()) {
    throw ConfigError(where + ": field '" + name + "' must be a number");
  }
  return v.get<double>();
}

std::string string_field(const Json& j, const char* name,
                         const std::string& where) {
  const Json& v = field(j, name, where);
  if (!v.is_string()) {
    throw ConfigError(where + ": field '" + name + "' must be a string");
  }
  return v.get<std::string>();
}

std::vector<double> optional_numbers(const Json& j, const char* name,
                                     const std::string& where) {
  std::vector<double> out;
  auto it = j.find(name);
  if (it == j.end()) return out;
  if (!it->is_array()) {
    throw ConfigError(where + ": field '" + name + "' must be an array");
  }
  for (const auto& x : *it) {
    if (!x.is_number()) {
      throw ConfigError(where + ": field '" + name +
                        "' must contain only numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

Json to_json(const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["passed"] = v.passed;
  j["checked"] = v.checked;
  j["witness"] = v.witness ? numbers(*v.witness) : Json(nullptr);
  j["worst_margin"] = number(v.worst_margin);
  j["seed"] = v.seed;
  return j;
}

Json to_json(const SolveResult& r) {
  Json j;
  j["fixed_point"] = number(r.fixed_point);
  j["iterations"] = r.iterations;
  j["residual"] = number(r.residual);
  j["converged"] = r.converged;
  Json orbit;
  orbit["iterates"] = numbers(r.orbit.iterates);
  orbit["step_distances"] = numbers(r.orbit.step_distances);
  orbit["ratios"] = numbers(r.orbit.ratios);
  j["orbit"] = std::move(orbit);
  return j;
}

Json to_json(const ContractionEstimate& e) {
  Json j;
  j["sup_ratio"] = number(e.sup_ratio);
  j["argmax_tuple"] = numbers({e.argmax_tuple.begin(), e.argmax_tuple.end()});
  j["samples"] = e.samples;
  return j;
}

Json to_json(const SeriesReport& s) {
  Json j;
  j["verdict"] = to_json(s.verdict);
  Json points = Json::array();
  for (const auto& p : s.points) {
    points.push_back({{"gap", p.gap}, {"n", p.n}, {"value", number(p.value)}});
  }
  j["points"] = std::move(points);
  Json skipped = Json::array();
  for (const auto& p : s.skipped) {
    skipped.push_back({{"gap", p.gap}, {"n", p.n}});
  }
  j["skipped_underflow"] = std::move(skipped);
  return j;
}

Json to_json(const poly::VerificationReport& r) {
  Json j;
  j["m"] = r.m;
  j["contraction_factor"] = number(r.contraction_factor);
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses) {
    Json e;
    e["name"] = h.name;
    e["verdict"] = to_json(h.verdict);
    hyps.push_back(std::move(e));
  }
  j["hypotheses"] = std::move(hyps);
  j["root"] = number(r.root);
  j["oracle_root"] = number(r.oracle_root);
  j["agreement"] = number(r.agreement);
  j["series"] = to_json(r.series);
  j["solve"] = to_json(r.solve);
  return j;
}

Json to_json(const PointDomain& d) {
  Json j;
  j["kind"] = to_string(d.kind());
  switch (d.kind()) {
    case DomainKind::real_interval:
      j["lo"] = d.lo();
      j["hi"] = d.hi();
      break;
    case DomainKind::naturals_up_to:
      j["max"] = d.max();
      break;
    case DomainKind::finite_real_set:
      j["elements"] = numbers(d.elements());
      break;
  }
  return j;
}

PointDomain domain_from_json(const Json& j) {
  const std::string where = "domain";
  const auto kind = domain_kind_from_string(string_field(j, "kind", where));
  switch (kind) {
    case DomainKind::real_interval:
      return PointDomain::interval(number_field(j, "lo", where),
                                   number_field(j, "hi", where));
    case DomainKind::naturals_up_to: {
      const Json& v = field(j, "max", where);
      if (!v.is_number_unsigned()) {
        throw ConfigError("domain: field 'max' must be a natural number");
      }
      return PointDomain::naturals(v.get<std::uint64_t>());
    }
    case DomainKind::finite_real_set:
      if (!j.contains("elements")) {
        throw ConfigError("domain: missing field 'elements'");
      }
      return PointDomain::finite_set(optional_numbers(j, "elements", where));
  }
  throw ConfigError("domain: unsupported kind");
}

Json to_json(const AlphaFunction& a) {
  Json j;
  j["id"] = a.id();
  j["params"] = numbers(a.params());
  if (a.kind() == AlphaFunction::Kind::expression) {
    j["expr"] = a.expression_source();
  }
  return j;
}

AlphaFunction alpha_from_json(const Json& j) {
  const std::string where = "alpha";
  const std::string id = string_field(j, "id", where);
  const auto params = optional_numbers(j, "params", where);
  std::string expr;
  if (j.contains("expr")) expr = string_field(j, "expr", where);
  return AlphaFunction::builtin(id, params, expr);
}

Json to_json(const ComposedSpace& s) {
  Json j;
  j["metric"] = s.metric.id;
  j["params"] = numbers(s.params);
  j["domain"] = to_json(s.domain);
  j["alpha"] = to_json(s.alpha);
  j["symmetric"] = s.symmetric_claim;
  return j;
}

ComposedSpace space_from_json(const Json& j) {
  const std::string where = "space";
  const std::string metric = string_field(j, "metric", where);
  const auto params = optional_numbers(j, "params", where);
  ComposedSpace space = make_builtin_space(metric, params);
  if (j.contains("domain")) space.domain = domain_from_json(j.at("domain"));
  if (j.contains("alpha")) space.alpha = alpha_from_json(j.at("alpha"));
  if (j.contains("symmetric")) {
    const Json& v = j.at("symmetric");
    if (!v.is_boolean()) {
      throw ConfigError("space: field 'symmetric' must be a boolean");
    }
    space.symmetric_claim = v.get<bool>();
  }
  return space;
}

Json to_json(const SelfMap& m) {
  Json j;
  j["id"] = m.id;
  j["params"] = numbers(m.params);
  if (m.id == "expr") j["expr"] = m.expression;
  return j;
}

SelfMap map_from_json(const Json& j, const PointDomain& domain) {
  const std::string where = "map";
  const std::string id = string_field(j, "id", where);
  const auto params = optional_numbers(j, "params", where);
  if (id == "poly") {
    if (params.size() != 1 || params[0] < 0.0 ||
        std::floor(params[0]) != params[0]) {
      throw ConfigError("map: 'poly' takes one natural parameter m");
    }
    SelfMap m = poly::poly_map(static_cast<unsigned>(params[0])).map;
    m.domain = domain;
    return m;
  }
  std::string expr;
  if (j.contains("expr")) expr = string_field(j, "expr", where);
  return make_builtin_map(id, params, domain, expr);
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(what + ": malformed JSON (" + e.what() + ")");
  }
}

}  // namespace csm
