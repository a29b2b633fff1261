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

#ifndef CSMETRIC_SERIALIZE_HPP_
#define CSMETRIC_SERIALIZE_HPP_

#include <string>

#include "json.hpp"

#include "csmetric/axiom_audit.hpp"
#include "csmetric/contraction.hpp"
#include "csmetric/fixed_point.hpp"
#include "csmetric/poly.hpp"
#include "csmetric/space.hpp"
#include "csmetric/verdict.hpp"

namespace csm {

// Insertion-ordered so that reports have a fixed field order.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "csmetric/1";

// {"check", "passed", "checked", "witness", "worst_margin", "seed"}.
// Non-finite numbers are written as null.
Json to_json(const Verdict& v);

// {"fixed_point", "iterations", "residual", "converged",
//  "orbit": {"iterates", "step_distances", "ratios"}}
Json to_json(const SolveResult& r);

Json to_json(const ContractionEstimate& e);
Json to_json(const SeriesReport& s);

// {"m", "contraction_factor", "hypotheses": [{"name", "verdict"}], "root",
//  "oracle_root", "agreement", "series", "solve"}
Json to_json(const poly::VerificationReport& r);

Json to_json(const PointDomain& d);
PointDomain domain_from_json(const Json& j);

Json to_json(const AlphaFunction& a);
AlphaFunction alpha_from_json(const Json& j);

// Space documents:
//   {"metric": "<builtin name>", "params": [...],
//    "domain": {"kind": "real_interval", "lo": 0, "hi": 1},
//    "alpha": {"id": "two_sqrt", "params": [], "expr": "..."},
//    "symmetric": true}
// Only "metric" is required. "params" feed make_builtin_space; "domain",
// "alpha" and "symmetric" override the built-in defaults. Errors are
// ConfigErrors naming the offending field.
Json to_json(const ComposedSpace& s);
ComposedSpace space_from_json(const Json& j);

// Map documents: {"id": "poly" | "identity" | "constant" | "scale" |
// "reflect" | "expr", "params": [...], "expr": "..."}. The map is placed on
// `domain`.
Json to_json(const SelfMap& m);
SelfMap map_from_json(const Json& j, const PointDomain& domain);

// Parses text as JSON, wrapping parse failures in ConfigError.
Json parse_json(const std::string& text, const std::string& what);

}  // namespace csm

#endif  // CSMETRIC_SERIALIZE_HPP_
