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

#include "csmetric/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "csmetric/axiom_audit.hpp"
#include "csmetric/contraction.hpp"
#include "csmetric/error.hpp"
#include "csmetric/fixed_point.hpp"
#include "csmetric/poly.hpp"

namespace csm::cli {

namespace {

struct Common {
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  double tol = 1e-12;
  std::string strategy = "grid_plus_random";
  std::string output = "text";
  std::string out_path;
};

struct SpaceArgs {
  std::string builtin;
  std::vector<double> params;
  std::string alpha;
  std::vector<double> alpha_params;
  std::string alpha_expr;
  std::string space_json;
  std::string space_file;
};

// A usage problem detected after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

void add_common(CLI::App* cmd, Common& c, bool sampling) {
  if (sampling) {
    cmd->add_option("--seed", c.seed, "RNG seed (CSMETRIC_SEED overrides)");
    cmd->add_option("--samples", c.samples, "Sampled tuples per check");
    cmd->add_option("--strategy", c.strategy,
                    "uniform_random | stratified_grid | grid_plus_random");
  }
  cmd->add_option("--output", c.output, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out_path, "Write the report to this file");
}

void add_space(CLI::App* cmd, SpaceArgs& s) {
  cmd->add_option("--builtin", s.builtin,
                  "squared_diff | discrete_nat | abs_sum | app_metric");
  cmd->add_option("--params", s.params, "Built-in space parameters")
      ->delimiter(',');
  cmd->add_option("--alpha", s.alpha, "Override the composing function id");
  cmd->add_option("--alpha-params", s.alpha_params, "Parameters for --alpha")
      ->delimiter(',');
  cmd->add_option("--alpha-expr", s.alpha_expr,
                  "Expression for --alpha expr, e.g. '2*sqrt(t)'");
  cmd->add_option("--space", s.space_json, "Inline space JSON document");
  cmd->add_option("--space-file", s.space_file, "Space JSON document file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// The space document, if one was given inline or by file.
std::optional<Json> space_document(const SpaceArgs& s) {
  if (!s.space_json.empty() && !s.space_file.empty()) {
    throw UsageError("--space and --space-file are mutually exclusive");
  }
  if (!s.space_json.empty()) return parse_json(s.space_json, "--space");
  if (!s.space_file.empty()) {
    return parse_json(read_file(s.space_file), s.space_file);
  }
  return std::nullopt;
}

ComposedSpace resolve_space(const SpaceArgs& s, const std::optional<Json>& doc) {
  ComposedSpace space = [&] {
    if (doc) {
      if (!s.builtin.empty()) {
        throw UsageError("--builtin cannot be combined with a space document");
      }
      const Json& j = doc->contains("space") ? doc->at("space") : *doc;
      return space_from_json(j);
    }
    if (s.builtin.empty()) {
      throw UsageError("one of --builtin, --space or --space-file is required");
    }
    return make_builtin_space(s.builtin, s.params);
  }();
  if (!s.alpha.empty()) {
    space = with_alpha(std::move(space),
                       AlphaFunction::builtin(s.alpha, s.alpha_params, s.alpha_expr));
  }
  return space;
}

// "poly:3", "scale:0.5", "constant:0.2", "identity", "reflect", "expr:x/2".
Json map_spec_to_json(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string id = spec.substr(0, colon);
  Json j;
  j["id"] = id;
  j["params"] = Json::array();
  if (colon == std::string::npos) return j;
  const std::string rest = spec.substr(colon + 1);
  if (id == "expr") {
    j["expr"] = rest;
    return j;
  }
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || p != item.data() + item.size()) {
      throw UsageError("--map: bad parameter '" + item + "'");
    }
    j["params"].push_back(v);
  }
  return j;
}

SelfMap resolve_map(const std::string& spec, const std::optional<Json>& doc,
                    const ComposedSpace& space) {
  if (!spec.empty()) return map_from_json(map_spec_to_json(spec), space.domain);
  if (doc && doc->contains("map")) return map_from_json(doc->at("map"), space.domain);
  throw UsageError("a map is required (--map or a 'map' entry in the space document)");
}

MfFunction resolve_mf(const std::string& spec) {
  const Json j = map_spec_to_json(spec);
  const std::string id = j["id"];
  const auto& p = j["params"];
  if (p.size() != 1) throw UsageError("--mf: expected <id>:<parameter>");
  const double x = p[0].get<double>();
  if (id == "banach") return mf::banach(x);
  if (id == "kannan") return mf::kannan(x);
  if (id == "bianchini") return mf::bianchini(x);
  throw UsageError("--mf: unknown control function '" + id + "'");
}

SampleConfig sample_config(const Common& c) {
  SampleConfig cfg;
  cfg.seed = c.seed;
  cfg.count = c.samples;
  cfg.strategy = sample_strategy_from_string(c.strategy);
  return cfg;
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Json sampling_json(const SampleConfig& cfg) {
  Json j;
  j["seed"] = cfg.seed;
  j["count"] = cfg.count;
  j["strategy"] = to_string(cfg.strategy);
  return j;
}

Json named(const std::string& name, const Verdict& v) {
  Json j;
  j["name"] = name;
  j["verdict"] = to_json(v);
  return j;
}

void render(const Json& j, int indent, std::ostream& os);

void render_scalar(const Json& j, std::ostream& os) {
  if (j.is_string()) {
    os << j.get<std::string>();
  } else {
    os << j.dump();
  }
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j) {
    if (e.is_object() || e.is_array()) return false;
  }
  return true;
}

void render(const Json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      os << pad << key << ":";
      if (is_flat(value)) {
        os << " ";
        if (value.is_array()) {
          os << "[";
          bool first = true;
          for (const auto& e : value) {
            os << (first ? "" : ", ");
            render_scalar(e, os);
            first = false;
          }
          os << "]";
        } else {
          render_scalar(value, os);
        }
        os << "\n";
      } else {
        os << "\n";
        render(value, indent + 1, os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        os << pad << "-\n";
        render(e, indent + 1, os);
      } else {
        os << pad << "- ";
        render_scalar(e, os);
        os << "\n";
      }
    }
  } else {
    os << pad;
    render_scalar(j, os);
    os << "\n";
  }
}

void emit(const Json& report, const Common& c, std::ostream& out) {
  const std::string text =
      c.output == "json" ? report.dump(2) + "\n" : render_text(report);
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + c.out_path + "'");
  f << text;
}

int cmd_solve_poly(unsigned m, double x0, const Common& c, std::ostream& out) {
  if (m < 3) throw UsageError("solve-poly: --m must be >= 3 (the equation family is defined for m >= 3)");
  if (!(x0 >= 0.0 && x0 <= 1.0)) throw UsageError("solve-poly: --x0 must lie in [0, 1]");
  const auto result = poly::solve_poly(m, x0, c.tol);
  const double oracle = poly::bisection_oracle(m, c.tol);
  Json j = header("solve-poly");
  j["m"] = m;
  j["x0"] = x0;
  j["tol"] = c.tol;
  j["root"] = result.fixed_point;
  j["oracle_root"] = oracle;
  j["agreement"] = std::abs(result.fixed_point - oracle);
  j["converged"] = result.converged;
  j["result"] = to_json(result);
  emit(j, c, out);
  return result.converged ? kOk : kFailed;
}

int cmd_verify_space(const SpaceArgs& s, const Common& c, std::ostream& out) {
  const auto space = resolve_space(s, space_document(s));
  const auto cfg = sample_config(c);
  Json j = header("verify-space");
  j["space"] = to_json(space);
  j["sampling"] = sampling_json(cfg);
  std::vector<std::pair<std::string, Verdict>> hyps;
  hyps.emplace_back("identity_axiom", check_identity_axiom(space, cfg));
  hyps.emplace_back("composed_triangle", check_composed_triangle(space, cfg));
  if (space.symmetric_claim) {
    hyps.emplace_back("symmetry", check_symmetry(space, cfg));
  }
  bool passed = true;
  Json arr = Json::array();
  for (const auto& [name, v] : hyps) {
    passed = passed && v.passed;
    arr.push_back(named(name, v));
  }
  j["hypotheses"] = std::move(arr);
  Json info = Json::array();
  info.push_back(named("classic_triangle", check_classic_triangle(space, cfg)));
  j["informational"] = std::move(info);
  j["passed"] = passed;
  emit(j, c, out);
  return passed ? kOk : kFailed;
}

int cmd_check_contraction(const SpaceArgs& s, const std::string& map_spec,
                          std::optional<double> r, const std::string& mf_spec,
                          const Common& c, std::ostream& out) {
  const auto doc = space_document(s);
  const auto space = resolve_space(s, doc);
  const auto map = resolve_map(map_spec, doc, space);
  const auto cfg = sample_config(c);
  Json j = header("check-contraction");
  j["space"] = to_json(space);
  j["map"] = to_json(map);
  j["sampling"] = sampling_json(cfg);
  const auto est = estimate_contraction_factor(space, map, cfg);
  j["estimate"] = to_json(est);
  bool passed = true;
  Json arr = Json::array();
  if (r) {
    const auto v = check_banach(space, map, *r, cfg);
    passed = passed && v.passed;
    arr.push_back(named("banach_contraction", v));
  }
  if (!mf_spec.empty()) {
    const auto m = resolve_mf(mf_spec);
    const auto v = check_mf_contraction(space, map, m, cfg);
    passed = passed && v.passed;
    arr.push_back(named("mf_contraction:" + m.id, v));
  }
  if (!r && mf_spec.empty()) passed = est.sup_ratio < 1.0;
  j["hypotheses"] = std::move(arr);
  j["passed"] = passed;
  emit(j, c, out);
  return passed ? kOk : kFailed;
}

int cmd_iterate(const SpaceArgs& s, const std::string& map_spec, double x0,
                std::size_t max_iter, const Common& c, std::ostream& out) {
  const auto doc = space_document(s);
  const auto space = resolve_space(s, doc);
  const auto map = resolve_map(map_spec, doc, space);
  if (!space.domain.contains(x0)) {
    throw UsageError("iterate: --x0 is outside " + space.domain.describe());
  }
  const auto result = picard(space, map, x0, c.tol, max_iter);
  Json j = header("iterate");
  j["space"] = to_json(space);
  j["map"] = to_json(map);
  j["x0"] = x0;
  j["tol"] = c.tol;
  j["max_iter"] = max_iter;
  j["result"] = to_json(result);
  emit(j, c, out);
  return result.converged ? kOk : kFailed;
}

int cmd_verify_thm41(unsigned m, const Common& c, std::ostream& out) {
  if (m < 3) throw UsageError("verify-thm41: --m must be >= 3 (the equation family is defined for m >= 3)");
  poly::VerifyOptions opts;
  opts.seed = c.seed;
  opts.samples = c.samples;
  opts.tol = c.tol;
  const auto report = poly::verify_polynomial_fixed_point(m, opts);
  Json j = header("verify-thm41");
  const Json body = to_json(report);
  for (const auto& [k, v] : body.items()) j[k] = v;
  j["sampling"] = sampling_json(sample_config(c));
  j["passed"] = report.all_passed();
  emit(j, c, out);
  return report.all_passed() ? kOk : kFailed;
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* s = std::getenv("CSMETRIC_SEED")) env.seed_override = s;
  return env;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Environment& env) {
  CLI::App app{"Composed S-metric audits, fixed point solver and the "
               "polynomial application"};
  app.name(args.empty() ? "csmetric" : args.front());
  app.require_subcommand(1);

  Common common;
  SpaceArgs space;
  unsigned m = 3;
  double x0 = 0.5;
  std::string map_spec;
  std::optional<double> r;
  std::string mf_spec;
  std::size_t max_iter = kDefaultMaxIter;

  auto* solve = app.add_subcommand("solve-poly", "Solve the polynomial fixed point problem");
  solve->add_option("--m", m, "Degree parameter (>= 3)");
  solve->add_option("--x0", x0, "Start point in [0, 1]");
  solve->add_option("--tol", common.tol, "Step-distance tolerance");
  add_common(solve, common, false);

  auto* verify = app.add_subcommand("verify-space", "Audit the space axioms");
  add_space(verify, space);
  add_common(verify, common, true);

  auto* contraction = app.add_subcommand("check-contraction",
                                         "Estimate and check contraction conditions");
  add_space(contraction, space);
  contraction->add_option("--map", map_spec, "Self-map, e.g. poly:3, scale:0.5, expr:x/2");
  contraction->add_option("--r", r, "Check the Banach condition with this factor");
  contraction->add_option("--mf", mf_spec, "Control function: banach:r, kannan:a, bianchini:a");
  add_common(contraction, common, true);

  auto* iterate = app.add_subcommand("iterate", "Run Picard iteration");
  add_space(iterate, space);
  iterate->add_option("--map", map_spec, "Self-map, e.g. poly:3, scale:0.5, expr:x/2");
  iterate->add_option("--x0", x0, "Start point");
  iterate->add_option("--tol", common.tol, "Step-distance tolerance");
  iterate->add_option("--max-iter", max_iter, "Iteration limit");
  add_common(iterate, common, false);

  auto* thm = app.add_subcommand("verify-thm41",
                                 "Audit every hypothesis for the polynomial problem");
  thm->add_option("--m", m, "Degree parameter (>= 3)");
  thm->add_option("--tol", common.tol, "Solver tolerance");
  add_common(thm, common, true);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (env.seed_override) {
      const std::string& s = *env.seed_override;
      std::uint64_t seed = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
      if (ec != std::errc() || p != s.data() + s.size()) {
        throw UsageError("CSMETRIC_SEED is not an unsigned integer: '" + s + "'");
      }
      common.seed = seed;
    }
    if (*solve) return cmd_solve_poly(m, x0, common, out);
    if (*verify) return cmd_verify_space(space, common, out);
    if (*contraction) return cmd_check_contraction(space, map_spec, r, mf_spec, common, out);
    if (*iterate) return cmd_iterate(space, map_spec, x0, max_iter, common, out);
    if (*thm) return cmd_verify_thm41(m, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace csm::cli
