/*
   Copyright 2026 The fclt Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fclt/experiment_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fclt {
namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key))
      throw ConfigError("unknown key \"" + key + "\" in " + where);
}

double get_num(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number())
    throw ConfigError("\"" + key + "\" must be a number");
  return obj[key].get<double>();
}

std::int64_t get_int(const json& obj, const std::string& key,
                     std::int64_t fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer())
    throw ConfigError("\"" + key + "\" must be an integer");
  return obj[key].get<std::int64_t>();
}

DependenceSpec parse_dependence(const json& dep) {
  require_keys(dep, {"kind", "state_scales", "transition", "constant_value"},
               "model.dependence");
  const std::string kind = dep.value("kind", std::string("iid"));
  if (kind == "iid") return DependenceSpec::iid_spec();
  if (kind == "constant")
    return DependenceSpec::constant(get_num(dep, "constant_value", 0.0));
  if (kind != "markov_volatility")
    throw ConfigError("model.dependence.kind must be iid, markov_volatility "
                      "or constant");
  if (!dep.contains("state_scales") || !dep.contains("transition"))
    throw ConfigError("markov_volatility needs state_scales and transition");
  std::vector<double> scales = dep["state_scales"].get<std::vector<double>>();
  std::vector<std::vector<double>> trans =
      dep["transition"].get<std::vector<std::vector<double>>>();
  return DependenceSpec::markov(std::move(scales), std::move(trans));
}

CoefficientSeq parse_coefficients(const json& co) {
  require_keys(co, {"kind", "values", "c", "rho", "beta"}, "coefficients");
  const std::string kind = co.value("kind", std::string("finite"));
  if (kind == "finite") {
    if (!co.contains("values"))
      throw ConfigError("finite coefficients need \"values\"");
    return CoefficientSeq::finite(co["values"].get<std::vector<double>>());
  }
  if (kind == "geometric")
    return CoefficientSeq::geometric(get_num(co, "c", 1.0),
                                     get_num(co, "rho", 0.5));
  if (kind == "polynomial")
    return CoefficientSeq::polynomial(get_num(co, "c", 1.0),
                                      get_num(co, "beta", 2.0));
  throw ConfigError("coefficients.kind must be finite, geometric or "
                    "polynomial");
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  require_keys(root,
               {"experiment", "model", "coefficients", "n_values", "m_values",
                "replicas", "s_exponent", "tau", "delta", "delta_values", "T",
                "epsilon", "seed", "refine_eps", "output_dir", "r_n_exponent",
                "k_values", "se_multiplier", "bound_margin", "truncation_r",
                "truncation_tol"},
               "config");
  ExperimentConfig cfg;
  if (!root.contains("experiment") || !root["experiment"].is_string())
    throw ConfigError("config needs an \"experiment\" name");
  cfg.experiment = root["experiment"].get<std::string>();

  try {
    if (root.contains("model")) {
      const json& m = root["model"];
      require_keys(m, {"alpha", "balance_p", "scale", "dependence"}, "model");
      cfg.alpha = get_num(m, "alpha", cfg.alpha);
      cfg.balance_p = get_num(m, "balance_p", cfg.balance_p);
      cfg.scale = get_num(m, "scale", cfg.scale);
      if (m.contains("dependence"))
        cfg.dependence = parse_dependence(m["dependence"]);
    }
    if (root.contains("coefficients"))
      cfg.coefficients = parse_coefficients(root["coefficients"]);
    if (root.contains("n_values"))
      cfg.n_values = root["n_values"].get<std::vector<std::int64_t>>();
    if (root.contains("m_values"))
      cfg.m_values = root["m_values"].get<std::vector<std::int64_t>>();
    cfg.replicas = get_int(root, "replicas", cfg.replicas);
    cfg.s_exponent = get_num(root, "s_exponent", cfg.s_exponent);
    cfg.tau = get_num(root, "tau", cfg.tau);
    cfg.delta = get_num(root, "delta", cfg.delta);
    if (root.contains("delta_values"))
      cfg.delta_values = root["delta_values"].get<std::vector<double>>();
    cfg.T = get_num(root, "T", cfg.T);
    cfg.epsilon = get_num(root, "epsilon", cfg.epsilon);
    cfg.seed = static_cast<std::uint64_t>(get_int(root, "seed", 1));
    cfg.refine_eps = get_num(root, "refine_eps", cfg.refine_eps);
    if (root.contains("output_dir"))
      cfg.output_dir = root["output_dir"].get<std::string>();
    cfg.r_n_exponent = get_num(root, "r_n_exponent", cfg.r_n_exponent);
    if (root.contains("k_values"))
      cfg.k_values = root["k_values"].get<std::vector<std::int64_t>>();
    cfg.se_multiplier = get_num(root, "se_multiplier", cfg.se_multiplier);
    cfg.bound_margin = get_num(root, "bound_margin", cfg.bound_margin);
    cfg.truncation_r = get_num(root, "truncation_r", cfg.truncation_r);
    cfg.truncation_tol = get_num(root, "truncation_tol", cfg.truncation_tol);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }

  // Validate the numeric ranges the experiments rely on.
  if (cfg.replicas < 0) throw ConfigError("replicas must be >= 0");
  if (!(cfg.T > 0.0)) throw ConfigError("T must be > 0");
  if (!(cfg.delta > 0.0)) throw ConfigError("delta must be > 0");
  for (double d : cfg.delta_values)
    if (!(d > 0.0)) throw ConfigError("delta_values must be > 0");
  if (!(cfg.tau > 0.0) || cfg.tau > 1.0)
    throw ConfigError("tau must lie in (0, 1]");
  if (cfg.s_exponent < 1.0) throw ConfigError("s_exponent must be >= 1");
  if (!(cfg.epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
  if (!(cfg.refine_eps > 0.0)) throw ConfigError("refine_eps must be > 0");
  if (!(cfg.r_n_exponent > 0.0) || cfg.r_n_exponent >= 1.0)
    throw ConfigError("r_n_exponent must lie in (0, 1)");
  if (cfg.n_values.empty()) throw ConfigError("n_values must be nonempty");
  for (std::int64_t n : cfg.n_values)
    if (n < 1) throw ConfigError("n_values must be >= 1");
  for (std::int64_t m : cfg.m_values)
    if (m < 0) throw ConfigError("m_values must be >= 0");
  if (!(cfg.truncation_r > 0.0) || cfg.truncation_r > 1.0)
    throw ConfigError("truncation_r must lie in (0, 1]");
  if (!(cfg.truncation_tol > 0.0))
    throw ConfigError("truncation_tol must be > 0");
  cfg.model();  // throws on inconsistent model parameters
  return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text() const {
  json m = {{"alpha", alpha}, {"balance_p", balance_p}, {"scale", scale}};
  switch (dependence.kind) {
    case DependenceSpec::Kind::iid:
      m["dependence"] = {{"kind", "iid"}};
      break;
    case DependenceSpec::Kind::markov_volatility:
      m["dependence"] = {{"kind", "markov_volatility"},
                         {"state_scales", dependence.state_scales},
                         {"transition", dependence.transition}};
      break;
    case DependenceSpec::Kind::constant:
      m["dependence"] = {{"kind", "constant"},
                         {"constant_value", dependence.constant_value}};
      break;
  }
  json co;
  switch (coefficients.kind()) {
    case CoefficientSeq::Kind::finite_list:
      co = {{"kind", "finite"}, {"values", coefficients.values()}};
      break;
    case CoefficientSeq::Kind::geometric:
      co = {{"kind", "geometric"},
            {"c", coefficients.param_c()},
            {"rho", coefficients.param_rho()}};
      break;
    case CoefficientSeq::Kind::polynomial:
      co = {{"kind", "polynomial"},
            {"c", coefficients.param_c()},
            {"beta", coefficients.param_beta()}};
      break;
  }
  const json root = {{"experiment", experiment},
                     {"model", m},
                     {"coefficients", co},
                     {"n_values", n_values},
                     {"m_values", m_values},
                     {"replicas", replicas},
                     {"s_exponent", s_exponent},
                     {"tau", tau},
                     {"delta", delta},
                     {"delta_values", delta_values},
                     {"T", T},
                     {"epsilon", epsilon},
                     {"seed", seed},
                     {"refine_eps", refine_eps},
                     {"output_dir", output_dir},
                     {"r_n_exponent", r_n_exponent},
                     {"k_values", k_values},
                     {"se_multiplier", se_multiplier},
                     {"bound_margin", bound_margin},
                     {"truncation_r", truncation_r},
                     {"truncation_tol", truncation_tol}};
  return root.dump(2);
}

std::string ExperimentConfig::schema_text() {
  return R"(config schema (strict JSON; unknown keys are rejected)
  experiment      string, required; one of the registered experiment names
  model           {alpha (0,2], balance_p [0,1], scale > 0,
                   dependence: {kind: iid |
                                kind: markov_volatility, state_scales [..>0],
                                      transition [[row-stochastic]] |
                                kind: constant, constant_value}}
  coefficients    {kind: finite, values [odd length, a_-K..a_K] |
                   kind: geometric, c, rho (0,1) |
                   kind: polynomial, c, beta > 0}
  n_values        [int >= 1]      partial-sum lengths
  m_values        [int >= 0]      truncation levels (truncation_gap)
  replicas        int >= 0        Monte Carlo replicas per parameter point
  s_exponent      real >= 1       moment exponent (condition_abi)
  tau             real (0,1]      Kounias exponent (maximal_inequality)
  delta           real > 0        gap threshold / modulus scale
  delta_values    [real > 0]      optional grid overriding delta
  T               real > 0        path horizon
  epsilon         real > 0        anticluster exceedance level
  seed            integer         master seed; replica i uses a stream
                                  derived from (seed, i) by the counter RNG
  refine_eps      real > 0        M1 graph refinement
  output_dir      string          where run() writes CSV + summary.json
  r_n_exponent    real (0,1)      anticluster window r_n = floor(n^exp)
  k_values        [int != 0]      shift grid (shift diagnostics)
  se_multiplier   real            k in "value +- k*SE" trend checks
  bound_margin    real            slack factor on analytic bounds
  truncation_r    real (0,1]      exponent for choose_truncation
  truncation_tol  real > 0        tail-mass tolerance for choose_truncation)";
}

}  // namespace fclt
