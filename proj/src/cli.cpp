// Copyright 2026 The symclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "symclone/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "symclone/channel.hpp"
#include "symclone/cloner.hpp"
#include "symclone/merit.hpp"
#include "symclone/symmetric.hpp"

namespace symclone {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct RunConfig {
  std::string command;
  Range d{2, 2};
  Range n{1, 1};
  Range m{2, 2};
  double tol = 1e-9;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::size_t max_dim = kDefaultMaxDim;
  std::string format = "json";
  std::string out;
  std::string state;
  std::string channel = "optimal";
  std::size_t max_iters = 20000;
  bool inject_fault = false;
  bool timing = false;
};

std::vector<CloneSpec> specs_of(const RunConfig& cfg) {
  std::vector<CloneSpec> out;
  for (std::size_t d = cfg.d.lo; d <= cfg.d.hi; ++d)
    for (std::size_t n = cfg.n.lo; n <= cfg.n.hi; ++n)
      for (std::size_t m = std::max(cfg.m.lo, n); m <= cfg.m.hi; ++m) out.emplace_back(d, n, m);
  if (out.empty()) throw UsageError("no valid (d, N, M) with 1 <= N <= M in the requested ranges");
  return out;
}

double finite(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("non-finite value in report");
  return v;
}

json to_json(Complex z) { return json::array({finite(z.real()), finite(z.imag())}); }

json to_json(std::span<const Complex> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

json to_json(const ComplexMatrix& a) {
  json out = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json spec_json(const CloneSpec& s) { return {{"d", s.d()}, {"N", s.n()}, {"M", s.m()}}; }

std::string spec_label(const CloneSpec& s) {
  return "d=" + std::to_string(s.d()) + ",N=" + std::to_string(s.n()) +
         ",M=" + std::to_string(s.m());
}

json config_json(const RunConfig& cfg) {
  json c = {{"command", cfg.command},
            {"d", {cfg.d.lo, cfg.d.hi}},
            {"n", {cfg.n.lo, cfg.n.hi}},
            {"m", {cfg.m.lo, cfg.m.hi}},
            {"tol", cfg.tol},
            {"samples", cfg.samples},
            {"seed", cfg.seed},
            {"max_dim", cfg.max_dim},
            {"format", cfg.format}};
  if (cfg.command == "verify") c["inject_fault"] = cfg.inject_fault;
  if (cfg.command == "clone") c["state"] = cfg.state;
  if (cfg.command == "optimize") c["max_iters"] = cfg.max_iters;
  if (cfg.command == "twirl") c["channel"] = cfg.channel;
  return c;
}

struct Report {
  json results = json::array();
  json failures = json::array();
};

// ---------------------------------------------------------------- table

void cmd_table(const RunConfig& cfg, Report& report) {
  for (const auto& spec : specs_of(cfg)) {
    const auto an = analytics(spec);
    json row = spec_json(spec);
    for (const auto& [key, value] : {std::pair{"global_fidelity", an.global_fidelity},
                                     std::pair{"black_cow", an.black_cow},
                                     std::pair{"single_clone_fidelity", an.single_clone_fidelity}}) {
      row[key] = to_string(value);
      row[std::string(key) + "_decimal"] = finite(to_double(value));
    }
    report.results.push_back(std::move(row));
  }
}

// ---------------------------------------------------------------- verify

struct CheckList {
  json items = json::array();
  bool failed = false;

  void record(const std::string& name, const char* group, double measured, double threshold,
              std::optional<bool> pass = std::nullopt) {
    const bool ok = pass.value_or(measured <= threshold);
    items.push_back({{"name", name},
                     {"group", group},
                     {"measured", finite(measured)},
                     {"threshold", threshold},
                     {"status", ok ? "pass" : "fail"}});
    failed = failed || !ok;
  }

  void skip(const std::string& name, const char* group, const std::string& reason) {
    items.push_back({{"name", name}, {"group", group}, {"status", "skipped"}, {"reason", reason}});
  }

  // Runs `body`; a dimension cap hit inside it marks the check skipped.
  void run(const std::string& name, const char* group, const std::function<void()>& body) {
    try {
      body();
    } catch (const CapExceeded& e) {
      skip(name, group, e.what());
    }
  }
};

constexpr const char* kSym = "symmetric";
constexpr const char* kFull = "full_space";
constexpr std::size_t kMixedInputProbes = 20;

void verify_spec(const RunConfig& cfg, const CloneSpec& spec, Seed seed, Report& report) {
  const std::size_t d = spec.d();
  const auto an = analytics(spec);
  const double closed = to_double(an.global_fidelity);
  const double gamma = to_double(an.black_cow);
  const double tol = cfg.tol;
  CheckList checks;

  std::optional<QuantumChannel> cloner;
  std::string cloner_error;
  try {
    auto kraus = optimal_cloner(spec, cfg.max_dim).kraus();
    if (cfg.inject_fault) kraus.front() *= 1.01;
    cloner.emplace(std::move(kraus));
  } catch (const CapExceeded& e) {
    cloner_error = e.what();
  }

  const char* sym_checks[] = {"cptp",           "covariance",           "fidelity_closed_form",
                              "black_cow",      "mixed_input_law",      "single_clone_embedding",
                              "concatenation"};
  if (!cloner) {
    for (const char* name : sym_checks) checks.skip(name, kSym, cloner_error);
  } else {
    const QuantumChannel& t = *cloner;
    checks.run("cptp", kSym, [&] {
      const auto rep = verify_cptp(t, tol);
      const double measured = std::max({0.0, -rep.min_choi_eigenvalue, rep.tp_defect});
      checks.record("cptp", kSym, measured, tol, rep.pass);
    });
    checks.run("covariance", kSym, [&] {
      double worst = 0.0;
      for (std::size_t i = 0; i < cfg.samples; ++i)
        worst = std::max(worst, covariance_defect(t, spec, haar_unitary(d, substream(substream(seed, 1), i)),
                                                  cfg.max_dim));
      checks.record("covariance", kSym, worst, tol);
    });
    checks.run("fidelity_closed_form", kSym, [&] {
      double worst = 0.0;
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        const auto phi = random_pure_state(d, substream(substream(seed, 2), i));
        worst = std::max(worst, std::abs(fidelity_at(t, spec, phi) - closed));
      }
      checks.record("fidelity_closed_form", kSym, worst, tol);
    });
    checks.run("black_cow", kSym, [&] {
      const auto est = black_cow_estimate(t, spec, cfg.samples, substream(seed, 3), cfg.max_dim);
      checks.record("black_cow", kSym, std::max(std::abs(est.mean - gamma), est.spread), tol);
    });
    checks.run("mixed_input_law", kSym, [&] {
      const auto tau = ComplexMatrix::identity(d) * Complex(1.0 / static_cast<double>(d));
      double worst = 0.0;
      for (std::size_t i = 0; i < kMixedInputProbes; ++i) {
        const auto rho = random_density_matrix(t.dim_in(), substream(substream(seed, 4), i));
        const auto lhs = single_clone_reduction(t, spec, rho, cfg.max_dim);
        const auto rhs = one_site_reduction(rho, d, spec.n()) * Complex(gamma) +
                         tau * ((1.0 - gamma) * rho.trace());
        worst = std::max(worst, distance(lhs, rhs));
      }
      checks.record("mixed_input_law", kSym, worst, tol);
    });
    checks.run("single_clone_embedding", kSym, [&] {
      const auto rho = random_density_matrix(t.dim_in(), substream(seed, 6));
      const auto ladder = single_clone_reduction(t, spec, rho, cfg.max_dim);
      double worst = 0.0;
      for (const std::size_t site : {std::size_t{0}, spec.m() - 1})
        worst = std::max(worst, distance(ladder, single_clone_reduction_embedded(
                                                     t, spec, rho, site, cfg.max_dim)));
      checks.record("single_clone_embedding", kSym, worst, tol);
    });
    checks.run("concatenation", kSym, [&] {
      const CloneSpec next(d, spec.m(), spec.m() + 1);
      const CloneSpec direct(d, spec.n(), spec.m() + 1);
      const auto chained = compose(optimal_cloner(next, cfg.max_dim), t);
      checks.record("concatenation", kSym,
                    choi_distance(choi(chained), choi(optimal_cloner(direct, cfg.max_dim))), tol);
    });
  }

  {
    const std::size_t r = spec.m() + 1;
    const Rational lhs = black_cow_factor(d, spec.n(), spec.m()) * black_cow_factor(d, spec.m(), r);
    const Rational rhs = black_cow_factor(d, spec.n(), r);
    checks.record("multiplicativity", kSym, std::abs(to_double(lhs - rhs)), 0.0, lhs == rhs);
  }

  const char* full_checks[] = {"average_fidelity_operator", "average_fidelity",
                               "worst_case_fidelity"};
  const std::uint64_t full = full_dimension(d, spec.n() + spec.m());
  if (full > cfg.max_dim || !cloner) {
    const std::string reason =
        !cloner ? cloner_error
                : "full-space check needs d^(N+M) = " + std::to_string(full) +
                      " <= max_dim = " + std::to_string(cfg.max_dim);
    for (const char* name : full_checks) checks.skip(name, kFull, reason);
  } else {
    const QuantumChannel& t = *cloner;
    const auto omega = average_fidelity_operator(spec, cfg.max_dim);
    checks.run("average_fidelity_operator", kFull, [&] {
      checks.record("average_fidelity_operator", kFull,
                    distance(omega, average_fidelity_operator_embedded(spec, cfg.max_dim)), tol);
    });
    checks.run("average_fidelity", kFull, [&] {
      checks.record("average_fidelity", kFull, std::abs(average_fidelity(choi(t), omega) - closed),
                    tol);
    });
    checks.run("worst_case_fidelity", kFull, [&] {
      WorstCaseOptions opts;
      opts.max_dim = cfg.max_dim;
      const auto merit = worst_case_fidelity(t, spec, cfg.samples, substream(seed, 5), opts);
      checks.record("worst_case_fidelity", kFull, std::abs(merit.worst_fidelity - closed), tol);
    });
  }

  json row = spec_json(spec);
  row["checks"] = std::move(checks.items);
  row["pass"] = !checks.failed;
  for (const auto& c : row["checks"])
    if (c["status"] == "fail")
      report.failures.push_back(spec_label(spec) + ": " + c["name"].get<std::string>());
  report.results.push_back(std::move(row));
}

void cmd_verify(const RunConfig& cfg, Report& report) {
  const auto specs = specs_of(cfg);
  for (std::size_t i = 0; i < specs.size(); ++i)
    verify_spec(cfg, specs[i], substream(Seed{cfg.seed}, i), report);
}

// ---------------------------------------------------------------- clone

void cmd_clone(const RunConfig& cfg, Report& report) {
  if (cfg.state.empty()) throw UsageError("clone needs --state");
  if (cfg.d.lo != cfg.d.hi) throw UsageError("clone needs a single d");
  ComplexVector phi;
  try {
    phi = parse_state(cfg.state);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (phi.size() != cfg.d.lo)
    throw UsageError("--state has " + std::to_string(phi.size()) + " entries, expected d = " +
                     std::to_string(cfg.d.lo));
  const double input_norm = norm(phi);
  if (!(input_norm > 0.0) || !std::isfinite(input_norm)) throw UsageError("--state has zero norm");
  const bool renormalized = std::abs(input_norm - 1.0) > 1e-12;
  for (auto& z : phi) z /= input_norm;

  for (const auto& spec : specs_of(cfg)) {
    const auto t = optimal_cloner(spec, cfg.max_dim);
    const auto out = apply(t, product_state_sym(phi, spec.n()));
    json row = spec_json(spec);
    row["state"] = to_json(phi);
    row["input_norm"] = finite(input_norm);
    row["renormalized"] = renormalized;
    row["output"] = to_json(out);
    row["single_clone"] = to_json(one_site_reduction(out, spec.d(), spec.m()));
    row["fidelity"] = finite(fidelity_at(t, spec, phi));
    row["closed_form"] = to_string(analytics(spec).global_fidelity);
    report.results.push_back(std::move(row));
  }
}

// ---------------------------------------------------------------- optimize

void cmd_optimize(const RunConfig& cfg, Report& report) {
  const auto specs = specs_of(cfg);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    OptimizeOptions opts;
    opts.max_iters = cfg.max_iters;
    opts.tol = cfg.tol;
    opts.seed = substream(Seed{cfg.seed}, i);
    opts.max_dim = cfg.max_dim;
    const auto r = optimize_channel(spec, opts);
    json row = spec_json(spec);
    row["best_value"] = finite(r.best_value);
    row["closed_form"] = to_string(analytics(spec).global_fidelity);
    row["gap_to_closed_form"] = finite(r.gap_to_closed_form);
    row["choi_distance_to_optimal"] = finite(r.choi_distance_to_optimal);
    row["iterations"] = r.iterations;
    row["converged"] = r.converged;
    row["diagnostics"] = {{"step", finite(r.step)},
                          {"min_eigenvalue", finite(r.min_eigenvalue)},
                          {"tp_defect", finite(r.tp_defect)},
                          {"last_window_change", finite(r.last_window_change)}};
    if (!r.converged) report.failures.push_back(spec_label(spec) + ": not converged");
    report.results.push_back(std::move(row));
  }
}

// ---------------------------------------------------------------- twirl

constexpr std::size_t kTwirlProbeStates = 20;

void cmd_twirl(const RunConfig& cfg, Report& report) {
  if (cfg.channel != "optimal" && cfg.channel != "random")
    throw UsageError("--channel must be optimal or random");
  const auto specs = specs_of(cfg);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    const Seed seed = substream(Seed{cfg.seed}, i);
    const Seed sample_seed = substream(seed, 0);
    const auto optimal = optimal_cloner(spec, cfg.max_dim);
    const auto t = cfg.channel == "optimal"
                       ? optimal
                       : random_channel(optimal.dim_in(), optimal.dim_out(), 3, substream(seed, 1));
    const auto input = choi(t);
    const auto twirled = twirl_mc(t, spec, cfg.samples, sample_seed, cfg.max_dim);

    json row = spec_json(spec);
    row["channel"] = cfg.channel;
    row["choi_distance_to_input"] = finite(choi_distance(twirled, input));
    row["choi_distance_to_optimal"] = finite(choi_distance(twirled, choi(optimal)));

    // Twirled fidelity at phi is the sample mean of f(U_s phi) over the
    // twirl's unitaries; compare with tr(C W) using that sample's spread.
    std::vector<ComplexMatrix> unitaries;
    unitaries.reserve(cfg.samples);
    for (std::size_t s = 0; s < cfg.samples; ++s)
      unitaries.push_back(haar_unitary(spec.d(), substream(sample_seed, s)));
    json probes = json::array();
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t j = 0; j < kTwirlProbeStates; ++j) {
      const auto phi = random_pure_state(spec.d(), substream(substream(seed, 2), j));
      const double f = fidelity_at(twirled, spec, phi);
      double sum = 0.0;
      double sq = 0.0;
      for (const auto& u : unitaries) {
        const double v = fidelity_at(t, spec, u * std::span<const Complex>(phi));
        sum += v;
        sq += v * v;
      }
      const double s = static_cast<double>(cfg.samples);
      const double mean = sum / s;
      const double var = cfg.samples > 1 ? std::max(0.0, (sq - s * mean * mean) / (s - 1.0)) : 0.0;
      probes.push_back({{"fidelity", finite(f)}, {"standard_error", finite(std::sqrt(var / s))}});
      lo = j == 0 ? f : std::min(lo, f);
      hi = j == 0 ? f : std::max(hi, f);
    }
    row["fidelity_min"] = finite(lo);
    row["fidelity_max"] = finite(hi);
    row["probes"] = std::move(probes);

    if (full_dimension(spec.d(), spec.n() + spec.m()) <= cfg.max_dim) {
      const double exact = average_fidelity(input, average_fidelity_operator(spec, cfg.max_dim));
      double excess = 0.0;
      for (const auto& p : row["probes"])
        excess = std::max(excess, std::abs(p["fidelity"].get<double>() - exact) -
                                      3.0 * p["standard_error"].get<double>());
      row["average_fidelity"] = finite(exact);
      row["excess_over_3se"] = finite(excess);
      if (excess > cfg.tol)
        report.failures.push_back(spec_label(spec) + ": twirled fidelity not constant");
    } else {
      row["average_fidelity"] = "skipped: d^(N+M) > max_dim";
    }
    report.results.push_back(std::move(row));
  }
}

// ---------------------------------------------------------------- rendering

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  out << doc["command"].get<std::string>() << '\n';
  for (const auto& row : doc["results"]) {
    out << "\n[d=" << row["d"] << " N=" << row["N"] << " M=" << row["M"] << "]\n";
    if (row.contains("checks")) {
      for (const auto& c : row["checks"]) {
        out << "  " << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
        if (c.contains("measured"))
          out << "  measured=" << c["measured"].dump() << " threshold=" << c["threshold"].dump();
        else
          out << "  (" << c["reason"].get<std::string>() << ")";
        out << '\n';
      }
      continue;
    }
    std::ostringstream body;
    json rest = row;
    rest.erase("d");
    rest.erase("N");
    rest.erase("M");
    flatten(rest, "", body);
    std::istringstream lines(body.str());
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  }
  out << "\nfailures: " << doc["failures"].size() << '\n';
  for (const auto& f : doc["failures"]) out << "  " << f.get<std::string>() << '\n';
  return out.str();
}

std::string render_csv(const json& doc) {
  std::ostringstream out;
  out << "d,N,M,global_fidelity,black_cow,single_clone_fidelity\n";
  for (const auto& row : doc["results"])
    out << row["d"] << ',' << row["N"] << ',' << row["M"] << ','
        << row["global_fidelity"].get<std::string>() << ',' << row["black_cow"].get<std::string>()
        << ',' << row["single_clone_fidelity"].get<std::string>() << '\n';
  return out.str();
}

void parse_config(const std::vector<std::string>& args, RunConfig& cfg, CliOutcome& outcome,
                  bool& done) {
  CLI::App app{"Optimal universal cloning of pure states: tables, checks, and optimizer runs",
               "symclone"};
  std::optional<std::size_t> d_max;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> m_max;
  app.add_option("command", cfg.command, "table | verify | clone | optimize | twirl")
      ->required()
      ->check(CLI::IsMember({"table", "verify", "clone", "optimize", "twirl"}));
  app.add_option("--d", cfg.d.lo, "local dimension (range start)")->capture_default_str();
  app.add_option("--d-max", d_max, "local dimension range end");
  app.add_option("--n", cfg.n.lo, "input copies (range start)")->capture_default_str();
  app.add_option("--n-max", n_max, "input copies range end");
  app.add_option("--m", cfg.m.lo, "output copies (range start)")->capture_default_str();
  app.add_option("--m-max", m_max, "output copies range end");
  app.add_option("--tol", cfg.tol, "check tolerance")->capture_default_str();
  app.add_option("--samples", cfg.samples, "random samples per check")->capture_default_str();
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--max-dim", cfg.max_dim, "dimension cap for full-space objects")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--state", cfg.state, "clone input, e.g. \"0.6,0.8i\"");
  app.add_option("--channel", cfg.channel, "twirl input: optimal | random")
      ->capture_default_str();
  app.add_option("--max-iters", cfg.max_iters, "optimizer iteration limit")->capture_default_str();
  app.add_flag("--inject-fault", cfg.inject_fault, "scale one Kraus operator by 1.01 (verify)");
  app.add_flag("--timing", cfg.timing, "report wall time in elapsed_ms (otherwise 0)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    outcome.output = out.str();
    outcome.error = err.str();
    outcome.exit_code = code == 0 ? kExitOk : kExitUsage;
    done = true;
    return;
  }
  cfg.d.hi = d_max.value_or(cfg.d.lo);
  cfg.n.hi = n_max.value_or(cfg.n.lo);
  cfg.m.hi = m_max.value_or(cfg.m.lo);
  if (cfg.d.lo < 2) throw UsageError("--d must be at least 2");
  if (cfg.n.lo < 1) throw UsageError("--n must be at least 1");
  if (cfg.d.hi < cfg.d.lo || cfg.n.hi < cfg.n.lo || cfg.m.hi < cfg.m.lo)
    throw UsageError("range end is below range start");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
  if (cfg.format == "csv" && cfg.command != "table")
    throw UsageError("csv output is only available for table");
}

}  // namespace

std::vector<std::complex<double>> parse_state(const std::string& text) {
  std::vector<std::complex<double>> out;
  auto real_of = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(v))
      throw std::invalid_argument("cannot parse number '" + s + "' in state '" + text + "'");
    return v;
  };
  std::stringstream stream(text);
  for (std::string token; std::getline(stream, token, ',');) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) throw std::invalid_argument("empty entry in state '" + text + "'");
    if (token.back() != 'i' && token.back() != 'j') {
      out.emplace_back(real_of(token), 0.0);
      continue;
    }
    token.pop_back();
    // Split at the last sign that is not leading and not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = token.size(); k-- > 1;)
      if ((token[k] == '+' || token[k] == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
        split = k;
        break;
      }
    const std::string re = split == std::string::npos ? "0" : token.substr(0, split);
    std::string im = split == std::string::npos ? token : token.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    out.emplace_back(real_of(re), real_of(im));
  }
  if (out.empty()) throw std::invalid_argument("state is empty");
  return out;
}

CliOutcome run_cli(const std::vector<std::string>& args) {
  CliOutcome outcome;
  RunConfig cfg;
  const auto start = std::chrono::steady_clock::now();
  try {
    bool done = false;
    parse_config(args, cfg, outcome, done);
    if (done) return outcome;

    Report report;
    if (cfg.command == "table") cmd_table(cfg, report);
    if (cfg.command == "verify") cmd_verify(cfg, report);
    if (cfg.command == "clone") cmd_clone(cfg, report);
    if (cfg.command == "optimize") cmd_optimize(cfg, report);
    if (cfg.command == "twirl") cmd_twirl(cfg, report);

    const double elapsed =
        cfg.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start)
                         .count()
                   : 0.0;
    const json doc = {{"schema", "symclone/1"},
                      {"command", cfg.command},
                      {"config", config_json(cfg)},
                      {"results", report.results},
                      {"failures", report.failures},
                      {"elapsed_ms", elapsed}};
    std::string text = cfg.format == "csv"    ? render_csv(doc)
                       : cfg.format == "text" ? render_text(doc)
                                              : doc.dump(2) + "\n";
    outcome.exit_code = report.failures.empty() ? kExitOk : kExitCheckFailed;
    if (!report.failures.empty())
      outcome.error = std::to_string(report.failures.size()) + " check(s) failed";
    if (cfg.out.empty()) {
      outcome.output = std::move(text);
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      file << text;
      if (!file) {
        outcome.exit_code = kExitUsage;
        outcome.error = "cannot write " + cfg.out;
      }
    }
  } catch (const UsageError& e) {
    outcome.exit_code = kExitUsage;
    outcome.error = e.what();
  } catch (const std::invalid_argument& e) {  // InvalidSpec, DimensionError
    outcome.exit_code = kExitUsage;
    outcome.error = e.what();
  } catch (const std::length_error& e) {  // CapExceeded
    outcome.exit_code = kExitUsage;
    outcome.error = e.what();
  } catch (const std::overflow_error& e) {
    outcome.exit_code = kExitUsage;
    outcome.error = e.what();
  } catch (const std::exception& e) {
    outcome.exit_code = kExitCheckFailed;
    outcome.error = e.what();
  }
  return outcome;
}

}  // namespace symclone
