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

#include "symclone/merit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>

namespace symclone {

namespace {

void check_choi_dims(const ChoiMatrix& c, const CloneSpec& spec, const char* who) {
  if (c.dim_in != sym_dimension(spec.d(), spec.n()) ||
      c.dim_out != sym_dimension(spec.d(), spec.m()))
    throw DimensionError(std::string(who) + ": channel must map d[N] -> d[M] coordinates");
}

double quadratic_form(const ComplexMatrix& c, std::span<const Complex> v) {
  double s = 0.0;
  for (std::size_t r = 0; r < v.size(); ++r) {
    Complex row = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) row += c(r, k) * v[k];
    s += (std::conj(v[r]) * row).real();
  }
  return s;
}

ComplexVector normalized(ComplexVector v) {
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

}  // namespace

double fidelity_at(const ChoiMatrix& c, const CloneSpec& spec, std::span<const Complex> phi) {
  check_choi_dims(c, spec, "fidelity_at");
  if (phi.size() != spec.d()) throw DimensionError("fidelity_at: state must have d entries");
  auto p = tensor_power_coords(phi, spec.n());
  for (auto& z : p) z = std::conj(z);
  const auto q = tensor_power_coords(phi, spec.m());
  return quadratic_form(c.matrix, kron(p, q));
}

double fidelity_at(const QuantumChannel& t, const CloneSpec& spec, std::span<const Complex> phi) {
  if (t.dim_in() != sym_dimension(spec.d(), spec.n()) ||
      t.dim_out() != sym_dimension(spec.d(), spec.m()))
    throw DimensionError("fidelity_at: channel must map d[N] -> d[M] coordinates");
  if (phi.size() != spec.d()) throw DimensionError("fidelity_at: state must have d entries");
  const auto p = tensor_power_coords(phi, spec.n());
  const auto q = tensor_power_coords(phi, spec.m());
  double s = 0.0;
  for (const auto& k : t.kraus()) s += std::norm(inner(q, k * std::span<const Complex>(p)));
  return s;
}

namespace {

struct SphereDescent {
  std::function<double(std::span<const Complex>)> f;
  const WorstCaseOptions& opts;

  // Point at angle t along the great circle leaving phi in direction -u.
  static ComplexVector arc(const ComplexVector& phi, const ComplexVector& u, double t) {
    ComplexVector out(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) out[i] = std::cos(t) * phi[i] - std::sin(t) * u[i];
    return normalized(std::move(out));
  }

  ComplexVector tangent_gradient(const ComplexVector& phi) const {
    const double h = opts.fd_step;
    ComplexVector g(phi.size());
    for (std::size_t k = 0; k < phi.size(); ++k) {
      for (const Complex dir : {Complex{1.0, 0.0}, Complex{0.0, 1.0}}) {
        ComplexVector plus = phi;
        ComplexVector minus = phi;
        plus[k] += h * dir;
        minus[k] -= h * dir;
        const double diff = (f(normalized(plus)) - f(normalized(minus))) / (2.0 * h);
        g[k] += diff * dir;
      }
    }
    const double radial = inner(phi, g).real();
    for (std::size_t k = 0; k < phi.size(); ++k) g[k] -= radial * phi[k];
    return g;
  }

  // Returns the refined state and its value.
  std::pair<ComplexVector, double> run(ComplexVector phi) const {
    double value = f(phi);
    std::vector<double> trail{value};
    for (std::size_t step = 0; step < opts.max_steps; ++step) {
      auto g = tangent_gradient(phi);
      const double gn = norm(g);
      if (gn < 1e-14) break;
      for (auto& z : g) z /= gn;

      // Coarse scan of the half great circle, then golden-section refinement
      // around the best sample.
      constexpr int kScan = 16;
      const double t_max = std::numbers::pi / 2.0;
      double best_t = 0.0;
      double best_v = value;
      for (int i = 1; i <= kScan; ++i) {
        const double t = t_max * i / kScan;
        const double v = f(arc(phi, g, t));
        if (v < best_v) {
          best_v = v;
          best_t = t;
        }
      }
      double lo = std::max(0.0, best_t - t_max / kScan);
      double hi = std::min(t_max, best_t + t_max / kScan);
      const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = hi - ratio * (hi - lo);
      double x2 = lo + ratio * (hi - lo);
      double f1 = f(arc(phi, g, x1));
      double f2 = f(arc(phi, g, x2));
      for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
        if (f1 < f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - ratio * (hi - lo);
          f1 = f(arc(phi, g, x1));
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + ratio * (hi - lo);
          f2 = f(arc(phi, g, x2));
        }
      }
      if (f1 < best_v) {
        best_v = f1;
        best_t = x1;
      }
      if (f2 < best_v) {
        best_v = f2;
        best_t = x2;
      }
      if (best_t == 0.0) break;
      phi = arc(phi, g, best_t);
      value = best_v;
      trail.push_back(value);
      if (trail.size() > opts.stall_window &&
          trail[trail.size() - 1 - opts.stall_window] - value < opts.stall_tol)
        break;
    }
    return {std::move(phi), value};
  }
};

}  // namespace

ComplexMatrix average_fidelity_operator(const CloneSpec& spec, std::size_t max_dim) {
  const std::size_t d = spec.d();
  require_full_space(d, spec.n() + spec.m(), max_dim, "average_fidelity_operator");
  const auto in_basis = occupation_basis(d, spec.n());
  const auto out_basis = occupation_basis(d, spec.m());
  const double norm_total = static_cast<double>(sym_dimension(d, spec.n() + spec.m()));
  const std::size_t dn = in_basis.size();
  const std::size_t dm = out_basis.size();

  // <a, b| s_{N+M} |a', b'> = w(a,b) w(a',b') when a+b == a'+b', where
  // w(a,b) = <a+b| (|a> (x) |b>) = sqrt(mult(a) mult(b) / mult(a+b)).
  std::vector<std::vector<double>> w(dn, std::vector<double>(dm));
  std::vector<std::vector<std::size_t>> joint(dn, std::vector<std::size_t>(dm));
  for (std::size_t a = 0; a < dn; ++a)
    for (std::size_t b = 0; b < dm; ++b) {
      OccupationIndex sum = in_basis[a];
      for (std::size_t k = 0; k < d; ++k) sum.counts[k] += out_basis[b].counts[k];
      w[a][b] = std::sqrt(static_cast<double>(multinomial(in_basis[a])) *
                          static_cast<double>(multinomial(out_basis[b])) /
                          static_cast<double>(multinomial(sum)));
      joint[a][b] = occupation_rank(sum);
    }

  // Partial transpose on the input factor swaps a <-> a'.
  ComplexMatrix omega(dn * dm, dn * dm);
  for (std::size_t a = 0; a < dn; ++a)
    for (std::size_t b = 0; b < dm; ++b)
      for (std::size_t a2 = 0; a2 < dn; ++a2)
        for (std::size_t b2 = 0; b2 < dm; ++b2)
          if (joint[a2][b] == joint[a][b2])
            omega(a * dm + b, a2 * dm + b2) = w[a2][b] * w[a][b2] / norm_total;
  return omega;
}

ComplexMatrix average_fidelity_operator_embedded(const CloneSpec& spec, std::size_t max_dim) {
  const std::size_t d = spec.d();
  const std::size_t total = spec.n() + spec.m();
  require_full_space(d, total, max_dim, "average_fidelity_operator_embedded");
  const std::vector<std::size_t> dims(total, d);
  std::vector<std::size_t> first(spec.n());
  std::iota(first.begin(), first.end(), std::size_t{0});
  const auto x = partial_transpose(haar_moment(d, total, max_dim), dims, first);
  const auto v = kron(SymmetricBasis(d, spec.n(), max_dim).isometry(),
                      SymmetricBasis(d, spec.m(), max_dim).isometry(), max_dim);
  return v.adjoint() * x * v;
}

double average_fidelity(const ChoiMatrix& c, const ComplexMatrix& w) {
  return trace_product(c.matrix, w).real();
}

namespace {

MeritReport search_worst(const std::function<double(std::span<const Complex>)>& f,
                         const ChoiMatrix& c, const CloneSpec& spec, std::size_t starts, Seed seed,
                         const WorstCaseOptions& opts) {
  if (starts < 1) throw std::invalid_argument("worst_case_fidelity: need at least one start");

  std::vector<std::pair<double, ComplexVector>> candidates;
  candidates.reserve(starts);
  for (std::size_t s = 0; s < starts; ++s) {
    auto phi = random_pure_state(spec.d(), substream(seed, s));
    const double v = f(phi);
    candidates.emplace_back(v, std::move(phi));
  }
  const std::size_t refine = std::min(opts.refine, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(refine),
                    candidates.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });

  const SphereDescent descent{f, opts};
  MeritReport report;
  report.worst_fidelity = candidates.front().first;
  report.argmin_state = candidates.front().second;
  for (std::size_t i = 0; i < refine; ++i) {
    auto [phi, value] = descent.run(candidates[i].second);
    if (value < report.worst_fidelity) {
      report.worst_fidelity = value;
      report.argmin_state = std::move(phi);
    }
  }
  report.average_fidelity = average_fidelity(c, average_fidelity_operator(spec, opts.max_dim));
  report.probes_used = starts;
  return report;
}

}  // namespace

MeritReport worst_case_fidelity(const ChoiMatrix& c, const CloneSpec& spec, std::size_t starts,
                                Seed seed, const WorstCaseOptions& opts) {
  check_choi_dims(c, spec, "worst_case_fidelity");
  return search_worst([&](std::span<const Complex> phi) { return fidelity_at(c, spec, phi); }, c,
                      spec, starts, seed, opts);
}

// The Kraus route is a sum of squared moduli, so it never dips below zero.
MeritReport worst_case_fidelity(const QuantumChannel& t, const CloneSpec& spec,
                                std::size_t starts, Seed seed, const WorstCaseOptions& opts) {
  const auto c = choi(t);
  check_choi_dims(c, spec, "worst_case_fidelity");
  return search_worst([&](std::span<const Complex> phi) { return fidelity_at(t, spec, phi); }, c,
                      spec, starts, seed, opts);
}

ChoiMatrix neutral_choi(const CloneSpec& spec) {
  const auto din = sym_dimension(spec.d(), spec.n());
  const auto dout = sym_dimension(spec.d(), spec.m());
  auto m = ComplexMatrix::identity(din * dout);
  m *= 1.0 / static_cast<double>(dout);
  return ChoiMatrix(std::move(m), din, dout);
}

namespace {

double tp_defect(const ChoiMatrix& c) {
  return distance(trace_out_output(c), ComplexMatrix::identity(c.dim_in));
}

}  // namespace

ChoiMatrix project_cptp(const ChoiMatrix& c, std::size_t min_rounds, std::size_t max_rounds,
                        double residual_tol) {
  ChoiMatrix x = c;
  ComplexMatrix p(c.matrix.rows(), c.matrix.cols());
  ComplexMatrix q(c.matrix.rows(), c.matrix.cols());
  const std::size_t ceiling = std::max({min_rounds, max_rounds, std::size_t{1}});
  for (std::size_t r = 0; r < ceiling; ++r) {
    const ChoiMatrix shifted(x.matrix + p, c.dim_in, c.dim_out);
    const ChoiMatrix a = project_trace_preserving(shifted);
    p = shifted.matrix - a.matrix;
    const ComplexMatrix pre = a.matrix + q;
    x.matrix = psd_part(pre);
    q = pre - x.matrix;
    if (r + 1 >= min_rounds && tp_defect(x) <= residual_tol) break;
  }
  return x;
}

OptimizeResult optimize_channel(const CloneSpec& spec, const OptimizeOptions& opts) {
  const auto omega = average_fidelity_operator(spec, opts.max_dim);
  const double lam_max = max_eigenvalue(omega);
  const double step = opts.step > 0.0 ? opts.step : 1.0 / lam_max;
  const auto an = analytics(spec);
  const double closed_form = to_double(an.global_fidelity);

  ChoiMatrix c = opts.init ? *opts.init : neutral_choi(spec);
  check_choi_dims(c, spec, "optimize_channel");

  OptimizeResult result;
  result.closed_form = closed_form;
  result.step = step;
  std::vector<double> history{average_fidelity(c, omega)};
  std::vector<double> feasibility{tp_defect(c)};

  ComplexMatrix push = omega;
  push *= step;
  std::size_t it = 0;
  for (; it < opts.max_iters; ++it) {
    c = project_cptp(ChoiMatrix(c.matrix + push, c.dim_in, c.dim_out), opts.dykstra_rounds,
                     opts.dykstra_max_rounds, opts.dykstra_tol);
    history.push_back(average_fidelity(c, omega));
    feasibility.push_back(tp_defect(c));
    if (history.size() > opts.window) {
      const double change = std::abs(history.back() - history[history.size() - 1 - opts.window]);
      result.last_window_change = change;
      if (change < opts.tol && feasibility.back() <= opts.tol) {
        result.converged = true;
        ++it;
        break;
      }
    }
  }

  result.iterations = it;
  result.best_value = history.back();
  result.gap_to_closed_form = std::abs(result.best_value - closed_form);
  result.choi_distance_to_optimal = choi_distance(c, choi(optimal_cloner(spec, opts.max_dim)));
  result.min_eigenvalue = min_eigenvalue(c.matrix);
  result.tp_defect = feasibility.back();
  result.choi = std::move(c);
  if (opts.keep_history) {
    result.history = std::move(history);
    result.feasibility = std::move(feasibility);
  }
  return result;
}

UniquenessResult uniqueness_probe(const CloneSpec& spec, double perturbation_scale, Seed seed,
                                  OptimizeOptions opts) {
  if (!(perturbation_scale >= 0.0 && perturbation_scale <= 1.0))
    throw std::invalid_argument("uniqueness_probe: perturbation scale must lie in [0, 1]");
  const auto optimal = choi(optimal_cloner(spec, opts.max_dim));
  const auto din = optimal.dim_in;
  const auto dout = optimal.dim_out;
  const auto noise = choi(random_channel(din, dout, 3, seed));
  ComplexMatrix start = optimal.matrix * (1.0 - perturbation_scale);
  start += noise.matrix * perturbation_scale;
  opts.init = ChoiMatrix(std::move(start), din, dout);
  UniquenessResult out;
  out.run = optimize_channel(spec, opts);
  out.distance = out.run.choi_distance_to_optimal;
  return out;
}

}  // namespace symclone
