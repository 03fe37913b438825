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

// Clone fidelity of arbitrary channels and a first-order maximizer over
// the set of CPTP maps from symmetric-N to symmetric-M coordinates.
//
// The maximizer works on the Haar-averaged fidelity, which is linear in the
// Choi matrix: tr(C W) with W = avg over phi of conj(sigma^{xN}) (x) sigma^{xM}.
// For covariant channels it coincides with the worst case.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symclone/channel.hpp"
#include "symclone/cloner.hpp"

namespace symclone {

/// tr(sigma^{xM} T(sigma^{xN})) for sigma = |phi><phi|, i.e.
/// (conj(p) (x) q)^H C (conj(p) (x) q) with p, q the tensor-power coordinates.
double fidelity_at(const ChoiMatrix& c, const CloneSpec& spec, std::span<const Complex> phi);
double fidelity_at(const QuantumChannel& t, const CloneSpec& spec, std::span<const Complex> phi);

struct MeritReport {
  double worst_fidelity = 0.0;
  ComplexVector argmin_state;
  double average_fidelity = 0.0;
  std::size_t probes_used = 0;
};

struct WorstCaseOptions {
  std::size_t refine = 4;            // worst coarse candidates to refine
  double fd_step = 1e-5;             // finite-difference step on the sphere
  double stall_tol = 1e-9;           // improvement threshold ...
  std::size_t stall_window = 20;     // ... over this many steps
  std::size_t max_steps = 400;
  std::size_t max_dim = kDefaultMaxDim;
};

/// Coarse search over `starts` random states, then descent on the unit
/// sphere from the worst candidates. Also reports tr(C W).
MeritReport worst_case_fidelity(const ChoiMatrix& c, const CloneSpec& spec, std::size_t starts,
                                Seed seed, const WorstCaseOptions& opts = {});
MeritReport worst_case_fidelity(const QuantumChannel& t, const CloneSpec& spec,
                                std::size_t starts, Seed seed, const WorstCaseOptions& opts = {});

/// W on (symmetric-N x symmetric-M) coordinates: the Bose compression of the
/// partial transpose over the first N sites of s_{N+M} / d[N+M]. Built from
/// exact overlaps of occupation states; requires d^{N+M} <= max_dim.
ComplexMatrix average_fidelity_operator(const CloneSpec& spec,
                                        std::size_t max_dim = kDefaultMaxDim);

/// Same operator by the direct route: s_{N+M} / d[N+M] on the full space,
/// partial transpose over the first N sites, compression with V_N (x) V_M.
ComplexMatrix average_fidelity_operator_embedded(const CloneSpec& spec,
                                                 std::size_t max_dim = kDefaultMaxDim);

/// tr(C W)
double average_fidelity(const ChoiMatrix& c, const ComplexMatrix& w);

/// I_in (x) tau_M
ChoiMatrix neutral_choi(const CloneSpec& spec);

struct OptimizeOptions {
  std::size_t max_iters = 20000;
  /// 0 selects 1 / lambda_max(W).
  double step = 0.0;
  /// Objective change tolerance across `window` iterations.
  double tol = 1e-9;
  std::size_t window = 50;
  /// Dykstra runs at least `dykstra_rounds` rounds, then continues until the
  /// trace-preservation residual is below `dykstra_tol` or the ceiling is hit.
  std::size_t dykstra_rounds = 50;
  std::size_t dykstra_max_rounds = 5000;
  double dykstra_tol = 1e-12;
  /// Neutral start when empty.
  std::optional<ChoiMatrix> init;
  Seed seed{0};
  std::size_t max_dim = kDefaultMaxDim;
  bool keep_history = false;
};

struct OptimizeResult {
  double best_value = 0.0;
  std::size_t iterations = 0;
  ChoiMatrix choi;
  double gap_to_closed_form = 0.0;
  double choi_distance_to_optimal = 0.0;
  bool converged = false;

  // Diagnostics.
  double closed_form = 0.0;
  double step = 0.0;
  double min_eigenvalue = 0.0;
  double tp_defect = 0.0;
  double last_window_change = 0.0;
  std::vector<double> history;           // objective per iterate
  std::vector<double> feasibility;       // TP defect per iterate
};

/// Projection onto {C >= 0, Tr_out C = I} by Dykstra alternation; the PSD
/// step comes last so the result is exactly positive.
ChoiMatrix project_cptp(const ChoiMatrix& c, std::size_t min_rounds,
                        std::size_t max_rounds = 5000, double residual_tol = 1e-12);

/// Projected gradient ascent of tr(C W): C <- P(C + step W).
OptimizeResult optimize_channel(const CloneSpec& spec, const OptimizeOptions& opts = {});

struct UniquenessResult {
  double distance = 0.0;  // final ||C - Choi(T_opt)||_F
  OptimizeResult run;
};

/// Restarts the optimizer from (1 - scale) Choi(T_opt) + scale Choi(random CPTP).
UniquenessResult uniqueness_probe(const CloneSpec& spec, double perturbation_scale, Seed seed,
                                  OptimizeOptions opts = {});

}  // namespace symclone
