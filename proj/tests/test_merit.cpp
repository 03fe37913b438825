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


#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "symclone/merit.hpp"

using namespace symclone;

namespace {

double closed_form(const CloneSpec& spec) { return to_double(analytics(spec).global_fidelity); }

// Replacement by |0...0> in symmetric-M coordinates.
QuantumChannel reprepare_zero(const CloneSpec& spec) {
  const auto dm = sym_dimension(spec.d(), spec.m());
  ComplexMatrix target(dm, dm);
  target(0, 0) = 1.0;
  return QuantumChannel::replacement(sym_dimension(spec.d(), spec.n()), target);
}

}  // namespace

TEST_CASE("fidelity_at examples") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto phi = random_pure_state(2, Seed{s});
    CHECK(std::abs(fidelity_at(optimal_cloner(CloneSpec(2, 1, 1)), CloneSpec(2, 1, 1), phi) - 1.0) <= 1e-12);
    CHECK(std::abs(fidelity_at(optimal_cloner(CloneSpec(2, 3, 3)), CloneSpec(2, 3, 3), phi) - 1.0) <= 1e-12);
    CHECK(std::abs(fidelity_at(optimal_cloner(CloneSpec(2, 1, 2)), CloneSpec(2, 1, 2), phi) - 2.0 / 3.0) <= 1e-10);
    const auto mixed = QuantumChannel::replacement(2, maximally_mixed_sym(2, 2));
    CHECK(std::abs(fidelity_at(mixed, CloneSpec(2, 1, 2), phi) - 1.0 / 3.0) <= 1e-12);
  }
}

TEST_CASE("fidelity_at: Choi and Kraus routes agree") {
  const CloneSpec spec(3, 1, 2);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto t = random_channel(3, 6, 2, Seed{s});
    const auto c = choi(t);
    for (std::uint64_t k = 0; k < 10; ++k) {
      const auto phi = random_pure_state(3, Seed{100 + k});
      CHECK(std::abs(fidelity_at(t, spec, phi) - fidelity_at(c, spec, phi)) <= 1e-12);
    }
  }
}

TEST_CASE("average_fidelity_operator examples") {
  const CloneSpec id_spec(2, 1, 1);
  CHECK(std::abs(average_fidelity(choi(optimal_cloner(id_spec)), average_fidelity_operator(id_spec)) - 1.0) <= 1e-10);
  const CloneSpec spec(2, 1, 2);
  CHECK(std::abs(average_fidelity(choi(optimal_cloner(spec)), average_fidelity_operator(spec)) - 2.0 / 3.0) <= 1e-10);
  CHECK_THROWS_AS(average_fidelity_operator(CloneSpec(4, 3, 4)), CapExceeded);
}

TEST_CASE("average_fidelity_operator: closed form against both full-space routes") {
  for (std::size_t d = 2; d <= 3; ++d)
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t m = n; m <= 4; ++m) {
        const CloneSpec spec(d, n, m);
        const auto total = oracle::ipow(d, n + m);
        if (total > 4096) continue;
        const auto w = average_fidelity_operator(spec);
        CHECK(is_hermitian(w));
        if (total <= 1024) CHECK(distance(w, average_fidelity_operator_embedded(spec)) <= 1e-12);
        if (n + m <= 5 && total <= 243) CHECK(distance(w, oracle::average_operator(d, n, m)) <= 1e-12);
      }
}

TEST_CASE("average fidelity agrees with Monte Carlo sampling") {
  const CloneSpec spec(2, 1, 2);
  const auto w = average_fidelity_operator(spec);
  for (std::uint64_t c = 0; c < 5; ++c) {
    const auto t = random_channel(2, 3, 1 + c, Seed{40 + c});
    constexpr std::size_t kSamples = 100000;
    double mean = 0.0;
    for (std::size_t s = 0; s < kSamples; ++s)
      mean += fidelity_at(t, spec, random_pure_state(2, substream(Seed{77 + c}, s)));
    mean /= kSamples;
    CHECK(std::abs(average_fidelity(choi(t), w) - mean) <= 0.003);
  }
}

TEST_CASE("worst case of the optimal cloner is the closed form") {
  for (std::size_t d = 2; d <= 3; ++d)
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t m = n; m <= 4; ++m) {
        const CloneSpec spec(d, n, m);
        if (oracle::ipow(d, n + m) > 4096) continue;
        const auto r = worst_case_fidelity(optimal_cloner(spec), spec, 20, Seed{d + 10 * n + 100 * m});
        CHECK(std::abs(r.worst_fidelity - closed_form(spec)) <= 1e-8);
        CHECK(std::abs(r.average_fidelity - closed_form(spec)) <= 1e-8);
        CHECK(r.probes_used == 20);
      }
}

TEST_CASE("measure-and-reprepare has worst fidelity zero at an orthogonal input") {
  for (const auto& spec : {CloneSpec(2, 1, 2), CloneSpec(3, 1, 2)}) {
    const auto r = worst_case_fidelity(reprepare_zero(spec), spec, 50, Seed{3});
    CHECK(r.worst_fidelity <= 1e-12);
    CHECK(r.worst_fidelity >= 0.0);
    CHECK(std::abs(r.argmin_state[0]) <= 1e-4);
    CHECK(std::abs(norm(r.argmin_state) - 1.0) <= 1e-12);
  }
}

TEST_CASE("worst case never exceeds the average") {
  const CloneSpec spec(2, 1, 2);
  for (std::uint64_t c = 0; c < 20; ++c) {
    const auto r = worst_case_fidelity(random_channel(2, 3, 1 + c % 4, Seed{c}), spec, 10, Seed{c});
    CHECK(r.worst_fidelity >= 0.0);
    CHECK(r.worst_fidelity <= r.average_fidelity + 1e-12);
    CHECK(r.average_fidelity <= 1.0 + 1e-9);
  }
}

TEST_CASE("twirling cannot lower the worst case") {
  const CloneSpec spec(2, 1, 2);
  const std::size_t samples = 400;
  for (std::uint64_t c = 0; c < 3; ++c) {
    const auto t = random_channel(2, 3, 2, Seed{60 + c});
    const auto before = worst_case_fidelity(t, spec, 10, Seed{1});
    const auto after = worst_case_fidelity(twirl_mc(t, spec, samples, Seed{2 + c}), spec, 10, Seed{1});
    CHECK(before.worst_fidelity <= after.worst_fidelity + 5.0 / std::sqrt(static_cast<double>(samples)));
  }
}

TEST_CASE("neutral start is CPTP") {
  const CloneSpec spec(3, 1, 2);
  const auto c = neutral_choi(spec);
  CHECK(verify_cptp(c, 1e-12).pass);
}

TEST_CASE("project_cptp lands in the feasible set") {
  auto c = choi(random_channel(3, 4, 2, Seed{5}));
  c.matrix += oracle::random_hermitian(12, Seed{6}) * Complex(0.3);
  const auto p = project_cptp(c, 50);
  CHECK(min_eigenvalue(p.matrix) >= -1e-12);
  CHECK(distance(trace_out_output(p), ComplexMatrix::identity(3)) <= 1e-12);
  // Already feasible points stay put.
  const auto q = choi(random_channel(3, 4, 2, Seed{7}));
  CHECK(choi_distance(project_cptp(q, 50), q) <= 1e-10);
}

TEST_CASE("optimizer recovers the identity when M = N") {
  const CloneSpec spec(2, 1, 1);
  const auto r = optimize_channel(spec);
  CHECK(r.converged);
  CHECK(std::abs(r.best_value - 1.0) <= 1e-6);
  CHECK(choi_distance(r.choi, choi(QuantumChannel::identity(2))) <= 1e-6);
}

TEST_CASE("optimizer reaches the closed form") {
  for (const auto& spec : {CloneSpec(2, 1, 2), CloneSpec(3, 1, 2), CloneSpec(2, 2, 3)}) {
    OptimizeOptions opts;
    opts.keep_history = true;
    const auto r = optimize_channel(spec, opts);
    CHECK(r.converged);
    CHECK(r.gap_to_closed_form <= 1e-3);
    CHECK(r.choi_distance_to_optimal <= 1e-2);
    CHECK(r.best_value <= closed_form(spec) + 1e-3);

    // Invariants along the run.
    const auto w = average_fidelity_operator(spec);
    const double bound = static_cast<double>(sym_dimension(spec.d(), spec.n())) * max_eigenvalue(w);
    REQUIRE(r.history.size() == r.iterations + 1);
    for (const double v : r.history) CHECK(v <= bound + 1e-8);
    for (std::size_t i = 1; i < r.history.size(); ++i)
      if (r.feasibility[i - 1] <= 1e-9 && r.feasibility[i] <= 1e-9)
        CHECK(r.history[i] >= r.history[i - 1] - 1e-10);
    CHECK(r.min_eigenvalue >= -1e-8);
    CHECK(r.tp_defect <= 1e-8);
    CHECK(min_eigenvalue(r.choi.matrix) >= -1e-8);
  }
}

TEST_CASE("optimizer reports forced non-convergence") {
  OptimizeOptions opts;
  opts.max_iters = 1;
  const auto r = optimize_channel(CloneSpec(2, 1, 2), opts);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 1);
  CHECK(r.best_value <= 2.0 / 3.0 + 1e-3);
}

TEST_CASE("optimizer never exceeds the closed form") {
  // Small Choi matrices run to convergence; mid-size ones take a few steps.
  // Beyond 150 a single eigendecomposition-heavy step costs minutes.
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t m = n; m <= 4; ++m) {
        const CloneSpec spec(d, n, m);
        if (oracle::ipow(d, n + m) > 4096) continue;
        const std::size_t dim = sym_dimension(d, n) * sym_dimension(d, m);
        if (dim > 150) continue;
        CAPTURE(d);
        CAPTURE(n);
        CAPTURE(m);
        OptimizeOptions opts;
        opts.max_iters = dim <= 45 ? 20000 : 2;
        const auto r = optimize_channel(spec, opts);
        CHECK(r.best_value <= closed_form(spec) + 1e-3);
        if (dim <= 45) CHECK(r.converged);
      }
}

TEST_CASE("uniqueness probe") {
  const CloneSpec spec(2, 1, 2);
  const auto fixed = uniqueness_probe(spec, 0.0, Seed{1});
  CHECK(fixed.distance <= 1e-9);
  CHECK(std::abs(fixed.run.best_value - 2.0 / 3.0) <= 1e-9);
  for (std::uint64_t s = 0; s < 5; ++s) CHECK(uniqueness_probe(spec, 0.5, Seed{s}).distance <= 1e-2);
  const auto r = uniqueness_probe(CloneSpec(2, 2, 3), 0.5, Seed{9});
  CHECK(std::abs(r.run.best_value - 0.75) <= 1e-3);
  CHECK_THROWS(uniqueness_probe(spec, 1.5, Seed{0}));
}
