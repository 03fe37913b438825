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

// The optimal universal N -> M cloner
//
//   T(rho) = d[N]/d[M] s_M (rho (x) 1^{x(M-N)}) s_M
//
// held in symmetric coordinates (d[N] -> d[M]), plus its closed-form
// figures of merit.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "symclone/channel.hpp"
#include "symclone/symmetric.hpp"

namespace symclone {

// Compare only against Rational values: mixed rational/int comparisons
// recurse forever under C++20 rewritten operators in Boost <= 1.74.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

struct ClonerAnalytics {
  CloneSpec spec;
  Rational global_fidelity;        // d[N] / d[M]
  Rational black_cow;              // N/(d+N) * (d+M)/M
  Rational single_clone_fidelity;  // black_cow + (1 - black_cow)/d
};

ClonerAnalytics analytics(const CloneSpec& spec);

/// Black Cow factor of the optimal N -> M cloner.
Rational black_cow_factor(std::size_t d, std::size_t n, std::size_t m);

/// Kraus operators B_i = sqrt(d[N]/d[M]) V_M^H (V_N (x) |i>), one per
/// computational basis word i of the M-N appended sites, in word order.
/// Requires d^M <= max_dim.
QuantumChannel optimal_cloner(const CloneSpec& spec, std::size_t max_dim = kDefaultMaxDim);

/// p p^H with p = tensor_power_coords(phi, K): sigma^{xK} in symmetric coordinates.
ComplexMatrix product_state_sym(std::span<const Complex> phi, std::size_t k);

/// One-site restriction of T(rho), rho in symmetric-N coordinates, computed
/// with the occupation ladder. Requires d^M <= max_dim.
ComplexMatrix single_clone_reduction(const QuantumChannel& t, const CloneSpec& spec,
                                     const ComplexMatrix& rho,
                                     std::size_t max_dim = kDefaultMaxDim);

/// Same quantity through V_M T(rho) V_M^H and a partial trace onto `site`.
ComplexMatrix single_clone_reduction_embedded(const QuantumChannel& t, const CloneSpec& spec,
                                              const ComplexMatrix& rho, std::size_t site = 0,
                                              std::size_t max_dim = kDefaultMaxDim);

struct BlackCowEstimate {
  double mean = 0.0;
  double spread = 0.0;  // max - min over probes
  std::size_t probes = 0;
};

/// gamma_phi = (<phi| R(T(sigma^{xN})) |phi> - 1/d) / (1 - 1/d) averaged
/// over random pure phi.
BlackCowEstimate black_cow_estimate(const QuantumChannel& t, const CloneSpec& spec,
                                    std::size_t probes, Seed seed,
                                    std::size_t max_dim = kDefaultMaxDim);

}  // namespace symclone
