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

#include "symclone/cloner.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace symclone {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational black_cow_factor(std::size_t d, std::size_t n, std::size_t m) {
  const auto di = static_cast<std::int64_t>(d);
  const auto ni = static_cast<std::int64_t>(n);
  const auto mi = static_cast<std::int64_t>(m);
  return Rational(ni, di + ni) * Rational(di + mi, mi);
}

ClonerAnalytics analytics(const CloneSpec& spec) {
  const auto dn = static_cast<std::int64_t>(sym_dimension(spec.d(), spec.n()));
  const auto dm = static_cast<std::int64_t>(sym_dimension(spec.d(), spec.m()));
  const Rational gamma = black_cow_factor(spec.d(), spec.n(), spec.m());
  const Rational one(1);
  return ClonerAnalytics{
      .spec = spec,
      .global_fidelity = Rational(dn, dm),
      .black_cow = gamma,
      .single_clone_fidelity = gamma + (one - gamma) / static_cast<std::int64_t>(spec.d()),
  };
}

QuantumChannel optimal_cloner(const CloneSpec& spec, std::size_t max_dim) {
  const std::size_t d = spec.d();
  require_full_space(d, spec.m(), max_dim, "optimal_cloner");
  const auto in_basis = occupation_basis(d, spec.n());
  const auto out_basis = occupation_basis(d, spec.m());
  const double ratio =
      static_cast<double>(in_basis.size()) / static_cast<double>(out_basis.size());

  // V_M^H (V_N (x) |i>) only couples occupation a to a + occ(i), with weight
  // mult(a) * (mult(a) mult(a + occ(i)))^{-1/2}.
  const std::size_t extra = spec.m() - spec.n();
  const std::size_t words = full_dimension(d, extra);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(words);
  for (std::size_t w = 0; w < words; ++w) {
    std::vector<std::uint32_t> appended(d, 0);
    for (std::size_t rest = w, k = 0; k < extra; ++k, rest /= d) ++appended[rest % d];
    ComplexMatrix b(out_basis.size(), in_basis.size());
    for (std::size_t a = 0; a < in_basis.size(); ++a) {
      OccupationIndex target = in_basis[a];
      for (std::size_t k = 0; k < d; ++k) target.counts[k] += appended[k];
      const double mult_a = static_cast<double>(multinomial(in_basis[a]));
      const double mult_t = static_cast<double>(multinomial(target));
      b(occupation_rank(target), a) = std::sqrt(ratio * mult_a / mult_t);
    }
    kraus.push_back(std::move(b));
  }
  return QuantumChannel(std::move(kraus));
}

ComplexMatrix product_state_sym(std::span<const Complex> phi, std::size_t k) {
  const auto p = tensor_power_coords(phi, k);
  return outer(p, p);
}

namespace {

void check_cloner_dims(const QuantumChannel& t, const CloneSpec& spec, const ComplexMatrix& rho) {
  if (t.dim_in() != sym_dimension(spec.d(), spec.n()) ||
      t.dim_out() != sym_dimension(spec.d(), spec.m()))
    throw DimensionError("single_clone_reduction: channel must map d[N] -> d[M] coordinates");
  if (!rho.is_square() || rho.rows() != t.dim_in())
    throw DimensionError("single_clone_reduction: input state has the wrong dimension");
}

}  // namespace

ComplexMatrix single_clone_reduction(const QuantumChannel& t, const CloneSpec& spec,
                                     const ComplexMatrix& rho, std::size_t max_dim) {
  check_cloner_dims(t, spec, rho);
  require_full_space(spec.d(), spec.m(), max_dim, "single_clone_reduction");
  return one_site_reduction(apply(t, rho), spec.d(), spec.m());
}

ComplexMatrix single_clone_reduction_embedded(const QuantumChannel& t, const CloneSpec& spec,
                                              const ComplexMatrix& rho, std::size_t site,
                                              std::size_t max_dim) {
  check_cloner_dims(t, spec, rho);
  if (site >= spec.m()) throw DimensionError("single_clone_reduction_embedded: site out of range");
  const SymmetricBasis out_basis(spec.d(), spec.m(), max_dim);
  const auto& v = out_basis.isometry();
  const auto full = v * apply(t, rho) * v.adjoint();
  const std::vector<std::size_t> dims(spec.m(), spec.d());
  const std::size_t keep[] = {site};
  return partial_trace(full, dims, keep);
}

BlackCowEstimate black_cow_estimate(const QuantumChannel& t, const CloneSpec& spec,
                                    std::size_t probes, Seed seed, std::size_t max_dim) {
  if (probes < 1) throw std::invalid_argument("black_cow_estimate: need at least one probe");
  const double inv_d = 1.0 / static_cast<double>(spec.d());
  double sum = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t p = 0; p < probes; ++p) {
    const auto phi = random_pure_state(spec.d(), substream(seed, p));
    const auto r = single_clone_reduction(t, spec, product_state_sym(phi, spec.n()), max_dim);
    const double overlap = inner(phi, r * std::span<const Complex>(phi)).real();
    const double gamma = (overlap - inv_d) / (1.0 - inv_d);
    sum += gamma;
    lo = p == 0 ? gamma : std::min(lo, gamma);
    hi = p == 0 ? gamma : std::max(hi, gamma);
  }
  return {sum / static_cast<double>(probes), hi - lo, probes};
}

}  // namespace symclone
