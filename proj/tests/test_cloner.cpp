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


#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "symclone/cloner.hpp"

using namespace symclone;

namespace {

std::vector<CloneSpec> grid(std::size_t d_max, std::size_t full_cap) {
  std::vector<CloneSpec> out;
  for (std::size_t d = 2; d <= d_max; ++d)
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t m = n; m <= 4; ++m)
        if (oracle::ipow(d, m) <= full_cap) out.emplace_back(d, n, m);
  return out;
}

double overlap(std::span<const Complex> q, const ComplexMatrix& rho) {
  return inner(q, rho * q).real();
}

}  // namespace

TEST_CASE("closed-form analytics") {
  const auto a = analytics(CloneSpec(2, 1, 2));
  CHECK(a.global_fidelity == Rational(2, 3));
  CHECK(a.black_cow == Rational(2, 3));
  CHECK(a.single_clone_fidelity == Rational(5, 6));
  CHECK(to_string(a.single_clone_fidelity) == "5/6");

  const auto b = analytics(CloneSpec(2, 1, 3));
  CHECK(b.global_fidelity == Rational(1, 2));
  CHECK(b.black_cow == Rational(5, 9));
  CHECK(b.single_clone_fidelity == Rational(7, 9));

  const auto c = analytics(CloneSpec(3, 1, 2));
  CHECK(c.global_fidelity == Rational(1, 2));
  CHECK(c.black_cow == Rational(5, 8));
  CHECK(c.single_clone_fidelity == Rational(3, 4));

  for (std::size_t d = 2; d <= 5; ++d)
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto e = analytics(CloneSpec(d, n, n));
      CHECK(e.global_fidelity == Rational(1));
      CHECK(e.black_cow == Rational(1));
      CHECK(e.single_clone_fidelity == Rational(1));
      CHECK(to_string(e.black_cow) == "1");
      for (std::size_t m = n; m <= 8; ++m) {
        const auto f = analytics(CloneSpec(d, n, m));
        for (const auto& r : {f.global_fidelity, f.black_cow, f.single_clone_fidelity}) {
          CHECK(r > Rational(0));
          CHECK(r <= Rational(1));
        }
        CHECK(f.global_fidelity ==
              Rational(static_cast<std::int64_t>(oracle::binomial(d + n - 1, n)),
                       static_cast<std::int64_t>(oracle::binomial(d + m - 1, m))));
      }
    }
}

TEST_CASE("monotone trends and the large-M limit") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t m = n; m < 12; ++m) {
        const auto now = analytics(CloneSpec(d, n, m));
        const auto next = analytics(CloneSpec(d, n, m + 1));
        CHECK(next.global_fidelity < now.global_fidelity);
        CHECK(next.single_clone_fidelity < now.single_clone_fidelity);
      }
      const double limit = static_cast<double>(n + 1) / static_cast<double>(n + d);
      const double at12 = to_double(analytics(CloneSpec(d, n, 12)).single_clone_fidelity);
      CHECK(std::abs(at12 - limit) <= static_cast<double>(d) / 12.0);
    }
}

TEST_CASE("Black Cow multiplicativity is exact") {
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t n = 1; n <= 5; ++n)
      for (std::size_t m = n + 1; m <= 5; ++m)
        for (std::size_t r = m + 1; r <= 5; ++r)
          CHECK(black_cow_factor(d, n, m) * black_cow_factor(d, m, r) == black_cow_factor(d, n, r));
}

TEST_CASE("optimal_cloner examples") {
  const auto id = optimal_cloner(CloneSpec(2, 1, 1));
  REQUIRE(id.kraus().size() == 1);
  CHECK(distance(id.kraus()[0], ComplexMatrix::identity(2)) <= 1e-15);

  const auto t = optimal_cloner(CloneSpec(2, 1, 2));
  const ComplexMatrix p0 = {{1, 0}, {0, 0}};
  const double expect[] = {2.0 / 3.0, 1.0 / 3.0, 0.0};
  CHECK(distance(apply(t, p0), ComplexMatrix::diagonal(expect)) <= 1e-12);

  for (const auto& spec : {CloneSpec(2, 1, 2), CloneSpec(2, 2, 3), CloneSpec(3, 1, 2)}) {
    const auto out = apply(optimal_cloner(spec), maximally_mixed_sym(spec.d(), spec.n()));
    CHECK(distance(out, maximally_mixed_sym(spec.d(), spec.m())) <= 1e-12);
  }
  CHECK_THROWS_AS(optimal_cloner(CloneSpec(4, 1, 7)), CapExceeded);
}

TEST_CASE("Kraus operators match the isometry product") {
  for (const auto& spec : grid(4, 256)) {
    const auto t = optimal_cloner(spec);
    const std::size_t d = spec.d();
    const std::size_t extra = spec.m() - spec.n();
    const auto bn = symmetric_basis(d, spec.n());
    const auto bm = symmetric_basis(d, spec.m());
    const double ratio = static_cast<double>(bn.dim()) / static_cast<double>(bm.dim());
    REQUIRE(t.kraus().size() == oracle::ipow(d, extra));
    for (std::size_t i = 0; i < t.kraus().size(); ++i) {
      ComplexMatrix ket(oracle::ipow(d, extra), 1);
      ket(i, 0) = 1.0;
      auto expect = bm.isometry().adjoint() * oracle::naive_kron(bn.isometry(), ket);
      expect *= std::sqrt(ratio);
      CHECK(distance(t.kraus()[i], expect) <= 1e-12);
    }
    CHECK(verify_cptp(t, 1e-9).pass);
  }
}

TEST_CASE("cloner matches the full-space formula") {
  for (const auto& spec : grid(3, 81)) {
    const auto t = optimal_cloner(spec);
    const auto bn = symmetric_basis(spec.d(), spec.n());
    const auto bm = symmetric_basis(spec.d(), spec.m());
    for (std::uint64_t s = 0; s < 3; ++s) {
      const auto rho = random_density_matrix(bn.dim(), Seed{s});
      const auto lhs = bm.isometry() * apply(t, rho) * bm.isometry().adjoint();
      const auto rhs = oracle::full_space_cloner(bn.isometry() * rho * bn.isometry().adjoint(),
                                                 spec.d(), spec.n(), spec.m());
      CHECK(distance(lhs, rhs) <= 1e-12);
    }
  }
}

TEST_CASE("fidelity is the closed form for every pure input") {
  for (const auto& spec : grid(3, 4096)) {
    if (oracle::ipow(spec.d(), spec.n() + spec.m()) > 4096) continue;
    const auto t = optimal_cloner(spec);
    const double closed = to_double(analytics(spec).global_fidelity);
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto phi = random_pure_state(spec.d(), Seed{s});
      const auto q = tensor_power_coords(phi, spec.m());
      CHECK(std::abs(overlap(q, apply(t, product_state_sym(phi, spec.n()))) - closed) <= 1e-10);
    }
  }
}

TEST_CASE("single_clone_reduction examples") {
  const auto id = optimal_cloner(CloneSpec(2, 1, 1));
  const auto sigma = product_state_sym(random_pure_state(2, Seed{1}), 1);
  CHECK(distance(single_clone_reduction(id, CloneSpec(2, 1, 1), sigma), sigma) <= 1e-14);

  const CloneSpec spec(2, 1, 2);
  const auto t = optimal_cloner(spec);
  const ComplexMatrix p0 = {{1, 0}, {0, 0}};
  const double expect[] = {5.0 / 6.0, 1.0 / 6.0};
  CHECK(distance(single_clone_reduction(t, spec, p0), ComplexMatrix::diagonal(expect)) <= 1e-12);
}

TEST_CASE("ladder reduction agrees with the embedding on the whole grid") {
  for (const auto& spec : grid(4, 4096)) {
    const auto t = optimal_cloner(spec);
    for (std::uint64_t s = 0; s < 2; ++s) {
      const auto rho = random_density_matrix(t.dim_in(), Seed{s});
      const auto ladder = single_clone_reduction(t, spec, rho);
      for (std::size_t site = 0; site < spec.m(); ++site)
        CHECK(distance(ladder, single_clone_reduction_embedded(t, spec, rho, site)) <= 1e-10);
    }
  }
}

TEST_CASE("black_cow_estimate examples") {
  const auto a = black_cow_estimate(optimal_cloner(CloneSpec(2, 1, 2)), CloneSpec(2, 1, 2), 50, Seed{1});
  CHECK(std::abs(a.mean - 2.0 / 3.0) <= 1e-9);
  CHECK(a.spread <= 1e-9);
  const auto b = black_cow_estimate(optimal_cloner(CloneSpec(3, 1, 2)), CloneSpec(3, 1, 2), 50, Seed{2});
  CHECK(std::abs(b.mean - 5.0 / 8.0) <= 1e-9);
  const auto c = black_cow_estimate(optimal_cloner(CloneSpec(3, 2, 2)), CloneSpec(3, 2, 2), 20, Seed{3});
  CHECK(std::abs(c.mean - 1.0) <= 1e-10);
  CHECK_THROWS(black_cow_estimate(optimal_cloner(CloneSpec(2, 1, 2)), CloneSpec(2, 1, 2), 0, Seed{0}));
}

TEST_CASE("mixed-input law") {
  for (const auto& spec : grid(3, 4096)) {
    const auto t = optimal_cloner(spec);
    const double gamma = to_double(analytics(spec).black_cow);
    const auto tau = ComplexMatrix::identity(spec.d()) * Complex(1.0 / static_cast<double>(spec.d()));
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto rho = random_density_matrix(t.dim_in(), Seed{300 + s});
      const auto lhs = single_clone_reduction(t, spec, rho);
      const auto rhs = one_site_reduction(rho, spec.d(), spec.n()) * Complex(gamma) +
                       tau * ((1.0 - gamma) * rho.trace());
      CHECK(distance(lhs, rhs) <= 1e-9);
    }
  }
}

TEST_CASE("concatenation") {
  for (const auto& [d, n, m, r] : {std::array<std::size_t, 4>{2, 1, 2, 3},
                                  std::array<std::size_t, 4>{2, 1, 2, 4},
                                  std::array<std::size_t, 4>{3, 1, 2, 3}}) {
    const auto staged = compose(optimal_cloner(CloneSpec(d, m, r)), optimal_cloner(CloneSpec(d, n, m)));
    CHECK(choi_distance(choi(staged), choi(optimal_cloner(CloneSpec(d, n, r)))) <= 1e-9);
  }
}

TEST_CASE("single-clone fidelity approaches its limit numerically") {
  const ComplexVector e0 = {1, 0};
  double previous = 2.0;
  for (std::size_t m = 1; m <= 12; ++m) {
    const CloneSpec spec(2, 1, m);
    const auto r = single_clone_reduction(optimal_cloner(spec), spec, product_state_sym(e0, 1));
    const double f = r(0, 0).real();
    CHECK(std::abs(f - to_double(analytics(spec).single_clone_fidelity)) <= 1e-10);
    CHECK(f < previous);
    previous = f;
  }
  CHECK(std::abs(previous - 2.0 / 3.0) <= 2.0 / 12.0);
}
