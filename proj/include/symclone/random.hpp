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

#pragma once

#include <complex>
#include <cstdint>
#include <limits>

namespace symclone {

struct Seed {
  std::uint64_t value = 0;
  bool operator==(const Seed&) const = default;
};

/// Derives an independent sub-stream key from (seed, index). Monte Carlo loops
/// key sample i by substream(seed, i) so any partition of the index range
/// reproduces the same draws.
Seed substream(Seed seed, std::uint64_t index);

/// Counter-based generator: the k-th output is a bijective mix of
/// (key, k), so a stream is fully described by its key and position.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(Seed seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform on the open interval (0, 1).
  double uniform();
  /// Standard normal via Box-Muller.
  double gaussian();
  /// Complex normal with E|z|^2 = 1.
  std::complex<double> complex_gaussian();

  std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace symclone
