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

// Bose (permutation-symmetric) subspace of (C^d)^{xN}.
//
// Basis vectors are labelled by occupation tuples (n_1, ..., n_d) with
// sum n_k = N, ordered lexicographically descending. The vector for n is the
// normalized uniform superposition of every word with n_k copies of letter k,
// so the isometry V into the full tensor power has real entries
// (N! / prod n_k!)^{-1/2} and V V^H is the symmetrizer.
//
// Full tensor-power indices are big-endian in the sites: site 0 is the most
// significant digit, matching kron(A_0, kron(A_1, ...)).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "symclone/linalg.hpp"

namespace symclone {

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OccupationIndex {
  std::vector<std::uint32_t> counts;

  std::uint32_t total() const;
  auto operator<=>(const OccupationIndex&) const = default;
};

/// Problem triple: d levels, N inputs, M outputs. Construction enforces
/// d >= 2 and 1 <= N <= M.
class CloneSpec {
 public:
  CloneSpec(std::size_t d, std::size_t n, std::size_t m);

  std::size_t d() const { return d_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

  bool operator==(const CloneSpec&) const = default;

 private:
  std::size_t d_;
  std::size_t n_;
  std::size_t m_;
};

/// d^k, saturating at UINT64_MAX.
std::uint64_t full_dimension(std::size_t d, std::size_t k);

/// Throws CapExceeded unless d^k <= max_dim.
void require_full_space(std::size_t d, std::size_t k, std::size_t max_dim, const char* who);

/// binomial(d + N - 1, N) in exact integer arithmetic; throws
/// std::overflow_error past 64 bits.
std::uint64_t sym_dimension(std::size_t d, std::size_t n);

/// N! / prod n_k!  (number of words with the given occupations).
std::uint64_t multinomial(const OccupationIndex& occ);

std::vector<OccupationIndex> occupation_basis(std::size_t d, std::size_t n);

/// Position of `occ` in occupation_basis(d, occ.total()).
std::size_t occupation_rank(const OccupationIndex& occ);

class SymmetricBasis {
 public:
  SymmetricBasis(std::size_t d, std::size_t n, std::size_t max_dim = kDefaultMaxDim);

  std::size_t d() const { return d_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return occupations_.size(); }
  const std::vector<OccupationIndex>& occupations() const { return occupations_; }
  /// d^N x d[N] real isometry.
  const ComplexMatrix& isometry() const { return isometry_; }
  /// V V^H, the orthogonal projection onto the Bose subspace.
  ComplexMatrix symmetrizer() const;

 private:
  std::size_t d_;
  std::size_t n_;
  std::vector<OccupationIndex> occupations_;
  ComplexMatrix isometry_;
};

inline SymmetricBasis symmetric_basis(std::size_t d, std::size_t n,
                                      std::size_t max_dim = kDefaultMaxDim) {
  return SymmetricBasis(d, n, max_dim);
}

/// Coordinates of phi^{xN} in the occupation basis:
/// sqrt(N! / prod n_k!) prod phi_k^{n_k}. Rejects inputs off the unit sphere.
ComplexVector tensor_power_coords(std::span<const Complex> phi, std::size_t n);

/// phi^{xN} in the full d^N space.
ComplexVector tensor_power(std::span<const Complex> phi, std::size_t n,
                           std::size_t max_dim = kDefaultMaxDim);

/// tau_N in symmetric coordinates: I / d[N].
ComplexMatrix maximally_mixed_sym(std::size_t d, std::size_t n);

/// Integral of (|phi><phi|)^{xK} over the uniform measure: s_K / d[K].
ComplexMatrix haar_moment(std::size_t d, std::size_t k, std::size_t max_dim = kDefaultMaxDim);

/// U^{xK} compressed to the Bose subspace, V^H U^{xK} V, without forming
/// the full tensor power.
ComplexMatrix symmetric_power(const ComplexMatrix& u, std::size_t k,
                              std::size_t max_dim = kDefaultMaxDim);

/// One-site restriction of an operator given in symmetric K-particle
/// coordinates, computed with the occupation ladder
/// (1/K) tr(rho a_l^H a_k).
ComplexMatrix one_site_reduction(const ComplexMatrix& rho_sym, std::size_t d, std::size_t k);

}  // namespace symclone
