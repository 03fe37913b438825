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

// Completely positive trace-preserving maps.
//
// Choi matrices are ordered (input x output):
//   C = sum_ij |i><j| (x) T(|i><j|),
// so trace preservation reads Tr_out C = I_in.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "symclone/linalg.hpp"
#include "symclone/random.hpp"
#include "symclone/symmetric.hpp"

namespace symclone {

inline constexpr std::size_t kDefaultMaxKraus = 4096;
inline constexpr double kTraceTol = 1e-10;

/// Hermitian, positive, unit-trace matrix. Validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix pure(std::span<const Complex> psi);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// Kraus representation. Construction checks shapes only; trace
/// preservation is what verify_cptp reports on.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

  static QuantumChannel identity(std::size_t dim);
  static QuantumChannel unitary(ComplexMatrix u);
  /// rho -> tr(rho) * target, for every input of dimension dim_in.
  static QuantumChannel replacement(std::size_t dim_in, const ComplexMatrix& target);

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }

  /// sum_k K^H K
  ComplexMatrix kraus_gram() const;

 private:
  std::vector<ComplexMatrix> kraus_;
  std::size_t dim_in_;
  std::size_t dim_out_;
};

struct ChoiMatrix {
  ComplexMatrix matrix;
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;

  ChoiMatrix() = default;
  ChoiMatrix(ComplexMatrix m, std::size_t in, std::size_t out);
};

ComplexMatrix apply(const QuantumChannel& t, const ComplexMatrix& rho);
DensityMatrix apply(const QuantumChannel& t, const DensityMatrix& rho);
/// Channel action read off the Choi matrix: Tr_in[(rho^T (x) I) C].
ComplexMatrix apply(const ChoiMatrix& c, const ComplexMatrix& rho);

ChoiMatrix choi(const QuantumChannel& t);

/// Minimal Kraus set from the spectral decomposition of a Choi matrix.
/// Eigenvalues at or below `cutoff` are dropped.
QuantumChannel kraus_from_choi(const ChoiMatrix& c, double cutoff = 1e-13);

/// Tr_out C
ComplexMatrix trace_out_output(const ChoiMatrix& c);

double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b);

struct CptpReport {
  double min_choi_eigenvalue = 0.0;
  double tp_defect = 0.0;  // ||Tr_out C - I||_F
  bool pass = false;
};

CptpReport verify_cptp(const ChoiMatrix& c, double tol = kPsdTol);
CptpReport verify_cptp(const QuantumChannel& t, double tol = kPsdTol);

/// T2 after T1. Falls back to composing at the Choi level when the product
/// Kraus set would exceed max_kraus.
QuantumChannel compose(const QuantumChannel& t2, const QuantumChannel& t1,
                       std::size_t max_kraus = kDefaultMaxKraus);

/// Stacked-Kraus isometry. Rows are ordered (ancilla x output): block k of
/// the isometry is the k-th Kraus operator.
struct Dilation {
  ComplexMatrix isometry;
  std::size_t ancilla_dim = 0;
  std::size_t output_dim = 0;

  /// Tr_ancilla(V rho V^H)
  ComplexMatrix apply(const ComplexMatrix& rho) const;
};

Dilation stinespring(const QuantumChannel& t, double tol = kPsdTol);

/// Affine projection onto {Tr_out C = I}: C + ((I - Tr_out C) / d_out) (x) I.
ChoiMatrix project_trace_preserving(const ChoiMatrix& c);

/// Random CPTP map with `kraus_count` Ginibre Kraus operators renormalized
/// by (sum K^H K)^{-1/2}. Requires kraus_count * dim_out >= dim_in.
QuantumChannel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t kraus_count,
                              Seed seed);

/// Representation of U on a space of dimension `dim` built from K sites of
/// C^d: U^{xK} when dim == d^K, its Bose compression when dim == d[K].
ComplexMatrix rotation(const ComplexMatrix& u, std::size_t k, std::size_t dim,
                       std::size_t max_dim = kDefaultMaxDim);

/// Choi matrix of rho -> A^H T(B rho B^H) A with B, A the input and output
/// representations of U, i.e. one term of the Haar average.
ChoiMatrix rotated_choi(const ChoiMatrix& c, const ComplexMatrix& in_rep,
                        const ComplexMatrix& out_rep);

/// Haar average of the rotated channel over the given unitaries, in Choi
/// form, re-projected onto exact trace preservation.
ChoiMatrix twirl(const QuantumChannel& t, const CloneSpec& spec,
                 std::span<const ComplexMatrix> unitaries,
                 std::size_t max_dim = kDefaultMaxDim);

/// Monte Carlo Haar twirl with `samples` unitaries; sample i draws from
/// substream(seed, i) and partial sums are reduced pairwise.
ChoiMatrix twirl_mc(const QuantumChannel& t, const CloneSpec& spec, std::size_t samples,
                    Seed seed, std::size_t max_dim = kDefaultMaxDim);

/// max over a fixed probe set of 10 random input states of
/// ||T(B rho B^H) - A T(rho) A^H||_F.
double covariance_defect(const QuantumChannel& t, const CloneSpec& spec, const ComplexMatrix& u,
                         std::size_t max_dim = kDefaultMaxDim);

}  // namespace symclone
