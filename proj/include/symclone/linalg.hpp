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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "symclone/random.hpp"

namespace symclone {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Largest matrix side length any operation may allocate unless told otherwise.
inline constexpr std::size_t kDefaultMaxDim = 4096;

/// Relative Hermiticity tolerance: ||A - A^H||_F <= tol * max(1, ||A||_F).
inline constexpr double kHermitianTol = 1e-10;
/// Smallest admissible eigenvalue of a matrix that should be positive.
inline constexpr double kPsdTol = 1e-9;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a requested allocation would exceed the configured dimension
/// cap, i.e. the parameters are outside desk scale.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

/// a^H b
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);
/// |a><b|
ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

/// Frobenius distance ||a - b||_F.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(A B) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t max_dim = kDefaultMaxDim);
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);

/// Traces out every tensor factor not listed in `keep`. Kept factors appear
/// in ascending index order. An empty `keep` yields the 1x1 total trace.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Transposes the tensor factors listed in `subset`.
ComplexMatrix partial_transpose(const ComplexMatrix& x, std::span<const std::size_t> dims,
                                std::span<const std::size_t> subset);

double hermiticity_defect(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double rel_tol = kHermitianTol);

struct Eigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are eigenvectors
};

/// Spectral decomposition of a Hermitian matrix. Throws DimensionError for
/// non-square or non-Hermitian input.
Eigensystem eigh(const ComplexMatrix& h);

/// Nearest positive semidefinite matrix in Frobenius norm: negative
/// eigenvalues clipped to zero. Exactly Hermitian.
ComplexMatrix psd_part(const ComplexMatrix& h);

double min_eigenvalue(const ComplexMatrix& h);
double max_eigenvalue(const ComplexMatrix& h);

/// Haar-distributed unitary: Gram-Schmidt of a complex Ginibre matrix, which
/// leaves R with a positive diagonal so the distribution is exactly invariant.
ComplexMatrix haar_unitary(std::size_t d, Seed seed);

/// Uniformly distributed unit vector in C^d.
ComplexVector random_pure_state(std::size_t d, Seed seed);

/// Random density matrix G G^H / tr(G G^H) with G complex Ginibre, full rank.
ComplexMatrix random_density_matrix(std::size_t d, Seed seed);

}  // namespace symclone
