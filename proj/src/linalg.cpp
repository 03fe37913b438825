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

#include "symclone/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace symclone {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
  return ComplexMatrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("ComplexMatrix: shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("ComplexMatrix: shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("ComplexMatrix: inner dimensions differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw DimensionError("ComplexMatrix: matrix-vector size mismatch");
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("inner: size mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexMatrix out(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = a[i] * std::conj(b[j]);
  return out;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("distance: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(s);
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw DimensionError("trace_product: shape mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim)
    throw CapExceeded("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " exceeds dimension cap " + std::to_string(max_dim));
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  return out;
}

namespace {

std::size_t checked_product(const ComplexMatrix& x, std::span<const std::size_t> dims,
                            const char* who) {
  std::size_t total = 1;
  for (auto d : dims) {
    if (d == 0) throw DimensionError(std::string(who) + ": zero factor dimension");
    total *= d;
  }
  if (!x.is_square() || total != x.rows())
    throw DimensionError(std::string(who) + ": factor dimensions multiply to " +
                         std::to_string(total) + " but matrix is " + std::to_string(x.rows()) +
                         "x" + std::to_string(x.cols()));
  return total;
}

std::vector<bool> factor_mask(std::span<const std::size_t> indices, std::size_t n,
                              const char* who) {
  std::vector<bool> mask(n, false);
  for (auto k : indices) {
    if (k >= n)
      throw DimensionError(std::string(who) + ": factor index " + std::to_string(k) +
                           " out of range");
    mask[k] = true;
  }
  return mask;
}

// Offsets into the full index for every multi-index over the selected factors.
std::vector<std::size_t> offsets(std::span<const std::size_t> dims, const std::vector<bool>& mask,
                                 bool selected) {
  std::vector<std::size_t> stride(dims.size());
  std::size_t s = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    stride[k] = s;
    s *= dims[k];
  }
  std::vector<std::size_t> out{0};
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (mask[k] != selected) continue;
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[k]);
    for (auto base : out)
      for (std::size_t v = 0; v < dims[k]; ++v) next.push_back(base + v * stride[k]);
    out = std::move(next);
  }
  return out;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  checked_product(rho, dims, "partial_trace");
  const auto mask = factor_mask(keep, dims.size(), "partial_trace");
  const auto kept = offsets(dims, mask, true);
  const auto traced = offsets(dims, mask, false);
  ComplexMatrix out(kept.size(), kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t c = 0; c < kept.size(); ++c) {
      Complex s = 0.0;
      for (auto t : traced) s += rho(kept[r] + t, kept[c] + t);
      out(r, c) = s;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& x, std::span<const std::size_t> dims,
                                std::span<const std::size_t> subset) {
  checked_product(x, dims, "partial_transpose");
  const auto mask = factor_mask(subset, dims.size(), "partial_transpose");
  // Full index = selected offset + unselected offset; the transpose swaps the
  // selected parts of row and column.
  const auto sel = offsets(dims, mask, true);
  const auto rest = offsets(dims, mask, false);
  ComplexMatrix out(x.rows(), x.cols());
  for (auto ra : rest)
    for (auto ca : rest)
      for (auto rs : sel)
        for (auto cs : sel) out(ra + rs, ca + cs) = x(ra + cs, ca + rs);
  return out;
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermiticity_defect: matrix is not square");
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s += std::norm(a(r, c) - std::conj(a(c, r)));
  return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
  return a.is_square() && hermiticity_defect(a) <= rel_tol * std::max(1.0, a.frobenius_norm());
}

Eigensystem eigh(const ComplexMatrix& h) {
  if (!is_hermitian(h))
    throw DimensionError("eigh: input is not Hermitian within tolerance");
  const auto n = static_cast<Eigen::Index>(h.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = h(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: solver did not converge");
  Eigensystem out;
  out.values.resize(h.rows());
  out.vectors = ComplexMatrix(h.rows(), h.rows());
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = solver.eigenvalues()(i);
    for (Eigen::Index r = 0; r < n; ++r) out.vectors(r, i) = solver.eigenvectors()(r, i);
  }
  return out;
}

ComplexMatrix psd_part(const ComplexMatrix& h) {
  if (!is_hermitian(h))
    throw DimensionError("psd_part: input is not Hermitian within tolerance");
  const auto n = static_cast<Eigen::Index>(h.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = h(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("psd_part: solver did not converge");
  // Eigenvalues ascend, so the positive part is a trailing block.
  Eigen::Index first = n;
  while (first > 0 && solver.eigenvalues()(first - 1) > 0.0) --first;
  const Eigen::Index k = n - first;
  const Eigen::MatrixXcd v = solver.eigenvectors().rightCols(k);
  const Eigen::MatrixXcd p = v * solver.eigenvalues().tail(k).asDiagonal() * v.adjoint();
  ComplexMatrix out(h.rows(), h.rows());
  for (Eigen::Index r = 0; r < n; ++r) {
    out(r, r) = p(r, r).real();
    for (Eigen::Index c = r + 1; c < n; ++c) {
      out(r, c) = 0.5 * (p(r, c) + std::conj(p(c, r)));
      out(c, r) = std::conj(out(r, c));
    }
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& h) {
  const auto es = eigh(h);
  return es.values.empty() ? 0.0 : es.values.front();
}

double max_eigenvalue(const ComplexMatrix& h) {
  const auto es = eigh(h);
  return es.values.empty() ? 0.0 : es.values.back();
}

ComplexMatrix haar_unitary(std::size_t d, Seed seed) {
  if (d == 0) throw DimensionError("haar_unitary: d must be positive");
  CounterRng rng(seed);
  std::vector<ComplexVector> cols(d, ComplexVector(d));
  for (auto& col : cols)
    for (auto& z : col) z = rng.complex_gaussian();
  // Modified Gram-Schmidt with one reorthogonalization pass.
  for (std::size_t j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k) {
        const Complex proj = inner(cols[k], cols[j]);
        for (std::size_t i = 0; i < d; ++i) cols[j][i] -= proj * cols[k][i];
      }
    const double nrm = norm(cols[j]);
    for (auto& z : cols[j]) z /= nrm;
  }
  ComplexMatrix u(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) u(i, j) = cols[j][i];
  return u;
}

ComplexVector random_pure_state(std::size_t d, Seed seed) {
  if (d == 0) throw DimensionError("random_pure_state: d must be positive");
  CounterRng rng(seed);
  ComplexVector v(d);
  for (auto& z : v) z = rng.complex_gaussian();
  const double nrm = norm(v);
  for (auto& z : v) z /= nrm;
  return v;
}

ComplexMatrix random_density_matrix(std::size_t d, Seed seed) {
  if (d == 0) throw DimensionError("random_density_matrix: d must be positive");
  CounterRng rng(seed);
  ComplexMatrix g(d, d);
  for (auto& z : g.data()) z = rng.complex_gaussian();
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Exact Hermitian symmetry.
  for (std::size_t r = 0; r < d; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  return rho;
}

}  // namespace symclone
