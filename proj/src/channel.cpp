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

#include "symclone/channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace symclone {

namespace {

constexpr Seed kCovarianceProbeSeed{0xC0FA7A1CEULL};
constexpr std::size_t kCovarianceProbes = 10;

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw DimensionError("DensityMatrix: matrix is " + shape(m_));
  if (!is_hermitian(m_)) throw DimensionError("DensityMatrix: matrix is not Hermitian");
  if (std::abs(m_.trace() - 1.0) > kTraceTol)
    throw DimensionError("DensityMatrix: trace " + std::to_string(m_.trace().real()) + " != 1");
  if (const double lo = min_eigenvalue(m_); lo < -kPsdTol)
    throw DimensionError("DensityMatrix: negative eigenvalue " + std::to_string(lo));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi) {
  return DensityMatrix(outer(psi, psi));
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw DimensionError("QuantumChannel: empty Kraus set");
  dim_out_ = kraus_.front().rows();
  dim_in_ = kraus_.front().cols();
  if (dim_in_ == 0 || dim_out_ == 0) throw DimensionError("QuantumChannel: zero dimension");
  for (const auto& k : kraus_)
    if (k.rows() != dim_out_ || k.cols() != dim_in_)
      throw DimensionError("QuantumChannel: Kraus operators disagree in shape (" + shape(k) +
                           " vs " + std::to_string(dim_out_) + "x" + std::to_string(dim_in_) +
                           ")");
}

QuantumChannel QuantumChannel::identity(std::size_t dim) {
  return QuantumChannel({ComplexMatrix::identity(dim)});
}

QuantumChannel QuantumChannel::unitary(ComplexMatrix u) { return QuantumChannel({std::move(u)}); }

QuantumChannel QuantumChannel::replacement(std::size_t dim_in, const ComplexMatrix& target) {
  // Kraus set sqrt(l) |v><i| over the eigenpairs (l, v) of target.
  const auto es = eigh(target);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t e = 0; e < es.values.size(); ++e) {
    if (es.values[e] <= 1e-15) continue;
    const double w = std::sqrt(es.values[e]);
    for (std::size_t i = 0; i < dim_in; ++i) {
      ComplexMatrix k(target.rows(), dim_in);
      for (std::size_t r = 0; r < target.rows(); ++r) k(r, i) = w * es.vectors(r, e);
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel(std::move(kraus));
}

ComplexMatrix QuantumChannel::kraus_gram() const {
  ComplexMatrix g(dim_in_, dim_in_);
  for (const auto& k : kraus_) g += k.adjoint() * k;
  return g;
}

ChoiMatrix::ChoiMatrix(ComplexMatrix m, std::size_t in, std::size_t out)
    : matrix(std::move(m)), dim_in(in), dim_out(out) {
  if (!matrix.is_square() || matrix.rows() != in * out)
    throw DimensionError("ChoiMatrix: matrix is " + shape(matrix) + ", expected side " +
                         std::to_string(in * out));
}

ComplexMatrix apply(const QuantumChannel& t, const ComplexMatrix& rho) {
  if (!rho.is_square() || rho.rows() != t.dim_in())
    throw DimensionError("apply: input is " + shape(rho) + ", channel expects " +
                         std::to_string(t.dim_in()));
  ComplexMatrix out(t.dim_out(), t.dim_out());
  for (const auto& k : t.kraus()) out += k * rho * k.adjoint();
  return out;
}

DensityMatrix apply(const QuantumChannel& t, const DensityMatrix& rho) {
  return DensityMatrix(apply(t, rho.matrix()));
}

ComplexMatrix apply(const ChoiMatrix& c, const ComplexMatrix& rho) {
  if (!rho.is_square() || rho.rows() != c.dim_in)
    throw DimensionError("apply: input is " + shape(rho) + ", Choi matrix expects " +
                         std::to_string(c.dim_in));
  // T(rho) = sum_ij rho[i, j] C_block(i, j)
  ComplexMatrix out(c.dim_out, c.dim_out);
  for (std::size_t i = 0; i < c.dim_in; ++i)
    for (std::size_t j = 0; j < c.dim_in; ++j) {
      const Complex w = rho(i, j);
      if (w == Complex{}) continue;
      for (std::size_t a = 0; a < c.dim_out; ++a)
        for (std::size_t b = 0; b < c.dim_out; ++b)
          out(a, b) += w * c.matrix(i * c.dim_out + a, j * c.dim_out + b);
    }
  return out;
}

ChoiMatrix choi(const QuantumChannel& t) {
  const std::size_t din = t.dim_in();
  const std::size_t dout = t.dim_out();
  // C[(i,a),(j,b)] = sum_k K[a,i] conj(K[b,j])
  ComplexMatrix c(din * dout, din * dout);
  for (const auto& k : t.kraus())
    for (std::size_t i = 0; i < din; ++i)
      for (std::size_t a = 0; a < dout; ++a) {
        const Complex kai = k(a, i);
        if (kai == Complex{}) continue;
        for (std::size_t j = 0; j < din; ++j)
          for (std::size_t b = 0; b < dout; ++b)
            c(i * dout + a, j * dout + b) += kai * std::conj(k(b, j));
      }
  return ChoiMatrix(std::move(c), din, dout);
}

QuantumChannel kraus_from_choi(const ChoiMatrix& c, double cutoff) {
  const auto es = eigh(c.matrix);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t e = es.values.size(); e-- > 0;) {
    if (es.values[e] <= cutoff) break;
    const double w = std::sqrt(es.values[e]);
    ComplexMatrix k(c.dim_out, c.dim_in);
    for (std::size_t i = 0; i < c.dim_in; ++i)
      for (std::size_t a = 0; a < c.dim_out; ++a) k(a, i) = w * es.vectors(i * c.dim_out + a, e);
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) throw DimensionError("kraus_from_choi: Choi matrix has no positive part");
  return QuantumChannel(std::move(kraus));
}

ComplexMatrix trace_out_output(const ChoiMatrix& c) {
  const std::array<std::size_t, 2> dims{c.dim_in, c.dim_out};
  const std::array<std::size_t, 1> keep{0};
  return partial_trace(c.matrix, dims, keep);
}

double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
  if (a.dim_in != b.dim_in || a.dim_out != b.dim_out)
    throw DimensionError("choi_distance: channels have different dimensions");
  return distance(a.matrix, b.matrix);
}

CptpReport verify_cptp(const ChoiMatrix& c, double tol) {
  CptpReport report;
  // Spectrum of the Hermitian part; a non-Hermitian Choi matrix fails outright.
  ComplexMatrix herm = c.matrix + c.matrix.adjoint();
  herm *= 0.5;
  report.min_choi_eigenvalue = min_eigenvalue(herm);
  report.tp_defect = distance(trace_out_output(c), ComplexMatrix::identity(c.dim_in));
  report.pass = is_hermitian(c.matrix) && report.min_choi_eigenvalue >= -tol &&
                report.tp_defect <= tol;
  return report;
}

CptpReport verify_cptp(const QuantumChannel& t, double tol) { return verify_cptp(choi(t), tol); }

QuantumChannel compose(const QuantumChannel& t2, const QuantumChannel& t1, std::size_t max_kraus) {
  if (t1.dim_out() != t2.dim_in())
    throw DimensionError("compose: inner dimensions differ (" + std::to_string(t1.dim_out()) +
                         " vs " + std::to_string(t2.dim_in()) + ")");
  const auto product = [](const QuantumChannel& a, const QuantumChannel& b) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(a.kraus().size() * b.kraus().size());
    for (const auto& k2 : a.kraus())
      for (const auto& k1 : b.kraus()) kraus.push_back(k2 * k1);
    return QuantumChannel(std::move(kraus));
  };
  if (t2.kraus().size() * t1.kraus().size() <= max_kraus) return product(t2, t1);

  const auto r1 = kraus_from_choi(choi(t1));
  const auto r2 = kraus_from_choi(choi(t2));
  if (r2.kraus().size() * r1.kraus().size() <= max_kraus) return product(r2, r1);

  // Choi level: C = sum_ij |i><j| (x) T2(T1(|i><j|)).
  const std::size_t din = r1.dim_in();
  const std::size_t dout = r2.dim_out();
  ComplexMatrix c(din * dout, din * dout);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j) {
      ComplexMatrix unit(din, din);
      unit(i, j) = 1.0;
      const auto block = apply(r2, apply(r1, unit));
      for (std::size_t a = 0; a < dout; ++a)
        for (std::size_t b = 0; b < dout; ++b) c(i * dout + a, j * dout + b) = block(a, b);
    }
  auto reduced = kraus_from_choi(ChoiMatrix(std::move(c), din, dout));
  if (reduced.kraus().size() > max_kraus)
    throw CapExceeded("compose: minimal Kraus rank exceeds cap " + std::to_string(max_kraus));
  return reduced;
}

ComplexMatrix Dilation::apply(const ComplexMatrix& rho) const {
  const auto full = isometry * rho * isometry.adjoint();
  const std::array<std::size_t, 2> dims{ancilla_dim, output_dim};
  const std::array<std::size_t, 1> keep{1};
  return partial_trace(full, dims, keep);
}

Dilation stinespring(const QuantumChannel& t, double tol) {
  const double tp = distance(t.kraus_gram(), ComplexMatrix::identity(t.dim_in()));
  if (tp > tol)
    throw DimensionError("stinespring: channel is not trace preserving (defect " +
                         std::to_string(tp) + ")");
  const std::size_t nk = t.kraus().size();
  Dilation out;
  out.ancilla_dim = nk;
  out.output_dim = t.dim_out();
  out.isometry = ComplexMatrix(nk * t.dim_out(), t.dim_in());
  for (std::size_t k = 0; k < nk; ++k)
    for (std::size_t r = 0; r < t.dim_out(); ++r)
      for (std::size_t c = 0; c < t.dim_in(); ++c)
        out.isometry(k * t.dim_out() + r, c) = t.kraus()[k](r, c);
  return out;
}

ChoiMatrix project_trace_preserving(const ChoiMatrix& c) {
  ComplexMatrix residual = ComplexMatrix::identity(c.dim_in) - trace_out_output(c);
  residual *= 1.0 / static_cast<double>(c.dim_out);
  ChoiMatrix out = c;
  for (std::size_t i = 0; i < c.dim_in; ++i)
    for (std::size_t j = 0; j < c.dim_in; ++j) {
      const Complex w = residual(i, j);
      for (std::size_t a = 0; a < c.dim_out; ++a) out.matrix(i * c.dim_out + a, j * c.dim_out + a) += w;
    }
  return out;
}

QuantumChannel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t kraus_count,
                              Seed seed) {
  if (kraus_count == 0) throw DimensionError("random_channel: need at least one Kraus operator");
  if (kraus_count * dim_out < dim_in)
    throw DimensionError("random_channel: kraus_count * dim_out must be at least dim_in");
  CounterRng rng(seed);
  std::vector<ComplexMatrix> kraus(kraus_count, ComplexMatrix(dim_out, dim_in));
  for (auto& k : kraus)
    for (auto& z : k.data()) z = rng.complex_gaussian();
  // K -> K S^{-1/2}, S = sum K^H K.
  const auto es = eigh(QuantumChannel(kraus).kraus_gram());
  ComplexMatrix inv_sqrt(dim_in, dim_in);
  for (std::size_t e = 0; e < dim_in; ++e) {
    const double w = 1.0 / std::sqrt(es.values[e]);
    for (std::size_t r = 0; r < dim_in; ++r)
      for (std::size_t s = 0; s < dim_in; ++s)
        inv_sqrt(r, s) += w * es.vectors(r, e) * std::conj(es.vectors(s, e));
  }
  for (auto& k : kraus) k = k * inv_sqrt;
  return QuantumChannel(std::move(kraus));
}

ComplexMatrix rotation(const ComplexMatrix& u, std::size_t k, std::size_t dim, std::size_t max_dim) {
  const std::size_t d = u.rows();
  if (full_dimension(d, k) == dim) {
    require_full_space(d, k, max_dim, "rotation");
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (std::size_t i = 0; i < k; ++i) out = kron(out, u, max_dim);
    return out;
  }
  if (sym_dimension(d, k) == dim) return symmetric_power(u, k, max_dim);
  throw DimensionError("rotation: dimension " + std::to_string(dim) + " is neither " +
                       std::to_string(d) + "^" + std::to_string(k) + " nor d[" +
                       std::to_string(k) + "]");
}

ChoiMatrix rotated_choi(const ChoiMatrix& c, const ComplexMatrix& in_rep,
                        const ComplexMatrix& out_rep) {
  // (B^T (x) A^H) C (conj(B) (x) A)
  const auto left = kron(in_rep.transpose(), out_rep.adjoint(), c.matrix.rows());
  const auto right = kron(in_rep.conjugate(), out_rep, c.matrix.rows());
  return ChoiMatrix(left * c.matrix * right, c.dim_in, c.dim_out);
}

namespace {

void check_twirl_dims(const QuantumChannel& t, const CloneSpec& spec) {
  if (t.dim_in() != sym_dimension(spec.d(), spec.n()) ||
      t.dim_out() != sym_dimension(spec.d(), spec.m()))
    throw DimensionError("twirl: channel must map symmetric-N to symmetric-M coordinates");
}

template <typename Term>
ComplexMatrix pairwise_sum(std::size_t lo, std::size_t hi, const Term& term) {
  if (hi - lo == 1) return term(lo);
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(lo, mid, term) + pairwise_sum(mid, hi, term);
}

}  // namespace

ChoiMatrix twirl(const QuantumChannel& t, const CloneSpec& spec,
                 std::span<const ComplexMatrix> unitaries, std::size_t max_dim) {
  check_twirl_dims(t, spec);
  if (unitaries.empty()) throw DimensionError("twirl: need at least one unitary");
  const auto c = choi(t);
  auto sum = pairwise_sum(0, unitaries.size(), [&](std::size_t i) {
    return rotated_choi(c, symmetric_power(unitaries[i], spec.n(), max_dim),
                        symmetric_power(unitaries[i], spec.m(), max_dim))
        .matrix;
  });
  sum *= 1.0 / static_cast<double>(unitaries.size());
  return project_trace_preserving(ChoiMatrix(std::move(sum), c.dim_in, c.dim_out));
}

ChoiMatrix twirl_mc(const QuantumChannel& t, const CloneSpec& spec, std::size_t samples, Seed seed,
                    std::size_t max_dim) {
  check_twirl_dims(t, spec);
  if (samples < 1) throw std::invalid_argument("twirl_mc: sample count must be at least 1");
  const auto c = choi(t);
  auto sum = pairwise_sum(0, samples, [&](std::size_t i) {
    const auto u = haar_unitary(spec.d(), substream(seed, i));
    return rotated_choi(c, symmetric_power(u, spec.n(), max_dim),
                        symmetric_power(u, spec.m(), max_dim))
        .matrix;
  });
  sum *= 1.0 / static_cast<double>(samples);
  return project_trace_preserving(ChoiMatrix(std::move(sum), c.dim_in, c.dim_out));
}

double covariance_defect(const QuantumChannel& t, const CloneSpec& spec, const ComplexMatrix& u,
                         std::size_t max_dim) {
  if (!u.is_square() || u.rows() != spec.d())
    throw DimensionError("covariance_defect: unitary must be d x d");
  const auto in_rep = rotation(u, spec.n(), t.dim_in(), max_dim);
  const auto out_rep = rotation(u, spec.m(), t.dim_out(), max_dim);
  double worst = 0.0;
  for (std::size_t p = 0; p < kCovarianceProbes; ++p) {
    const auto rho = random_density_matrix(t.dim_in(), substream(kCovarianceProbeSeed, p));
    const auto lhs = apply(t, in_rep * rho * in_rep.adjoint());
    const auto rhs = out_rep * apply(t, rho) * out_rep.adjoint();
    worst = std::max(worst, distance(lhs, rhs));
  }
  return worst;
}

}  // namespace symclone
