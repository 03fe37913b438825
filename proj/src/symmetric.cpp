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

#include "symclone/symmetric.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace symclone {

std::uint32_t OccupationIndex::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint32_t{0});
}

CloneSpec::CloneSpec(std::size_t d, std::size_t n, std::size_t m) : d_(d), n_(n), m_(m) {
  if (d < 2) throw InvalidSpec("CloneSpec: need d >= 2, got " + std::to_string(d));
  if (n < 1) throw InvalidSpec("CloneSpec: need N >= 1, got " + std::to_string(n));
  if (m < n)
    throw InvalidSpec("CloneSpec: need M >= N, got N=" + std::to_string(n) +
                      " M=" + std::to_string(m));
}

std::uint64_t full_dimension(std::size_t d, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (d != 0 && out > kMax / d) return kMax;
    out *= d;
  }
  return out;
}

void require_full_space(std::size_t d, std::size_t k, std::size_t max_dim, const char* who) {
  const auto full = full_dimension(d, k);
  if (full > max_dim)
    throw CapExceeded(std::string(who) + ": " + std::to_string(d) + "^" + std::to_string(k) +
                      " exceeds dimension cap " + std::to_string(max_dim));
}

std::uint64_t sym_dimension(std::size_t d, std::size_t n) {
  if (d == 0) return n == 0 ? 1 : 0;
  // binomial(d-1+i, i) built up in i; each partial quotient is exact.
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    acc = acc * (d - 1 + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("sym_dimension: d[N] exceeds 64 bits for d=" +
                                std::to_string(d) + " N=" + std::to_string(n));
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t multinomial(const OccupationIndex& occ) {
  // Product of binomial(n_1 + ... + n_k, n_k).
  std::uint64_t out = 1;
  std::uint64_t running = 0;
  for (auto c : occ.counts) {
    for (std::uint32_t j = 1; j <= c; ++j) {
      ++running;
      unsigned __int128 next = static_cast<unsigned __int128>(out) * running / j;
      if (next > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("multinomial: exceeds 64 bits");
      out = static_cast<std::uint64_t>(next);
    }
  }
  return out;
}

namespace {

void enumerate(std::size_t d, std::size_t remaining, std::vector<std::uint32_t>& prefix,
               std::vector<OccupationIndex>& out) {
  if (prefix.size() + 1 == d) {
    prefix.push_back(static_cast<std::uint32_t>(remaining));
    out.push_back({prefix});
    prefix.pop_back();
    return;
  }
  for (std::size_t v = remaining + 1; v-- > 0;) {
    prefix.push_back(static_cast<std::uint32_t>(v));
    enumerate(d, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

// Occupation of word index `w` (big-endian digits in base d, `n` sites).
OccupationIndex word_occupation(std::size_t w, std::size_t d, std::size_t n) {
  OccupationIndex occ{std::vector<std::uint32_t>(d, 0)};
  for (std::size_t k = 0; k < n; ++k) {
    ++occ.counts[w % d];
    w /= d;
  }
  return occ;
}

}  // namespace

std::vector<OccupationIndex> occupation_basis(std::size_t d, std::size_t n) {
  std::vector<OccupationIndex> out;
  if (d == 0) return out;
  out.reserve(sym_dimension(d, n));
  std::vector<std::uint32_t> prefix;
  enumerate(d, n, prefix, out);
  return out;
}

std::size_t occupation_rank(const OccupationIndex& occ) {
  const std::size_t d = occ.counts.size();
  std::size_t remaining = occ.total();
  std::size_t rank = 0;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const std::size_t tail = d - k - 1;
    // Tuples sharing the prefix but with a larger entry at position k.
    for (std::size_t v = occ.counts[k] + 1; v <= remaining; ++v)
      rank += sym_dimension(tail, remaining - v);
    remaining -= occ.counts[k];
  }
  return rank;
}

SymmetricBasis::SymmetricBasis(std::size_t d, std::size_t n, std::size_t max_dim)
    : d_(d), n_(n), occupations_(occupation_basis(d, n)) {
  if (d == 0) throw DimensionError("SymmetricBasis: d must be positive");
  require_full_space(d, n, max_dim, "symmetric_basis");
  const std::size_t full = full_dimension(d, n);
  isometry_ = ComplexMatrix(full, occupations_.size());
  for (std::size_t w = 0; w < full; ++w) {
    const auto occ = word_occupation(w, d, n);
    isometry_(w, occupation_rank(occ)) = 1.0 / std::sqrt(static_cast<double>(multinomial(occ)));
  }
}

ComplexMatrix SymmetricBasis::symmetrizer() const { return isometry_ * isometry_.adjoint(); }

ComplexVector tensor_power_coords(std::span<const Complex> phi, std::size_t n) {
  if (std::abs(norm(phi) - 1.0) > 1e-10)
    throw DimensionError("tensor_power_coords: input vector is not normalized");
  const auto basis = occupation_basis(phi.size(), n);
  ComplexVector out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Complex z = std::sqrt(static_cast<double>(multinomial(basis[i])));
    for (std::size_t k = 0; k < phi.size(); ++k)
      for (std::uint32_t p = 0; p < basis[i].counts[k]; ++p) z *= phi[k];
    out[i] = z;
  }
  return out;
}

ComplexVector tensor_power(std::span<const Complex> phi, std::size_t n, std::size_t max_dim) {
  require_full_space(phi.size(), n, max_dim, "tensor_power");
  ComplexVector out{1.0};
  for (std::size_t k = 0; k < n; ++k) out = kron(out, phi);
  return out;
}

ComplexMatrix maximally_mixed_sym(std::size_t d, std::size_t n) {
  const auto dim = sym_dimension(d, n);
  auto out = ComplexMatrix::identity(dim);
  out *= 1.0 / static_cast<double>(dim);
  return out;
}

ComplexMatrix haar_moment(std::size_t d, std::size_t k, std::size_t max_dim) {
  const SymmetricBasis basis(d, k, max_dim);
  auto out = basis.symmetrizer();
  out *= 1.0 / static_cast<double>(basis.dim());
  return out;
}

ComplexMatrix symmetric_power(const ComplexMatrix& u, std::size_t k, std::size_t max_dim) {
  if (!u.is_square()) throw DimensionError("symmetric_power: matrix is not square");
  const std::size_t d = u.rows();
  require_full_space(d, k, max_dim, "symmetric_power");
  const auto basis = occupation_basis(d, k);
  const std::size_t full = full_dimension(d, k);

  // <n| U^{xK} |m> = c_n c_m mult(m) sum_{x in n} prod_i U[x_i, y_i] for one
  // fixed word y with occupations m; the sum over x is permutation invariant.
  std::vector<std::size_t> word_rank(full);
  std::vector<std::vector<std::size_t>> letters(full, std::vector<std::size_t>(k));
  for (std::size_t w = 0; w < full; ++w) {
    word_rank[w] = occupation_rank(word_occupation(w, d, k));
    std::size_t rest = w;
    for (std::size_t i = k; i-- > 0;) {
      letters[w][i] = rest % d;
      rest /= d;
    }
  }

  ComplexMatrix out(basis.size(), basis.size());
  std::vector<std::size_t> y(k);
  for (std::size_t m = 0; m < basis.size(); ++m) {
    std::size_t pos = 0;
    for (std::size_t letter = 0; letter < d; ++letter)
      for (std::uint32_t c = 0; c < basis[m].counts[letter]; ++c) y[pos++] = letter;
    for (std::size_t w = 0; w < full; ++w) {
      Complex prod = 1.0;
      for (std::size_t i = 0; i < k; ++i) prod *= u(letters[w][i], y[i]);
      out(word_rank[w], m) += prod;
    }
  }
  for (std::size_t n = 0; n < basis.size(); ++n) {
    const double mult_n = static_cast<double>(multinomial(basis[n]));
    for (std::size_t m = 0; m < basis.size(); ++m) {
      const double mult_m = static_cast<double>(multinomial(basis[m]));
      out(n, m) *= std::sqrt(mult_m / mult_n);
    }
  }
  return out;
}

ComplexMatrix one_site_reduction(const ComplexMatrix& rho_sym, std::size_t d, std::size_t k) {
  const auto basis = occupation_basis(d, k);
  if (!rho_sym.is_square() || rho_sym.rows() != basis.size())
    throw DimensionError("one_site_reduction: operator is " + std::to_string(rho_sym.rows()) +
                         "x" + std::to_string(rho_sym.cols()) + ", expected d[K]=" +
                         std::to_string(basis.size()));
  if (k == 0) throw DimensionError("one_site_reduction: need at least one particle");
  // R[a, b] = (1/K) sum_n rho[n, m] sqrt(n_a m_b) with m = n - e_a + e_b.
  ComplexMatrix out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Complex s = 0.0;
      for (std::size_t ni = 0; ni < basis.size(); ++ni) {
        const auto& occ = basis[ni];
        if (occ.counts[a] == 0) continue;
        OccupationIndex moved = occ;
        --moved.counts[a];
        ++moved.counts[b];
        const double coef = std::sqrt(static_cast<double>(occ.counts[a]) * moved.counts[b]);
        s += rho_sym(ni, occupation_rank(moved)) * coef;
      }
      out(a, b) = s / static_cast<double>(k);
    }
  return out;
}

}  // namespace symclone
