// Copyright 2026 The mixedgraphs Authors
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

#include "mixedgraphs/spectral.hpp"

#include <stdexcept>

namespace mixedgraphs::spectral {

namespace {

BigInt exact_divide(const BigInt& numerator, int divisor) {
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator, BigInt(divisor), q, r);
  if (r != 0) {
    throw std::logic_error(
        "characteristic polynomial recurrence produced a non-exact division");
  }
  return q;
}

// Row-major n x n product.
std::vector<GaussianInt> multiply(int n, const std::vector<GaussianInt>& a,
                                  const std::vector<GaussianInt>& b) {
  std::vector<GaussianInt> c(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const GaussianInt& aik = a[i * n + k];
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        c[i * n + j] += aik * b[k * n + j];
      }
    }
  }
  return c;
}

}  // namespace

HermitianMatrix::HermitianMatrix(int n, std::vector<GaussianInt> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("entry count must be n*n");
  }
  for (int i = 0; i < n; ++i) {
    if (!entries_[i * n + i].is_zero()) {
      throw std::invalid_argument("diagonal entries must be zero");
    }
    for (int j = i + 1; j < n; ++j) {
      if (entries_[i * n + j] != entries_[j * n + i].conjugate()) {
        throw std::invalid_argument("matrix is not Hermitian");
      }
    }
  }
}

HermitianMatrix hermitian_adjacency(const MixedGraph& x) {
  const int n = x.order();
  std::vector<GaussianInt> entries(static_cast<std::size_t>(n) * n,
                                   GaussianInt::real(0));
  for (const auto& [u, v] : x.edges()) {
    entries[u * n + v] = GaussianInt::real(1);
    entries[v * n + u] = GaussianInt::real(1);
  }
  for (const auto& [u, v] : x.arcs()) {
    entries[u * n + v] = GaussianInt{BigInt(0), BigInt(1)};
    entries[v * n + u] = GaussianInt{BigInt(0), BigInt(-1)};
  }
  return HermitianMatrix(n, std::move(entries));
}

CharPoly char_poly(const HermitianMatrix& h, int max_n) {
  const int n = h.dimension();
  if (n > max_n) {
    throw SizeLimitError("char_poly is limited to n <= " +
                         std::to_string(max_n) + ", got n = " +
                         std::to_string(n));
  }

  std::vector<GaussianInt> coeffs(n + 1, GaussianInt::real(0));
  coeffs[n] = GaussianInt::real(1);

  // Faddeev-LeVerrier: M_0 = I; c_{n-k} = -tr(H M_{k-1}) / k;
  // M_k = H M_{k-1} + c_{n-k} I.
  std::vector<GaussianInt> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * n + j] = h.entry(i, j);
  }
  std::vector<GaussianInt> m(static_cast<std::size_t>(n) * n,
                             GaussianInt::real(0));
  for (int i = 0; i < n; ++i) m[i * n + i] = GaussianInt::real(1);

  for (int k = 1; k <= n; ++k) {
    std::vector<GaussianInt> am = multiply(n, a, m);
    GaussianInt trace = GaussianInt::real(0);
    for (int i = 0; i < n; ++i) trace += am[i * n + i];
    const GaussianInt c{exact_divide(-trace.re, k), exact_divide(-trace.im, k)};
    coeffs[n - k] = c;
    for (int i = 0; i < n; ++i) am[i * n + i] += c;
    m = std::move(am);
  }

  CharPoly result;
  result.coeffs.reserve(n + 1);
  for (const GaussianInt& c : coeffs) {
    if (c.im != 0) {
      throw std::logic_error(
          "characteristic polynomial has a non-real coefficient");
    }
    result.coeffs.push_back(c.re);
  }
  if (n >= 1 && result.coeffs[n - 1] != 0) {
    throw std::logic_error("trace coefficient must vanish for zero diagonal");
  }
  return result;
}

bool are_cospectral(const MixedGraph& x, const MixedGraph& y, int max_n) {
  if (x.order() != y.order()) {
    throw ValidationError(ValidationError::Kind::kSizeMismatch,
                          "cospectrality requires equal vertex counts");
  }
  return char_poly(hermitian_adjacency(x), max_n) ==
         char_poly(hermitian_adjacency(y), max_n);
}

}  // namespace mixedgraphs::spectral
