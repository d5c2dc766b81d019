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

#pragma once

#include <vector>

#include "mixedgraphs/bigint.hpp"
#include "mixedgraphs/errors.hpp"
#include "mixedgraphs/graph.hpp"

namespace mixedgraphs::spectral {

// Exact characteristic polynomials get expensive quickly; verification is
// desk-scale only.
inline constexpr int kDefaultSpectralLimit = 32;

// Exact Gaussian integer (element of Z[i]); no rounding anywhere.
struct GaussianInt {
  BigInt re;
  BigInt im;

  GaussianInt() = default;
  GaussianInt(BigInt real, BigInt imag)
      : re(std::move(real)), im(std::move(imag)) {}
  static GaussianInt real(long long value) { return {BigInt(value), BigInt(0)}; }

  GaussianInt conjugate() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }

  GaussianInt operator+(const GaussianInt& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianInt operator-(const GaussianInt& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianInt operator*(const GaussianInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

// Dense Hermitian matrix over Z[i] with zero diagonal.
class HermitianMatrix {
 public:
  HermitianMatrix(int n, std::vector<GaussianInt> entries);

  int dimension() const { return n_; }
  const GaussianInt& entry(int row, int col) const {
    return entries_[row * n_ + col];
  }

 private:
  int n_;
  std::vector<GaussianInt> entries_;
};

// Monic integer characteristic polynomial, coefficients c_0..c_n of
// sum c_k x^k. Hermitian matrices over Z[i] always land in Z[x], and the
// zero diagonal forces c_{n-1} = 0.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// Entry (u,v) is 1 for an edge, i for arc u->v, -i for arc v->u, else 0.
// Under this convention the converse graph is encoded by the transposed
// (equivalently, entrywise-conjugated) matrix, so the two share one real
// characteristic polynomial. The relationship is asserted by tests, not
// assumed.
HermitianMatrix hermitian_adjacency(const MixedGraph& x);

// det(xI - H) by the Faddeev-LeVerrier recurrence with exact Gaussian
// integer arithmetic; every division is checked exact and every final
// coefficient is checked real. Violations throw std::logic_error (an
// implementation bug, not bad input).
CharPoly char_poly(const HermitianMatrix& h,
                   int max_n = kDefaultSpectralLimit);

// Coefficient-wise equality of the two characteristic polynomials.
bool are_cospectral(const MixedGraph& x, const MixedGraph& y,
                    int max_n = kDefaultSpectralLimit);

}  // namespace mixedgraphs::spectral
