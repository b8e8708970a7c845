// Copyright 2026 The petzopt Authors
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

// Random inputs and brute-force oracles shared by the unit tests. Nothing
// here calls into the library except for types.

#include <random>

#include "petzopt/linops.hpp"

namespace petzopt::testing {

inline Matrix random_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a;
}

inline Matrix random_hermitian(Index n, std::mt19937_64& rng) {
  const Matrix a = random_matrix(n, n, rng);
  return (a + a.adjoint()) / 2.0;
}

inline Matrix random_psd(Index n, Index rank, std::mt19937_64& rng) {
  const Matrix a = random_matrix(n, rank, rng);
  return a * a.adjoint();
}

inline Matrix random_density(Index n, Index rank, std::mt19937_64& rng) {
  const Matrix p = random_psd(n, rank, rng);
  return p / p.trace().real();
}

// Explicit double-index partial trace over the second factor of dA x dB.
inline Matrix trace_second_by_sum(const Matrix& a, Index da, Index db) {
  Matrix out = Matrix::Zero(da, da);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      for (Index k = 0; k < db; ++k) out(i, j) += a(i * db + k, j * db + k);
  return out;
}

inline Matrix trace_first_by_sum(const Matrix& a, Index da, Index db) {
  Matrix out = Matrix::Zero(db, db);
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < db; ++j)
      for (Index k = 0; k < da; ++k) out(i, j) += a(k * db + i, k * db + j);
  return out;
}

// Dense Kronecker product written out entry by entry.
inline Matrix kron_by_loops(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace petzopt::testing
