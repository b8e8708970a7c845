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

// Dense complex linear algebra used throughout the library. Every tensor
// product follows one convention: row-major, first factor slowest, so an
// index (i, j) of A (x) B maps to i * dim(B) + j.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "petzopt/error.hpp"

namespace petzopt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kRankTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kHermTol = 1e-9;

class TensorShape {
 public:
  TensorShape(std::initializer_list<Index> dims);
  explicit TensorShape(std::vector<Index> dims);

  const std::vector<Index>& dims() const noexcept { return dims_; }
  std::size_t factors() const noexcept { return dims_.size(); }
  Index operator[](std::size_t i) const { return dims_.at(i); }
  Index total() const noexcept;

 private:
  std::vector<Index> dims_;
};

struct EigenDecomposition {
  RealVector values;  // descending
  Matrix vectors;     // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted in
/// descending order. Throws NotSquare / NotHermitian when the input does not
/// qualify (residual ||A - A^H||_F above herm_tol * max(1, ||A||_F)).
EigenDecomposition eigh(const Matrix& a, double herm_tol = kHermTol);

/// A^q through the eigendecomposition. Eigenvalues at or below
/// rank_tol * lambda_max are treated as exact zeros, so negative exponents
/// give pseudoinverse powers and A^q A^-q is the support projector of A.
/// Throws NotPSD when an eigenvalue is below -psd_tol * ||A||_2.
Matrix hermitian_power(const Matrix& a, double q, double rank_tol = kRankTol,
                       double psd_tol = kPsdTol);

/// Same as hermitian_power, reusing a precomputed decomposition.
Matrix hermitian_power(const EigenDecomposition& eig, double q,
                       double rank_tol = kRankTol, double psd_tol = kPsdTol);

Matrix support_projector(const Matrix& a, double rank_tol = kRankTol,
                         double psd_tol = kPsdTol);

/// Traces out factor `traced` (0-based) of a square operator on the tensor
/// product described by `shape`.
Matrix partial_trace(const Matrix& a, const TensorShape& shape,
                     std::size_t traced);

Matrix kron(const Matrix& a, const Matrix& b);

double frob_norm(const Matrix& a);
double spectral_norm(const Matrix& a);

Matrix hermitian_part(const Matrix& a);

/// ||A - A^H||_F.
double hermiticity_residual(const Matrix& a);

Matrix commutator(const Matrix& a, const Matrix& b);

struct PsdCheck {
  bool verdict = false;
  double min_eigenvalue = 0.0;  // of the Hermitian part
};

/// Never throws on non-Hermitian input; the verdict is simply false.
PsdCheck is_psd(const Matrix& a, double tol);

void require_square(const Matrix& a, const char* what);
void require_finite(const Matrix& a, const char* what);

}  // namespace petzopt
