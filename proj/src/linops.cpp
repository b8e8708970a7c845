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

#include "petzopt/linops.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace petzopt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotTP: return "NotTP";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::BadDistribution: return "BadDistribution";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::DegenerateEncoding: return "DegenerateEncoding";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::EigensolverFailure: return "EigensolverFailure";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

TensorShape::TensorShape(std::initializer_list<Index> dims)
    : TensorShape(std::vector<Index>(dims)) {}

TensorShape::TensorShape(std::vector<Index> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "tensor shape needs a factor");
  }
  for (Index d : dims_) {
    if (d <= 0) {
      throw Error(ErrorCode::ShapeMismatch, "factor dimensions must be positive");
    }
  }
}

Index TensorShape::total() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), Index{1},
                         std::multiplies<>());
}

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << what << " is " << a.rows() << "x" << a.cols();
    throw Error(ErrorCode::NotSquare, msg.str());
  }
}

void require_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) {
    throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN/Inf entries");
  }
}

double frob_norm(const Matrix& a) { return a.norm(); }

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() == a.cols() && hermiticity_residual(a) <= 1e-14 * std::max(1.0, a.norm())) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

Matrix hermitian_part(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

double hermiticity_residual(const Matrix& a) { return (a - a.adjoint()).norm(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

EigenDecomposition eigh(const Matrix& a, double herm_tol) {
  require_square(a, "eigh input");
  const double residual = hermiticity_residual(a);
  if (residual > herm_tol * std::max(1.0, a.norm())) {
    std::ostringstream msg;
    msg << "Hermiticity residual " << residual;
    throw Error(ErrorCode::NotHermitian, msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a));
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "self-adjoint eigensolver failed");
  }
  // Eigen returns ascending order.
  const Index n = a.rows();
  EigenDecomposition out{es.eigenvalues().reverse(), Matrix(n, n)};
  out.vectors = es.eigenvectors().rowwise().reverse();
  return out;
}

namespace {

// Largest |eigenvalue| doubles as ||A||_2 for Hermitian A.
void check_psd(const RealVector& values, double psd_tol) {
  if (values.size() == 0) return;
  const double scale = std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
  const double lowest = values(values.size() - 1);
  if (lowest < -psd_tol * scale) {
    std::ostringstream msg;
    msg << "eigenvalue " << lowest << " below -" << psd_tol << " * " << scale;
    throw Error(ErrorCode::NotPSD, msg.str());
  }
}

}  // namespace

Matrix hermitian_power(const EigenDecomposition& eig, double q, double rank_tol,
                       double psd_tol) {
  check_psd(eig.values, psd_tol);
  const Index n = eig.values.size();
  if (n == 0) return Matrix(0, 0);
  const double cutoff = rank_tol * std::max(eig.values(0), 0.0);
  RealVector f(n);
  for (Index i = 0; i < n; ++i) {
    const double lambda = eig.values(i);
    f(i) = (lambda > cutoff && lambda > 0.0) ? std::pow(lambda, q) : 0.0;
  }
  return eig.vectors * f.asDiagonal() * eig.vectors.adjoint();
}

Matrix hermitian_power(const Matrix& a, double q, double rank_tol, double psd_tol) {
  return hermitian_power(eigh(a), q, rank_tol, psd_tol);
}

Matrix support_projector(const Matrix& a, double rank_tol, double psd_tol) {
  return hermitian_power(a, 0.0, rank_tol, psd_tol);
}

Matrix partial_trace(const Matrix& a, const TensorShape& shape, std::size_t traced) {
  require_square(a, "partial_trace input");
  if (a.rows() != shape.total()) {
    throw Error(ErrorCode::ShapeMismatch, "matrix dimension differs from shape product");
  }
  if (traced >= shape.factors()) {
    throw Error(ErrorCode::ShapeMismatch, "traced factor index out of range");
  }
  // Split the index as (outer, traced, inner).
  const auto& dims = shape.dims();
  Index outer = 1;
  for (std::size_t i = 0; i < traced; ++i) outer *= dims[i];
  const Index mid = dims[traced];
  Index inner = 1;
  for (std::size_t i = traced + 1; i < dims.size(); ++i) inner *= dims[i];

  const Index out_dim = outer * inner;
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (Index o1 = 0; o1 < outer; ++o1) {
    for (Index o2 = 0; o2 < outer; ++o2) {
      for (Index m = 0; m < mid; ++m) {
        out.block(o1 * inner, o2 * inner, inner, inner) +=
            a.block((o1 * mid + m) * inner, (o2 * mid + m) * inner, inner, inner);
      }
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out = Eigen::kroneckerProduct(a, b);
  return out;
}

PsdCheck is_psd(const Matrix& a, double tol) {
  require_square(a, "is_psd input");
  PsdCheck out;
  if (a.size() == 0) {
    out.verdict = true;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(a), Eigen::EigenvaluesOnly);
  const RealVector& values = es.eigenvalues();
  out.min_eigenvalue = values(0);
  const double norm2 = values.cwiseAbs().maxCoeff();
  const bool hermitian = hermiticity_residual(a) <= tol * std::max(1.0, a.norm());
  out.verdict = hermitian && out.min_eigenvalue >= -tol * std::max(1.0, norm2);
  return out;
}

}  // namespace petzopt
