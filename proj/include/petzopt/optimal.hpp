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

// Numerical optimal recovery over CPTP maps H -> L and the KKT dual
// certificate. The objective is linear in the recovery Choi matrix:
//   F[C_R] = tr(C_R^T W),  W = (rho^T (x) I_H) C_E (rho^T (x) I_H).

#include <optional>

#include "petzopt/channels.hpp"

namespace petzopt {

/// W above, on L (x) H.
Matrix fidelity_weight(const ChoiMatrix& choi_e, const DensityOperator& rho);

double fidelity_linear(const ChoiMatrix& choi_r, const ChoiMatrix& choi_e,
                       const DensityOperator& rho);

struct ProjectionOptions {
  int max_sweeps = 1000;
  double tol = 1e-12;  // on ||tr_L C - I||_F before the final congruence
};

struct ProjectionResult {
  Matrix choi;
  Matrix dual;  // warm start for the next call
  int sweeps = 0;
};

/// Euclidean projection onto {C >= 0, tr_L C = I_n}. Dual ascent on the
/// trace constraint, C(Y) = (X - I (x) Y)_+, accelerated with restarted
/// Nesterov momentum; a final congruence by (I (x) T^{-1/2}) makes the
/// result exactly trace preserving.
ProjectionResult project_cptp(const Matrix& x, Index d, Index n,
                              const ProjectionOptions& opts = {},
                              const Matrix* warm_dual = nullptr);

enum class OptimizerMethod {
  ProjectedAscent,  // C <- P(C + step * conj(W)) with an accurate projection
  Admm,             // operator splitting; one eigendecomposition per iteration
};

struct OptimizerOptions {
  OptimizerMethod method = OptimizerMethod::ProjectedAscent;
  std::optional<double> step;  // default 1 / ||W||_2; ADMM uses it as 1 / penalty
  int max_iter = 5000;
  double tol = 1e-10;  // fidelity change over `window` iterations
  int window = 20;
  ProjectionOptions projection;
  std::optional<ChoiMatrix> init;              // default Petz map
  std::optional<DensityOperator> petz_reference;  // default rho
  double monotone_tol = 1e-12;
};

struct RecoverySolution {
  ChoiMatrix choi;
  double fidelity = 0.0;
  double initial_fidelity = 0.0;
  int iterations = 0;
  long projection_sweeps = 0;
  bool converged = false;
  bool monotone = true;
  double tp_defect = 0.0;  // ||tr_L C - I||_2
  double upper_bound = 0.0;  // weak-duality bound on the optimum
};

/// tr(Y) for the dual-feasible Y = Herm(tr_L(conj(W) C)) + t I, with t the
/// smallest shift making I (x) Y - conj(W) PSD. Always >= the optimum.
double dual_upper_bound(const Matrix& w, const Matrix& c, Index d, Index n);

/// Maximizes the linear fidelity over CPTP recoveries. Never throws on
/// non-convergence; the flag records it. ADMM stops once the duality gap
/// certified by dual_upper_bound falls below `tol`.
RecoverySolution optimize_recovery(const KrausChannel& ch, const DensityOperator& rho,
                                   const OptimizerOptions& opts = {});

inline constexpr double kKktTol = 1e-6;

struct KktCertificate {
  double lambda_min_eig = 0.0;
  double lambda_herm_residual = 0.0;  // diagnostic only; not part of `satisfied`
  double gamma_min_eig = 0.0;
  double slackness_lambda = 0.0;  // |tr(Lambda^T G)|, G = I - tr_L C
  double slackness_gamma = 0.0;   // |tr(Gamma^T C)|
  double stationarity_residual = 0.0;
  bool satisfied = false;
};

/// Lambda = tr_L(C^T W), Gamma = I (x) Lambda - W at the given recovery.
KktCertificate kkt_certificate(const KrausChannel& ch, const DensityOperator& rho,
                               const ChoiMatrix& recovery, double kkt_tol = kKktTol);

/// Same, evaluated at the Petz map with reference sigma.
KktCertificate kkt_certificate(const KrausChannel& ch, const DensityOperator& rho,
                               const DensityOperator& sigma, double kkt_tol = kKktTol);

}  // namespace petzopt
