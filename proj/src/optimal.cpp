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

#include "petzopt/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "petzopt/petz.hpp"

namespace petzopt {

namespace {

Matrix trace_logical(const Matrix& c, Index d, Index n) {
  return partial_trace(c, TensorShape{d, n}, 0);
}

Matrix lift(const Matrix& y, Index d) { return kron(Matrix::Identity(d, d), y); }

void require_pair(const ChoiMatrix& r, const ChoiMatrix& e) {
  if (r.logical_dim != e.logical_dim || r.physical_dim != e.physical_dim ||
      r.matrix.rows() != e.matrix.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "recovery and channel Choi shapes differ");
  }
}

Matrix psd_part(const Matrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(x));
  const RealVector w = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

double objective(const Matrix& c, const Matrix& w) {
  // tr(C^T W) = sum_ij C_ij W_ij.
  return c.cwiseProduct(w).sum().real();
}

}  // namespace

Matrix fidelity_weight(const ChoiMatrix& choi_e, const DensityOperator& rho) {
  if (rho.dim() != choi_e.logical_dim) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension differs from the channel");
  }
  const Matrix r = kron(rho.matrix().transpose(),
                        Matrix::Identity(choi_e.physical_dim, choi_e.physical_dim));
  return r * choi_e.matrix * r;
}

double fidelity_linear(const ChoiMatrix& choi_r, const ChoiMatrix& choi_e,
                       const DensityOperator& rho) {
  require_pair(choi_r, choi_e);
  return objective(choi_r.matrix, fidelity_weight(choi_e, rho));
}

ProjectionResult project_cptp(const Matrix& x, Index d, Index n,
                              const ProjectionOptions& opts, const Matrix* warm_dual) {
  if (x.rows() != d * n || x.cols() != d * n) {
    throw Error(ErrorCode::ShapeMismatch, "projection input must be (d * n) square");
  }
  const Matrix id = Matrix::Identity(n, n);
  const Matrix xh = hermitian_part(x);
  ProjectionResult out;
  Matrix y = warm_dual ? *warm_dual : Matrix::Zero(n, n);
  Matrix z = y;
  Matrix y_prev = y;
  double t = 1.0;
  double prev_res = std::numeric_limits<double>::infinity();
  Matrix c;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    c = psd_part(xh - lift(z, d));
    const Matrix r = trace_logical(c, d, n) - id;
    const double res = r.norm();
    out.sweeps = sweep + 1;
    if (res < opts.tol) {
      y = z;
      break;
    }
    const Matrix y_next = z + r / static_cast<double>(d);
    double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    if (res > prev_res) {
      // Restart the momentum when the residual grows.
      t_next = 1.0;
      z = y_next;
    } else {
      z = y_next + ((t - 1.0) / t_next) * (y_next - y_prev);
    }
    y_prev = y_next;
    y = y_next;
    t = t_next;
    prev_res = res;
  }
  // Exact feasibility: C <- (I (x) T^{-1/2}) C (I (x) T^{-1/2}).
  const Matrix k = lift(hermitian_power(trace_logical(c, d, n), -0.5), d);
  out.choi = hermitian_part(k * c * k);
  out.dual = y;
  return out;
}

double dual_upper_bound(const Matrix& w, const Matrix& c, Index d, Index n) {
  const Matrix g = w.conjugate();
  const Matrix y = hermitian_part(trace_logical(g * c, d, n));
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(lift(y, d) - g),
                                           Eigen::EigenvaluesOnly);
  const double shift = std::max(0.0, -es.eigenvalues()(0));
  return y.trace().real() + static_cast<double>(n) * shift;
}

namespace {

// Exact trace preservation by congruence; assumes tr_L C is invertible.
Matrix congruence_polish(const Matrix& c, Index d, Index n) {
  const Matrix k = lift(hermitian_power(trace_logical(c, d, n), -0.5), d);
  return hermitian_part(k * c * k);
}

// Orthogonal projection onto the affine set tr_L C = I.
Matrix project_affine(const Matrix& x, Index d, Index n) {
  const Matrix defect = Matrix::Identity(n, n) - trace_logical(x, d, n);
  return x + lift(defect, d) / static_cast<double>(d);
}

void run_projected_ascent(const Matrix& w, const Matrix& grad, double step, Index d, Index n,
                          const OptimizerOptions& opts, RecoverySolution& sol, Matrix& c) {
  ProjectionResult pr = project_cptp(c, d, n, opts.projection);
  sol.projection_sweeps += pr.sweeps;
  c = std::move(pr.choi);
  Matrix dual = std::move(pr.dual);
  double f = objective(c, w);
  std::deque<double> history{f};

  for (int it = 0; it < opts.max_iter; ++it) {
    pr = project_cptp(c + step * grad, d, n, opts.projection, &dual);
    sol.projection_sweeps += pr.sweeps;
    const double f_next = objective(pr.choi, w);
    sol.iterations = it + 1;
    if (f_next < f - opts.monotone_tol) {
      sol.monotone = false;
      break;
    }
    c = std::move(pr.choi);
    dual = std::move(pr.dual);
    f = f_next;
    history.push_back(f);
    if (static_cast<int>(history.size()) > opts.window + 1) history.pop_front();
    if (static_cast<int>(history.size()) == opts.window + 1 &&
        history.back() - history.front() < opts.tol) {
      sol.converged = true;
      break;
    }
  }
}

// Splitting C = Z with C in the affine set and Z in the PSD cone; the
// penalty is rebalanced when one residual dominates the other.
void run_admm(const Matrix& w, const Matrix& grad, double step, Index d, Index n,
              const OptimizerOptions& opts, RecoverySolution& sol, Matrix& c) {
  constexpr int kCheckEvery = 10;
  Matrix z = psd_part(project_affine(c, d, n));
  Matrix u = Matrix::Zero(d * n, d * n);
  double penalty = 1.0 / step;
  Matrix best = congruence_polish(z, d, n);
  double best_f = objective(best, w);
  for (int it = 0; it < opts.max_iter; ++it) {
    const Matrix x = project_affine(z - u + grad / penalty, d, n);
    const Matrix z_next = psd_part(x + u);
    u += x - z_next;
    const double primal = (x - z_next).norm();
    const double dual = penalty * (z_next - z).norm();
    z = z_next;
    sol.iterations = it + 1;
    if ((it + 1) % kCheckEvery != 0) continue;

    const Matrix candidate = congruence_polish(z, d, n);
    const double f = objective(candidate, w);
    if (f > best_f) {
      best_f = f;
      best = candidate;
    }
    if (dual_upper_bound(w, best, d, n) - best_f <= opts.tol) {
      sol.converged = true;
      break;
    }
    if (primal > 10.0 * dual) {
      penalty *= 2.0;
      u /= 2.0;
    } else if (dual > 10.0 * primal) {
      penalty /= 2.0;
      u *= 2.0;
    }
  }
  c = std::move(best);
}

}  // namespace

RecoverySolution optimize_recovery(const KrausChannel& ch, const DensityOperator& rho,
                                   const OptimizerOptions& opts) {
  const Index d = ch.input_dim();
  const Index n = ch.output_dim();
  if (rho.dim() != d) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension differs from the channel");
  }
  const Matrix w = fidelity_weight(choi(ch), rho);
  const Matrix grad = w.conjugate();
  const double gnorm = spectral_norm(grad);
  const double step = opts.step.value_or(gnorm > 0.0 ? 1.0 / gnorm : 1.0);

  Matrix c;
  if (opts.init) {
    if (opts.init->logical_dim != d || opts.init->physical_dim != n ||
        opts.init->side != ChoiSide::Recovery) {
      throw Error(ErrorCode::DimensionMismatch, "initial recovery has the wrong shape");
    }
    c = opts.init->matrix;
  } else {
    const DensityOperator& ref = opts.petz_reference ? *opts.petz_reference : rho;
    c = choi(petz_map(ch, ref), ChoiSide::Recovery).matrix;
  }

  RecoverySolution sol;
  sol.initial_fidelity = objective(c, w);
  // A trace-nonincreasing start is first moved onto the feasible set.
  if (opts.method == OptimizerMethod::Admm) {
    run_admm(w, grad, step, d, n, opts, sol, c);
  } else {
    run_projected_ascent(w, grad, step, d, n, opts, sol, c);
  }

  sol.fidelity = objective(c, w);
  sol.tp_defect = spectral_norm(trace_logical(c, d, n) - Matrix::Identity(n, n));
  sol.upper_bound = std::max(sol.fidelity, dual_upper_bound(w, c, d, n));
  sol.choi = ChoiMatrix{std::move(c), d, n, ChoiSide::Recovery};
  return sol;
}

KktCertificate kkt_certificate(const KrausChannel& ch, const DensityOperator& rho,
                               const ChoiMatrix& recovery, double kkt_tol) {
  const Index d = ch.input_dim();
  const Index n = ch.output_dim();
  if (recovery.logical_dim != d || recovery.physical_dim != n ||
      recovery.side != ChoiSide::Recovery) {
    throw Error(ErrorCode::DimensionMismatch, "recovery Choi has the wrong shape");
  }
  const Matrix w = fidelity_weight(choi(ch), rho);
  const Matrix& c = recovery.matrix;
  const Matrix lambda = trace_logical(c.transpose() * w, d, n);
  const Matrix gamma = lift(lambda, d) - w;
  const Matrix g = Matrix::Identity(n, n) - trace_logical(c, d, n);

  KktCertificate k;
  k.lambda_herm_residual = hermiticity_residual(lambda);
  k.lambda_min_eig = is_psd(lambda, kkt_tol).min_eigenvalue;
  k.gamma_min_eig = is_psd(gamma, kkt_tol).min_eigenvalue;
  k.slackness_lambda = std::abs((lambda.transpose() * g).trace());
  k.slackness_gamma = std::abs((gamma.transpose() * c).trace());
  k.stationarity_residual = (lift(lambda, d) - w - gamma).norm();
  k.satisfied = k.lambda_min_eig >= -kkt_tol && k.gamma_min_eig >= -kkt_tol &&
                k.slackness_lambda <= kkt_tol && k.slackness_gamma <= kkt_tol &&
                k.stationarity_residual <= kkt_tol;
  return k;
}

KktCertificate kkt_certificate(const KrausChannel& ch, const DensityOperator& rho,
                               const DensityOperator& sigma, double kkt_tol) {
  return kkt_certificate(ch, rho, choi(petz_map(ch, sigma), ChoiSide::Recovery), kkt_tol);
}

}  // namespace petzopt
