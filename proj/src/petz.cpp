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

#include "petzopt/petz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace petzopt {

namespace {

QecMatrix gram(const KrausChannel& ch, const Matrix& sqrt_sigma) {
  const Index d = ch.input_dim();
  const Index nk = ch.num_kraus();
  Matrix a(ch.output_dim(), d * nk);
  for (Index k = 0; k < nk; ++k) {
    const Matrix es = ch[k] * sqrt_sigma;
    for (Index mu = 0; mu < d; ++mu) a.col(mu * nk + k) = es.col(mu);
  }
  QecMatrix m;
  m.matrix = a.adjoint() * a;
  m.d = d;
  m.n_kraus = nk;
  return m;
}

void require_dim(const DensityOperator& s, Index d, const char* what) {
  if (s.dim() != d) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " dimension differs from the channel input");
  }
}

Matrix trace_logical(const Matrix& a, Index d, Index nk) {
  return partial_trace(a, TensorShape{d, nk}, 0);
}

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

// gamma = sigma^{-1/2} rho after checking the support hypothesis.
Matrix gamma_of(const DensityOperator& rho, const DensityOperator& sigma) {
  const double v = support_violation(rho, sigma);
  if (v > kSupportTol) {
    throw Error(ErrorCode::SupportViolation,
                "supp(rho) is not contained in supp(sigma): ||(I - P_sigma) P_rho||_2 = " +
                    std::to_string(v));
  }
  return hermitian_power(sigma.matrix(), -0.5) * rho.matrix();
}

}  // namespace

QecMatrix qec_matrix(const KrausChannel& ch) {
  const Index d = ch.input_dim();
  return gram(ch, Matrix::Identity(d, d));
}

QecMatrix qec_matrix(const KrausChannel& ch, const DensityOperator& sigma) {
  require_dim(sigma, ch.input_dim(), "reference state");
  QecMatrix m = gram(ch, hermitian_power(sigma.matrix(), 0.5));
  m.reference = sigma;
  return m;
}

KrausChannel petz_map(const KrausChannel& ch, const DensityOperator& sigma) {
  require_dim(sigma, ch.input_dim(), "reference state");
  const Matrix sqrt_sigma = hermitian_power(sigma.matrix(), 0.5);
  const Matrix inv_sqrt_out = hermitian_power(apply(ch, sigma), -0.5);
  std::vector<Matrix> ops;
  ops.reserve(ch.kraus().size());
  for (const Matrix& e : ch.kraus()) ops.emplace_back(sqrt_sigma * e.adjoint() * inv_sqrt_out);
  return KrausChannel(std::move(ops));
}

double entanglement_fidelity(const DensityOperator& rho, const KrausChannel& ch) {
  if (ch.input_dim() != ch.output_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "entanglement fidelity needs an endomorphism");
  }
  require_dim(rho, ch.input_dim(), "input state");
  double f = 0.0;
  for (const Matrix& k : ch.kraus()) f += std::norm((k * rho.matrix()).trace());
  return f;
}

double composed_fidelity(const DensityOperator& rho, const KrausChannel& recovery,
                         const KrausChannel& channel) {
  const Index d = channel.input_dim();
  const Index n = channel.output_dim();
  if (recovery.input_dim() != n || recovery.output_dim() != d) {
    throw Error(ErrorCode::DimensionMismatch, "recovery does not invert the channel shape");
  }
  require_dim(rho, d, "input state");
  // tr(R_i E_k rho) = sum_{mu,a} R_i(mu,a) (E_k rho)(a,mu) as a matrix product.
  Matrix p(recovery.num_kraus(), d * n);
  for (Index i = 0; i < recovery.num_kraus(); ++i) {
    for (Index mu = 0; mu < d; ++mu) {
      for (Index a = 0; a < n; ++a) p(i, mu * n + a) = recovery[i](mu, a);
    }
  }
  Matrix q(d * n, channel.num_kraus());
  for (Index k = 0; k < channel.num_kraus(); ++k) {
    const Matrix ek_rho = channel[k] * rho.matrix();
    for (Index mu = 0; mu < d; ++mu) {
      for (Index a = 0; a < n; ++a) q(mu * n + a, k) = ek_rho(a, mu);
    }
  }
  return (p * q).squaredNorm();
}

double support_violation(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "rho and sigma differ in dimension");
  }
  const Index d = rho.dim();
  const Matrix outside = Matrix::Identity(d, d) - support_projector(sigma.matrix());
  return spectral_norm(outside * support_projector(rho.matrix()));
}

bool support_contained(const DensityOperator& rho, const DensityOperator& sigma,
                       double tol) {
  return support_violation(rho, sigma) <= tol;
}

FidelityReport petz_fidelity_compact(const DensityOperator& rho,
                                     const DensityOperator& sigma,
                                     const KrausChannel& ch) {
  const Index d = ch.input_dim();
  const Index nk = ch.num_kraus();
  require_dim(rho, d, "input state");
  require_dim(sigma, d, "reference state");
  const QecMatrix m = qec_matrix(ch);
  const QecMatrix ms = qec_matrix(ch, sigma);
  const Matrix id_k = Matrix::Identity(nk, nk);
  const EigenDecomposition ms_eig = eigh(ms.matrix);

  const Matrix x = hermitian_power(ms_eig, -0.5) *
                   kron(hermitian_power(sigma.matrix(), 0.5), id_k) * m.matrix *
                   kron(rho.matrix(), id_k);
  FidelityReport r;
  r.f_compact = trace_logical(x, d, nk).squaredNorm();
  r.f_direct = composed_fidelity(rho, petz_map(ch, sigma), ch);
  r.supports_nested = support_contained(rho, sigma);
  if (r.supports_nested) {
    r.t_matrix = t_matrix(rho, sigma, ms);
    r.b_matrix = b_matrix(rho, sigma, ms);
  }
  return r;
}

double tc_fidelity(const QecMatrix& m) {
  const Index d = m.d;
  const Matrix root = hermitian_power(m.matrix, 0.5);
  return trace_logical(root, d, m.n_kraus).squaredNorm() / static_cast<double>(d * d);
}

Matrix t_matrix(const DensityOperator& rho, const DensityOperator& sigma,
                const QecMatrix& m_sigma) {
  require_dim(rho, m_sigma.d, "input state");
  const Matrix gamma = gamma_of(rho, sigma);
  const Matrix root = hermitian_power(m_sigma.matrix, 0.5);
  const Matrix id_k = Matrix::Identity(m_sigma.n_kraus, m_sigma.n_kraus);
  return trace_logical(kron(gamma.adjoint(), id_k) * root, m_sigma.d, m_sigma.n_kraus);
}

Matrix b_matrix(const DensityOperator& rho, const DensityOperator& sigma,
                const QecMatrix& m_sigma) {
  const Matrix gamma = gamma_of(rho, sigma);
  const Matrix root = hermitian_power(m_sigma.matrix, 0.5);
  const Matrix id_k = Matrix::Identity(m_sigma.n_kraus, m_sigma.n_kraus);
  const Matrix t = trace_logical(kron(gamma.adjoint(), id_k) * root, m_sigma.d,
                                 m_sigma.n_kraus);
  return root * kron(gamma, t);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Optimal: return "Optimal";
    case Verdict::NotOptimal: return "NotOptimal";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

Verdict classify(double herm_residual, double min_eig, double b_norm, double cert_tol) {
  if (herm_residual <= cert_tol && min_eig >= -cert_tol * b_norm) return Verdict::Optimal;
  if (herm_residual <= 10.0 * cert_tol && min_eig >= -10.0 * cert_tol * b_norm) {
    return Verdict::Inconclusive;
  }
  return Verdict::NotOptimal;
}

double kl_residual(const QecMatrix& m) {
  const Matrix alpha = trace_logical(m.matrix, m.d, m.n_kraus) / static_cast<double>(m.d);
  const Matrix diff = m.matrix - kron(Matrix::Identity(m.d, m.d), alpha);
  return safe_ratio(diff.norm(), m.matrix.norm());
}

double commutator_pgm(const QecMatrix& m_sigma) {
  const Matrix root = hermitian_power(m_sigma.matrix, 0.5);
  const Matrix y = kron(Matrix::Identity(m_sigma.d, m_sigma.d),
                        trace_logical(root, m_sigma.d, m_sigma.n_kraus));
  return safe_ratio(commutator(m_sigma.matrix, y).norm(), m_sigma.matrix.norm() * y.norm());
}

OptimalityCertificate certify(const DensityOperator& rho, const DensityOperator& sigma,
                              const KrausChannel& ch, double cert_tol) {
  const Index d = ch.input_dim();
  const Index nk = ch.num_kraus();
  require_dim(rho, d, "input state");
  const Matrix gamma = gamma_of(rho, sigma);
  const QecMatrix ms = qec_matrix(ch, sigma);
  const Matrix root = hermitian_power(ms.matrix, 0.5);
  const Matrix id_k = Matrix::Identity(nk, nk);
  const Matrix t = trace_logical(kron(gamma.adjoint(), id_k) * root, d, nk);
  const Matrix gt = kron(gamma, t);
  const Matrix b = root * gt;

  OptimalityCertificate c;
  const double b_frob = b.norm();
  c.b_herm_residual = safe_ratio(hermiticity_residual(b), b_frob);
  c.b_min_eig = is_psd(b, cert_tol).min_eigenvalue;
  c.b_norm = spectral_norm(hermitian_part(b));
  c.commutator_general =
      safe_ratio(commutator(ms.matrix, gt).norm(), ms.matrix.norm() * gt.norm());
  const Matrix y = kron(Matrix::Identity(d, d), trace_logical(root, d, nk));
  c.commutator_pgm = safe_ratio(commutator(ms.matrix, y).norm(), ms.matrix.norm() * y.norm());
  c.kl_residual = kl_residual(qec_matrix(ch));
  c.verdict = classify(c.b_herm_residual, c.b_min_eig, c.b_norm, cert_tol);
  return c;
}

BlockReport block_structure_check(const QecMatrix& m_sigma, double rank_tol,
                                  double cert_tol) {
  const Index d = m_sigma.d;
  const Index nk = m_sigma.n_kraus;
  const Matrix root = hermitian_power(m_sigma.matrix, 0.5);
  const double top = root.cwiseAbs().maxCoeff();

  std::vector<Index> parent(nk);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index mu = 0; mu < d; ++mu) {
    for (Index nu = 0; nu < d; ++nu) {
      for (Index k = 0; k < nk; ++k) {
        for (Index l = 0; l < nk; ++l) {
          if (k != l && std::abs(root(mu * nk + k, nu * nk + l)) > rank_tol * top) {
            parent[find(k)] = find(l);
          }
        }
      }
    }
  }

  BlockReport r;
  std::vector<Index> slot(nk, -1);
  for (Index k = 0; k < nk; ++k) {
    const Index rep = find(k);
    if (slot[rep] < 0) {
      slot[rep] = static_cast<Index>(r.blocks.size());
      r.blocks.emplace_back();
    }
    r.blocks[slot[rep]].push_back(k);
  }

  const Matrix trl = trace_logical(root, d, nk);
  r.satisfied = true;
  for (const auto& block : r.blocks) {
    const Index size = static_cast<Index>(block.size());
    Matrix beta(size, size);
    for (Index i = 0; i < size; ++i) {
      for (Index j = 0; j < size; ++j) beta(i, j) = trl(block[i], block[j]);
    }
    const Complex mean = beta.trace() / static_cast<double>(size);
    const double dev = (beta - mean * Matrix::Identity(size, size)).norm();
    if (dev > cert_tol * std::max(1.0, beta.norm())) r.satisfied = false;
  }
  return r;
}

}  // namespace petzopt
