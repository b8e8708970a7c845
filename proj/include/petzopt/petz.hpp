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

// Petz recovery maps with their closed-form fidelity, and the positivity
// certificate for optimality of the Petz map.
//
// All operators on L (x) K use the row index mu * n_K + k.

#include <optional>
#include <string_view>
#include <vector>

#include "petzopt/channels.hpp"

namespace petzopt {

inline constexpr double kCertTol = 1e-8;
inline constexpr double kSupportTol = 1e-9;

struct QecMatrix {
  Matrix matrix;
  std::optional<DensityOperator> reference;  // empty means the identity
  Index d = 0;
  Index n_kraus = 0;
};

/// Identity reference: entries <mu| E_k^H E_l |nu>.
QecMatrix qec_matrix(const KrausChannel& ch);

/// entries <mu| sqrt(sigma) E_k^H E_l sqrt(sigma) |nu>.
QecMatrix qec_matrix(const KrausChannel& ch, const DensityOperator& sigma);

/// Kraus operators sqrt(sigma) E_k^H E(sigma)^{-1/2} with the pseudoinverse.
KrausChannel petz_map(const KrausChannel& ch, const DensityOperator& sigma);

/// sum_i |tr(K_i rho)|^2 for an endomorphic channel on L. This is the
/// overlap with the canonical purification, without any 1/d^2 factor.
double entanglement_fidelity(const DensityOperator& rho, const KrausChannel& ch);

/// Entanglement fidelity of recovery o channel without forming all Kraus
/// products.
double composed_fidelity(const DensityOperator& rho, const KrausChannel& recovery,
                         const KrausChannel& channel);

/// ||(I - P_sigma) P_rho||_2.
double support_violation(const DensityOperator& rho, const DensityOperator& sigma);
bool support_contained(const DensityOperator& rho, const DensityOperator& sigma,
                       double tol = kSupportTol);

struct FidelityReport {
  double f_compact = 0.0;
  double f_direct = 0.0;
  bool supports_nested = false;
  std::optional<Matrix> t_matrix;  // only when supports nest
  std::optional<Matrix> b_matrix;
};

/// Compact Petz fidelity ||tr_L(M_sigma^{-1/2} (sqrt(sigma) (x) I) M (rho (x) I))||_F^2
/// together with the direct Kraus-sum value.
FidelityReport petz_fidelity_compact(const DensityOperator& rho,
                                     const DensityOperator& sigma,
                                     const KrausChannel& ch);

/// Transpose-channel fidelity (1/d^2) ||tr_L sqrt(M)||_F^2 for an
/// identity-reference QEC matrix.
double tc_fidelity(const QecMatrix& m);

/// tr_L((gamma^H (x) I) sqrt(M_sigma)) with gamma = sigma^{-1/2} rho.
/// Throws SupportViolation when supp(rho) is not inside supp(sigma).
Matrix t_matrix(const DensityOperator& rho, const DensityOperator& sigma,
                const QecMatrix& m_sigma);

/// sqrt(M_sigma) (gamma (x) T). Throws SupportViolation.
Matrix b_matrix(const DensityOperator& rho, const DensityOperator& sigma,
                const QecMatrix& m_sigma);

enum class Verdict { Optimal, NotOptimal, Inconclusive };

std::string_view to_string(Verdict v);

struct OptimalityCertificate {
  double b_min_eig = 0.0;        // of the Hermitian part of B
  double b_norm = 0.0;           // ||B||_2
  double b_herm_residual = 0.0;  // ||B - B^H||_F / ||B||_F
  double commutator_general = 0.0;
  double commutator_pgm = 0.0;
  double kl_residual = 0.0;
  Verdict verdict = Verdict::NotOptimal;
};

/// Verdict bands, with t = cert_tol and s = ||B||_2:
///   Optimal       residual <= t      and min eig >= -t s
///   Inconclusive  residual <= 10 t   and min eig >= -10 t s
///   NotOptimal    otherwise
Verdict classify(double herm_residual, double min_eig, double b_norm,
                 double cert_tol = kCertTol);

OptimalityCertificate certify(const DensityOperator& rho, const DensityOperator& sigma,
                              const KrausChannel& ch, double cert_tol = kCertTol);

/// ||M - I (x) alpha||_F / ||M||_F with alpha = tr_L(M) / d.
double kl_residual(const QecMatrix& m);

/// Normalized ||[M_sigma, I (x) tr_L sqrt(M_sigma)]||_F.
double commutator_pgm(const QecMatrix& m_sigma);

struct BlockReport {
  std::vector<std::vector<Index>> blocks;  // K indices, ascending
  bool satisfied = false;
};

/// Splits K by the coupling pattern of sqrt(M_sigma) and tests whether each
/// block has tr_L of its diagonal part proportional to the identity.
BlockReport block_structure_check(const QecMatrix& m_sigma, double rank_tol = kRankTol,
                                  double cert_tol = kCertTol);

}  // namespace petzopt
