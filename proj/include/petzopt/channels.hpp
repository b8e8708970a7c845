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

// Kraus and Choi representations of completely positive maps.
//
// Choi storage always puts the logical factor L first (slowest index):
//   channel  E: L -> H, entry ((mu,a),(nu,b)) = sum_k E_k(a,mu) conj(E_k(b,nu))
//   recovery R: H -> L, entry ((mu,a),(nu,b)) = sum_i R_i(mu,a) conj(R_i(nu,b))
// so both live on L (x) H with row index mu * n + a.

#include <vector>

#include "petzopt/linops.hpp"

namespace petzopt {

inline constexpr double kTpTol = 1e-8;

class DensityOperator {
 public:
  /// Rescales to unit trace. Throws NotPSD / NotHermitian / BadDistribution
  /// (zero trace) on invalid input.
  explicit DensityOperator(const Matrix& m, double psd_tol = kPsdTol);

  static DensityOperator maximally_mixed(Index d);

  const Matrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

 private:
  Matrix m_;
};

class KrausChannel {
 public:
  /// Every operator must share one shape n x d. Throws ShapeMismatch.
  explicit KrausChannel(std::vector<Matrix> kraus);

  Index input_dim() const noexcept { return kraus_.front().cols(); }
  Index output_dim() const noexcept { return kraus_.front().rows(); }
  Index num_kraus() const noexcept { return static_cast<Index>(kraus_.size()); }
  const std::vector<Matrix>& kraus() const noexcept { return kraus_; }
  const Matrix& operator[](std::size_t k) const { return kraus_.at(k); }

 private:
  std::vector<Matrix> kraus_;
};

struct ChannelReport {
  double tp_defect = 0.0;  // ||sum E^H E - I||_2
  bool is_tp = false;
  bool is_cp = true;  // automatic for a Kraus form
  bool trace_nonincreasing = false;
};

ChannelReport validate(const KrausChannel& ch, double tp_tol = kTpTol);

/// sum_k E_k^H E_k.
Matrix kraus_gram_sum(const KrausChannel& ch);

Matrix apply(const KrausChannel& ch, const Matrix& state);
Matrix apply(const KrausChannel& ch, const DensityOperator& state);

KrausChannel adjoint(const KrausChannel& ch);

/// Complementary channel L -> K with Kraus operators F_a(k, mu) = E_k(a, mu).
KrausChannel complementary(const KrausChannel& ch);

enum class ChoiSide { Channel, Recovery };

struct ChoiMatrix {
  Matrix matrix;
  Index logical_dim = 0;
  Index physical_dim = 0;
  ChoiSide side = ChoiSide::Channel;
};

/// For side == Channel the map is L -> H (input_dim = d); for Recovery it is
/// H -> L (output_dim = d).
ChoiMatrix choi(const KrausChannel& ch, ChoiSide side = ChoiSide::Channel);

/// Eigen-decomposes the Choi matrix and drops eigenvalues at or below
/// rank_tol * lambda_max. Throws NotPSD.
KrausChannel kraus_from_choi(const ChoiMatrix& c, double rank_tol = kRankTol);

/// Rebuilds a channel L -> C^r, r = rank(M), from its identity-reference QEC
/// matrix by factoring M = A^H A. Throws NotPSD, or NotTP when tr_K M != I_d.
KrausChannel channel_from_qec_matrix(const Matrix& m, Index d, Index n_kraus,
                                     double tp_tol = kTpTol,
                                     double rank_tol = kRankTol);

/// second o first, Kraus products ordered with `second` outermost.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

/// Frobenius distance between Choi matrices of two maps with equal shapes.
double choi_distance(const KrausChannel& a, const KrausChannel& b);

}  // namespace petzopt
