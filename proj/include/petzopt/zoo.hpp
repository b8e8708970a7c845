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

// Parametrized example channels with their closed-form expected values.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "petzopt/channels.hpp"

namespace petzopt {

struct ZooFixture {
  std::string name;
  KrausChannel channel;
  DensityOperator rho;
  DensityOperator sigma;
  std::map<std::string, double> parameters;
  std::map<std::string, double> expected;
  std::string provenance;
  double tolerance = 1e-8;
};

/// Clock and shift operators: X|j> = |j+1 mod d>, Z|j> = w^j |j>.
Matrix shift_matrix(Index d);
Matrix clock_matrix(Index d);

/// Keys are (power of X, power of Z). Zero-probability entries are dropped.
using PauliDistribution = std::map<std::pair<int, int>, double>;

/// Uniform distribution over the given set of (a, b) labels.
PauliDistribution uniform_pauli(const std::vector<std::pair<int, int>>& support);

/// Parses "I,Z" style qubit labels (I, X, Y, Z) or "a:b" powers.
std::vector<std::pair<int, int>> parse_pauli_support(const std::string& text, Index d);

ZooFixture pauli_channel(Index d, const PauliDistribution& probs);

/// cond_prob(y, x) = p(y|x); columns must sum to one.
ZooFixture c2c_channel(const RealMatrix& cond_prob);

ZooFixture toy_channel(double a, double b);

/// Closed form for the toy model: c^2 (a / sqrt 2 + b)^2 / 2.
double toy_fidelity(double a, double b);

struct DirectSumBlock {
  Matrix rho;    // block of rho, trace = weight of the block
  Matrix sigma;  // block of sigma
  Matrix alpha;  // trace-one PSD on K_s
};

/// M = sum_s I_{L_s} (x) alpha_s with L and K both block diagonal.
ZooFixture direct_sum_fixture(const std::vector<DirectSumBlock>& blocks);

/// Random blocks where rho_s and sigma_s do not commute.
ZooFixture direct_sum_random(const std::vector<std::pair<Index, Index>>& dims,
                             const std::vector<double>& weights, std::uint64_t seed);

/// Channel with M = I_d (x) alpha for a random alpha; rho, sigma random.
ZooFixture kl_fixture(Index d, Index n_kraus, std::uint64_t seed);

struct QubitExampleParams {
  double a = 0.0, b = 0.0, s = 0.0, t = 0.0, u = 0.0, v = 0.0, x = 0.0, y = 0.0, z = 0.0;
};

/// Solves the constraint system of the parametrized qubit example.
/// Throws InfeasibleParameters.
QubitExampleParams solve_qubit_example(double a, double t, double x, double y);

ZooFixture qubit_example(double a, double t, double x, double y);
ZooFixture qubit_example();  // a = sqrt(0.3), t = 1, x = 0.25, y = 0.08

inline constexpr double kGkpTailTol = 1e-4;

struct GkpState {
  RealVector coeffs;  // Fock amplitudes, unit norm
  double tail_mass = 0.0;
  double mean_photon = 0.0;
};

/// Fock expansion of the finite-energy square GKP state |mu_Delta>.
/// Throws CutoffTooSmall when the mass outside the cutoff exceeds tail_tol.
GkpState gkp_state(int mu, double delta, Index cutoff, double tail_tol = kGkpTailTol);

struct GkpOptions {
  double delta = 0.3;
  double eta = 0.5;
  Index cutoff = 80;
  double kraus_drop_tol = 1e-5;
  double tail_tol = kGkpTailTol;
};

/// Beam-splitter transduction of a GKP qubit from mode 1 into mode 2, which
/// starts in |0_Delta>. Mode 1 is traced out. Expected values record the
/// truncation audit ("tp_defect", "dropped_mass").
ZooFixture gkp_transduction(const GkpOptions& opts);

/// Haar-random isometry C^d -> C^n (x) C^{n_K} cut into n_K Kraus operators.
/// Needs n_K <= n d and n n_K >= d, else BadDimensions.
KrausChannel random_channel(Index d, Index n, Index n_kraus, std::uint64_t seed);

/// Ginibre-ensemble state of the given rank (default full).
DensityOperator random_state(Index d, std::uint64_t seed, Index rank = 0);

/// Non-GKP fixtures used for certificate and optimizer cross-checks.
std::vector<ZooFixture> fixture_suite();

}  // namespace petzopt
