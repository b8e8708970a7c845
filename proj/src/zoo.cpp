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

#include "petzopt/zoo.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace petzopt {

namespace {

constexpr double kProbTol = 1e-12;

DensityOperator mixed(Index d) { return DensityOperator::maximally_mixed(d); }

Matrix ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  // Fill column-major so the stream order is fixed by the shape alone.
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

Matrix random_density_matrix(Index d, Index rank, std::mt19937_64& rng) {
  const Matrix g = ginibre(d, rank, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

Matrix shift_matrix(Index d) {
  Matrix x = Matrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

Matrix clock_matrix(Index d) {
  Matrix z = Matrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) {
    z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                  static_cast<double>(d));
  }
  return z;
}

PauliDistribution uniform_pauli(const std::vector<std::pair<int, int>>& support) {
  std::set<std::pair<int, int>> unique(support.begin(), support.end());
  if (unique.empty()) throw Error(ErrorCode::BadDistribution, "empty Pauli support");
  PauliDistribution p;
  for (const auto& key : unique) p[key] = 1.0 / static_cast<double>(unique.size());
  return p;
}

std::vector<std::pair<int, int>> parse_pauli_support(const std::string& text, Index d) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "I") {
      out.emplace_back(0, 0);
    } else if (item == "X") {
      out.emplace_back(1, 0);
    } else if (item == "Z") {
      out.emplace_back(0, 1);
    } else if (item == "Y") {
      out.emplace_back(1, 1);
    } else {
      const auto colon = item.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorCode::Parse, "Pauli label '" + item + "' is not I/X/Y/Z or a:b");
      }
      try {
        out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "Pauli label '" + item + "' has bad powers");
      }
    }
    const auto& [a, b] = out.back();
    if (a < 0 || b < 0 || a >= d || b >= d) {
      throw Error(ErrorCode::Parse, "Pauli powers must lie in [0, d)");
    }
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty Pauli support");
  return out;
}

ZooFixture pauli_channel(Index d, const PauliDistribution& probs) {
  if (d < 2) throw Error(ErrorCode::BadDimensions, "Pauli channel needs d >= 2");
  double total = 0.0;
  for (const auto& [key, p] : probs) {
    if (key.first < 0 || key.second < 0 || key.first >= d || key.second >= d) {
      throw Error(ErrorCode::BadDistribution, "Pauli label outside [0, d)");
    }
    if (!(p >= 0.0)) throw Error(ErrorCode::BadDistribution, "negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kProbTol) {
    throw Error(ErrorCode::BadDistribution, "probabilities do not sum to one");
  }
  const Matrix x = shift_matrix(d);
  const Matrix z = clock_matrix(d);
  std::vector<Matrix> ops;
  std::vector<double> nonzero;
  for (const auto& [key, p] : probs) {
    if (p <= 0.0) continue;
    Matrix op = Matrix::Identity(d, d);
    for (int i = 0; i < key.first; ++i) op = x * op;
    Matrix zp = Matrix::Identity(d, d);
    for (int i = 0; i < key.second; ++i) zp = z * zp;
    ops.emplace_back(std::sqrt(p) * op * zp);
    nonzero.push_back(p);
  }
  ZooFixture f{"pauli", KrausChannel(std::move(ops)), mixed(d), mixed(d), {}, {}, "", 1e-10};
  f.parameters["d"] = static_cast<double>(d);
  f.parameters["support_size"] = static_cast<double>(nonzero.size());
  const bool uniform = std::all_of(nonzero.begin(), nonzero.end(), [&](double p) {
    return std::abs(p - nonzero.front()) <= kProbTol;
  });
  if (uniform) {
    const double inv = 1.0 / static_cast<double>(nonzero.size());
    f.expected["f_tc"] = inv;
    f.expected["f_opt"] = inv;
    f.expected["f_petz"] = inv;
  }
  f.provenance = "qudit Pauli channel; uniform support S gives fidelity 1/|S|";
  return f;
}

ZooFixture c2c_channel(const RealMatrix& cond_prob) {
  const Index ny = cond_prob.rows();
  const Index nx = cond_prob.cols();
  if (ny == 0 || nx == 0) throw Error(ErrorCode::BadDimensions, "empty stochastic matrix");
  for (Index x = 0; x < nx; ++x) {
    for (Index y = 0; y < ny; ++y) {
      if (!(cond_prob(y, x) >= 0.0)) {
        throw Error(ErrorCode::BadDistribution, "negative conditional probability");
      }
    }
    if (std::abs(cond_prob.col(x).sum() - 1.0) > kProbTol) {
      throw Error(ErrorCode::BadDistribution, "column of p(y|x) does not sum to one");
    }
  }
  std::vector<Matrix> ops;
  for (Index x = 0; x < nx; ++x) {
    for (Index y = 0; y < ny; ++y) {
      if (cond_prob(y, x) <= 0.0) continue;
      Matrix e = Matrix::Zero(ny, nx);
      e(y, x) = std::sqrt(cond_prob(y, x));
      ops.push_back(std::move(e));
    }
  }
  bool disjoint = true;
  for (Index y = 0; y < ny; ++y) {
    if ((cond_prob.row(y).array() > 0.0).count() > 1) disjoint = false;
  }
  bool constant = true;
  for (Index x = 1; x < nx; ++x) {
    if ((cond_prob.col(x) - cond_prob.col(0)).cwiseAbs().maxCoeff() > kProbTol) {
      constant = false;
    }
  }
  ZooFixture f{"c2c", KrausChannel(std::move(ops)), mixed(nx), mixed(nx), {}, {}, "", 1e-10};
  f.parameters["x_size"] = static_cast<double>(nx);
  f.parameters["y_size"] = static_cast<double>(ny);
  // Disjoint supports dephase the input; identical columns replace it with a
  // fixed state, which caps the fidelity at 1/|X|^2.
  const double inv = 1.0 / static_cast<double>(nx);
  if (disjoint) {
    f.expected["f_tc"] = inv;
    f.expected["f_opt"] = inv;
  } else if (constant) {
    f.expected["f_tc"] = inv * inv;
    f.expected["f_opt"] = inv * inv;
  }
  f.provenance = "classical-to-classical channel; disjoint rows give 1/|X|, constant columns 1/|X|^2";
  return f;
}

double toy_fidelity(double a, double b) {
  const double c2 = 1.0 / (a * a + b * b);
  const double s = a / std::numbers::sqrt2 + b;
  return 0.5 * c2 * s * s;
}

ZooFixture toy_channel(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::InfeasibleParameters, "toy model needs a, b > 0");
  }
  const double c = 1.0 / std::sqrt(a * a + b * b);
  Matrix e1 = Matrix::Zero(3, 2);
  Matrix e2 = Matrix::Zero(3, 2);
  e1(0, 0) = c * a;
  e1(1, 1) = c * b;
  e2(0, 1) = c * a;
  e2(2, 0) = c * b;
  ZooFixture f{"toy", KrausChannel({e1, e2}), mixed(2), mixed(2), {}, {}, "", 1e-6};
  f.parameters["a"] = a;
  f.parameters["b"] = b;
  const double fid = toy_fidelity(a, b);
  f.expected["f_tc"] = fid;
  f.expected["f_opt"] = fid;
  f.expected["f_petz"] = fid;
  f.expected["commutator_pgm"] = 0.0;
  f.provenance = "2 -> 3 toy model where the transpose channel is optimal";
  return f;
}

ZooFixture direct_sum_fixture(const std::vector<DirectSumBlock>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::BadDimensions, "no blocks");
  Index d = 0;
  Index nk = 0;
  double rho_total = 0.0;
  double sigma_total = 0.0;
  double expected = 0.0;
  for (const auto& blk : blocks) {
    require_square(blk.rho, "block rho");
    require_square(blk.sigma, "block sigma");
    require_square(blk.alpha, "block alpha");
    if (blk.rho.rows() != blk.sigma.rows()) {
      throw Error(ErrorCode::DimensionMismatch, "rho_s and sigma_s differ in size");
    }
    if (std::abs(blk.alpha.trace().real() - 1.0) > kProbTol) {
      throw Error(ErrorCode::BadDistribution, "alpha_s must have unit trace");
    }
    if (!is_psd(blk.rho, kPsdTol).verdict || !is_psd(blk.sigma, kPsdTol).verdict ||
        !is_psd(blk.alpha, kPsdTol).verdict) {
      throw Error(ErrorCode::NotPSD, "block operators must be PSD");
    }
    const Index ds = blk.rho.rows();
    const Matrix outside =
        Matrix::Identity(ds, ds) - support_projector(blk.sigma);
    if (spectral_norm(outside * support_projector(blk.rho)) > 1e-9) {
      throw Error(ErrorCode::SupportViolation, "supp(rho_s) not inside supp(sigma_s)");
    }
    const double w = blk.rho.trace().real();
    rho_total += w;
    sigma_total += blk.sigma.trace().real();
    expected += w * w;
    d += ds;
    nk += blk.alpha.rows();
  }
  if (std::abs(rho_total - 1.0) > kProbTol || std::abs(sigma_total - 1.0) > kProbTol) {
    throw Error(ErrorCode::BadDistribution, "block traces must sum to one");
  }
  Matrix m = Matrix::Zero(d * nk, d * nk);
  Matrix rho = Matrix::Zero(d, d);
  Matrix sigma = Matrix::Zero(d, d);
  Index l0 = 0;
  Index k0 = 0;
  for (const auto& blk : blocks) {
    const Index ds = blk.rho.rows();
    const Index ns = blk.alpha.rows();
    rho.block(l0, l0, ds, ds) = blk.rho;
    sigma.block(l0, l0, ds, ds) = blk.sigma;
    for (Index mu = l0; mu < l0 + ds; ++mu) {
      m.block(mu * nk + k0, mu * nk + k0, ns, ns) = blk.alpha;
    }
    l0 += ds;
    k0 += ns;
  }
  ZooFixture f{"direct-sum", channel_from_qec_matrix(m, d, nk), DensityOperator(rho),
               DensityOperator(sigma), {}, {}, "", 1e-9};
  f.parameters["blocks"] = static_cast<double>(blocks.size());
  f.expected["f_petz"] = expected;
  f.expected["f_opt"] = expected;
  f.provenance = "direct sum of KL blocks; fidelity sum_s (tr rho_s)^2";
  return f;
}

ZooFixture direct_sum_random(const std::vector<std::pair<Index, Index>>& dims,
                             const std::vector<double>& weights, std::uint64_t seed) {
  if (dims.empty() || dims.size() != weights.size()) {
    throw Error(ErrorCode::BadDimensions, "one weight per block is required");
  }
  std::mt19937_64 rng(seed);
  std::vector<DirectSumBlock> blocks;
  const double sigma_weight = 1.0 / static_cast<double>(dims.size());
  for (std::size_t s = 0; s < dims.size(); ++s) {
    const auto [ds, ns] = dims[s];
    if (ds <= 0 || ns <= 0) throw Error(ErrorCode::BadDimensions, "block sizes must be positive");
    DirectSumBlock blk;
    blk.rho = weights[s] * random_density_matrix(ds, ds, rng);
    blk.sigma = sigma_weight * random_density_matrix(ds, ds, rng);
    blk.alpha = random_density_matrix(ns, ns, rng);
    blocks.push_back(std::move(blk));
  }
  ZooFixture f = direct_sum_fixture(blocks);
  f.parameters["seed"] = static_cast<double>(seed);
  return f;
}

ZooFixture kl_fixture(Index d, Index n_kraus, std::uint64_t seed) {
  if (d <= 0 || n_kraus <= 0) throw Error(ErrorCode::BadDimensions, "dimensions must be positive");
  std::mt19937_64 rng(seed);
  const Matrix alpha = random_density_matrix(n_kraus, n_kraus, rng);
  const Matrix m = kron(Matrix::Identity(d, d), alpha);
  const Matrix rho = random_density_matrix(d, d, rng);
  const Matrix sigma = random_density_matrix(d, d, rng);
  ZooFixture f{"kl", channel_from_qec_matrix(m, d, n_kraus), DensityOperator(rho),
               DensityOperator(sigma), {}, {}, "", 1e-9};
  f.parameters["d"] = static_cast<double>(d);
  f.parameters["n_kraus"] = static_cast<double>(n_kraus);
  f.parameters["seed"] = static_cast<double>(seed);
  f.expected["f_petz"] = 1.0;
  f.expected["f_opt"] = 1.0;
  f.expected["kl_residual"] = 0.0;
  f.provenance = "QEC matrix of the form I (x) alpha; perfect recovery";
  return f;
}

QubitExampleParams solve_qubit_example(double a, double t, double x, double y) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::InfeasibleParameters, why);
  };
  if (!(a > 0.0 && a < 1.0)) fail("a must lie in (0, 1)");
  if (!(t > 0.0)) fail("t must be positive");
  QubitExampleParams p;
  p.a = a;
  p.t = t;
  p.x = x;
  p.y = y;
  p.b = std::sqrt(1.0 - a * a);
  p.s = (1.0 - p.b * t) / a;
  if (!(p.s > 0.0)) fail("s = (1 - b t) / a must be positive");
  const double v2 = p.b * p.b - x * x - y * y;
  if (!(v2 > 0.0)) fail("b^2 - x^2 - y^2 must be positive");
  p.v = std::sqrt(v2);
  // z = alpha u + beta, and u^2 + y^2 + z^2 = a^2 fixes u.
  const double alpha = t / p.s;
  const double beta = x * alpha * alpha - p.v * alpha;
  const double p2 = 1.0 + alpha * alpha;
  const double p1 = 2.0 * alpha * beta;
  const double p0 = beta * beta - a * a + y * y;
  const double disc = p1 * p1 - 4.0 * p2 * p0;
  if (disc < 0.0) fail("quadratic for u has no real root");
  const double root = std::sqrt(disc);
  const double u = std::max((-p1 + root) / (2.0 * p2), (-p1 - root) / (2.0 * p2));
  if (!(u > 0.0)) fail("quadratic for u has no positive root");
  p.u = u;
  p.z = alpha * u + beta;
  if (!(x > 0.0) || !(x * p.z - y * y > 0.0)) fail("x z - y^2 must be positive");
  return p;
}

ZooFixture qubit_example(double a, double t, double x, double y) {
  const QubitExampleParams p = solve_qubit_example(a, t, x, y);
  Matrix root = Matrix::Zero(4, 4);
  root(0, 0) = p.u;
  root(1, 1) = p.z;
  root(1, 2) = p.y;
  root(2, 1) = p.y;
  root(2, 2) = p.x;
  root(3, 3) = p.v;
  const Matrix m_sigma = root * root;
  Matrix inv_sqrt_sigma = Matrix::Zero(2, 2);
  inv_sqrt_sigma(0, 0) = 1.0 / p.a;
  inv_sqrt_sigma(1, 1) = 1.0 / p.b;
  const Matrix lift = kron(inv_sqrt_sigma, Matrix::Identity(2, 2));
  const Matrix m = lift * m_sigma * lift;
  Matrix sigma = Matrix::Zero(2, 2);
  sigma(0, 0) = p.a * p.a;
  sigma(1, 1) = p.b * p.b;
  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = p.a * p.s;
  rho(1, 1) = p.b * p.t;
  ZooFixture f{"qubit-example", channel_from_qec_matrix(m, 2, 2), DensityOperator(rho),
               DensityOperator(sigma), {}, {}, "", 1e-5};
  f.parameters = {{"a", p.a}, {"t", p.t}, {"x", p.x}, {"y", p.y}};
  f.expected = {{"b", p.b}, {"s", p.s}, {"u", p.u}, {"v", p.v}, {"z", p.z}};
  if (a == std::sqrt(0.3) && t == 1.0 && x == 0.25 && y == 0.08) {
    f.expected["f_petz"] = 0.987703;
    f.expected["f_opt"] = 0.987703;
  }
  f.provenance = "parametrized qubit channel where B >= 0 but the pretty-good-map test fails";
  return f;
}

ZooFixture qubit_example() { return qubit_example(std::sqrt(0.3), 1.0, 0.25, 0.08); }

GkpState gkp_state(int mu, double delta, Index cutoff, double tail_tol) {
  if (mu != 0 && mu != 1) throw Error(ErrorCode::InfeasibleParameters, "mu must be 0 or 1");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::InfeasibleParameters, "delta must lie in (0, 1)");
  }
  if (cutoff < 2) throw Error(ErrorCode::CutoffTooSmall, "cutoff must be at least 2");

  // Uniform grid wide enough for every retained peak; the peaks have width
  // delta, far narrower than the Gauss-Hermite nodes at this cutoff.
  constexpr double kHalfWidth = 40.0;
  constexpr Index kPoints = 16001;
  const double h = 2.0 * kHalfWidth / static_cast<double>(kPoints - 1);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  // Envelope e^{-2 pi delta^2 s^2} < 1e-12 beyond s_max.
  const int s_max =
      static_cast<int>(std::ceil(std::sqrt(12.0 * std::log(10.0) / (2.0 * std::numbers::pi)) /
                                 delta)) + 2;

  RealVector q(kPoints);
  RealVector psi = RealVector::Zero(kPoints);
  for (Index i = 0; i < kPoints; ++i) q(i) = -kHalfWidth + h * static_cast<double>(i);
  for (int s = -s_max - 1; s <= s_max + 1; ++s) {
    const double env = std::exp(-2.0 * std::numbers::pi * delta * delta * s * s);
    const double center = (2.0 * s + mu) * sqrt_pi;
    psi.array() +=
        env * (-(q.array() - center).square() / (2.0 * delta * delta)).exp();
  }
  psi /= std::sqrt(psi.squaredNorm() * h);

  // Overlaps with oscillator eigenfunctions via the stable recurrence.
  GkpState st;
  st.coeffs.resize(cutoff);
  RealVector prev = std::pow(std::numbers::pi, -0.25) * (-0.5 * q.array().square()).exp();
  RealVector cur = std::sqrt(2.0) * q.cwiseProduct(prev);
  st.coeffs(0) = h * prev.dot(psi);
  st.coeffs(1) = h * cur.dot(psi);
  for (Index n = 1; n + 1 < cutoff; ++n) {
    const double dn = static_cast<double>(n);
    RealVector next = std::sqrt(2.0 / (dn + 1.0)) * q.cwiseProduct(cur) -
                      std::sqrt(dn / (dn + 1.0)) * prev;
    st.coeffs(n + 1) = h * next.dot(psi);
    prev = std::move(cur);
    cur = std::move(next);
  }
  st.tail_mass = std::max(0.0, 1.0 - st.coeffs.squaredNorm());
  if (st.tail_mass > tail_tol) {
    std::ostringstream msg;
    msg << "mass " << st.tail_mass << " beyond Fock cutoff " << cutoff << " exceeds "
        << tail_tol;
    throw Error(ErrorCode::CutoffTooSmall, msg.str());
  }
  st.coeffs.normalize();
  for (Index n = 0; n < cutoff; ++n) {
    st.mean_photon += static_cast<double>(n) * st.coeffs(n) * st.coeffs(n);
  }
  return st;
}

ZooFixture gkp_transduction(const GkpOptions& opts) {
  if (!(opts.eta > 0.0 && opts.eta < 1.0)) {
    throw Error(ErrorCode::InfeasibleParameters, "eta must lie in (0, 1)");
  }
  const Index n = opts.cutoff;
  const GkpState zero = gkp_state(0, opts.delta, n, opts.tail_tol);
  const GkpState one = gkp_state(1, opts.delta, n, opts.tail_tol);

  // Symmetric orthonormalization of the two code words.
  RealMatrix words(n, 2);
  words.col(0) = zero.coeffs;
  words.col(1) = one.coeffs;
  const RealMatrix gram = words.transpose() * words;
  Eigen::SelfAdjointEigenSolver<RealMatrix> ges(gram);
  if (ges.eigenvalues()(0) <= 1e-12 * ges.eigenvalues()(1)) {
    throw Error(ErrorCode::DegenerateEncoding, "code words are linearly dependent");
  }
  const RealMatrix encode = words * (ges.eigenvectors() *
                                     ges.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
                                     ges.eigenvectors().transpose());

  // amp[mu](k, m) is the amplitude on |k>_1 |m>_2; the generator
  // a1^H a2 - a1 a2^H conserves k + m, so each total is a separate block.
  const double theta = std::asin(std::sqrt(opts.eta));
  const Index out_dim = 2 * n - 1;
  std::vector<RealMatrix> amp(2, RealMatrix::Zero(out_dim, out_dim));
  for (Index total = 0; total <= 2 * n - 2; ++total) {
    const Index dim = total + 1;
    RealMatrix gen = RealMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) {
      const Index m = total - k;
      if (m > 0) gen(k + 1, k) += std::sqrt(static_cast<double>((k + 1) * m));
      if (k > 0) gen(k - 1, k) -= std::sqrt(static_cast<double>(k * (m + 1)));
    }
    const RealMatrix u = (-theta * gen).exp();
    const Index lo = std::max<Index>(0, total - n + 1);
    const Index hi = std::min<Index>(n - 1, total);
    for (int mu = 0; mu < 2; ++mu) {
      RealVector in = RealVector::Zero(dim);
      for (Index k = lo; k <= hi; ++k) in(k) = encode(k, mu) * zero.coeffs(total - k);
      const RealVector res = u * in;
      for (Index k = 0; k < dim; ++k) amp[mu](k, total - k) += res(k);
    }
  }

  std::vector<Matrix> kept;
  double dropped_mass = 0.0;
  for (Index k = 0; k < out_dim; ++k) {
    Matrix e(out_dim, 2);
    for (int mu = 0; mu < 2; ++mu) e.col(mu) = amp[mu].row(k).transpose().cast<Complex>();
    const double norm2 = spectral_norm(e);
    if (norm2 <= opts.kraus_drop_tol) {
      dropped_mass += norm2 * norm2;
    } else {
      kept.push_back(std::move(e));
    }
  }
  if (kept.empty()) throw Error(ErrorCode::DegenerateEncoding, "every Kraus operator dropped");

  ZooFixture f{"gkp", KrausChannel(std::move(kept)), mixed(2), mixed(2), {}, {}, "", 1e-6};
  f.parameters = {{"delta", opts.delta},
                  {"eta", opts.eta},
                  {"cutoff", static_cast<double>(n)},
                  {"kraus_drop_tol", opts.kraus_drop_tol}};
  f.expected["tp_defect"] = validate(f.channel).tp_defect;
  f.expected["dropped_mass"] = dropped_mass;
  f.expected["tail_mass"] = std::max(zero.tail_mass, one.tail_mass);
  f.expected["n_kraus"] = static_cast<double>(f.channel.num_kraus());
  f.provenance = "GKP qubit transduced through a beam splitter of transmissivity eta";
  return f;
}

KrausChannel random_channel(Index d, Index n, Index n_kraus, std::uint64_t seed) {
  if (d <= 0 || n <= 0 || n_kraus <= 0 || n_kraus > n * d || n * n_kraus < d) {
    throw Error(ErrorCode::BadDimensions, "need 1 <= n_K <= n d and n n_K >= d");
  }
  std::mt19937_64 rng(seed);
  const Index rows = n * n_kraus;
  const Matrix g = ginibre(rows, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, d);
  // Fix the phase of R's diagonal so Q is Haar distributed.
  for (Index j = 0; j < d; ++j) {
    const Complex r = qr.matrixQR()(j, j);
    if (std::abs(r) > 0.0) q.col(j) *= r / std::abs(r);
  }
  std::vector<Matrix> ops;
  for (Index k = 0; k < n_kraus; ++k) ops.emplace_back(q.middleRows(k * n, n));
  return KrausChannel(std::move(ops));
}

DensityOperator random_state(Index d, std::uint64_t seed, Index rank) {
  if (d <= 0) throw Error(ErrorCode::BadDimensions, "dimension must be positive");
  if (rank <= 0) rank = d;
  std::mt19937_64 rng(seed);
  return DensityOperator(random_density_matrix(d, rank, rng));
}

std::vector<ZooFixture> fixture_suite() {
  std::vector<ZooFixture> out;
  out.push_back(toy_channel(1.0, 1.0));
  out.push_back(toy_channel(0.4, 1.7));
  out.push_back(pauli_channel(2, uniform_pauli({{0, 0}, {0, 1}})));
  out.push_back(pauli_channel(2, uniform_pauli({{0, 0}, {1, 0}, {1, 1}})));
  out.push_back(pauli_channel(3, uniform_pauli({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1},
                                                {1, 2}, {2, 0}, {2, 1}, {2, 2}})));
  RealMatrix perm = RealMatrix::Zero(3, 3);
  perm(1, 0) = perm(2, 1) = perm(0, 2) = 1.0;
  out.push_back(c2c_channel(perm));
  RealMatrix constant(3, 2);
  constant << 0.5, 0.5, 0.3, 0.3, 0.2, 0.2;
  out.push_back(c2c_channel(constant));
  out.push_back(qubit_example());
  out.push_back(direct_sum_random({{2, 2}, {2, 1}}, {0.6, 0.4}, 11));
  out.push_back(kl_fixture(2, 3, 5));
  return out;
}

}  // namespace petzopt
