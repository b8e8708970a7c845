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

#include "petzopt/channels.hpp"

#include <cmath>
#include <sstream>

namespace petzopt {

DensityOperator::DensityOperator(const Matrix& m, double psd_tol) {
  require_square(m, "density operator");
  require_finite(m, "density operator");
  const EigenDecomposition eig = eigh(m);
  const double scale = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  if (eig.values.size() && eig.values(eig.values.size() - 1) < -psd_tol * scale) {
    throw Error(ErrorCode::NotPSD, "density operator has a negative eigenvalue");
  }
  const double tr = m.trace().real();
  if (!(tr > 0.0)) {
    throw Error(ErrorCode::BadDistribution, "density operator has non-positive trace");
  }
  m_ = hermitian_part(m) / tr;
}

DensityOperator DensityOperator::maximally_mixed(Index d) {
  if (d <= 0) throw Error(ErrorCode::BadDimensions, "dimension must be positive");
  return DensityOperator(Matrix::Identity(d, d));
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "channel needs at least one Kraus operator");
  }
  const Index n = kraus_.front().rows();
  const Index d = kraus_.front().cols();
  if (n == 0 || d == 0) throw Error(ErrorCode::ShapeMismatch, "empty Kraus operator");
  for (const Matrix& e : kraus_) {
    if (e.rows() != n || e.cols() != d) {
      std::ostringstream msg;
      msg << "Kraus operator is " << e.rows() << "x" << e.cols() << ", expected " << n
          << "x" << d;
      throw Error(ErrorCode::ShapeMismatch, msg.str());
    }
    require_finite(e, "Kraus operator");
  }
}

Matrix kraus_gram_sum(const KrausChannel& ch) {
  Matrix s = Matrix::Zero(ch.input_dim(), ch.input_dim());
  for (const Matrix& e : ch.kraus()) s.noalias() += e.adjoint() * e;
  return s;
}

ChannelReport validate(const KrausChannel& ch, double tp_tol) {
  const Matrix s = kraus_gram_sum(ch);
  const Index d = ch.input_dim();
  ChannelReport r;
  r.tp_defect = spectral_norm(s - Matrix::Identity(d, d));
  r.is_tp = r.tp_defect <= tp_tol;
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(s), Eigen::EigenvaluesOnly);
  r.trace_nonincreasing = es.eigenvalues().maxCoeff() <= 1.0 + tp_tol;
  return r;
}

Matrix apply(const KrausChannel& ch, const Matrix& state) {
  if (state.rows() != ch.input_dim() || state.cols() != ch.input_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension differs from channel input");
  }
  Matrix out = Matrix::Zero(ch.output_dim(), ch.output_dim());
  for (const Matrix& e : ch.kraus()) out.noalias() += e * state * e.adjoint();
  return out;
}

Matrix apply(const KrausChannel& ch, const DensityOperator& state) {
  return apply(ch, state.matrix());
}

KrausChannel adjoint(const KrausChannel& ch) {
  std::vector<Matrix> ops;
  ops.reserve(ch.kraus().size());
  for (const Matrix& e : ch.kraus()) ops.emplace_back(e.adjoint());
  return KrausChannel(std::move(ops));
}

KrausChannel complementary(const KrausChannel& ch) {
  const Index n = ch.output_dim();
  const Index d = ch.input_dim();
  const Index nk = ch.num_kraus();
  std::vector<Matrix> ops(n, Matrix::Zero(nk, d));
  for (Index k = 0; k < nk; ++k) {
    for (Index a = 0; a < n; ++a) ops[a].row(k) = ch[k].row(a);
  }
  return KrausChannel(std::move(ops));
}

namespace {

// Vectorization matching the Choi index mu * n + a.
Vector choi_vec(const Matrix& e, ChoiSide side, Index d, Index n) {
  Vector v(d * n);
  for (Index mu = 0; mu < d; ++mu) {
    for (Index a = 0; a < n; ++a) {
      v(mu * n + a) = side == ChoiSide::Channel ? e(a, mu) : e(mu, a);
    }
  }
  return v;
}

Matrix choi_unvec(const Vector& v, ChoiSide side, Index d, Index n) {
  Matrix e = side == ChoiSide::Channel ? Matrix(n, d) : Matrix(d, n);
  for (Index mu = 0; mu < d; ++mu) {
    for (Index a = 0; a < n; ++a) {
      if (side == ChoiSide::Channel) {
        e(a, mu) = v(mu * n + a);
      } else {
        e(mu, a) = v(mu * n + a);
      }
    }
  }
  return e;
}

}  // namespace

ChoiMatrix choi(const KrausChannel& ch, ChoiSide side) {
  ChoiMatrix c;
  c.side = side;
  c.logical_dim = side == ChoiSide::Channel ? ch.input_dim() : ch.output_dim();
  c.physical_dim = side == ChoiSide::Channel ? ch.output_dim() : ch.input_dim();
  const Index dn = c.logical_dim * c.physical_dim;
  Matrix stacked(dn, ch.num_kraus());
  for (Index k = 0; k < ch.num_kraus(); ++k) {
    stacked.col(k) = choi_vec(ch[k], side, c.logical_dim, c.physical_dim);
  }
  c.matrix = stacked * stacked.adjoint();
  return c;
}

KrausChannel kraus_from_choi(const ChoiMatrix& c, double rank_tol) {
  const Index d = c.logical_dim;
  const Index n = c.physical_dim;
  if (c.matrix.rows() != d * n || c.matrix.cols() != d * n) {
    throw Error(ErrorCode::ShapeMismatch, "Choi matrix size differs from d * n");
  }
  const EigenDecomposition eig = eigh(c.matrix);
  const double top = eig.values(0);
  const double scale = eig.values.cwiseAbs().maxCoeff();
  if (eig.values(eig.values.size() - 1) < -kPsdTol * scale) {
    throw Error(ErrorCode::NotPSD, "Choi matrix has a negative eigenvalue");
  }
  std::vector<Matrix> ops;
  for (Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values(i);
    if (!(lambda > rank_tol * top) || lambda <= 0.0) break;
    ops.push_back(choi_unvec(std::sqrt(lambda) * eig.vectors.col(i), c.side, d, n));
  }
  if (ops.empty()) {
    ops.push_back(c.side == ChoiSide::Channel ? Matrix::Zero(n, d) : Matrix::Zero(d, n));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel channel_from_qec_matrix(const Matrix& m, Index d, Index n_kraus,
                                     double tp_tol, double rank_tol) {
  if (d <= 0 || n_kraus <= 0 || m.rows() != d * n_kraus || m.cols() != d * n_kraus) {
    throw Error(ErrorCode::ShapeMismatch, "QEC matrix must be (d * n_K) square");
  }
  const Matrix trk = partial_trace(m, TensorShape{d, n_kraus}, 1);
  const double defect = spectral_norm(trk - Matrix::Identity(d, d));
  if (defect > tp_tol) {
    std::ostringstream msg;
    msg << "tr_K M differs from the identity by " << defect;
    throw Error(ErrorCode::NotTP, msg.str());
  }
  const EigenDecomposition eig = eigh(m);
  const double scale = eig.values.cwiseAbs().maxCoeff();
  if (eig.values(eig.values.size() - 1) < -kPsdTol * scale) {
    throw Error(ErrorCode::NotPSD, "QEC matrix has a negative eigenvalue");
  }
  Index rank = 0;
  while (rank < eig.values.size() && eig.values(rank) > rank_tol * eig.values(0) &&
         eig.values(rank) > 0.0) {
    ++rank;
  }
  // A = Lambda^{1/2} V^H restricted to the support, so A^H A = M.
  const Matrix a = (eig.vectors.leftCols(rank) *
                    eig.values.head(rank).cwiseSqrt().asDiagonal())
                       .adjoint();
  std::vector<Matrix> ops(n_kraus, Matrix(rank, d));
  for (Index mu = 0; mu < d; ++mu) {
    for (Index k = 0; k < n_kraus; ++k) ops[k].col(mu) = a.col(mu * n_kraus + k);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (second.input_dim() != first.output_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "composition with mismatched inner dimension");
  }
  std::vector<Matrix> ops;
  ops.reserve(second.kraus().size() * first.kraus().size());
  for (const Matrix& r : second.kraus()) {
    for (const Matrix& e : first.kraus()) ops.emplace_back(r * e);
  }
  return KrausChannel(std::move(ops));
}

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.input_dim() != b.input_dim() || a.output_dim() != b.output_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "channels have different shapes");
  }
  return frob_norm(choi(a).matrix - choi(b).matrix);
}

}  // namespace petzopt
