// Copyright 2026 The broadcastlab Authors
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
#include "broadcastlab/cloner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "broadcastlab/tolerances.hpp"

namespace broadcastlab {

namespace {

constexpr double kNormalizationTol = 1e-12;

void require_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw ParameterError("machine dimension must be 2 or 4, got " +
                         std::to_string(dim));
  }
}

std::vector<std::size_t> factors_of(int dim) {
  return dim == 2 ? std::vector<std::size_t>{2} : std::vector<std::size_t>{2, 2};
}

/// One term of a machine output: a two-copy ket (length M^2) attached to a
/// machine state.
struct OutputTerm {
  std::vector<double> ket;
  MachineState machine;
};

std::vector<OutputTerm> output_terms(int dim, int i) {
  const auto m = static_cast<std::size_t>(dim);
  std::vector<OutputTerm> terms;
  std::vector<double> same(m * m, 0.0);
  same[static_cast<std::size_t>(i) * m + static_cast<std::size_t>(i)] = 1.0;
  terms.push_back({std::move(same), {MachineState::Kind::kX, i, i}});
  for (int j = 0; j < dim; ++j) {
    if (j == i) continue;
    std::vector<double> sym(m * m, 0.0);
    sym[static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)] += 1.0;
    sym[static_cast<std::size_t>(j) * m + static_cast<std::size_t>(i)] += 1.0;
    terms.push_back({std::move(sym), {MachineState::Kind::kY, i, j}});
  }
  return terms;
}

Mat3 transpose3(const Mat3& t) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = t[j][i];
  }
  return out;
}

Mat3 scale3(const Mat3& t, double s) {
  Mat3 out = t;
  for (auto& row : out) {
    for (double& v : row) v *= s;
  }
  return out;
}

Vec3 scale3(const Vec3& v, double s) { return {v[0] * s, v[1] * s, v[2] * s}; }

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4 || rho.subsystem_dims() != std::vector<std::size_t>{2, 2}) {
    throw DimensionError("cloning input must be a two-qubit state");
  }
}

void fill_pairs(CloneOutputs& out, const ComplexMatrix& joint, bool keep_joint) {
  for (PairLabel label : pairs_for(out.mode)) {
    const auto q = pair_qubits(label);
    ComplexMatrix rho = partial_trace(joint, {q[0], q[1]});
    out.min_eigenvalues[label] = hermitian_eigenvalues(rho).front();
    out.pairs.emplace(label, std::move(rho));
  }
  if (keep_joint) out.joint = joint;
}

ComplexMatrix local_joint(const ComplexMatrix& rho12, const CloningChannel& ch) {
  // Lambda (x) Lambda acting on qubit 1 -> (1, 3) and qubit 2 -> (2, 4).
  ComplexMatrix product({2, 2, 2, 2});
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          const Complex w = rho12(static_cast<std::size_t>(a * 2 + c),
                                  static_cast<std::size_t>(b * 2 + d));
          if (w == Complex{}) continue;
          product.add_scaled(tensor(ch.basis_image(a, b), ch.basis_image(c, d)), w);
        }
      }
    }
  }
  // Factor order is (1, 3, 2, 4); move to (1, 2, 3, 4).
  static constexpr std::array<std::size_t, 4> kOrder{0, 2, 1, 3};
  return permute_subsystems(product, kOrder);
}

}  // namespace

std::string_view to_string(CloningMode mode) {
  return mode == CloningMode::kLocal ? "local" : "nonlocal";
}

int machine_dim(CloningMode mode) { return mode == CloningMode::kLocal ? 2 : 4; }

double lambda_max(int dim) { return 1.0 / (2.0 * (dim - 1)); }

double si_lambda(int dim) { return 1.0 / (2.0 * (dim + 1)); }

SiAmplitudes si_amplitudes(int dim) {
  return {2.0 / (dim + 1), 1.0 / (2.0 * (dim + 1))};
}

MachineGram::MachineGram(int dim, double lambda)
    : MachineGram(dim, lambda, 1.0 - 2.0 * (dim - 1) * lambda, true) {
  if (!std::isfinite(lambda) || lambda < 0.0 || x_norm_ < -tol::kGramDiagonal) {
    std::ostringstream msg;
    msg << "lambda must lie in [0, " << lambda_max(dim) << "] for M=" << dim
        << ", got " << lambda;
    throw ParameterError(msg.str());
  }
}

MachineGram::MachineGram(int dim, double lambda, double x_norm, bool)
    : dim_(dim), lambda_(lambda), x_norm_(x_norm) {
  require_dim(dim);
  for (int i = 0; i < dim; ++i) states_.push_back({MachineState::Kind::kX, i, i});
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (j != i) states_.push_back({MachineState::Kind::kY, i, j});
    }
  }
}

MachineGram MachineGram::for_mode(CloningMode mode, double lambda) {
  return MachineGram(machine_dim(mode), lambda);
}

MachineGram MachineGram::with_x_norm(int dim, double lambda, double x_norm) {
  return MachineGram(dim, lambda, x_norm, true);
}

double MachineGram::overlap(const MachineState& a, const MachineState& b) const {
  using Kind = MachineState::Kind;
  if (a == b) return a.kind == Kind::kX ? x_norm_ : lambda_;
  if (a.kind == b.kind) return 0.0;
  const MachineState& x = a.kind == Kind::kX ? a : b;
  const MachineState& y = a.kind == Kind::kX ? b : a;
  return x.i != y.i ? mu() / 2.0 : 0.0;
}

ComplexMatrix MachineGram::matrix() const {
  ComplexMatrix g({states_.size()});
  for (std::size_t r = 0; r < states_.size(); ++r) {
    for (std::size_t c = 0; c < states_.size(); ++c) {
      g(r, c) = overlap(states_[r], states_[c]);
    }
  }
  return g;
}

CloningChannel CloningChannel::build(const MachineGram& gram) {
  const int dim = gram.dim();
  const auto factors = factors_of(dim);
  std::vector<std::size_t> out_factors = factors;
  out_factors.insert(out_factors.end(), factors.begin(), factors.end());

  std::vector<std::vector<OutputTerm>> terms;
  for (int i = 0; i < dim; ++i) terms.push_back(output_terms(dim, i));

  std::vector<ComplexMatrix> images;
  images.reserve(static_cast<std::size_t>(dim * dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      // Tr_machine |out_i><out_j| = sum |a><b| <m_b|m_a>.
      ComplexMatrix image(out_factors);
      for (const OutputTerm& ta : terms[static_cast<std::size_t>(i)]) {
        for (const OutputTerm& tb : terms[static_cast<std::size_t>(j)]) {
          const double w = gram.overlap(tb.machine, ta.machine);
          if (w == 0.0) continue;
          for (std::size_t r = 0; r < ta.ket.size(); ++r) {
            if (ta.ket[r] == 0.0) continue;
            for (std::size_t c = 0; c < tb.ket.size(); ++c) {
              if (tb.ket[c] != 0.0) image(r, c) += w * ta.ket[r] * tb.ket[c];
            }
          }
        }
      }
      images.push_back(std::move(image));
    }
  }
  return CloningChannel(gram, std::move(images));
}

const ComplexMatrix& CloningChannel::basis_image(int i, int j) const {
  const int dim = gram_.dim();
  if (i < 0 || j < 0 || i >= dim || j >= dim) {
    throw DimensionError("basis_image index out of range");
  }
  return images_[static_cast<std::size_t>(i * dim + j)];
}

ComplexMatrix CloningChannel::apply(const ComplexMatrix& rho) const {
  const auto dim = static_cast<std::size_t>(gram_.dim());
  if (rho.dim() != dim) {
    throw DimensionError("channel input must be " + std::to_string(dim) + "x" +
                         std::to_string(dim));
  }
  ComplexMatrix out(images_.front().subsystem_dims());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Complex w = rho(i, j);
      if (w != Complex{}) out.add_scaled(images_[i * dim + j], w);
    }
  }
  return out;
}

CloningChannel build_local_channel(const MachineGram& gram) {
  if (gram.dim() != 2) throw ParameterError("local channel needs M=2");
  return CloningChannel::build(gram);
}

CloningChannel build_nonlocal_channel(const MachineGram& gram) {
  if (gram.dim() != 4) throw ParameterError("non-local channel needs M=4");
  return CloningChannel::build(gram);
}

std::string_view to_string(PairLabel label) {
  switch (label) {
    case PairLabel::k12: return "12";
    case PairLabel::k34: return "34";
    case PairLabel::k13: return "13";
    case PairLabel::k24: return "24";
    case PairLabel::k14: return "14";
    case PairLabel::k23: return "23";
  }
  return "?";
}

std::array<std::size_t, 2> pair_qubits(PairLabel label) {
  switch (label) {
    case PairLabel::k12: return {0, 1};
    case PairLabel::k34: return {2, 3};
    case PairLabel::k13: return {0, 2};
    case PairLabel::k24: return {1, 3};
    case PairLabel::k14: return {0, 3};
    case PairLabel::k23: return {1, 2};
  }
  return {0, 1};
}

std::array<PairLabel, 4> pairs_for(CloningMode mode) {
  if (mode == CloningMode::kLocal) {
    return {PairLabel::k13, PairLabel::k24, PairLabel::k14, PairLabel::k23};
  }
  return {PairLabel::k13, PairLabel::k24, PairLabel::k12, PairLabel::k34};
}

const ComplexMatrix& CloneOutputs::pair(PairLabel label) const {
  auto it = pairs.find(label);
  if (it == pairs.end()) {
    throw std::out_of_range("pair " + std::string(to_string(label)) +
                            " not produced in " + std::string(to_string(mode)) +
                            " mode");
  }
  return it->second;
}

bool CloneOutputs::all_pairs_physical() const {
  return std::all_of(min_eigenvalues.begin(), min_eigenvalues.end(),
                     [](const auto& kv) { return kv.second >= -tol::psd(); });
}

CloneOutputs clone_joint(const DensityMatrix& rho12, const CloningChannel& channel,
                         bool keep_joint) {
  require_two_qubit(rho12);
  CloneOutputs out;
  out.lambda = channel.gram().lambda();
  if (channel.input_dim() == 2) {
    out.mode = CloningMode::kLocal;
    fill_pairs(out, local_joint(rho12.matrix(), channel), keep_joint);
  } else {
    out.mode = CloningMode::kNonlocal;
    fill_pairs(out, channel.apply(rho12.matrix()), keep_joint);
  }
  return out;
}

CloneOutputs clone_joint(const DensityMatrix& rho12, CloningMode mode,
                         double lambda, bool keep_joint) {
  return clone_joint(rho12, CloningChannel::build(MachineGram::for_mode(mode, lambda)),
                     keep_joint);
}

CloneOutputs clone_joint_local(const DensityMatrix& rho12, double lambda,
                               bool keep_joint) {
  return clone_joint(rho12, CloningMode::kLocal, lambda, keep_joint);
}

CloneOutputs clone_joint_nonlocal(const DensityMatrix& rho12, double lambda,
                                  bool keep_joint) {
  return clone_joint(rho12, CloningMode::kNonlocal, lambda, keep_joint);
}

PureCloneOutputs bh_pure_outputs(std::span<const double> amplitudes,
                                 double lambda) {
  const int dim = static_cast<int>(amplitudes.size());
  require_dim(dim);
  double norm = 0.0;
  for (double a : amplitudes) norm += a * a;
  if (std::abs(norm - 1.0) > kNormalizationTol) {
    throw ParameterError("amplitudes are not normalized");
  }
  const MachineGram gram(dim, lambda);
  const double l = lambda;
  const double mu = gram.mu();
  const double xx = gram.x_norm();
  const auto m = static_cast<std::size_t>(dim);
  const auto& a = amplitudes;

  auto factors = factors_of(dim);
  auto joint_factors = factors;
  joint_factors.insert(joint_factors.end(), factors.begin(), factors.end());
  ComplexMatrix joint(joint_factors);
  auto idx = [m](std::size_t i, std::size_t j) { return i * m + j; };
  // |chi_ij> = |ij> + |ji>; adds w |chi_ij><chi_kl|.
  auto add_chi_chi = [&](std::size_t i, std::size_t j, std::size_t k,
                         std::size_t l2, double w) {
    for (std::size_t r : {idx(i, j), idx(j, i)}) {
      for (std::size_t c : {idx(k, l2), idx(l2, k)}) joint(r, c) += w;
    }
  };

  for (std::size_t i = 0; i < m; ++i) {
    const double pi = a[i] * a[i];
    joint(idx(i, i), idx(i, i)) += xx * pi;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) add_chi_chi(i, j, i, j, l * pi);
    }
  }
  // Cross terms a_i a_j (mu/2) (|ii><chi_jk| + |chi_jk><ii|) for i != j and
  // every k != j.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const double w = mu / 2.0 * a[i] * a[j];
      for (std::size_t k = 0; k < m; ++k) {
        if (k == j) continue;
        for (std::size_t c : {idx(j, k), idx(k, j)}) {
          joint(idx(i, i), c) += w;
          joint(c, idx(i, i)) += w;
        }
      }
    }
  }

  ComplexMatrix reduced(factors);
  for (std::size_t i = 0; i < m; ++i) {
    const double pi = a[i] * a[i];
    reduced(i, i) += xx * pi;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      reduced(i, j) += mu / 2.0 * a[i] * a[j];
      reduced(j, i) += mu / 2.0 * a[i] * a[j];
      reduced(i, i) += l * pi;
      reduced(j, j) += l * pi;
    }
  }
  return {std::move(joint), std::move(reduced)};
}

double fidelity(const ComplexMatrix& rho, std::span<const Complex> psi) {
  if (rho.dim() != psi.size()) {
    throw DimensionError("fidelity: state and vector sizes differ");
  }
  Complex f = 0.0;
  for (std::size_t r = 0; r < psi.size(); ++r) {
    for (std::size_t c = 0; c < psi.size(); ++c) {
      f += std::conj(psi[r]) * rho(r, c) * psi[c];
    }
  }
  return f.real();
}

std::map<PairLabel, BlochTwoQubit> closed_local_outputs(const BlochTwoQubit& in,
                                                        double lambda) {
  const double mu = 1.0 - 2.0 * lambda;
  const Mat3 same = BlochTwoQubit::diag(2.0 * lambda, 2.0 * lambda, 1.0 - 4.0 * lambda);
  const Mat3 cross = scale3(in.t, mu * mu);
  std::map<PairLabel, BlochTwoQubit> out;
  out[PairLabel::k13] = {scale3(in.x, mu), scale3(in.x, mu), same};
  out[PairLabel::k24] = {scale3(in.y, mu), scale3(in.y, mu), same};
  out[PairLabel::k14] = {scale3(in.x, mu), scale3(in.y, mu), cross};
  out[PairLabel::k23] = {scale3(in.y, mu), scale3(in.x, mu), transpose3(cross)};
  return out;
}

std::map<PairLabel, BlochTwoQubit> closed_nonlocal_outputs(
    const BlochTwoQubit& in, double lambda) {
  const double mu = 1.0 - 4.0 * lambda;
  const Mat3 same = BlochTwoQubit::diag(2.0 * lambda, 2.0 * lambda, 1.0 - 8.0 * lambda);
  const BlochTwoQubit copy{scale3(in.x, mu), scale3(in.y, mu), scale3(in.t, mu)};
  std::map<PairLabel, BlochTwoQubit> out;
  out[PairLabel::k12] = copy;
  out[PairLabel::k34] = copy;
  out[PairLabel::k13] = {scale3(in.x, mu), scale3(in.x, mu), same};
  out[PairLabel::k24] = {scale3(in.y, mu), scale3(in.y, mu), same};
  return out;
}

}  // namespace broadcastlab
