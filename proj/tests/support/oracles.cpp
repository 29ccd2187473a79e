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
#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace broadcastlab::testing {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    }
  }
  return out;
}

std::size_t qubit_count(const ComplexMatrix& m) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < m.dim()) ++n;
  return n;
}

// Bit of `index` belonging to qubit q (qubit 0 is the leftmost factor).
std::size_t bit(std::size_t index, std::size_t q, std::size_t n) {
  return (index >> (n - 1 - q)) & 1U;
}

}  // namespace

std::vector<double> eigen_oracle(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h),
                                                          Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(v.begin(), v.end());
  return v;
}

Complex det_oracle(const ComplexMatrix& m) { return to_eigen(m).determinant(); }

ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  std::vector<std::size_t> dims = a.subsystem_dims();
  dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
  ComplexMatrix out(dims);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < b.dim(); ++k) {
        for (std::size_t l = 0; l < b.dim(); ++l) {
          out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix trace_out_qubit_oracle(const ComplexMatrix& rho, std::size_t qubit) {
  const std::size_t n = qubit_count(rho);
  ComplexMatrix out(std::vector<std::size_t>(n - 1, 2));
  // Drops bit `qubit` from an index.
  auto squeeze = [&](std::size_t idx) {
    std::size_t r = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (q != qubit) r = (r << 1) | bit(idx, q, n);
    }
    return r;
  };
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      if (bit(r, qubit, n) != bit(c, qubit, n)) continue;
      out(squeeze(r), squeeze(c)) += rho(r, c);
    }
  }
  return out;
}

ComplexMatrix transpose_qubit_oracle(const ComplexMatrix& rho, std::size_t qubit) {
  const std::size_t n = qubit_count(rho);
  const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
  ComplexMatrix out(rho.subsystem_dims());
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      // Swap the chosen bit between row and column.
      const std::size_t r2 = (r & ~mask) | (c & mask);
      const std::size_t c2 = (c & ~mask) | (r & mask);
      out(r2, c2) = rho(r, c);
    }
  }
  return out;
}

ComplexMatrix local_pure_output_oracle(double alpha_sq, double lambda) {
  const double a = std::sqrt(alpha_sq);
  const double b = std::sqrt(1.0 - alpha_sq);
  const double mu = 1.0 - 2.0 * lambda;
  const double e = a * b * mu / 2.0;
  return ComplexMatrix::from_rows({{alpha_sq * (1 - 2 * lambda), e, e, 0.0},
                                   {e, lambda, lambda, e},
                                   {e, lambda, lambda, e},
                                   {0.0, e, e, (1 - alpha_sq) * (1 - 2 * lambda)}})
      .with_subsystems({2, 2});
}

ComplexMatrix depolarized_oracle(const ComplexMatrix& rho, double lambda) {
  const double d = static_cast<double>(rho.dim());
  const double mu = 1.0 - d * lambda;
  ComplexMatrix out = rho;
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      out(r, c) = mu * rho(r, c) + (r == c ? (1.0 - mu) / d : 0.0);
    }
  }
  return out;
}

BlochTwoQubit bloch_oracle(const ComplexMatrix& rho) {
  using C = Complex;
  const C i{0.0, 1.0};
  const std::array<std::array<C, 4>, 4> s{{
      {1.0, 0.0, 0.0, 1.0},   // I
      {0.0, 1.0, 1.0, 0.0},   // X
      {0.0, -i, i, 0.0},      // Y
      {1.0, 0.0, 0.0, -1.0},  // Z
  }};
  // Tr[rho (s_a (x) s_b)] = sum_{rc} rho(r, c) (s_a (x) s_b)(c, r).
  auto expect = [&](int a, int b) {
    C acc = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        const C op = s[a][(c >> 1) * 2 + (r >> 1)] * s[b][(c & 1) * 2 + (r & 1)];
        acc += rho(r, c) * op;
      }
    }
    return acc.real();
  };
  BlochTwoQubit out;
  for (int k = 0; k < 3; ++k) {
    out.x[k] = expect(k + 1, 0);
    out.y[k] = expect(0, k + 1);
    for (int l = 0; l < 3; ++l) out.t[k][l] = expect(k + 1, l + 1);
  }
  return out;
}

ComplexMatrix random_density(std::size_t qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const std::size_t d = std::size_t{1} << qubits;
  Eigen::MatrixXcd G(d, d);
  for (Eigen::Index r = 0; r < G.rows(); ++r) {
    for (Eigen::Index c = 0; c < G.cols(); ++c) G(r, c) = Complex(g(rng), g(rng));
  }
  Eigen::MatrixXcd rho = G * G.adjoint();
  rho /= rho.trace();
  ComplexMatrix out(std::vector<std::size_t>(qubits, 2));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      out(r, c) = rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
    out(r, r) = out(r, r).real();
  }
  return out;
}

ComplexMatrix random_separable(std::mt19937_64& rng, int terms) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ComplexMatrix out(std::vector<std::size_t>{2, 2});
  std::vector<double> w(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (double& x : w) total += (x = u(rng));
  for (double x : w) {
    const ComplexMatrix p = kron_oracle(random_density(1, rng), random_density(1, rng));
    out.add_scaled(p, x / total);
  }
  return out;
}

std::vector<double> random_amplitudes(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  double norm = 0.0;
  for (double& x : v) norm += (x = g(rng)) * x;
  for (double& x : v) x /= std::sqrt(norm);
  return v;
}

BdsParams random_bds(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const BdsParams b{u(rng), u(rng), u(rng)};
    const double w1 = 1 - b.c1 - b.c2 - b.c3;
    const double w2 = 1 - b.c1 + b.c2 + b.c3;
    const double w3 = 1 + b.c1 - b.c2 + b.c3;
    const double w4 = 1 + b.c1 + b.c2 - b.c3;
    if (std::min({w1, w2, w3, w4}) >= 0.0) return b;
  }
}

}  // namespace broadcastlab::testing
