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
#include "broadcastlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "broadcastlab/tolerances.hpp"

namespace broadcastlab {

namespace {

const std::array<ComplexMatrix, 4>& pauli_table() {
  static const std::array<ComplexMatrix, 4> table = [] {
    const Complex i{0.0, 1.0};
    return std::array<ComplexMatrix, 4>{
        ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 1.0}}),
        ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}),
        ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}}),
        ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}),
    };
  }();
  return table;
}

void require_unit(const char* name, double v) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    std::ostringstream msg;
    msg << name << " must lie in [0, 1], got " << v;
    throw ParameterError(msg.str());
  }
}

void require_correlation(const char* name, double v) {
  if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
    std::ostringstream msg;
    msg << name << " must lie in [-1, 1], got " << v;
    throw ParameterError(msg.str());
  }
}

/// Tr[rho (a (x) b)] for Pauli indices a, b.
double expectation(const ComplexMatrix& rho, int a, int b) {
  const ComplexMatrix& pa = pauli(a);
  const ComplexMatrix& pb = pauli(b);
  Complex sum = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      // (pa (x) pb)(c, r) with row/col split into (qubit1, qubit2) digits.
      const Complex op = pa(c / 2, r / 2) * pb(c % 2, r % 2);
      if (op != Complex{}) sum += rho(r, c) * op;
    }
  }
  return sum.real();
}

}  // namespace

Mat3 BlochTwoQubit::diag(double a, double b, double c) {
  Mat3 t{};
  t[0][0] = a;
  t[1][1] = b;
  t[2][2] = c;
  return t;
}

double BlochTwoQubit::max_abs_diff(const BlochTwoQubit& other) const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::abs(x[i] - other.x[i]));
    worst = std::max(worst, std::abs(y[i] - other.y[i]));
    for (int j = 0; j < 3; ++j) {
      worst = std::max(worst, std::abs(t[i][j] - other.t[i][j]));
    }
  }
  return worst;
}

std::array<double, 4> BdsParams::weights() const {
  return {(1.0 - c1 - c2 - c3) / 4.0, (1.0 - c1 + c2 + c3) / 4.0,
          (1.0 + c1 - c2 + c3) / 4.0, (1.0 + c1 + c2 - c3) / 4.0};
}

bool BdsParams::physical() const {
  for (double c : {c1, c2, c3}) {
    if (!(std::abs(c) <= 1.0)) return false;
  }
  const auto w = weights();
  return *std::min_element(w.begin(), w.end()) >= -tol::psd();
}

std::string family_name(const FamilyParams& params) {
  struct Visitor {
    std::string operator()(const PureQubitParams&) const { return "pure"; }
    std::string operator()(const NmeParams&) const { return "nme"; }
    std::string operator()(const WernerParams&) const { return "werner"; }
    std::string operator()(const BdsParams&) const { return "bds"; }
  };
  return std::visit(Visitor{}, params);
}

void validate(const FamilyParams& params) {
  struct Visitor {
    void operator()(const PureQubitParams& p) const {
      require_unit("alpha_sq", p.alpha_sq);
    }
    void operator()(const NmeParams& p) const {
      require_unit("alpha_sq", p.alpha_sq);
    }
    void operator()(const WernerParams& p) const {
      require_unit("alpha_sq", p.alpha_sq);
      require_unit("p", p.p);
    }
    void operator()(const BdsParams& p) const {
      require_correlation("c1", p.c1);
      require_correlation("c2", p.c2);
      require_correlation("c3", p.c3);
    }
  };
  std::visit(Visitor{}, params);
}

const ComplexMatrix& pauli(int index) {
  if (index < 0 || index > 3) {
    throw DimensionError("pauli index must be 0..3");
  }
  return pauli_table()[static_cast<std::size_t>(index)];
}

ComplexMatrix bloch_to_density(const BlochTwoQubit& b) {
  ComplexMatrix rho = ComplexMatrix::identity({2, 2});
  const ComplexMatrix& id = pauli(0);
  for (int i = 0; i < 3; ++i) {
    if (b.x[i] != 0.0) rho.add_scaled(tensor(pauli(i + 1), id), b.x[i]);
    if (b.y[i] != 0.0) rho.add_scaled(tensor(id, pauli(i + 1)), b.y[i]);
    for (int j = 0; j < 3; ++j) {
      if (b.t[i][j] != 0.0) {
        rho.add_scaled(tensor(pauli(i + 1), pauli(j + 1)), b.t[i][j]);
      }
    }
  }
  rho *= 0.25;
  return rho;
}

BlochTwoQubit density_to_bloch(const ComplexMatrix& rho) {
  if (rho.dim() != 4 || rho.subsystem_dims() != std::vector<std::size_t>{2, 2}) {
    throw DimensionError("density_to_bloch needs a 4x4 two-qubit matrix");
  }
  BlochTwoQubit b;
  for (int i = 0; i < 3; ++i) {
    b.x[i] = expectation(rho, i + 1, 0);
    b.y[i] = expectation(rho, 0, i + 1);
    for (int j = 0; j < 3; ++j) b.t[i][j] = expectation(rho, i + 1, j + 1);
  }
  return b;
}

BlochTwoQubit closed_bloch(const NmeParams& params) {
  return closed_bloch(WernerParams{params.alpha_sq, 1.0});
}

BlochTwoQubit closed_bloch(const WernerParams& params) {
  const double a2 = params.alpha_sq;
  const double ab = std::sqrt(a2 * (1.0 - a2));
  const double p = params.p;
  BlochTwoQubit b;
  b.x = {0.0, 0.0, p * (2.0 * a2 - 1.0)};
  b.y = b.x;
  b.t = BlochTwoQubit::diag(2.0 * p * ab, -2.0 * p * ab, p);
  return b;
}

BlochTwoQubit closed_bloch(const BdsParams& params) {
  BlochTwoQubit b;
  b.t = BlochTwoQubit::diag(params.c1, params.c2, params.c3);
  return b;
}

std::vector<Complex> family_ket(const PureQubitParams& params) {
  require_unit("alpha_sq", params.alpha_sq);
  return {std::sqrt(params.alpha_sq), std::sqrt(1.0 - params.alpha_sq)};
}

std::vector<Complex> family_ket(const NmeParams& params) {
  require_unit("alpha_sq", params.alpha_sq);
  return {std::sqrt(params.alpha_sq), 0.0, 0.0, std::sqrt(1.0 - params.alpha_sq)};
}

DensityMatrix make_family(const FamilyParams& params) {
  validate(params);
  struct Visitor {
    ComplexMatrix operator()(const PureQubitParams& p) const {
      const auto ket = family_ket(p);
      return ComplexMatrix::projector(ket, {2});
    }
    ComplexMatrix operator()(const NmeParams& p) const {
      const auto ket = family_ket(p);
      return ComplexMatrix::projector(ket, {2, 2});
    }
    ComplexMatrix operator()(const WernerParams& p) const {
      const auto ket = family_ket(NmeParams{p.alpha_sq});
      ComplexMatrix rho = ComplexMatrix::projector(ket, {2, 2}) * p.p;
      rho.add_scaled(ComplexMatrix::identity({2, 2}), (1.0 - p.p) / 4.0);
      return rho;
    }
    ComplexMatrix operator()(const BdsParams& p) const {
      if (!p.physical()) {
        std::ostringstream msg;
        msg << "Bell-diagonal parameters (" << p.c1 << ", " << p.c2 << ", "
            << p.c3 << ") lie outside the physical tetrahedron";
        throw UnphysicalStateError(msg.str());
      }
      return bloch_to_density(closed_bloch(p));
    }
  };
  return DensityMatrix::from(std::visit(Visitor{}, params));
}

PhysicalityReport is_physical(const ComplexMatrix& rho) {
  PhysicalityReport report;
  report.trace_deviation = std::abs(rho.trace() - 1.0);
  report.hermitian = rho.is_hermitian(tol::kHermitian);
  if (!report.hermitian) return report;
  report.min_eigenvalue = hermitian_eigenvalues(rho).front();
  report.physical = report.trace_deviation <= tol::kTrace &&
                    report.min_eigenvalue >= -tol::psd();
  return report;
}

}  // namespace broadcastlab
