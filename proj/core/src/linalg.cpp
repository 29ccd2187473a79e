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
#include "broadcastlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "broadcastlab/tolerances.hpp"

namespace broadcastlab {

namespace {

constexpr std::size_t kMaxDim = 16;
constexpr int kMaxJacobiSweeps = 100;

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("matrix dimension mismatch: " +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

/// Row-major strides for the given factor dimensions.
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) {
    strides[k - 1] = strides[k] * dims[k];
  }
  return strides;
}

/// Offsets of every multi-index over the listed factors, enumerated with the
/// first listed factor most significant.
std::vector<std::size_t> offsets_over(const std::vector<std::size_t>& dims,
                                      const std::vector<std::size_t>& strides,
                                      const std::vector<std::size_t>& factors) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t f : factors) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[f]);
    for (std::size_t base : offsets) {
      for (std::size_t d = 0; d < dims[f]; ++d) {
        next.push_back(base + d * strides[f]);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::vector<std::size_t> subsystem_dims)
    : dim_(product(subsystem_dims)),
      subsystem_dims_(std::move(subsystem_dims)),
      entries_(dim_ * dim_) {
  if (dim_ == 0 || dim_ > kMaxDim) {
    throw DimensionError("matrix dimension must be in [1, 16], got " +
                         std::to_string(dim_));
  }
}

ComplexMatrix::ComplexMatrix(std::vector<std::size_t> subsystem_dims,
                             std::vector<Complex> entries)
    : ComplexMatrix(std::move(subsystem_dims)) {
  if (entries.size() != entries_.size()) {
    throw DimensionError("expected " + std::to_string(entries_.size()) +
                         " entries, got " + std::to_string(entries.size()));
  }
  entries_ = std::move(entries);
}

ComplexMatrix ComplexMatrix::identity(std::vector<std::size_t> subsystem_dims) {
  ComplexMatrix m(std::move(subsystem_dims));
  for (std::size_t i = 0; i < m.dim_; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m({rows.size()});
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw DimensionError("from_rows needs a square matrix");
    }
    std::size_t c = 0;
    for (const Complex& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m({values.size()});
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> ket,
                                       std::vector<std::size_t> subsystem_dims) {
  ComplexMatrix m(std::move(subsystem_dims));
  if (m.dim_ != ket.size()) {
    throw DimensionError("ket length does not match subsystem dimensions");
  }
  for (std::size_t r = 0; r < m.dim_; ++r) {
    for (std::size_t c = 0; c < m.dim_; ++c) {
      m(r, c) = ket[r] * std::conj(ket[c]);
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::with_subsystems(
    std::vector<std::size_t> subsystem_dims) const {
  if (product(subsystem_dims) != dim_) {
    throw DimensionError("subsystem dimensions do not multiply to " +
                         std::to_string(dim_));
  }
  ComplexMatrix m = *this;
  m.subsystem_dims_ = std::move(subsystem_dims);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m = *this;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
  }
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m = *this;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) m(r, c) = (*this)(c, r);
  }
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  check_same_shape(*this, other);
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  }
  return worst;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) {
        return false;
      }
    }
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  check_same_shape(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  check_same_shape(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& v : entries_) v *= scale;
  return *this;
}

void ComplexMatrix::add_scaled(const ComplexMatrix& rhs, Complex scale) {
  check_same_shape(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += scale * rhs.entries_[i];
  }
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  check_same_shape(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(lhs.subsystem_dims());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  std::vector<std::size_t> dims = a.subsystem_dims();
  dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
  ComplexMatrix out(std::move(dims));
  const std::size_t nb = b.dim();
  for (std::size_t ar = 0; ar < a.dim(); ++ar) {
    for (std::size_t ac = 0; ac < a.dim(); ++ac) {
      const Complex av = a(ar, ac);
      if (av == Complex{}) continue;
      for (std::size_t br = 0; br < nb; ++br) {
        for (std::size_t bc = 0; bc < nb; ++bc) {
          out(ar * nb + br, ac * nb + bc) = av * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> keep) {
  const auto& dims = rho.subsystem_dims();
  const std::size_t n = dims.size();
  if (keep.empty()) throw DimensionError("partial_trace: keep set is empty");

  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) {
      throw DimensionError("partial_trace: subsystem index " +
                           std::to_string(k) + " out of range");
    }
    if (kept[k]) throw DimensionError("partial_trace: duplicate index");
    kept[k] = true;
  }

  std::vector<std::size_t> kept_factors;
  std::vector<std::size_t> traced_factors;
  std::vector<std::size_t> out_dims;
  for (std::size_t k = 0; k < n; ++k) {
    if (kept[k]) {
      kept_factors.push_back(k);
      out_dims.push_back(dims[k]);
    } else {
      traced_factors.push_back(k);
    }
  }

  const auto strides = strides_of(dims);
  const auto kept_off = offsets_over(dims, strides, kept_factors);
  const auto traced_off = offsets_over(dims, strides, traced_factors);

  ComplexMatrix out(std::move(out_dims));
  for (std::size_t r = 0; r < kept_off.size(); ++r) {
    for (std::size_t c = 0; c < kept_off.size(); ++c) {
      Complex sum = 0.0;
      for (std::size_t t : traced_off) sum += rho(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho,
                                std::size_t subsystem) {
  const auto& dims = rho.subsystem_dims();
  if (subsystem >= dims.size()) {
    throw DimensionError("partial_transpose: subsystem index " +
                         std::to_string(subsystem) + " out of range");
  }
  const auto strides = strides_of(dims);
  const std::size_t stride = strides[subsystem];
  const std::size_t d = dims[subsystem];

  ComplexMatrix out(dims);
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    const std::size_t rd = (r / stride) % d;
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      const std::size_t cd = (c / stride) % d;
      // Swap the chosen digit between row and column.
      const std::size_t r2 = r - rd * stride + cd * stride;
      const std::size_t c2 = c - cd * stride + rd * stride;
      out(r2, c2) = rho(r, c);
    }
  }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& rho,
                                 std::span<const std::size_t> order) {
  const auto& dims = rho.subsystem_dims();
  const std::size_t n = dims.size();
  if (order.size() != n) {
    throw DimensionError("permute_subsystems: order has wrong length");
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> new_dims(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || seen[order[k]]) {
      throw DimensionError("permute_subsystems: order is not a permutation");
    }
    seen[order[k]] = true;
    new_dims[k] = dims[order[k]];
  }

  const auto old_strides = strides_of(dims);
  // old_index_of[new_index] for a single (row or column) multi-index.
  std::vector<std::size_t> old_index_of = offsets_over(
      dims, old_strides, std::vector<std::size_t>(order.begin(), order.end()));

  ComplexMatrix out(std::move(new_dims));
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      out(r, c) = rho(old_index_of[r], old_index_of[c]);
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (!h.is_hermitian(tol::kEigenInput)) {
    throw DimensionError("hermitian_eigenvalues: input is not Hermitian");
  }
  const std::size_t n = h.dim();
  const std::size_t m = 2 * n;

  // Symmetric real embedding, stored dense row-major.
  std::vector<double> a(m * m);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * m + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // Symmetrize so rounding noise in the input cannot break the embedding.
      const Complex v = 0.5 * (h(r, c) + std::conj(h(c, r)));
      at(r, c) = v.real();
      at(r + n, c + n) = v.real();
      at(r, c + n) = -v.imag();
      at(r + n, c) = v.imag();
    }
  }

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        if (r != c) s += at(r, c) * at(r, c);
      }
    }
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_norm() < tol::kJacobiOffDiagonal) break;
    for (std::size_t p = 0; p + 1 < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> doubled(m);
  for (std::size_t i = 0; i < m; ++i) doubled[i] = at(i, i);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) {
    eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  }
  return eig;
}

Complex determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Complex> a(m.entries().begin(), m.entries().end());
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col] == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      det = -det;
    }
    const Complex diag = a[col * n + col];
    det *= diag;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a[r * n + col] / diag;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det;
}

ComplexMatrix leading_block(const ComplexMatrix& m, std::size_t k) {
  if (k == 0 || k > m.dim()) throw DimensionError("leading_block: bad size");
  ComplexMatrix out({k});
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) out(r, c) = m(r, c);
  }
  return out;
}

DensityMatrix DensityMatrix::from(ComplexMatrix m) {
  if (!m.is_hermitian(tol::kHermitian)) {
    throw UnphysicalStateError("density matrix is not Hermitian");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    throw UnphysicalStateError("density matrix trace is " +
                               std::to_string(tr.real()) + ", expected 1");
  }
  const double min_eig = hermitian_eigenvalues(m).front();
  if (min_eig < -tol::psd()) {
    throw UnphysicalStateError("density matrix has negative eigenvalue " +
                               std::to_string(min_eig));
  }
  return DensityMatrix(std::move(m), min_eig);
}

}  // namespace broadcastlab
