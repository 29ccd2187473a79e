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
/**
 * @file linalg.hpp
 * Small dense complex matrices with tensor-factor bookkeeping.
 *
 * Subsystem convention: index 0 is the leftmost tensor factor, so a basis
 * label |b0 b1 ... b(n-1)> maps to the row-major index with b0 as the most
 * significant digit. Every routine in the library follows this order.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace broadcastlab {

using Complex = std::complex<double>;

/// Square complex matrix in row-major order, tagged with the dimensions of
/// its tensor factors. Matrices in this library never exceed 16x16.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix whose dimension is the product of `subsystem_dims`.
  explicit ComplexMatrix(std::vector<std::size_t> subsystem_dims);

  /// Takes ownership of `entries` (length dim^2, row-major).
  ComplexMatrix(std::vector<std::size_t> subsystem_dims,
                std::vector<Complex> entries);

  static ComplexMatrix identity(std::vector<std::size_t> subsystem_dims);

  /// Single-factor matrix from nested rows.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix diagonal(std::span<const double> values);

  /// |ket><ket|. The product of `subsystem_dims` must equal ket.size().
  static ComplexMatrix projector(std::span<const Complex> ket,
                                 std::vector<std::size_t> subsystem_dims);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::size_t>& subsystem_dims() const noexcept {
    return subsystem_dims_;
  }
  std::size_t subsystem_count() const noexcept {
    return subsystem_dims_.size();
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  /// Same entries, different factorization (product must match).
  ComplexMatrix with_subsystems(std::vector<std::size_t> subsystem_dims) const;

  Complex trace() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  /// Largest entrywise |a_ij - b_ij|; dimensions must match.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool is_hermitian(double tolerance) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  /// Adds `scale * rhs` in place.
  void add_scaled(const ComplexMatrix& rhs, Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) {
    return lhs *= scale;
  }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) {
    return rhs *= scale;
  }

  /// Matrix product; the result carries the left operand's factorization.
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> subsystem_dims_;
  std::vector<Complex> entries_;
};

/// Kronecker product; subsystem_dims concatenate.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out every subsystem not listed in `keep`. The kept factors stay in
/// ascending index order regardless of the order given.
/// @throws DimensionError on an empty, duplicated or out-of-range index set.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::initializer_list<std::size_t> keep);

/// Transposes the chosen tensor factor only.
ComplexMatrix partial_transpose(const ComplexMatrix& rho,
                                std::size_t subsystem);

/// Reorders tensor factors: factor k of the result is factor order[k] of
/// the input.
ComplexMatrix permute_subsystems(const ComplexMatrix& rho,
                                 std::span<const std::size_t> order);

/// Real eigenvalues in ascending order. Cyclic Jacobi on the real symmetric
/// embedding [[Re H, -Im H], [Im H, Re H]], whose spectrum is that of H with
/// every eigenvalue doubled.
/// @throws DimensionError if `h` is not Hermitian within tol::kEigenInput.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Determinant by Gaussian elimination with partial pivoting.
Complex determinant(const ComplexMatrix& m);

/// Leading principal k x k block (single-factor result).
ComplexMatrix leading_block(const ComplexMatrix& m, std::size_t k);

/// A complex matrix that satisfies the density-matrix invariants: Hermitian
/// and unit trace within 1e-12, minimum eigenvalue >= -tol::psd().
class DensityMatrix {
 public:
  /// @throws UnphysicalStateError when any invariant fails.
  static DensityMatrix from(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  const std::vector<std::size_t>& subsystem_dims() const noexcept {
    return m_.subsystem_dims();
  }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  DensityMatrix(ComplexMatrix m, double min_eigenvalue)
      : m_(std::move(m)), min_eigenvalue_(min_eigenvalue) {}

  ComplexMatrix m_;
  double min_eigenvalue_ = 0.0;
};

}  // namespace broadcastlab
