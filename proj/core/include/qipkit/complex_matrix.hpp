// Copyright 2026 The qipkit Authors
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

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qipkit/errors.hpp"

namespace qip {

using Complex = std::complex<double>;

/// Tolerance used by invariant checks (hermiticity, unitarity, norms).
inline constexpr double kTol = 1e-10;
/// Off-diagonal Frobenius norm at which the Jacobi eigensolver stops.
inline constexpr double kSolverTol = 1e-12;

/// Dense complex matrix with row-major storage. This is the substrate for
/// states, gates, observables and density matrices; everything in qipkit
/// is small and dense, so there is no sparse path.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  /// Row-major brace construction, e.g. {{1, 0}, {0, -1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  /// dim x 1 column vector from amplitudes.
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  /// True when every entry is finite (no NaN or Inf).
  bool all_finite() const;

  /// Debug text form "rows cols; re im re im ..." row-major, used by test
  /// fixtures. Round-trips exactly through parse_debug_text.
  std::string debug_text() const;
  static ComplexMatrix parse_debug_text(const std::string& text);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// Arithmetic. All of these throw DimensionError on shape mismatch.
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, Complex scalar);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// y = a * x for a column vector x.
std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x);

/// max_ij |a_ij - b_ij|; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kTol);
bool is_unitary(const ComplexMatrix& a, double tol = kTol);
/// PSD check via the full spectrum: every eigenvalue >= -tol.
bool is_psd(const ComplexMatrix& a, double tol = kTol);

/// Result of diagonalizing a Hermitian matrix. Eigenvalues are ascending;
/// column i of eigenvectors is the unit eigenvector for eigenvalues[i],
/// with its first nonzero component rotated to the positive real axis so
/// the decomposition is deterministic.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  /// Sum of eigenvalue * |u_i><u_i|, for reconstruction checks.
  ComplexMatrix reconstruct() const;
};

/// Full eigensystem of a Hermitian matrix by the cyclic Jacobi method.
///
/// The input must be Hermitian within kTol; it is symmetrized to
/// (A + A')/2 before iterating. Sweeps stop when the off-diagonal
/// Frobenius norm drops below kSolverTol; more than 100 sweeps throws
/// ConvergenceError. Fine at the dimensions this library targets.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

/// f applied to the spectrum: sum f(lambda_i) |u_i><u_i|.
ComplexMatrix matrix_func(const ComplexMatrix& a,
                          const std::function<double(double)>& f);
/// Same with a complex-valued f, e.g. lambda -> exp(-i lambda t).
ComplexMatrix matrix_func(const ComplexMatrix& a,
                          const std::function<Complex(double)>& f);

/// Positive square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are
/// rounding debris from products of unitaries and are clamped to zero.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a);

/// |A| = sqrt(A' A), the positive part of any square matrix.
ComplexMatrix matrix_abs(const ComplexMatrix& a);

}  // namespace qip
