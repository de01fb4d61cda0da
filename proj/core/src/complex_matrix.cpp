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

#include "qipkit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qip {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shapes " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " differ");
  }
}

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionError(std::string(op) + ": matrix is " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
}

double off_diagonal_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> data)
    : rows_(rows), cols_(cols), entries_(std::move(data)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: data has " +
                         std::to_string(entries_.size()) + " entries, shape " +
                         std::to_string(rows_) + "x" + std::to_string(cols_) +
                         " needs " + std::to_string(rows_ * cols_));
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ComplexMatrix: ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
  ComplexMatrix m(v.size(), 1);
  std::copy(v.begin(), v.end(), m.entries_.begin());
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

std::string ComplexMatrix::debug_text() const {
  std::ostringstream out;
  out.precision(17);
  out << rows_ << ' ' << cols_ << ';';
  for (const Complex& z : entries_) out << ' ' << z.real() << ' ' << z.imag();
  return out.str();
}

ComplexMatrix ComplexMatrix::parse_debug_text(const std::string& text) {
  std::istringstream in(text);
  std::size_t rows = 0;
  std::size_t cols = 0;
  char sep = '\0';
  if (!(in >> rows >> cols >> sep) || sep != ';') {
    throw ParseError(1, 1, "matrix text must start with \"rows cols;\"");
  }
  std::vector<Complex> data;
  data.reserve(rows * cols);
  double re = 0.0;
  double im = 0.0;
  while (in >> re >> im) data.emplace_back(re, im);
  if (data.size() != rows * cols) {
    throw ParseError(1, 1, "matrix text has " + std::to_string(data.size()) +
                               " entries, expected " +
                               std::to_string(rows * cols));
  }
  return ComplexMatrix(rows, cols, std::move(data));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator+");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.entries()[i] = a.entries()[i] + b.entries()[i];
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator-");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.entries()[i] = a.entries()[i] - b.entries()[i];
  }
  return out;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.entries()[i] = scalar * a.entries()[i];
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, Complex scalar) {
  return scalar * a;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions " +
                         std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out(r, c) += ark * b(k, c);
      }
    }
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex scale = a(ar, ac);
      if (scale == Complex(0.0, 0.0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = scale * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(c, r) = std::conj(a(r, c));
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

std::vector<Complex> matvec(const ComplexMatrix& a,
                            std::span<const Complex> x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matvec: matrix has " + std::to_string(a.cols()) +
                         " columns, vector has " + std::to_string(x.size()) +
                         " entries");
  }
  std::vector<Complex> y(a.rows(), Complex(0.0, 0.0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Complex sum(0.0, 0.0);
    for (std::size_t c = 0; c < a.cols(); ++c) sum += a(r, c) * x[c];
    y[r] = sum;
  }
  return y;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = r; c < a.cols(); ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  const ComplexMatrix product = matmul(adjoint(a), a);
  return max_abs_diff(product, ComplexMatrix::identity(a.rows())) <= tol;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  const HermitianEigen eig = hermitian_eigen(a);
  return std::all_of(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                     [tol](double v) { return v >= -tol; });
}

ComplexMatrix HermitianEigen::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) += eigenvalues[i] * eigenvectors(r, i) *
                     std::conj(eigenvectors(c, i));
      }
    }
  }
  return out;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& input) {
  require_square(input, "hermitian_eigen");
  if (!is_hermitian(input)) {
    throw InvariantError("hermitian_eigen: matrix is not Hermitian");
  }
  const std::size_t n = input.rows();

  // Symmetrize so rounding in the caller cannot leave the iteration with a
  // non-Hermitian working matrix.
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Cyclic Jacobi with unitary plane rotations. Each rotation zeroes one
  // off-diagonal pair (p, q): factor out the phase of a_pq, then apply the
  // standard symmetric-Jacobi angle to the remaining real problem.
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_frobenius(a) >= kSolverTol) {
    if (++sweep > kMaxSweeps) {
      throw ConvergenceError(
          "hermitian_eigen: no convergence within 100 Jacobi sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Complex phase = apq / r;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Columns p and q of A and V pick up the rotation from the right.
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * phase * aip + c * aiq;
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
        // Rows p and q of A pick up the conjugate rotation from the left.
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
      }
    }
  }

  HermitianEigen result;
  result.eigenvalues.resize(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t x, std::size_t y) {
                     return a(x, x).real() < a(y, y).real();
                   });

  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = order[i];
    result.eigenvalues[i] = a(src, src).real();
    // Rotate each eigenvector so its first component above kTol is positive
    // real; the decomposition is then reproducible across runs.
    Complex anchor(0.0, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      if (std::abs(v(r, src)) > kTol) {
        anchor = v(r, src);
        break;
      }
    }
    const Complex fix =
        anchor == Complex(0.0, 0.0) ? Complex(1.0, 0.0)
                                    : std::conj(anchor) / std::abs(anchor);
    for (std::size_t r = 0; r < n; ++r) {
      result.eigenvectors(r, i) = fix * v(r, src);
    }
  }
  return result;
}

namespace {

ComplexMatrix spectral_apply(const ComplexMatrix& a,
                             const std::function<Complex(double)>& f) {
  const HermitianEigen eig = hermitian_eigen(a);
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex fi = f(eig.eigenvalues[i]);
    if (fi == Complex(0.0, 0.0)) continue;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) += fi * eig.eigenvectors(r, i) *
                     std::conj(eig.eigenvectors(c, i));
      }
    }
  }
  return out;
}

}  // namespace

ComplexMatrix matrix_func(const ComplexMatrix& a,
                          const std::function<double(double)>& f) {
  return spectral_apply(a, [&f](double x) { return Complex(f(x), 0.0); });
}

ComplexMatrix matrix_func(const ComplexMatrix& a,
                          const std::function<Complex(double)>& f) {
  return spectral_apply(a, f);
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a) {
  return spectral_apply(a, [](double x) -> Complex {
    if (x < -kTol) {
      throw InvariantError("matrix_sqrt_psd: eigenvalue " + std::to_string(x) +
                           " is negative");
    }
    return Complex(std::sqrt(std::max(x, 0.0)), 0.0);
  });
}

ComplexMatrix matrix_abs(const ComplexMatrix& a) {
  require_square(a, "matrix_abs");
  return matrix_sqrt_psd(matmul(adjoint(a), a));
}

}  // namespace qip
