// Copyright 2026 The framelab Authors
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
#include <span>
#include <vector>

namespace framelab {

using cplx = std::complex<double>;

/// Dense column-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) noexcept { return a_[j * rows_ + i]; }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return a_[j * rows_ + i]; }

  std::span<cplx> col(std::size_t j) noexcept { return {a_.data() + j * rows_, rows_}; }
  std::span<const cplx> col(std::size_t j) const noexcept { return {a_.data() + j * rows_, rows_}; }

  CMatrix adjoint() const;
  double frobenius_norm() const noexcept;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

std::vector<cplx> operator*(const CMatrix& a, std::span<const cplx> x);

/// <u, v> = sum_i u_i conj(v_i): linear in the first argument.
cplx inner(std::span<const cplx> u, std::span<const cplx> v) noexcept;
double norm_sq(std::span<const cplx> u) noexcept;

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are orthonormal eigenvectors
  int sweeps = 0;
};

/// Cyclic Jacobi for complex Hermitian matrices. Only the lower triangle's
/// Hermitian partner is assumed consistent; the input is symmetrized first.
HermitianEigen jacobi_eigen(const CMatrix& a, double tol = 1e-15, int max_sweeps = 60);

/// Eigenvalues only (same algorithm, skips vector accumulation).
std::vector<double> jacobi_eigenvalues(const CMatrix& a, double tol = 1e-15,
                                       int max_sweeps = 60);

/// max |A_ij - conj(A_ji)|.
double hermitian_defect(const CMatrix& a) noexcept;

}  // namespace framelab
