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

#include "framelab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "framelab/compensated.hpp"

namespace framelab {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) t(j, i) = std::conj((*this)(i, j));
  }
  return t;
}

double CMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
  CMatrix c(a.rows_, b.cols_);
  for (std::size_t j = 0; j < b.cols_; ++j) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx bkj = b(k, j);
      if (bkj == cplx{}) continue;
      for (std::size_t i = 0; i < a.rows_; ++i) c(i, j) += a(i, k) * bkj;
    }
  }
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix difference: shapes differ");
  }
  CMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix sum: shapes differ");
  }
  CMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

std::vector<cplx> operator*(const CMatrix& a, std::span<const cplx> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector: dimensions differ");
  std::vector<cplx> y(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto c = a.col(j);
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += c[i] * x[j];
  }
  return y;
}

cplx inner(std::span<const cplx> u, std::span<const cplx> v) noexcept {
  CompensatedSum<cplx> s;
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) s += u[i] * std::conj(v[i]);
  return s.value();
}

double norm_sq(std::span<const cplx> u) noexcept {
  CompensatedSum<double> s;
  for (const auto& z : u) s += std::norm(z);
  return s.value();
}

double hermitian_defect(const CMatrix& a) noexcept {
  double d = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows() && i < a.cols() && j < a.rows(); ++i) {
      d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return d;
}

namespace {

HermitianEigen run_jacobi(const CMatrix& input, double tol, int max_sweeps, bool want_vectors) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw std::invalid_argument("jacobi_eigen: matrix must be square");

  CMatrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  }
  CMatrix v = want_vectors ? CMatrix::identity(n) : CMatrix();

  const double frob = a.frobenius_norm();
  const double eff = std::max(tol, static_cast<double>(n) * std::numeric_limits<double>::epsilon());
  const double skip = n > 0 ? eff * frob / static_cast<double>(n) : 0.0;

  HermitianEigen out;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t q = 1; q < n; ++q) {
      for (std::size_t p = 0; p < q; ++p) off += 2.0 * std::norm(a(p, q));
    }
    if (std::sqrt(off) <= eff * frob) break;
    out.sweeps = sweep + 1;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= skip) continue;
        const cplx phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q).
        const cplx upp = c, upq = s;
        const cplx uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const cplx vkp = v(k, p), vkq = v(k, q);
            v(k, p) = vkp * upp + vkq * uqp;
            v(k, q) = vkp * upq + vkq * uqq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(order[i], order[i]).real();
  if (want_vectors) {
    out.vectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto src = v.col(order[j]);
      std::copy(src.begin(), src.end(), out.vectors.col(j).begin());
    }
  }
  return out;
}

}  // namespace

HermitianEigen jacobi_eigen(const CMatrix& a, double tol, int max_sweeps) {
  return run_jacobi(a, tol, max_sweeps, true);
}

std::vector<double> jacobi_eigenvalues(const CMatrix& a, double tol, int max_sweeps) {
  return run_jacobi(a, tol, max_sweeps, false).values;
}

}  // namespace framelab
