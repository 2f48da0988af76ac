// Copyright 2026 The spinsqueeze Authors
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

#include "ssq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ssq {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t nr = rows.size();
  if (nr == 0) {
    throw std::invalid_argument("ComplexMatrix::from_rows: no rows");
  }
  const std::size_t nc = rows.begin()->size();
  ComplexMatrix m(nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) {
      throw std::invalid_argument("ComplexMatrix::from_rows: ragged rows");
    }
    std::size_t c = 0;
    for (const Complex& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("trace: matrix must be square");
  }
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double ComplexMatrix::hermiticity_defect() const {
  if (rows_ != cols_) {
    throw std::invalid_argument("hermiticity_defect: matrix must be square");
  }
  double d = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("operator+=: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("operator-=: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("operator*: inner dimensions differ");
  }
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex av = a(r, k);
      if (av == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        out(r, c) += av * b(k, c);
      }
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double d = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      d = std::max(d, std::abs(a(r, c) - b(r, c)));
    }
  }
  return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex av = a(ar, ac);
      if (av == Complex{0.0, 0.0}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = av * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix embed_single_qubit(const ComplexMatrix& op, int qubit,
                                 int n_qubits) {
  if (op.rows() != 2 || op.cols() != 2) {
    throw std::invalid_argument("embed_single_qubit: operator must be 2x2");
  }
  if (n_qubits < 1) {
    throw std::invalid_argument("embed_single_qubit: need at least one qubit");
  }
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::invalid_argument("embed_single_qubit: qubit index out of range");
  }
  ComplexMatrix out = (qubit == 0) ? op : ComplexMatrix::identity(2);
  for (int k = 1; k < n_qubits; ++k) {
    out = kron(out, (k == qubit) ? op : ComplexMatrix::identity(2));
  }
  return out;
}

namespace {

// Cyclic Jacobi diagonalization of a dense real symmetric matrix.
// Returns eigenvalues in ascending order.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> a,
                                                 std::size_t n) {
  auto at = [&a, n](std::size_t r, std::size_t c) -> double& {
    return a[r * n + c];
  };

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r + 1; c < n; ++c) off += at(r, c) * at(r, c);
    }
    if (off < 1e-30) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        // Smaller-root tangent for numerical stability.
        double t;
        if (tau >= 0.0) {
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        } else {
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          const Tolerances& tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  }
  if (!a.all_finite()) {
    throw std::invalid_argument(
        "hermitian_eigenvalues: matrix has non-finite entries");
  }
  if (a.hermiticity_defect() > tol.hermiticity) {
    throw std::invalid_argument(
        "hermitian_eigenvalues: matrix is not Hermitian within tolerance");
  }

  const std::size_t n = a.rows();
  // Real symmetric embedding [[Re A, −Im A], [Im A, Re A]]; each eigenvalue
  // of A appears twice in the embedded spectrum.
  const std::size_t m = 2 * n;
  std::vector<double> emb(m * m, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Complex v = a(r, c);
      emb[r * m + c] = v.real();
      emb[r * m + (n + c)] = -v.imag();
      emb[(n + r) * m + c] = v.imag();
      emb[(n + r) * m + (n + c)] = v.real();
    }
  }

  std::vector<double> doubled = jacobi_symmetric_eigenvalues(std::move(emb), m);
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) {
    eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  }
  return eig;
}

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::size_t v) {
  int k = 0;
  while (v > 1) {
    v >>= 1;
    ++k;
  }
  return k;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, const Tolerances& tol)
    : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  if (!is_power_of_two(m_.rows())) {
    throw std::invalid_argument(
        "DensityMatrix: dimension must be a power of two");
  }
  if (!m_.all_finite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entries");
  }
  const double hd = m_.hermiticity_defect();
  if (hd > tol.hermiticity) {
    throw std::invalid_argument(
        "DensityMatrix: not Hermitian (defect " + std::to_string(hd) + ")");
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol.trace_unit) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  const std::vector<double> eig = hermitian_eigenvalues(m_, tol);
  if (!eig.empty() && eig.front() < tol.psd_floor) {
    throw std::invalid_argument(
        "DensityMatrix: negative eigenvalue " + std::to_string(eig.front()));
  }
  n_qubits_ = log2_exact(m_.rows());
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& obs,
                   const Tolerances& tol) {
  if (obs.rows() != rho.dim() || obs.cols() != rho.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  if (obs.hermiticity_defect() > tol.hermiticity) {
    throw std::invalid_argument("expectation: observable is not Hermitian");
  }
  // tr(ρ·obs) without forming the full product.
  Complex t{0.0, 0.0};
  const ComplexMatrix& r = rho.matrix();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t k = 0; k < r.cols(); ++k) {
      t += r(i, k) * obs(k, i);
    }
  }
  if (std::abs(t.imag()) > tol.imag_residue) {
    throw std::runtime_error(
        "expectation: imaginary residue " + std::to_string(t.imag()) +
        " exceeds tolerance");
  }
  return t.real();
}

}  // namespace ssq
