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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ssq/numerics.hpp"

namespace ssq {

using Complex = std::complex<double>;

// Dense row-major complex matrix with value semantics.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-initialized
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;  // largest entrywise modulus
  double frobenius_norm() const;
  bool all_finite() const;
  double hermiticity_defect() const;  // ‖A − A†‖_max, square matrices only

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) {
    m *= s;
    return m;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) {
    m *= s;
    return m;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);  // matrix product

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; row and column dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// op ⊗-embedded at the given qubit of an n-qubit register, identity
// elsewhere. Qubit 0 is the most significant bit of the basis index,
// i.e. the leftmost Kronecker factor.
ComplexMatrix embed_single_qubit(const ComplexMatrix& op, int qubit,
                                 int n_qubits);

// All eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi sweeps on
// the 2n×2n real symmetric embedding [[Re A, −Im A], [Im A, Re A]]; the
// doubled spectrum is collapsed by averaging adjacent sorted pairs.
// Throws if the input is not Hermitian within tol.hermiticity.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          const Tolerances& tol = {});

// Quantum state validated on construction: dimension a power of two,
// Hermitian, unit trace, positive semidefinite (within tolerances).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  int qubit_count() const { return n_qubits_; }

 private:
  ComplexMatrix m_;
  int n_qubits_ = 0;
};

// Re tr(ρ·obs) for a Hermitian observable. Throws on dimension mismatch,
// non-Hermitian observable, or an imaginary trace residue above
// tol.imag_residue.
double expectation(const DensityMatrix& rho, const ComplexMatrix& obs,
                   const Tolerances& tol = {});

}  // namespace ssq
