// Copyright 2026 The qmagic Authors
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

#include <Eigen/Dense>

#include "qmagic/system.hpp"

namespace qmagic {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix &a, const Matrix &b);

class DenseOperator {
 public:
  DenseOperator(const QuditSystem &system, Matrix entries);

  static DenseOperator identity(const QuditSystem &system);

  const QuditSystem &system() const { return system_; }
  const Matrix &matrix() const { return m_; }

  bool is_unitary(double tol = 1e-9) const;
  bool is_hermitian(double tol = 1e-9) const;
  // Throw NumericalError unless the property holds to tol in max-norm.
  const DenseOperator &require_unitary(double tol = 1e-9) const;
  const DenseOperator &require_hermitian(double tol = 1e-9) const;

 private:
  QuditSystem system_;
  Matrix m_;
};

class DensityState {
 public:
  // Validates Hermiticity, unit trace and positivity (all to tol).
  DensityState(const QuditSystem &system, Matrix rho, double tol = 1e-9);

  // |psi><psi| for a nonzero vector; the vector is normalized first.
  static DensityState from_vector(const QuditSystem &system, const Vector &psi);

  const QuditSystem &system() const { return system_; }
  const Matrix &matrix() const { return rho_; }
  double purity() const;

 private:
  QuditSystem system_;
  Matrix rho_;
};

DenseOperator tensor(const DenseOperator &a, const DenseOperator &b);
DensityState tensor(const DensityState &a, const DensityState &b);
DenseOperator mul(const DenseOperator &a, const DenseOperator &b);
DenseOperator adjoint(const DenseOperator &a);
// Tr[A^dagger B].
cplx trace_inner(const DenseOperator &a, const DenseOperator &b);
// U A U^dagger.
DenseOperator conjugate_by(const DenseOperator &u, const DenseOperator &a);
DensityState evolve(const DenseOperator &u, const DensityState &rho);

Matrix kron(const Matrix &a, const Matrix &b);

}  // namespace qmagic
