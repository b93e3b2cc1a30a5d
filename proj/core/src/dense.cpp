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

#include "qmagic/dense.hpp"

#include <string>

#include "qmagic/errors.hpp"

namespace qmagic {

namespace {

void require_same(const QuditSystem &a, const QuditSystem &b, const char *what) {
  if (!(a == b)) throw ShapeError(std::string(what) + ": operands live on different systems");
}

QuditSystem joint(const QuditSystem &a, const QuditSystem &b) {
  if (a.d() != b.d()) throw ShapeError("tensor: local dimensions differ");
  return QuditSystem(a.d(), a.n() + b.n());
}

}  // namespace

double max_abs_diff(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

DenseOperator::DenseOperator(const QuditSystem &system, Matrix entries)
    : system_(system), m_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(system_.dim());
  if (m_.rows() != dim || m_.cols() != dim)
    throw ShapeError("operator must be " + std::to_string(dim) + "x" + std::to_string(dim) + ", got " +
                     std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
}

DenseOperator DenseOperator::identity(const QuditSystem &system) {
  const auto dim = static_cast<Eigen::Index>(system.dim());
  return DenseOperator(system, Matrix::Identity(dim, dim));
}

bool DenseOperator::is_unitary(double tol) const {
  return max_abs_diff(m_.adjoint() * m_, Matrix::Identity(m_.rows(), m_.cols())) <= tol;
}

bool DenseOperator::is_hermitian(double tol) const { return max_abs_diff(m_, m_.adjoint()) <= tol; }

const DenseOperator &DenseOperator::require_unitary(double tol) const {
  if (!is_unitary(tol)) throw NumericalError("operator is not unitary to tolerance");
  return *this;
}

const DenseOperator &DenseOperator::require_hermitian(double tol) const {
  if (!is_hermitian(tol)) throw NumericalError("operator is not Hermitian to tolerance");
  return *this;
}

DensityState::DensityState(const QuditSystem &system, Matrix rho, double tol)
    : system_(system), rho_(std::move(rho)) {
  const auto dim = static_cast<Eigen::Index>(system_.dim());
  if (rho_.rows() != dim || rho_.cols() != dim) throw ShapeError("density matrix has the wrong shape");
  if (max_abs_diff(rho_, rho_.adjoint()) > tol) throw ValidationError("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - cplx(1.0, 0.0)) > tol) throw ValidationError("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) throw ValidationError("density matrix is not positive semidefinite");
}

DensityState DensityState::from_vector(const QuditSystem &system, const Vector &psi) {
  if (psi.size() != static_cast<Eigen::Index>(system.dim())) throw ShapeError("state vector has the wrong length");
  const double nrm = psi.norm();
  if (nrm < 1e-12) throw ValidationError("state vector is zero");
  const Vector v = psi / nrm;
  return DensityState(system, v * v.adjoint());
}

double DensityState::purity() const { return (rho_ * rho_).trace().real(); }

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DenseOperator tensor(const DenseOperator &a, const DenseOperator &b) {
  return DenseOperator(joint(a.system(), b.system()), kron(a.matrix(), b.matrix()));
}

DensityState tensor(const DensityState &a, const DensityState &b) {
  return DensityState(joint(a.system(), b.system()), kron(a.matrix(), b.matrix()));
}

DenseOperator mul(const DenseOperator &a, const DenseOperator &b) {
  require_same(a.system(), b.system(), "mul");
  return DenseOperator(a.system(), a.matrix() * b.matrix());
}

DenseOperator adjoint(const DenseOperator &a) { return DenseOperator(a.system(), a.matrix().adjoint()); }

cplx trace_inner(const DenseOperator &a, const DenseOperator &b) {
  require_same(a.system(), b.system(), "trace_inner");
  // Tr[A^dagger B] = sum_ij conj(A_ij) B_ij
  return (a.matrix().conjugate().cwiseProduct(b.matrix())).sum();
}

DenseOperator conjugate_by(const DenseOperator &u, const DenseOperator &a) {
  require_same(u.system(), a.system(), "conjugate_by");
  return DenseOperator(a.system(), u.matrix() * a.matrix() * u.matrix().adjoint());
}

DensityState evolve(const DenseOperator &u, const DensityState &rho) {
  if (!(u.system() == rho.system())) throw ShapeError("evolve: operands live on different systems");
  Matrix out = u.matrix() * rho.matrix() * u.matrix().adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityState(rho.system(), std::move(out));
}

}  // namespace qmagic
