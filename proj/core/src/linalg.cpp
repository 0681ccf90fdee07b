// Copyright 2026 The entverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entverify/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace entverify {

namespace {

std::string describe_defect(double defect) {
    std::ostringstream os;
    os << "operator is not Hermitian (max |A - A^dag| = " << defect << ")";
    return os.str();
}

void require_same_shape(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream os;
        os << "dimension mismatch: " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
        throw DimensionMismatch(os.str());
    }
}

}  // namespace

NotHermitian::NotHermitian(double defect) : Error(describe_defect(defect)), defect_(defect) {}

Complex root_of_unity(int d, long long k) {
    long long r = k % d;
    if (r < 0) {
        r += d;
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

Ket Ket::normalized(Vector amplitudes) {
    if (amplitudes.size() == 0) {
        throw Error("ket must have positive dimension");
    }
    if (!amplitudes.allFinite()) {
        throw Error("ket amplitudes must be finite");
    }
    double n = amplitudes.norm();
    if (n == 0.0) {
        throw Error("cannot normalize the zero vector");
    }
    amplitudes /= n;
    return Ket(std::move(amplitudes));
}

Ket Ket::from_unit(Vector amplitudes) {
    if (amplitudes.size() == 0 || !amplitudes.allFinite()) {
        throw Error("ket amplitudes must be finite with positive dimension");
    }
    double n = amplitudes.norm();
    if (std::abs(n - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "ket is not unit norm (norm = " << n << ")";
        throw Error(os.str());
    }
    return Ket(std::move(amplitudes));
}

Ket Ket::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw Error("basis index out of range");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return Ket(std::move(v));
}

Matrix Ket::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

DenseOperator::DenseOperator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw DimensionMismatch("operator must be square");
    }
    if (!m_.allFinite()) {
        throw Error("operator entries must be finite");
    }
}

DenseOperator DenseOperator::identity(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return DenseOperator(Matrix::Identity(n, n));
}

DenseOperator DenseOperator::zero(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return DenseOperator(Matrix::Zero(n, n));
}

double DenseOperator::hermitian_defect() const { return max_abs_difference(m_, m_.adjoint()); }

Vector tensor_product(const Vector &a, const Vector &b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

Matrix tensor_product(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Ket tensor_product(const Ket &a, const Ket &b) {
    return Ket::normalized(tensor_product(a.amplitudes(), b.amplitudes()));
}

DenseOperator tensor_product(const DenseOperator &a, const DenseOperator &b) {
    return DenseOperator(tensor_product(a.matrix(), b.matrix()));
}

Ket conjugate(const Ket &a) { return Ket::normalized(a.amplitudes().conjugate()); }

DenseOperator conjugate(const DenseOperator &a) { return DenseOperator(a.matrix().conjugate()); }

Vector vectorize(const Matrix &a) {
    Vector v(a.rows() * a.cols());
    for (Eigen::Index j = 0; j < a.rows(); ++j) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            v(j * a.cols() + k) = a(j, k);
        }
    }
    return v;
}

Matrix unvectorize(const Vector &v) {
    auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (d * d != v.size()) {
        throw DimensionMismatch("vector length is not a perfect square");
    }
    Matrix a(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = 0; k < d; ++k) {
            a(j, k) = v(j * d + k);
        }
    }
    return a;
}

double frobenius_distance(const Matrix &a, const Matrix &b) {
    require_same_shape(a, b);
    return (a - b).norm();
}

double max_abs_difference(const Matrix &a, const Matrix &b) {
    require_same_shape(a, b);
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

HermitianEigen eigen_hermitian(const Matrix &a) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("eigen_hermitian requires a square matrix");
    }
    double defect = max_abs_difference(a, a.adjoint());
    if (defect > kHermitianTol) {
        throw NotHermitian(defect);
    }
    // Symmetrize so the solver sees an exactly Hermitian input.
    Matrix h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error("Hermitian eigensolver failed to converge");
    }
    const RealVector &ascending = solver.eigenvalues();
    const Matrix &vectors = solver.eigenvectors();
    const Eigen::Index n = ascending.size();
    HermitianEigen out{RealVector(n), Matrix(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = ascending(n - 1 - k);
        out.eigenvectors.col(k) = vectors.col(n - 1 - k);
    }
    return out;
}

std::size_t numerical_rank(const Matrix &a, double tol) {
    auto eig = eigen_hermitian(a);
    return static_cast<std::size_t>((eig.eigenvalues.array().abs() > tol).count());
}

}  // namespace entverify
