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

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace entverify {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance for certifying exact operator identities.
inline constexpr double kIdentityTol = 1e-10;
/// Default eigenvalue cutoff for numerical_rank.
inline constexpr double kRankTol = 1e-9;
/// Per-dimension bound on ||A - V diag(w) V^dag||_F.
inline constexpr double kDecompositionTolPerDim = 1e-9;
/// Hermiticity slack accepted by eigen_hermitian.
inline constexpr double kHermitianTol = 1e-10;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class NotHermitian : public Error {
  public:
    explicit NotHermitian(double defect);
    double defect() const { return defect_; }

  private:
    double defect_;
};

/// exp(2 pi i k / d).
Complex root_of_unity(int d, long long k = 1);

/// Unit-norm complex vector.
class Ket {
  public:
    /// Normalizes `amplitudes`; throws on a zero or non-finite vector.
    static Ket normalized(Vector amplitudes);
    /// Wraps `amplitudes` without rescaling; throws unless the norm is 1 within 1e-12.
    static Ket from_unit(Vector amplitudes);
    /// |k> in dimension `dim`.
    static Ket basis(std::size_t dim, std::size_t k);

    const Vector &amplitudes() const { return amplitudes_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    Complex operator[](std::size_t k) const { return amplitudes_(static_cast<Eigen::Index>(k)); }

    /// |psi><psi|.
    Matrix projector() const;

  private:
    explicit Ket(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {}
    Vector amplitudes_;
};

/// Square complex matrix with finite entries.
class DenseOperator {
  public:
    DenseOperator() = default;
    /// Throws if `m` is not square or has a non-finite entry.
    explicit DenseOperator(Matrix m);

    static DenseOperator identity(std::size_t dim);
    static DenseOperator zero(std::size_t dim);

    const Matrix &matrix() const { return m_; }
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    Complex operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    /// max |A - A^dag|.
    double hermitian_defect() const;
    bool is_hermitian(double tol = 1e-12) const { return hermitian_defect() <= tol; }
    Complex trace() const { return m_.trace(); }

  private:
    Matrix m_;
};

/// Kronecker product with row-major index convention: (a (x) b)[i*db + k] = a[i] b[k].
Ket tensor_product(const Ket &a, const Ket &b);
DenseOperator tensor_product(const DenseOperator &a, const DenseOperator &b);
Vector tensor_product(const Vector &a, const Vector &b);
Matrix tensor_product(const Matrix &a, const Matrix &b);

/// Entrywise complex conjugate in the computational basis.
Ket conjugate(const Ket &a);
DenseOperator conjugate(const DenseOperator &a);

/// |A> = sum_{jk} A_jk |j>|k>, row-major. Not normalized.
Vector vectorize(const Matrix &a);
inline Vector vectorize(const DenseOperator &a) { return vectorize(a.matrix()); }

/// Inverse of vectorize for a vector of length d^2.
Matrix unvectorize(const Vector &v);

/// sqrt(sum |a_jk - b_jk|^2). Throws DimensionMismatch.
double frobenius_distance(const Matrix &a, const Matrix &b);
inline double frobenius_distance(const DenseOperator &a, const DenseOperator &b) {
    return frobenius_distance(a.matrix(), b.matrix());
}

struct HermitianEigen {
    RealVector eigenvalues;  // descending
    Matrix eigenvectors;     // columns match eigenvalues
};

/// Spectral decomposition of a Hermitian operator, eigenvalues descending.
/// Throws NotHermitian if max|A - A^dag| exceeds kHermitianTol.
HermitianEigen eigen_hermitian(const Matrix &a);
inline HermitianEigen eigen_hermitian(const DenseOperator &a) { return eigen_hermitian(a.matrix()); }

/// Number of eigenvalues with magnitude above `tol`.
std::size_t numerical_rank(const Matrix &a, double tol = kRankTol);
inline std::size_t numerical_rank(const DenseOperator &a, double tol = kRankTol) {
    return numerical_rank(a.matrix(), tol);
}

/// max |A_jk - B_jk|.
double max_abs_difference(const Matrix &a, const Matrix &b);

}  // namespace entverify
