// Copyright 2026 The hsp-elimination Authors
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

/// \file
/// Dense linear algebra over small Hilbert spaces: density matrices, kernels
/// and supports, subspace intersections and POVM validation.
///
/// Everything here is templated on the Eigen scalar type (normally
/// std::complex<double>; real scalars work too). Subspaces are compared by
/// their orthogonal projectors, never by basis.

#ifndef HSP_LINALG_H
#define HSP_LINALG_H

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "hsp/errors.h"

namespace hsp::linalg {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RealOf = typename Eigen::NumTraits<Scalar>::Real;

/// Numerical thresholds. Defaults are the desk-scale values used throughout.
struct Tolerances {
    double hermitian = 1e-9;    // max |M - M^dagger|
    double psd = 1e-9;          // min eigenvalue >= -psd
    double trace = 1e-9;        // |tr(rho) - 1|
    double orthonormal = 1e-9;  // max |B^dagger B - I|
    double povm = 1e-9;         // max |sum A_i - I|
    double zero = 1e-9;         // tr(rho A) counted as zero
    double kernel = 1e-9;       // eigenvalue cutoff relative to lambda_max
    double subspace = 1e-9;     // projector distance for equality / containment

    static Tolerances uniform(double tol) { return {tol, tol, tol, tol, tol, tol, tol, tol}; }
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return static_cast<double>(m.cwiseAbs().maxCoeff());
}

template <typename Derived>
double hermitian_deviation(const Eigen::MatrixBase<Derived> &m) {
    return max_abs(m - m.adjoint());
}

/// tr(A B) without forming the product.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar trace_of_product(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    return a.cwiseProduct(b.transpose()).sum();
}

/// Smallest eigenvalue of the Hermitian part of `m` (0 for empty input).
template <typename Derived>
double min_eigenvalue(const Eigen::MatrixBase<Derived> &m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() == 0) {
        return 0.0;
    }
    Matrix<Scalar> herm = (m + m.adjoint()) / RealOf<Scalar>(2);
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(herm, Eigen::EigenvaluesOnly);
    return static_cast<double>(es.eigenvalues()(0));
}

/// Kronecker product of two dense matrices.
template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    Matrix<typename DerivedA::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

template <typename Derived>
Matrix<typename Derived::Scalar> kron_power(const Eigen::MatrixBase<Derived> &a, int m) {
    Matrix<typename Derived::Scalar> out = Matrix<typename Derived::Scalar>::Identity(1, 1);
    for (int i = 0; i < m; ++i) {
        out = kron(out, a);
    }
    return out;
}

/// A linear subspace held as a matrix with orthonormal columns. Rank 0 (the
/// zero subspace) is a normal value with an ambient x 0 basis.
template <typename Scalar>
class Subspace {
   public:
    using MatrixType = Matrix<Scalar>;

    explicit Subspace(Eigen::Index ambient = 0) : basis_(ambient, 0) {}

    /// Throws DomainError if the columns are not orthonormal within `tol`.
    static Subspace from_orthonormal(MatrixType basis, double tol = 1e-9) {
        if (basis.cols() > 0) {
            double dev = max_abs(basis.adjoint() * basis - MatrixType::Identity(basis.cols(), basis.cols()));
            if (dev > tol) {
                throw DomainError("subspace basis is not orthonormal (deviation " + std::to_string(dev) + ")");
            }
        }
        Subspace s;
        s.basis_ = std::move(basis);
        return s;
    }

    /// Span of arbitrary column vectors; directions with singular value at
    /// or below tol * max(1, sigma_max) are dropped.
    template <typename Derived>
    static Subspace span(const Eigen::MatrixBase<Derived> &vectors, double tol = 1e-9) {
        Subspace s(vectors.rows());
        if (vectors.cols() == 0 || vectors.rows() == 0) {
            return s;
        }
        Eigen::JacobiSVD<MatrixType> svd(MatrixType(vectors), Eigen::ComputeThinU);
        const auto &sv = svd.singularValues();
        double cutoff = tol * std::max(1.0, static_cast<double>(sv(0)));
        Eigen::Index r = 0;
        while (r < sv.size() && static_cast<double>(sv(r)) > cutoff) {
            ++r;
        }
        s.basis_ = svd.matrixU().leftCols(r);
        return s;
    }

    static Subspace full(Eigen::Index ambient) {
        Subspace s;
        s.basis_ = MatrixType::Identity(ambient, ambient);
        return s;
    }

    Eigen::Index ambient_dim() const { return basis_.rows(); }
    Eigen::Index rank() const { return basis_.cols(); }
    bool is_zero() const { return basis_.cols() == 0; }
    const MatrixType &basis() const { return basis_; }
    MatrixType projector() const { return basis_ * basis_.adjoint(); }

   private:
    MatrixType basis_;
};

template <typename Scalar>
double projector_distance(const Subspace<Scalar> &a, const Subspace<Scalar> &b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DomainError("subspaces live in different ambient dimensions");
    }
    return max_abs(a.projector() - b.projector());
}

template <typename Scalar>
bool same_span(const Subspace<Scalar> &a, const Subspace<Scalar> &b, double tol = 1e-9) {
    return projector_distance(a, b) <= tol;
}

/// b is contained in a: P_a P_b == P_b.
template <typename Scalar>
bool contains(const Subspace<Scalar> &a, const Subspace<Scalar> &b, double tol = 1e-9) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DomainError("subspaces live in different ambient dimensions");
    }
    if (b.is_zero()) {
        return true;
    }
    Matrix<Scalar> pb = b.projector();
    return max_abs(a.projector() * pb - pb) <= tol;
}

/// Eigenvectors of a Hermitian operator with eigenvalue <= rel_tol * lambda_max.
template <typename Derived>
Subspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived> &m, double rel_tol = 1e-9) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index d = m.rows();
    if (m.cols() != d) {
        throw DomainError("kernel expects a square matrix");
    }
    if (d == 0) {
        return Subspace<Scalar>(0);
    }
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es{Matrix<Scalar>(m)};
    const auto &ev = es.eigenvalues();
    double top = static_cast<double>(ev(d - 1));
    if (top <= 0.0) {
        return Subspace<Scalar>::full(d);
    }
    double cutoff = rel_tol * top;
    Eigen::Index r = 0;
    while (r < d && static_cast<double>(ev(r)) <= cutoff) {
        ++r;
    }
    return Subspace<Scalar>::from_orthonormal(es.eigenvectors().leftCols(r), 1e-6);
}

/// Orthogonal complement of the kernel.
template <typename Derived>
Subspace<typename Derived::Scalar> support(const Eigen::MatrixBase<Derived> &m, double rel_tol = 1e-9) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index d = m.rows();
    if (m.cols() != d) {
        throw DomainError("support expects a square matrix");
    }
    if (d == 0) {
        return Subspace<Scalar>(0);
    }
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es{Matrix<Scalar>(m)};
    const auto &ev = es.eigenvalues();
    double top = static_cast<double>(ev(d - 1));
    if (top <= 0.0) {
        return Subspace<Scalar>(d);
    }
    double cutoff = rel_tol * top;
    Eigen::Index r = 0;
    while (r < d && static_cast<double>(ev(r)) <= cutoff) {
        ++r;
    }
    return Subspace<Scalar>::from_orthonormal(es.eigenvectors().rightCols(d - r), 1e-6);
}

template <typename Scalar>
Subspace<Scalar> orthogonal_complement(const Subspace<Scalar> &a) {
    return kernel(Matrix<Scalar>(a.projector()), 0.5);
}

/// a cap b from the principal angles: left singular vectors of A^dagger B
/// with singular value >= 1 - tol, mapped back through A.
template <typename Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar> &a, const Subspace<Scalar> &b, double tol = 1e-9) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DomainError("cannot intersect subspaces of different ambient dimension");
    }
    if (a.is_zero() || b.is_zero()) {
        return Subspace<Scalar>(a.ambient_dim());
    }
    Matrix<Scalar> overlap = a.basis().adjoint() * b.basis();
    Eigen::JacobiSVD<Matrix<Scalar>> svd(overlap, Eigen::ComputeThinU);
    const auto &sv = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sv.size() && static_cast<double>(sv(r)) >= 1.0 - tol) {
        ++r;
    }
    Matrix<Scalar> basis = a.basis() * svd.matrixU().leftCols(r);
    return Subspace<Scalar>::from_orthonormal(std::move(basis), 1e-6);
}

/// a + b (span of the union).
template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar> &a, const Subspace<Scalar> &b, double tol = 1e-9) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DomainError("cannot add subspaces of different ambient dimension");
    }
    Matrix<Scalar> stacked(a.ambient_dim(), a.rank() + b.rank());
    stacked << a.basis(), b.basis();
    return Subspace<Scalar>::span(stacked, tol);
}

/// A validated Hermitian, positive semidefinite, unit-trace matrix.
template <typename Scalar>
class DensityMatrix {
   public:
    using MatrixType = Matrix<Scalar>;

    /// Throws DomainError naming the first violated property.
    static DensityMatrix validated(MatrixType m, const Tolerances &tol = {}) {
        if (m.rows() != m.cols() || m.rows() == 0) {
            throw DomainError("density matrix must be square and non-empty");
        }
        double herm = hermitian_deviation(m);
        if (herm > tol.hermitian) {
            throw DomainError("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
        }
        double lo = min_eigenvalue(m);
        if (lo < -tol.psd) {
            throw DomainError("density matrix is not PSD (min eigenvalue " + std::to_string(lo) + ")");
        }
        double tr_dev = std::abs(static_cast<double>(std::real(m.trace())) - 1.0);
        if (tr_dev > tol.trace) {
            throw DomainError("density matrix trace deviates from 1 by " + std::to_string(tr_dev));
        }
        DensityMatrix out;
        out.m_ = std::move(m);
        return out;
    }

    const MatrixType &matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

   private:
    DensityMatrix() = default;
    MatrixType m_;
};

/// A list of outcome operators. Construction does not validate; use
/// validate_povm.
template <typename Scalar>
class Povm {
   public:
    using MatrixType = Matrix<Scalar>;

    Povm() = default;
    explicit Povm(std::vector<MatrixType> outcomes) : outcomes_(std::move(outcomes)) {}

    const std::vector<MatrixType> &outcomes() const { return outcomes_; }
    const MatrixType &operator[](std::size_t i) const { return outcomes_[i]; }
    std::size_t size() const { return outcomes_.size(); }
    Eigen::Index dim() const { return outcomes_.empty() ? 0 : outcomes_.front().rows(); }

   private:
    std::vector<MatrixType> outcomes_;
};

struct PovmReport {
    double max_hermitian_deviation = 0.0;
    std::vector<double> min_eigenvalues;
    double completeness_deviation = 0.0;
    bool hermitian = true;
    bool psd = true;
    bool complete = true;
    bool pass = true;
};

template <typename Scalar>
PovmReport validate_povm(const Povm<Scalar> &p, const Tolerances &tol = {}) {
    PovmReport r;
    const Eigen::Index d = p.dim();
    Matrix<Scalar> total = Matrix<Scalar>::Zero(d, d);
    bool shapes_ok = !p.outcomes().empty();
    for (const auto &a : p.outcomes()) {
        if (a.rows() != d || a.cols() != d) {
            shapes_ok = false;
            r.min_eigenvalues.push_back(-std::numeric_limits<double>::infinity());
            continue;
        }
        r.max_hermitian_deviation = std::max(r.max_hermitian_deviation, hermitian_deviation(a));
        r.min_eigenvalues.push_back(min_eigenvalue(a));
        total += a;
    }
    r.completeness_deviation =
        shapes_ok ? max_abs(total - Matrix<Scalar>::Identity(d, d)) : std::numeric_limits<double>::infinity();
    r.hermitian = shapes_ok && r.max_hermitian_deviation <= tol.hermitian;
    r.psd = std::all_of(r.min_eigenvalues.begin(), r.min_eigenvalues.end(), [&](double v) { return v >= -tol.psd; });
    r.complete = r.completeness_deviation <= tol.povm;
    r.pass = r.hermitian && r.psd && r.complete;
    return r;
}

/// Re tr(rho A). Throws DomainError on a dimension mismatch or if the
/// imaginary part exceeds tol.hermitian.
template <typename DerivedR, typename DerivedA>
double outcome_probability(const Eigen::MatrixBase<DerivedR> &rho, const Eigen::MatrixBase<DerivedA> &a,
                           const Tolerances &tol = {}) {
    if (rho.rows() != a.rows() || rho.cols() != a.cols() || rho.rows() != rho.cols()) {
        throw DomainError("outcome_probability: dimension mismatch");
    }
    auto t = trace_of_product(rho, a);
    double im = static_cast<double>(std::imag(t));
    if (std::abs(im) > tol.hermitian) {
        throw DomainError("outcome_probability: trace has imaginary part " + std::to_string(im));
    }
    return static_cast<double>(std::real(t));
}

template <typename Scalar>
double outcome_probability(const DensityMatrix<Scalar> &rho, const Matrix<Scalar> &a, const Tolerances &tol = {}) {
    return outcome_probability(rho.matrix(), a, tol);
}

}  // namespace hsp::linalg

#endif  // HSP_LINALG_H
