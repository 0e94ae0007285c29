#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>

namespace projquasi {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (A + A^T)/2. Updates re-symmetrize their outputs with this so symmetry
/// holds exactly in storage, not just analytically.
Matrix symmetrize(const Matrix& a);

bool all_finite(const Matrix& a);
bool all_finite(const Vector& v);

/// Cholesky factor of a symmetric positive definite matrix. Success of the
/// factorization is the library's positive-definiteness test.
class SpdFactorization {
public:
    /// Throws NotPositiveDefinite when `a` is not numerically SPD.
    explicit SpdFactorization(const Matrix& a);

    Vector solve(const Vector& b) const;
    Matrix solve(const Matrix& b) const;
    double log_det() const;
    Index dim() const { return llt_.matrixLLT().rows(); }

private:
    friend std::optional<SpdFactorization> spd_factorize(const Matrix& a);
    SpdFactorization() = default;
    Eigen::LLT<Matrix> llt_;
};

/// std::nullopt iff `a` is not numerically positive definite.
std::optional<SpdFactorization> spd_factorize(const Matrix& a);

bool is_spd(const Matrix& a);

/// Solves Ax = b for SPD A. Throws NotPositiveDefinite / DimensionMismatch.
Vector spd_solve(const Matrix& a, const Vector& b);

/// log det A via Cholesky; never forms the determinant itself.
double logdet(const Matrix& a);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Matrix& a);

}  // namespace projquasi
