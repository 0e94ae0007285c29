#include "projquasi/numcore.hpp"

namespace projquasi {

Matrix symmetrize(const Matrix& a) {
    return 0.5 * (a + a.transpose());
}

bool all_finite(const Matrix& a) {
    return a.allFinite();
}

bool all_finite(const Vector& v) {
    return v.allFinite();
}

SpdFactorization::SpdFactorization(const Matrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("SpdFactorization: matrix is not square");
    llt_.compute(a);
    if (llt_.info() != Eigen::Success)
        throw NotPositiveDefinite("SpdFactorization: matrix is not positive definite");
}

Vector SpdFactorization::solve(const Vector& b) const {
    if (b.size() != dim())
        throw DimensionMismatch("SpdFactorization::solve: size mismatch");
    return llt_.solve(b);
}

Matrix SpdFactorization::solve(const Matrix& b) const {
    if (b.rows() != dim())
        throw DimensionMismatch("SpdFactorization::solve: size mismatch");
    return llt_.solve(b);
}

double SpdFactorization::log_det() const {
    return 2.0 * llt_.matrixLLT().diagonal().array().log().sum();
}

std::optional<SpdFactorization> spd_factorize(const Matrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("spd_factorize: matrix is not square");
    SpdFactorization f;
    f.llt_.compute(a);
    if (f.llt_.info() != Eigen::Success)
        return std::nullopt;
    return f;
}

bool is_spd(const Matrix& a) {
    return spd_factorize(a).has_value();
}

Vector spd_solve(const Matrix& a, const Vector& b) {
    auto f = spd_factorize(a);
    if (!f)
        throw NotPositiveDefinite("spd_solve: matrix is not positive definite");
    return f->solve(b);
}

double logdet(const Matrix& a) {
    auto f = spd_factorize(a);
    if (!f)
        throw NotPositiveDefinite("logdet: matrix is not positive definite");
    return f->log_det();
}

double min_eigenvalue(const Matrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("min_eigenvalue: matrix is not square");
    Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace projquasi
