#include "projquasi/divergence.hpp"

namespace projquasi {

double gauss_kl(const Matrix& p_nat, const Matrix& q_nat) {
    if (p_nat.rows() != q_nat.rows() || p_nat.cols() != q_nat.cols())
        throw DimensionMismatch("gauss_kl: dimension mismatch");
    const auto n = static_cast<double>(p_nat.rows());

    auto fp = spd_factorize(p_nat);
    if (!fp)
        throw NotPositiveDefinite("gauss_kl: first natural parameter is not SPD");
    auto fq = spd_factorize(q_nat);
    if (!fq)
        throw NotPositiveDefinite("gauss_kl: second natural parameter is not SPD");

    // trace(q_nat p_nat^{-1}) as an elementwise product; both factors symmetric
    const Matrix p_inv = fp->solve(Matrix::Identity(p_nat.rows(), p_nat.cols()));
    const double tr = q_nat.cwiseProduct(p_inv).sum();

    double val = 0.5 * (fp->log_det() - fq->log_det() + tr - n);
    if (val < 0.0 && val > -1e-10) val = 0.0;
    return val;
}

double logdet_dirderiv(const Matrix& m, const Matrix& dm) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("logdet_dirderiv: matrix is not square");
    if (dm.rows() != m.rows() || dm.cols() != m.cols())
        throw DimensionMismatch("logdet_dirderiv: direction shape mismatch");

    Eigen::FullPivLU<Matrix> lu(m);
    if (!lu.isInvertible())
        throw SingularMatrix("logdet_dirderiv: matrix is singular");
    return lu.solve(dm).trace();
}

}  // namespace projquasi
