#include "projquasi/updates.hpp"

namespace projquasi {

namespace {

void require_square_of_dim(const Matrix& h, Index n, const char* who) {
    if (h.rows() != h.cols() || h.rows() != n)
        throw DimensionMismatch(std::string(who) + ": H has the wrong shape");
}

void require_curvature(const SecantPair& pair, const char* who) {
    if (!curvature_ok(pair))
        throw CurvatureViolation(std::string(who) + ": curvature condition y's > 0 violated");
}

// Factor of the symmetrized cross matrix (S'Y + Y'S)/2; the block curvature
// condition is that this factorization succeeds.
SpdFactorization factor_cross(const BlockSecantPair& blk, const char* who) {
    const Matrix cross = symmetrize(blk.S.transpose() * blk.Y);
    auto f = spd_factorize(cross);
    if (!f)
        throw BlockCurvatureViolation(std::string(who) + ": S'Y is not positive definite");
    return std::move(*f);
}

}  // namespace

SecantPair::SecantPair(Vector step, Vector grad_diff)
    : s(std::move(step)), y(std::move(grad_diff)), rho(0.0) {
    if (s.size() != y.size())
        throw DimensionMismatch("SecantPair: s and y differ in dimension");
    rho = y.dot(s);
}

BlockSecantPair::BlockSecantPair(Matrix sketch, Matrix hess_action)
    : S(std::move(sketch)), Y(std::move(hess_action)) {
    if (S.rows() != Y.rows() || S.cols() != Y.cols())
        throw DimensionMismatch("BlockSecantPair: S and Y differ in shape");
    if (S.cols() < 1 || S.cols() > S.rows())
        throw DimensionMismatch("BlockSecantPair: need 1 <= q <= n columns");
}

bool curvature_ok(const SecantPair& pair, double eps_c) {
    return pair.rho > eps_c * pair.y.norm() * pair.s.norm();
}

Matrix bfgs_update(const Matrix& h, const SecantPair& pair) {
    require_square_of_dim(h, pair.dim(), "bfgs_update");
    require_curvature(pair, "bfgs_update");
    const Index n = pair.dim();
    const Matrix t = Matrix::Identity(n, n) - pair.s * pair.y.transpose() / pair.rho;
    return symmetrize(t * h * t.transpose() + pair.s * pair.s.transpose() / pair.rho);
}

Matrix proj_update(const Matrix& h, const SecantPair& pair) {
    require_square_of_dim(h, pair.dim(), "proj_update");
    const double yy = pair.y.squaredNorm();
    if (yy == 0.0)
        throw ZeroVector("proj_update: y is zero");
    require_curvature(pair, "proj_update");
    const Index n = pair.dim();
    const Matrix p = Matrix::Identity(n, n) - pair.y * pair.y.transpose() / yy;
    return symmetrize(p * h * p + pair.s * pair.s.transpose() / pair.rho);
}

Matrix oblique_update(const Matrix& h, const SecantPair& pair, const ObliqueDirection& dir) {
    require_square_of_dim(h, pair.dim(), "oblique_update");
    if (dir.v.size() != pair.dim())
        throw DimensionMismatch("oblique_update: v has the wrong dimension");
    const double vy = pair.y.dot(dir.v);
    if (std::abs(vy) <= 1e-12 * pair.y.norm() * dir.v.norm())
        throw DegenerateDirection("oblique_update: v is (numerically) orthogonal to y");
    require_curvature(pair, "oblique_update");
    const Index n = pair.dim();
    const Matrix m = Matrix::Identity(n, n) - pair.y * dir.v.transpose() / vy;
    return symmetrize(m.transpose() * h * m + pair.s * pair.s.transpose() / pair.rho);
}

Matrix block_orth_update(const Matrix& h, const BlockSecantPair& blk) {
    require_square_of_dim(h, blk.dim(), "block_orth_update");
    auto gram = spd_factorize(blk.Y.transpose() * blk.Y);
    if (!gram)
        throw RankDeficientSketch("block_orth_update: Y is rank deficient");
    auto cross = factor_cross(blk, "block_orth_update");

    const Index n = blk.dim();
    const Matrix pi = blk.Y * gram->solve(blk.Y.transpose());
    const Matrix m = Matrix::Identity(n, n) - pi;
    return symmetrize(m * h * m + blk.S * cross.solve(blk.S.transpose()));
}

Matrix block_oblique_update(const Matrix& h, const BlockSecantPair& blk) {
    require_square_of_dim(h, blk.dim(), "block_oblique_update");
    auto cross = factor_cross(blk, "block_oblique_update");

    const Index n = blk.dim();
    const Matrix m = Matrix::Identity(n, n) - blk.Y * cross.solve(blk.S.transpose());
    return symmetrize(m.transpose() * h * m + blk.S * cross.solve(blk.S.transpose()));
}

}  // namespace projquasi
