#include "projquasi/random.hpp"

namespace projquasi {

Vector random_vector(Index n, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = gauss(rng);
    return v;
}

Vector random_unit_vector(Index n, Rng& rng) {
    Vector v = random_vector(n, rng);
    double nrm = v.norm();
    while (nrm < 1e-12) {
        v = random_vector(n, rng);
        nrm = v.norm();
    }
    return v / nrm;
}

Matrix random_matrix(Index rows, Index cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) m(i, j) = gauss(rng);
    return m;
}

Matrix random_symmetric(Index n, Rng& rng) {
    return symmetrize(random_matrix(n, n, rng));
}

Matrix random_orthogonal(Index n, Rng& rng) {
    Matrix g = random_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    // fix signs so the distribution does not depend on QR conventions
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return q;
}

Matrix random_spd(Index n, Rng& rng, double lambda_min, double lambda_max) {
    std::uniform_real_distribution<double> unif(lambda_min, lambda_max);
    Matrix q = random_orthogonal(n, rng);
    Vector lam(n);
    for (Index i = 0; i < n; ++i) lam[i] = unif(rng);
    return symmetrize(q * lam.asDiagonal() * q.transpose());
}

}  // namespace projquasi
