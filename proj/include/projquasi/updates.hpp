#pragma once

#include "projquasi/numcore.hpp"

namespace projquasi {

/// Relative tolerance for the curvature condition y's > eps * |y| |s|.
inline constexpr double kCurvatureEps = 1e-10;

struct CurvatureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateDirection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlockCurvatureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankDeficientSketch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Step vector s, gradient difference y and the curvature scalar rho = y's.
struct SecantPair {
    Vector s;
    Vector y;
    double rho;

    SecantPair(Vector step, Vector grad_diff);
    Index dim() const { return s.size(); }
};

/// Sketch matrix S (n x q) and Hessian action Y on its columns. Updates
/// require S'Y symmetric positive definite and Y of full column rank.
struct BlockSecantPair {
    Matrix S;
    Matrix Y;

    BlockSecantPair(Matrix sketch, Matrix hess_action);
    Index dim() const { return S.rows(); }
    Index cols() const { return S.cols(); }
};

/// Direction v defining the oblique projection y v'/(y'v); must not be
/// orthogonal to the pair's y.
struct ObliqueDirection {
    Vector v;
};

/// y's > eps_c * |y| * |s|.
bool curvature_ok(const SecantPair& pair, double eps_c = kCurvatureEps);

/// Classical inverse-Hessian BFGS update
///   H+ = (I - s y'/rho) H (I - y s'/rho) + s s'/rho.
Matrix bfgs_update(const Matrix& h, const SecantPair& pair);

/// Orthogonal-projection variant: with Pi = y y'/(y'y),
///   H+ = (I - Pi) H (I - Pi) + s s'/rho.
/// Damps the previous approximation only off the span of y.
Matrix proj_update(const Matrix& h, const SecantPair& pair);

/// Oblique family: with P = y v'/(y'v),
///   H+ = (I - P)' H (I - P) + s s'/rho.
/// v = s recovers bfgs_update, v = y recovers proj_update.
Matrix oblique_update(const Matrix& h, const SecantPair& pair, const ObliqueDirection& dir);

/// Block update with the orthogonal projector Pi_Y = Y (Y'Y)^{-1} Y':
///   H+ = (I - Pi_Y) H (I - Pi_Y) + S (S'Y)^{-1} S'.
Matrix block_orth_update(const Matrix& h, const BlockSecantPair& blk);

/// Block update with the oblique projector P = Y (S'Y)^{-1} S':
///   H+ = (I - P)' H (I - P) + S (S'Y)^{-1} S'.
/// The q = 1 case reduces to bfgs_update.
Matrix block_oblique_update(const Matrix& h, const BlockSecantPair& blk);

}  // namespace projquasi
