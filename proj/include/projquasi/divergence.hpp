#pragma once

#include "projquasi/numcore.hpp"

namespace projquasi {

/// Relative entropy D(p || q) between two zero-mean Gaussians given by their
/// natural parameters (inverse covariances):
///
///   D = 1/2 [ logdet(p_nat) - logdet(q_nat) + trace(q_nat p_nat^{-1}) - n ]
///
/// Negative results above -1e-10 are floating-point noise and clamp to 0.
double gauss_kl(const Matrix& p_nat, const Matrix& q_nat);

/// Directional derivative of M -> log|det M| in direction dm, i.e.
/// trace(M^{-1} dm). Throws SingularMatrix when M is not invertible.
double logdet_dirderiv(const Matrix& m, const Matrix& dm);

}  // namespace projquasi
