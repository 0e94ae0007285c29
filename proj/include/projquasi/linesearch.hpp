#pragma once

#include <functional>

#include "projquasi/numcore.hpp"

namespace projquasi {

struct NotDescentDirection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using ScalarFn = std::function<double(const Vector&)>;
using GradientFn = std::function<Vector(const Vector&)>;

struct LineSearchParams {
    double c1 = 1e-4;       // sufficient-decrease constant
    double c2 = 0.9;        // curvature constant, c1 < c2 < 1
    double alpha0 = 1.0;    // first trial step
    double alpha_max = 1e6;
    int max_evals = 60;     // combined f/grad evaluation budget

    void validate() const;
};

struct LineSearchResult {
    double alpha = 0.0;
    int evals = 0;
    bool armijo = false;  // sufficient decrease holds at alpha
    bool wolfe = false;   // strong curvature condition holds as well
    double f_new = 0.0;   // f(x + alpha d), valid when armijo
    Vector g_new;         // gradient at x + alpha d; empty if never evaluated
};

/// Strong-Wolfe search (bracket + bisection zoom). Returns the first step
/// satisfying both conditions, or the best sufficient-decrease step found
/// when the curvature condition is unattainable within the budget (flagged
/// by wolfe = false). armijo = false means no acceptable step was found.
/// Throws NotDescentDirection when g(x)'d >= 0.
LineSearchResult strong_wolfe(const ScalarFn& f, const GradientFn& g, const Vector& x,
                              const Vector& d, const LineSearchParams& params = {});

/// Largest step in {alpha0 * 0.5^j} satisfying the Armijo condition.
LineSearchResult backtracking_armijo(const ScalarFn& f, const GradientFn& g, const Vector& x,
                                     const Vector& d, const LineSearchParams& params = {});

}  // namespace projquasi
