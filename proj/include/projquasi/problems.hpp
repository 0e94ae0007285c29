#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projquasi/numcore.hpp"

namespace projquasi {

struct EmptyBatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownProblem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Hessian action: returns grad^2 f(x) * S for an n x q sketch S.
using HessActionFn = std::function<Matrix(const Vector&, const Matrix&)>;

struct Problem {
    std::string name;
    Index dim = 0;
    std::function<double(const Vector&)> f;
    std::function<Vector(const Vector&)> grad;
    HessActionFn hess_action;  // may be null
    std::optional<Vector> known_minimizer;
};

struct SumComponent {
    std::function<double(const Vector&)> f;
    std::function<Vector(const Vector&)> grad;
    HessActionFn hess_action;
};

/// Empirical average f = (1/N) sum f_i with per-component Hessian actions.
struct SumProblem {
    std::string name;
    Index dim = 0;
    std::vector<SumComponent> components;
    std::optional<Vector> known_minimizer;

    Index count() const { return static_cast<Index>(components.size()); }
    /// Averaged objective as a plain Problem (full-batch Hessian action).
    Problem full() const;
};

/// Averaged Hessian action over a mini-batch:
///   Y = (1/|batch|) sum_{i in batch} grad^2 f_i(x) S.
Matrix subsampled_hess_action(const SumProblem& p, const Vector& x, const Matrix& sketch,
                              std::span<const int> batch);

/// f(x1,x2) = e^{x1-1} + e^{-x2+1} + (x1-x2)^2, a strictly convex function
/// on R^2. The minimizer is computed by a Newton solve at construction.
Problem convex_exp_2d();

/// Generalized Rosenbrock in n dimensions,
///   f(x) = sum_{i<n} [ 100 (x_{i+1} - x_i^2)^2 + (x_i - 1)^2 ],
/// minimized at the all-ones point with f = 0.
Problem gen_rosenbrock(Index n);

/// Strictly convex quadratic f(x) = x'Ax/2 - b'x with seeded SPD A.
Problem random_quadratic(Index n, std::uint64_t seed);

/// N seeded convex quadratic components; the average is again SPD.
SumProblem random_sum_quadratic(Index n, Index count, std::uint64_t seed);

/// Registry lookup for the CLI names: convex-exp-2d | rosenbrock-10 |
/// quadratic | sum-quadratic. dim_hint = 0 picks each problem's default
/// dimension; fixed-dimension problems reject a conflicting hint.
Problem make_problem(const std::string& name, Index dim_hint = 0, std::uint64_t seed = 0);
SumProblem make_sum_problem(const std::string& name, Index dim_hint = 0, std::uint64_t seed = 0);
const std::vector<std::string>& problem_names();
bool problem_is_sum(const std::string& name);

}  // namespace projquasi
