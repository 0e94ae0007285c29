#include "projquasi/problems.hpp"

#include <cmath>

#include "projquasi/random.hpp"

namespace projquasi {

Problem SumProblem::full() const {
    Problem p;
    p.name = name;
    p.dim = dim;
    p.known_minimizer = known_minimizer;
    const auto comps = components;  // value capture keeps the problem self-contained
    const double inv_n = 1.0 / static_cast<double>(comps.size());
    p.f = [comps, inv_n](const Vector& x) {
        double acc = 0.0;
        for (const auto& c : comps) acc += c.f(x);
        return acc * inv_n;
    };
    p.grad = [comps, inv_n](const Vector& x) {
        Vector g = Vector::Zero(x.size());
        for (const auto& c : comps) g += c.grad(x);
        return Vector(g * inv_n);
    };
    p.hess_action = [comps, inv_n](const Vector& x, const Matrix& sk) {
        Matrix y = Matrix::Zero(sk.rows(), sk.cols());
        for (const auto& c : comps) y += c.hess_action(x, sk);
        return Matrix(y * inv_n);
    };
    return p;
}

Matrix subsampled_hess_action(const SumProblem& p, const Vector& x, const Matrix& sketch,
                              std::span<const int> batch) {
    if (batch.empty())
        throw EmptyBatch("subsampled_hess_action: batch is empty");
    if (x.size() != p.dim || sketch.rows() != p.dim)
        throw DimensionMismatch("subsampled_hess_action: dimension mismatch");
    Matrix y = Matrix::Zero(sketch.rows(), sketch.cols());
    for (int idx : batch) {
        if (idx < 0 || idx >= p.count())
            throw std::out_of_range("subsampled_hess_action: component index out of range");
        y += p.components[static_cast<std::size_t>(idx)].hess_action(x, sketch);
    }
    return y / static_cast<double>(batch.size());
}

Problem convex_exp_2d() {
    Problem p;
    p.name = "convex-exp-2d";
    p.dim = 2;
    p.f = [](const Vector& x) {
        return std::exp(x[0] - 1.0) + std::exp(-x[1] + 1.0) + (x[0] - x[1]) * (x[0] - x[1]);
    };
    p.grad = [](const Vector& x) {
        Vector g(2);
        g[0] = std::exp(x[0] - 1.0) + 2.0 * (x[0] - x[1]);
        g[1] = -std::exp(-x[1] + 1.0) - 2.0 * (x[0] - x[1]);
        return g;
    };
    auto hess = [](const Vector& x) {
        Matrix h(2, 2);
        h(0, 0) = std::exp(x[0] - 1.0) + 2.0;
        h(0, 1) = h(1, 0) = -2.0;
        h(1, 1) = std::exp(-x[1] + 1.0) + 2.0;
        return h;
    };
    p.hess_action = [hess](const Vector& x, const Matrix& sk) { return Matrix(hess(x) * sk); };

    // Newton solve for the minimizer; the function is strictly convex.
    Vector x = Vector::Ones(2);
    for (int it = 0; it < 200; ++it) {
        Vector g = p.grad(x);
        if (g.norm() < 1e-14) break;
        x -= hess(x).ldlt().solve(g);
    }
    p.known_minimizer = x;
    return p;
}

Problem gen_rosenbrock(Index n) {
    if (n < 2)
        throw std::invalid_argument("gen_rosenbrock: need n >= 2");
    Problem p;
    p.name = "rosenbrock-" + std::to_string(n);
    p.dim = n;
    p.f = [n](const Vector& x) {
        double acc = 0.0;
        for (Index i = 0; i + 1 < n; ++i) {
            const double a = x[i + 1] - x[i] * x[i];
            const double b = x[i] - 1.0;
            acc += 100.0 * a * a + b * b;
        }
        return acc;
    };
    p.grad = [n](const Vector& x) {
        Vector g = Vector::Zero(n);
        for (Index i = 0; i + 1 < n; ++i) {
            const double a = x[i + 1] - x[i] * x[i];
            g[i] += -400.0 * x[i] * a + 2.0 * (x[i] - 1.0);
            g[i + 1] += 200.0 * a;
        }
        return g;
    };
    p.hess_action = [n](const Vector& x, const Matrix& sk) {
        // tridiagonal Hessian applied column by column
        Matrix h = Matrix::Zero(n, n);
        for (Index i = 0; i + 1 < n; ++i) {
            h(i, i) += 1200.0 * x[i] * x[i] - 400.0 * x[i + 1] + 2.0;
            h(i, i + 1) += -400.0 * x[i];
            h(i + 1, i) += -400.0 * x[i];
            h(i + 1, i + 1) += 200.0;
        }
        return Matrix(h * sk);
    };
    p.known_minimizer = Vector::Ones(n);
    return p;
}

namespace {

Problem quadratic_from(Matrix a, Vector b, std::string name) {
    Problem p;
    p.name = std::move(name);
    p.dim = a.rows();
    p.known_minimizer = Vector(a.ldlt().solve(b));
    p.f = [a, b](const Vector& x) { return 0.5 * x.dot(a * x) - b.dot(x); };
    p.grad = [a, b](const Vector& x) { return Vector(a * x - b); };
    p.hess_action = [a](const Vector&, const Matrix& sk) { return Matrix(a * sk); };
    return p;
}

}  // namespace

Problem random_quadratic(Index n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_quadratic: need n >= 1");
    Rng rng(seed);
    Matrix a = random_spd(n, rng, 0.5, 5.0);
    Vector b = random_vector(n, rng);
    return quadratic_from(std::move(a), std::move(b), "quadratic");
}

SumProblem random_sum_quadratic(Index n, Index count, std::uint64_t seed) {
    if (n < 1 || count < 1)
        throw std::invalid_argument("random_sum_quadratic: need n >= 1, N >= 1");
    Rng rng(seed);
    SumProblem p;
    p.name = "sum-quadratic";
    p.dim = n;
    Matrix a_sum = Matrix::Zero(n, n);
    Vector b_sum = Vector::Zero(n);
    for (Index i = 0; i < count; ++i) {
        Matrix a = random_spd(n, rng, 0.2, 5.0);
        Vector b = random_vector(n, rng);
        a_sum += a;
        b_sum += b;
        SumComponent c;
        c.f = [a, b](const Vector& x) { return 0.5 * x.dot(a * x) - b.dot(x); };
        c.grad = [a, b](const Vector& x) { return Vector(a * x - b); };
        c.hess_action = [a](const Vector&, const Matrix& sk) { return Matrix(a * sk); };
        p.components.push_back(std::move(c));
    }
    const double inv_n = 1.0 / static_cast<double>(count);
    p.known_minimizer = Vector((a_sum * inv_n).ldlt().solve(b_sum * inv_n));
    return p;
}

namespace {

const std::vector<std::string> kProblemNames = {
    "convex-exp-2d", "rosenbrock-10", "quadratic", "sum-quadratic"};

constexpr Index kQuadraticDefaultDim = 5;
constexpr Index kSumQuadraticDefaultDim = 8;
constexpr Index kSumQuadraticComponents = 32;

[[noreturn]] void throw_unknown(const std::string& name) {
    std::string msg = "unknown problem '" + name + "'; problem registry: ";
    for (std::size_t i = 0; i < kProblemNames.size(); ++i) {
        if (i) msg += ", ";
        msg += kProblemNames[i];
    }
    throw UnknownProblem(msg);
}

void check_fixed_dim(const std::string& name, Index dim_hint, Index dim) {
    if (dim_hint != 0 && dim_hint != dim)
        throw DimensionMismatch("problem '" + name + "' is " + std::to_string(dim) +
                                "-dimensional, got x0 of dimension " + std::to_string(dim_hint));
}

}  // namespace

Problem make_problem(const std::string& name, Index dim_hint, std::uint64_t seed) {
    if (name == "convex-exp-2d") {
        check_fixed_dim(name, dim_hint, 2);
        return convex_exp_2d();
    }
    if (name == "rosenbrock-10") {
        check_fixed_dim(name, dim_hint, 10);
        return gen_rosenbrock(10);
    }
    if (name == "quadratic")
        return random_quadratic(dim_hint > 0 ? dim_hint : kQuadraticDefaultDim, seed);
    if (name == "sum-quadratic")
        return make_sum_problem(name, dim_hint, seed).full();
    throw_unknown(name);
}

SumProblem make_sum_problem(const std::string& name, Index dim_hint, std::uint64_t seed) {
    if (name == "sum-quadratic")
        return random_sum_quadratic(dim_hint > 0 ? dim_hint : kSumQuadraticDefaultDim,
                                    kSumQuadraticComponents, seed);
    throw_unknown(name);
}

const std::vector<std::string>& problem_names() {
    return kProblemNames;
}

bool problem_is_sum(const std::string& name) {
    return name == "sum-quadratic";
}

}  // namespace projquasi
