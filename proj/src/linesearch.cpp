#include "projquasi/linesearch.hpp"

#include <cmath>

namespace projquasi {

void LineSearchParams::validate() const {
    if (!(0.0 < c1 && c1 < c2 && c2 < 1.0))
        throw std::invalid_argument("LineSearchParams: need 0 < c1 < c2 < 1");
    if (!(alpha0 > 0.0) || !(alpha_max > 0.0))
        throw std::invalid_argument("LineSearchParams: steps must be positive");
    if (max_evals < 2)
        throw std::invalid_argument("LineSearchParams: max_evals too small");
}

namespace {

struct Probe {
    double alpha;
    double f;
    Vector g;       // empty until the gradient is evaluated
    double slope;   // g' d, valid once g is set
};

class WolfeSearch {
public:
    WolfeSearch(const ScalarFn& f, const GradientFn& g, const Vector& x, const Vector& d,
                const LineSearchParams& p)
        : f_(f), g_(g), x_(x), d_(d), p_(p) {}

    LineSearchResult run() {
        p_.validate();
        f0_ = f_(x_);
        Vector g0 = g_(x_);
        slope0_ = g0.dot(d_);
        res_.evals = 2;
        if (!(slope0_ < 0.0))
            throw NotDescentDirection("strong_wolfe: g(x)'d >= 0");

        double a_prev = 0.0;
        double f_prev = f0_;
        double a = std::min(p_.alpha0, p_.alpha_max);
        bool first = true;

        while (res_.evals < p_.max_evals) {
            Probe pr = eval_f(a);
            if (pr.f > f0_ + p_.c1 * a * slope0_ || (!first && pr.f >= f_prev))
                return zoom(a_prev, f_prev, a);
            note_armijo(pr);
            if (res_.evals >= p_.max_evals) break;
            eval_g(pr);
            if (std::abs(pr.slope) <= p_.c2 * std::abs(slope0_))
                return accept(pr, true);
            if (pr.slope >= 0.0)
                return zoom(a, pr.f, a_prev);
            if (a >= p_.alpha_max)
                return finish_with_best();
            a_prev = a;
            f_prev = pr.f;
            a = std::min(2.0 * a, p_.alpha_max);
            first = false;
        }
        return finish_with_best();
    }

private:
    Probe eval_f(double a) {
        Probe pr;
        pr.alpha = a;
        pr.f = f_(x_ + a * d_);
        ++res_.evals;
        return pr;
    }

    void eval_g(Probe& pr) {
        pr.g = g_(x_ + pr.alpha * d_);
        pr.slope = pr.g.dot(d_);
        ++res_.evals;
    }

    void note_armijo(const Probe& pr) {
        if (!have_best_ || pr.f < best_.f) {
            best_ = pr;
            have_best_ = true;
        }
    }

    LineSearchResult accept(const Probe& pr, bool wolfe) {
        res_.alpha = pr.alpha;
        res_.armijo = true;
        res_.wolfe = wolfe;
        res_.f_new = pr.f;
        res_.g_new = pr.g;
        return res_;
    }

    LineSearchResult finish_with_best() {
        if (have_best_) return accept(best_, false);
        return res_;  // armijo = false: nothing acceptable found
    }

    // Bisection zoom on a bracket; lo always satisfies sufficient decrease.
    LineSearchResult zoom(double lo, double f_lo, double hi) {
        while (res_.evals < p_.max_evals) {
            const double a = 0.5 * (lo + hi);
            Probe pr = eval_f(a);
            if (pr.f > f0_ + p_.c1 * a * slope0_ || pr.f >= f_lo) {
                hi = a;
                continue;
            }
            note_armijo(pr);
            if (res_.evals >= p_.max_evals) break;
            eval_g(pr);
            if (std::abs(pr.slope) <= p_.c2 * std::abs(slope0_))
                return accept(pr, true);
            if (pr.slope * (hi - lo) >= 0.0)
                hi = lo;
            lo = a;
            f_lo = pr.f;
        }
        return finish_with_best();
    }

    const ScalarFn& f_;
    const GradientFn& g_;
    const Vector& x_;
    const Vector& d_;
    LineSearchParams p_;
    LineSearchResult res_;
    double f0_ = 0.0;
    double slope0_ = 0.0;
    Probe best_{};
    bool have_best_ = false;
};

}  // namespace

LineSearchResult strong_wolfe(const ScalarFn& f, const GradientFn& g, const Vector& x,
                              const Vector& d, const LineSearchParams& params) {
    return WolfeSearch(f, g, x, d, params).run();
}

LineSearchResult backtracking_armijo(const ScalarFn& f, const GradientFn& g, const Vector& x,
                                     const Vector& d, const LineSearchParams& params) {
    params.validate();
    LineSearchResult res;
    const double f0 = f(x);
    const double slope0 = g(x).dot(d);
    res.evals = 2;
    if (!(slope0 < 0.0))
        throw NotDescentDirection("backtracking_armijo: g(x)'d >= 0");

    double a = std::min(params.alpha0, params.alpha_max);
    while (res.evals < params.max_evals) {
        const double fa = f(x + a * d);
        ++res.evals;
        if (fa <= f0 + params.c1 * a * slope0) {
            res.alpha = a;
            res.armijo = true;
            res.f_new = fa;
            return res;
        }
        a *= 0.5;
    }
    return res;  // budget exhausted, armijo = false
}

}  // namespace projquasi
