#include "projquasi/driver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "projquasi/random.hpp"

namespace projquasi {

UpdateStrategy UpdateStrategy::bfgs() {
    return {};
}

UpdateStrategy UpdateStrategy::ortho_proj() {
    UpdateStrategy s;
    s.kind = Kind::OrthoProj;
    return s;
}

UpdateStrategy UpdateStrategy::oblique_s() {
    UpdateStrategy s;
    s.kind = Kind::Oblique;
    s.v_choice = VChoice::UseS;
    return s;
}

UpdateStrategy UpdateStrategy::oblique_y() {
    UpdateStrategy s;
    s.kind = Kind::Oblique;
    s.v_choice = VChoice::UseY;
    return s;
}

UpdateStrategy UpdateStrategy::oblique_custom(std::function<Vector(const SecantPair&)> supplier) {
    UpdateStrategy s;
    s.kind = Kind::Oblique;
    s.v_choice = VChoice::Custom;
    s.v_supplier = std::move(supplier);
    return s;
}

UpdateStrategy UpdateStrategy::block_orth(Index q, std::optional<int> batch_size,
                                          SketchPolicy sketch) {
    UpdateStrategy s;
    s.kind = Kind::BlockOrth;
    s.q = q;
    s.batch_size = batch_size;
    s.sketch = sketch;
    return s;
}

UpdateStrategy UpdateStrategy::block_oblique(Index q, std::optional<int> batch_size,
                                             SketchPolicy sketch) {
    UpdateStrategy s;
    s.kind = Kind::BlockOblique;
    s.q = q;
    s.batch_size = batch_size;
    s.sketch = sketch;
    return s;
}

Vector oblique_direction_for(const UpdateStrategy& strategy, const SecantPair& pair) {
    switch (strategy.kind) {
        case UpdateStrategy::Kind::Bfgs:
            return pair.s;
        case UpdateStrategy::Kind::OrthoProj:
            return pair.y;
        case UpdateStrategy::Kind::Oblique:
            switch (strategy.v_choice) {
                case UpdateStrategy::VChoice::UseS:
                    return pair.s;
                case UpdateStrategy::VChoice::UseY:
                    return pair.y;
                case UpdateStrategy::VChoice::Custom:
                    return strategy.v_supplier(pair);
            }
            break;
        default:
            break;
    }
    throw std::invalid_argument("oblique_direction_for: block strategies have no vector direction");
}

void OptimizerConfig::validate() const {
    if (max_iters < 1)
        throw std::invalid_argument("OptimizerConfig: max_iters must be >= 1");
    if (!(grad_tol > 0.0))
        throw std::invalid_argument("OptimizerConfig: grad_tol must be positive");
    ls.validate();
    if (memory && *memory < 1)
        throw std::invalid_argument("OptimizerConfig: memory must be >= 1 when set");
    if (strategy.is_block()) {
        if (strategy.q < 1)
            throw std::invalid_argument("OptimizerConfig: block sketch needs q >= 1");
        if (strategy.batch_size && *strategy.batch_size < 1)
            throw EmptyBatch("OptimizerConfig: batch size must be >= 1");
        if (memory)
            throw std::invalid_argument("OptimizerConfig: limited memory is vector-mode only");
    }
    if (strategy.kind == UpdateStrategy::Kind::Oblique &&
        strategy.v_choice == UpdateStrategy::VChoice::Custom && !strategy.v_supplier)
        throw std::invalid_argument("OptimizerConfig: custom oblique strategy needs a supplier");
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::Converged:
            return "Converged";
        case Termination::MaxIters:
            return "MaxIters";
        case Termination::LineSearchFailure:
            return "LineSearchFailure";
    }
    return "?";
}

Vector lm_apply(std::span<const SecantPair> pairs, const UpdateStrategy& strategy, const Vector& g,
                bool gamma_scaling) {
    if (strategy.is_block())
        throw std::invalid_argument("lm_apply: block strategies are not limited-memory");
    const auto m = static_cast<Index>(pairs.size());

    double gamma = 1.0;
    if (gamma_scaling && m > 0) {
        const SecantPair& newest = pairs.back();
        gamma = newest.rho / newest.y.squaredNorm();
    }

    std::vector<double> rank_one(static_cast<std::size_t>(m));
    std::vector<Vector> v(static_cast<std::size_t>(m));
    std::vector<double> vy(static_cast<std::size_t>(m));

    // descending pass: w picks up the projected argument of each level
    Vector w = g;
    for (Index i = m - 1; i >= 0; --i) {
        const auto ui = static_cast<std::size_t>(i);
        const SecantPair& pr = pairs[ui];
        if (!(pr.rho > 0.0))
            throw CurvatureViolation("lm_apply: stored pair violates curvature");
        v[ui] = oblique_direction_for(strategy, pr);
        vy[ui] = pr.y.dot(v[ui]);
        if (vy[ui] == 0.0)
            throw DegenerateDirection("lm_apply: stored direction orthogonal to y");
        rank_one[ui] = pr.s.dot(w);
        w -= pr.y * (v[ui].dot(w) / vy[ui]);
    }

    // ascending pass applies the transposed projections and rank-one terms
    Vector r = gamma * w;
    for (Index i = 0; i < m; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const SecantPair& pr = pairs[ui];
        r -= v[ui] * (pr.y.dot(r) / vy[ui]);
        r += pr.s * (rank_one[ui] / pr.rho);
    }
    return r;
}

namespace {

Matrix apply_vector_update(const Matrix& h, const SecantPair& pair, const UpdateStrategy& st) {
    switch (st.kind) {
        case UpdateStrategy::Kind::Bfgs:
            return bfgs_update(h, pair);
        case UpdateStrategy::Kind::OrthoProj:
            return proj_update(h, pair);
        case UpdateStrategy::Kind::Oblique:
            return oblique_update(h, pair, ObliqueDirection{oblique_direction_for(st, pair)});
        default:
            throw std::invalid_argument("minimize: block strategy requires minimize_block");
    }
}

// Modified Gram-Schmidt, dropping numerically dependent columns.
Matrix orthonormalize(const Matrix& cols) {
    Matrix q(cols.rows(), cols.cols());
    Index r = 0;
    for (Index j = 0; j < cols.cols(); ++j) {
        Vector w = cols.col(j);
        const double orig = w.norm();
        if (orig == 0.0) continue;
        for (int sweep = 0; sweep < 2; ++sweep)
            for (Index i = 0; i < r; ++i) w -= q.col(i) * q.col(i).dot(w);
        if (w.norm() > 1e-10 * orig) q.col(r++) = w / w.norm();
    }
    return q.leftCols(r);
}

class RunState {
public:
    RunState(const Problem& p, const Vector& x0, const OptimizerConfig& cfg)
        : p_(p), cfg_(cfg), x_(x0), rng_(cfg.seed) {
        if (x0.size() != p.dim)
            throw DimensionMismatch("minimize: x0 dimension does not match the problem");
        if (cfg_.ls_kind == LineSearchKind::ExactQuadratic && !p_.hess_action)
            throw std::invalid_argument("minimize: exact line search needs a Hessian action");
        g_ = p_.grad(x_);
        fx_ = p_.f(x_);
        if (!cfg_.memory) h_ = Matrix::Identity(p_.dim, p_.dim);
        hist_.records.push_back({0, x_, fx_, g_.norm(), 0.0, false});
    }

    RunHistory run(const SumProblem* sum) {
        Termination term = Termination::MaxIters;
        for (int k = 1; k <= cfg_.max_iters; ++k) {
            if (g_.norm() < cfg_.grad_tol) {
                term = Termination::Converged;
                break;
            }
            const Vector d = direction();
            LineSearchResult ls;
            try {
                ls = search(d);
            } catch (const NotDescentDirection&) {
                term = Termination::LineSearchFailure;
                break;
            }
            if (!ls.armijo) {
                term = Termination::LineSearchFailure;
                break;
            }
            const Vector s = ls.alpha * d;
            const Vector xn = x_ + s;
            const Vector gn = ls.g_new.size() ? ls.g_new : p_.grad(xn);
            bool skipped = true;
            if (sum)
                skipped = block_update(s, xn, *sum);
            else
                skipped = vector_update(SecantPair(s, gn - g_));
            hist_.records.push_back({k, xn, ls.f_new, gn.norm(), ls.alpha, skipped});
            x_ = xn;
            g_ = gn;
            fx_ = ls.f_new;
        }
        if (term == Termination::MaxIters && g_.norm() < cfg_.grad_tol)
            term = Termination::Converged;
        hist_.termination = term;
        hist_.final_h = final_h();
        return std::move(hist_);
    }

private:
    Vector direction() const {
        if (cfg_.memory)
            return -lm_apply(mem_, cfg_.strategy, g_, cfg_.lm_gamma_scaling);
        return -(h_ * g_);
    }

    LineSearchResult search(const Vector& d) {
        switch (cfg_.ls_kind) {
            case LineSearchKind::StrongWolfe:
                return strong_wolfe(p_.f, p_.grad, x_, d, cfg_.ls);
            case LineSearchKind::Armijo:
                return backtracking_armijo(p_.f, p_.grad, x_, d, cfg_.ls);
            case LineSearchKind::ExactQuadratic:
                break;
        }
        // exact minimizer along the ray for quadratic objectives
        const double slope = g_.dot(d);
        if (!(slope < 0.0))
            throw NotDescentDirection("exact line search: not a descent direction");
        const Vector hd = p_.hess_action(x_, d);
        const double curv = d.dot(hd);
        LineSearchResult res;
        if (!(curv > 0.0)) return res;  // armijo = false -> line search failure
        res.alpha = -slope / curv;
        res.armijo = res.wolfe = true;
        const Vector xn = x_ + res.alpha * d;
        res.f_new = p_.f(xn);
        res.g_new = p_.grad(xn);
        res.evals = 2;
        return res;
    }

    bool vector_update(const SecantPair& pair) {
        if (!curvature_ok(pair)) {
            ++hist_.updates_skipped;
            return true;
        }
        if (cfg_.memory) {
            mem_.push_back(pair);
            if (static_cast<int>(mem_.size()) > *cfg_.memory) mem_.erase(mem_.begin());
            const Vector hy = lm_apply(mem_, cfg_.strategy, pair.y, cfg_.lm_gamma_scaling);
            note_residual((hy - pair.s).norm() / (hy.norm() + pair.s.norm()));
        } else {
            try {
                h_ = apply_vector_update(h_, pair, cfg_.strategy);
            } catch (const DegenerateDirection&) {
                ++hist_.updates_skipped;
                return true;
            }
            note_residual((h_ * pair.y - pair.s).norm() /
                          (h_.norm() * pair.y.norm() + pair.s.norm()));
        }
        ++hist_.updates_applied;
        return false;
    }

    bool block_update(const Vector& s, const Vector& xn, const SumProblem& sum) {
        recent_steps_.push_front(s);
        if (static_cast<Index>(recent_steps_.size()) > cfg_.strategy.q) recent_steps_.pop_back();

        const Matrix sk = sketch();
        if (sk.cols() == 0) {
            ++hist_.updates_skipped;
            return true;
        }
        const Matrix y = subsampled_hess_action(sum, xn, sk, draw_batch(sum.count()));
        try {
            const BlockSecantPair blk(sk, y);
            if (cfg_.strategy.kind == UpdateStrategy::Kind::BlockOrth)
                h_ = block_orth_update(h_, blk);
            else
                h_ = block_oblique_update(h_, blk);
            note_residual((h_ * blk.Y - blk.S).norm() /
                          (h_.norm() * blk.Y.norm() + blk.S.norm()));
        } catch (const BlockCurvatureViolation&) {
            ++hist_.updates_skipped;
            return true;
        } catch (const RankDeficientSketch&) {
            ++hist_.updates_skipped;
            return true;
        }
        ++hist_.updates_applied;
        return false;
    }

    Matrix sketch() {
        const Index n = p_.dim;
        const Index q = std::min<Index>(cfg_.strategy.q, n);
        switch (cfg_.strategy.sketch) {
            case SketchPolicy::PrevSteps: {
                Matrix cols(n, static_cast<Index>(recent_steps_.size()));
                for (Index j = 0; j < cols.cols(); ++j)
                    cols.col(j) = recent_steps_[static_cast<std::size_t>(j)];
                return orthonormalize(cols);
            }
            case SketchPolicy::Gaussian:
                return orthonormalize(random_matrix(n, q, rng_));
            case SketchPolicy::Coordinate: {
                Matrix cols = Matrix::Zero(n, q);
                for (Index j = 0; j < q; ++j) {
                    cols(coord_cursor_, j) = 1.0;
                    coord_cursor_ = (coord_cursor_ + 1) % n;
                }
                return cols;
            }
        }
        return Matrix(n, 0);
    }

    std::vector<int> draw_batch(Index count) {
        std::vector<int> all(static_cast<std::size_t>(count));
        std::iota(all.begin(), all.end(), 0);
        if (!cfg_.strategy.batch_size || *cfg_.strategy.batch_size >= count) return all;
        std::vector<int> picked;
        picked.reserve(static_cast<std::size_t>(*cfg_.strategy.batch_size));
        std::sample(all.begin(), all.end(), std::back_inserter(picked), *cfg_.strategy.batch_size,
                    rng_);
        return picked;
    }

    void note_residual(double r) {
        hist_.max_secant_residual = std::max(hist_.max_secant_residual, r);
    }

    Matrix final_h() const {
        if (!cfg_.memory) return h_;
        const Index n = p_.dim;
        Matrix h(n, n);
        for (Index j = 0; j < n; ++j)
            h.col(j) = lm_apply(mem_, cfg_.strategy, Vector(Matrix::Identity(n, n).col(j)),
                                cfg_.lm_gamma_scaling);
        return symmetrize(h);
    }

    const Problem& p_;
    const OptimizerConfig& cfg_;
    Vector x_;
    Vector g_;
    double fx_ = 0.0;
    Matrix h_;
    std::vector<SecantPair> mem_;
    std::deque<Vector> recent_steps_;
    Index coord_cursor_ = 0;
    Rng rng_;
    RunHistory hist_;
};

}  // namespace

RunHistory minimize(const Problem& p, const Vector& x0, const OptimizerConfig& cfg) {
    cfg.validate();
    if (cfg.strategy.is_block())
        throw std::invalid_argument("minimize: block strategy requires minimize_block");
    return RunState(p, x0, cfg).run(nullptr);
}

RunHistory minimize_block(const SumProblem& p, const Vector& x0, const OptimizerConfig& cfg) {
    cfg.validate();
    if (!cfg.strategy.is_block())
        throw std::invalid_argument("minimize_block: strategy is not a block strategy");
    if (cfg.strategy.q > p.dim)
        throw std::invalid_argument("minimize_block: q exceeds the problem dimension");
    const Problem full = p.full();
    return RunState(full, x0, cfg).run(&p);
}

}  // namespace projquasi
