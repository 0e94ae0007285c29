#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "projquasi/linesearch.hpp"
#include "projquasi/problems.hpp"
#include "projquasi/updates.hpp"

namespace projquasi {

enum class SketchPolicy { PrevSteps, Gaussian, Coordinate };

enum class LineSearchKind { StrongWolfe, Armijo, ExactQuadratic };

/// Which inverse-Hessian update the iteration applies. Block strategies need
/// a SumProblem (minimize_block); the others run on any Problem.
struct UpdateStrategy {
    enum class Kind { Bfgs, OrthoProj, Oblique, BlockOrth, BlockOblique };
    enum class VChoice { UseS, UseY, Custom };

    Kind kind = Kind::Bfgs;
    VChoice v_choice = VChoice::UseS;                   // oblique family only
    std::function<Vector(const SecantPair&)> v_supplier;  // VChoice::Custom
    Index q = 1;                                        // sketch columns (block)
    std::optional<int> batch_size;                      // nullopt = full batch
    SketchPolicy sketch = SketchPolicy::PrevSteps;

    bool is_block() const { return kind == Kind::BlockOrth || kind == Kind::BlockOblique; }

    static UpdateStrategy bfgs();
    static UpdateStrategy ortho_proj();
    static UpdateStrategy oblique_s();
    static UpdateStrategy oblique_y();
    static UpdateStrategy oblique_custom(std::function<Vector(const SecantPair&)> supplier);
    static UpdateStrategy block_orth(Index q, std::optional<int> batch_size = std::nullopt,
                                     SketchPolicy sketch = SketchPolicy::PrevSteps);
    static UpdateStrategy block_oblique(Index q, std::optional<int> batch_size = std::nullopt,
                                        SketchPolicy sketch = SketchPolicy::PrevSteps);
};

/// The oblique direction a strategy uses for the pair: s for BFGS, y for the
/// orthogonal variant, the configured choice for the oblique family.
Vector oblique_direction_for(const UpdateStrategy& strategy, const SecantPair& pair);

struct OptimizerConfig {
    int max_iters = 100;
    double grad_tol = 1e-8;
    UpdateStrategy strategy{};
    LineSearchParams ls{};
    LineSearchKind ls_kind = LineSearchKind::StrongWolfe;
    std::optional<int> memory;     // limited-memory pair count m
    bool lm_gamma_scaling = true;  // H0 = (s'y / y'y) I instead of I
    std::uint64_t seed = 0;

    void validate() const;
};

struct IterationRecord {
    int k = 0;
    Vector x;
    double f = 0.0;
    double grad_norm = 0.0;
    double alpha = 0.0;
    bool update_skipped = false;
};

enum class Termination { Converged, MaxIters, LineSearchFailure };

std::string to_string(Termination t);

struct RunHistory {
    std::vector<IterationRecord> records;
    Termination termination = Termination::MaxIters;
    Matrix final_h;
    double max_secant_residual = 0.0;  // over applied updates, relative
    int updates_applied = 0;
    int updates_skipped = 0;

    const IterationRecord& last() const { return records.back(); }
};

/// Quasi-Newton loop: H0 = I, d = -H g, Wolfe step, secant update when the
/// curvature condition holds (the update is skipped otherwise, never damped).
RunHistory minimize(const Problem& p, const Vector& x0, const OptimizerConfig& cfg);

/// Block variant: per iteration draws a seeded mini-batch, builds the sketch
/// S_k, computes Y_k by the sub-sampled Hessian action and applies the block
/// update when S'Y is SPD. Steps always use the full averaged gradient.
RunHistory minimize_block(const SumProblem& p, const Vector& x0, const OptimizerConfig& cfg);

/// Applies the limited-memory reconstruction of H to g: the strategy's update
/// is replayed over the stored pairs starting from H0 = gamma I with
/// gamma = s'y/y'y of the newest pair (1 when gamma_scaling is off or no
/// pairs are stored). Matches the dense H exactly when all pairs are kept
/// and gamma = 1.
Vector lm_apply(std::span<const SecantPair> pairs, const UpdateStrategy& strategy, const Vector& g,
                bool gamma_scaling = false);

}  // namespace projquasi
