#pragma once

#include <vector>

#include "gammainv/branches.hpp"

namespace gammainv::detail {

/// Solver for log_gamma(z) = zeta on branch k. Keeps a precomputed "spine"
/// of solutions along the mid-height line of the strip so that each solve
/// is a short horizontal hop followed by a vertical drop to the target.
class BranchSolver {
public:
    explicit BranchSolver(int k);

    int k() const { return k_; }
    double mid_height() const { return -(k_ + 0.5) * kPi; }

    /// zeta must lie in the closed strip -(k+1) pi <= Im <= -k pi.
    Complex solve(Complex zeta) const;

    /// log_gamma and psi with the branch window enforced (DomainError outside).
    ValueAndDerivative evaluate(Complex z) const;

    const std::vector<PathPoint>& spine() const { return spine_; }

private:
    int k_;
    double spine_step_ = 0.5;
    std::vector<PathPoint> spine_;  // ordered by decreasing Re zeta
};

/// Write-once per-branch solver, safe to call concurrently.
const BranchSolver& branch_solver(int k);

NewtonConfig branch_newton_config();

}  // namespace gammainv::detail
