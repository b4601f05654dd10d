#include "branch_solver.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace gammainv::detail {

namespace {

constexpr double kSpineTop = 30.0;      // cap on Re zeta at the top of the spine
constexpr double kSpineBottom = -90.0;  // Re zeta at the bottom of the spine
constexpr double kWindowSlack = 0.3;
constexpr double kMaxStep = 0.5;

double factorial(int k) {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return f;
}

}  // namespace

NewtonConfig branch_newton_config() {
    NewtonConfig cfg;
    cfg.max_iter = 60;
    cfg.residual_tol = 1e-15;
    return cfg;
}

ValueAndDerivative BranchSolver::evaluate(Complex z) const {
    if (z.imag() < -1e-9) throw DomainError("branch solver: iterate left the closed upper half plane");
    const Complex value = log_gamma(z);
    const double im = value.imag();
    if (im < -(k_ + 1) * kPi - kWindowSlack || im > -k_ * kPi + kWindowSlack)
        throw DomainError("branch solver: iterate left the branch window");
    return {value, psi(z)};
}

BranchSolver::BranchSolver(int k) : k_(k) {
    const NewtonConfig cfg = branch_newton_config();
    const HolomorphicMap f = [this](Complex z) { return evaluate(z); };
    PathPoint top;
    if (k_ == -1) {
        // real anchor (Gamma(n), n), lifted to the mid-height line
        int n = 2;
        while (log_gamma(Complex(n, 0.0)).real() < kSpineTop) ++n;
        const PathPoint anchor{log_gamma(Complex(n, 0.0)), Complex(n, 0.0)};
        const Complex lifted = anchor.w + Complex(0.0, mid_height());
        top = {lifted, path_continuation(f, anchor, std::span(&lifted, 1), cfg, {}, kMaxStep)};
    } else {
        // Laurent seed near the pole -k: Gamma(z) ~ (-1)^k / (k! (z + k)) with
        // Gamma(z) = (-1)^{k+1} w gives z = -k - 1/(k! w), here at w = iR.
        // R keeps |z + k| well above the rounding of z.
        const double kf = factorial(k_);
        const double offset = 1e-4 * std::max(1, k_);
        const double log_r = std::min(kSpineTop, -std::log(kf * offset));
        const Complex w = Complex(0.0, std::exp(log_r));
        const Complex seed = Complex(-k_, 0.0) - 1.0 / (kf * w);
        const Complex zeta = Complex(log_r, mid_height());
        top = {zeta, newton_solve(f, seed, zeta, cfg)};
    }
    spine_.push_back(top);
    const double top_re = top.w.real();
    for (int j = 1;; ++j) {
        const double re = top_re - j * spine_step_;
        if (re < kSpineBottom) break;
        const Complex next = Complex(re, mid_height());
        const Complex z = path_continuation(f, spine_.back(), std::span(&next, 1), cfg, {}, kMaxStep);
        spine_.push_back({next, z});
    }
}

Complex BranchSolver::solve(Complex zeta) const {
    const double tol = 1e-12;
    if (zeta.imag() < -(k_ + 1) * kPi - tol || zeta.imag() > -k_ * kPi + tol)
        throw DomainError("branch solver: target outside the branch strip");
    const double top_re = spine_.front().w.real();
    long idx = std::lround((top_re - zeta.real()) / spine_step_);
    idx = std::clamp<long>(idx, 0, static_cast<long>(spine_.size()) - 1);
    const PathPoint& start = spine_[static_cast<std::size_t>(idx)];
    std::array<Complex, 2> vertices = {Complex(zeta.real(), mid_height()), zeta};
    const HolomorphicMap f = [this](Complex z) { return evaluate(z); };
    return path_continuation(f, start, vertices, branch_newton_config(), {}, kMaxStep);
}

const BranchSolver& branch_solver(int k) {
    constexpr int kCount = kMaxBranch + 2;  // k = -1 .. kMaxBranch
    if (k < -1 || k > kMaxBranch) throw DomainError("branch_solver: branch index out of range");
    static std::array<std::unique_ptr<BranchSolver>, kCount> solvers;
    static std::array<std::once_flag, kCount> flags;
    const auto slot = static_cast<std::size_t>(k + 1);
    std::call_once(flags[slot], [&] { solvers[slot] = std::make_unique<BranchSolver>(k); });
    return *solvers[slot];
}

}  // namespace gammainv::detail
