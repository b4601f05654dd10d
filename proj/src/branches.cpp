#include "gammainv/branches.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "branch_solver.hpp"

namespace gammainv {

BranchIndex::BranchIndex(int k) : k_(k) {
    if (k < -1 || k > kMaxBranch)
        throw DomainError("branch index " + std::to_string(k) + " outside [-1, " + std::to_string(kMaxBranch) +
                          "]");
}

namespace {

void require_nonnegative(BranchIndex k, const char* what) {
    if (k.value() < 0) throw DomainError(std::string(what) + ": requires k >= 0");
}

// Branch of log Gamma^{-1} targeted by g_k at w in the closed upper half plane.
Complex branch_target(int k, Complex w) { return principal_log(w) - Complex(0.0, (k + 1) * kPi); }

// Real x with log|Gamma(x)| = log|w| on (a, b), where log|Gamma| is monotone
// and the bracket straddles the root. Polished by Newton on psi.
double solve_real(double a, double b, double abs_w) {
    const double target = std::log(abs_w);
    auto f = [&](double x) { return std::log(std::abs(gamma(Complex(x, 0.0)).real())) - target; };
    double x = find_root_bracketed(f, a, b, 1e-16);
    for (int iter = 0; iter < 3; ++iter) {
        const double fx = f(x);
        const double next = x - fx / psi(Complex(x, 0.0)).real();
        if (!(next > std::min(a, b) && next < std::max(a, b))) break;
        if (std::abs(f(next)) >= std::abs(fx)) break;
        x = next;
    }
    return x;
}

// Real G_k(w) for real w outside I_k.
double extended_inverse_real(int k, double w, const BranchInterval& interval) {
    const double kf = std::tgamma(k + 1.0);
    const double pole = -static_cast<double>(k);
    const double x_k = cached_critical_point(k).x;
    const double x_next = cached_critical_point(k + 1).x;
    // |Gamma(-k +/- eps)| ~ 1/(k! eps) must exceed |w| at the open end of the bracket
    const double eps = std::min({0.5 * (x_k - pole), 0.5 * (pole - x_next), 0.1 / (kf * std::abs(w))});
    if (eps <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(pole)))
        throw DomainError("extended_inverse: |w| too large to resolve the branch near the pole");
    if (w > interval.hi) return solve_real(x_next, pole - eps, std::abs(w));
    return solve_real(pole + eps, x_k, std::abs(w));
}

}  // namespace

BranchInterval branch_interval(BranchIndex k) {
    require_nonnegative(k, "branch_interval");
    const int kv = k.value();
    const double g_k = cached_critical_point(kv).gamma_x;
    const double g_next = cached_critical_point(kv + 1).gamma_x;
    if (kv % 2 == 1) return {kv, g_k, g_next};
    return {kv, -g_k, -g_next};
}

bool CombDomain::contains(Complex zeta) const {
    for (const Slit& slit : slits) {
        if (zeta.imag() == slit.height && zeta.real() >= slit.start) return false;
    }
    return true;
}

CombDomain comb_domain(int levels) {
    if (levels < 1 || levels > kCriticalCache) throw DomainError("comb_domain: unsupported number of levels");
    CombDomain comb;
    for (int k = 0; k < levels; ++k) {
        comb.slits.push_back({-k * kPi, std::log(std::abs(cached_critical_point(k).gamma_x))});
    }
    return comb;
}

bool in_branch_domain(BranchIndex k, Complex z) {
    if (!(z.imag() > 0.0)) throw DomainError("in_branch_domain: requires Im z > 0");
    const double arg = log_gamma(z).imag();
    return arg > -(k.value() + 1) * kPi && arg < -k.value() * kPi;
}

Complex solve_log_gamma(BranchIndex k, Complex zeta) { return detail::branch_solver(k.value()).solve(zeta); }

Complex inverse_branch(BranchIndex k, Complex w) {
    if (!(w.imag() > 0.0)) throw DomainError("inverse_branch: requires Im w > 0");
    return solve_log_gamma(k, branch_target(k.value(), w));
}

Complex extended_inverse(BranchIndex k, Complex w) {
    require_nonnegative(k, "extended_inverse");
    if (w.imag() > 0.0) return inverse_branch(k, w);
    if (w.imag() < 0.0) return std::conj(inverse_branch(k, std::conj(w)));
    const BranchInterval interval = branch_interval(k);
    if (interval.contains(w.real())) throw DomainError("extended_inverse: w lies on the cut I_k");
    return {extended_inverse_real(k.value(), w.real(), interval), 0.0};
}

Complex principal_inverse(Complex w) {
    const BranchIndex principal(-1);
    if (w.imag() > 0.0) return inverse_branch(principal, w);
    if (w.imag() < 0.0) return std::conj(inverse_branch(principal, std::conj(w)));
    const CriticalPoint& alpha = cached_critical_point(0);
    if (!(w.real() > alpha.gamma_x)) throw DomainError("principal_inverse: w lies on the cut (-inf, Gamma(x_0)]");
    double hi = 2.0;
    while (log_gamma(Complex(hi, 0.0)).real() < std::log(w.real())) hi *= 2.0;
    return {solve_real(alpha.x, hi, w.real()), 0.0};
}

Complex even_inverse(BranchIndex k, Complex w) {
    if (!k.is_even()) throw DomainError("even_inverse: requires even k >= 0");
    return extended_inverse(k, -w);
}

Complex boundary_extension(BranchIndex k, Side side, double t) {
    require_nonnegative(k, "boundary_extension");
    const BranchInterval interval = branch_interval(k);
    const int kv = k.value();
    if (side == Side::plus) {
        if (!(t > 0.0 && t < interval.hi)) throw DomainError("boundary_extension: plus side needs t in (0, hi)");
        return solve_log_gamma(k, Complex(std::log(t), -(kv + 1) * kPi));
    }
    if (!(t < 0.0 && t > interval.lo)) throw DomainError("boundary_extension: minus side needs t in (lo, 0)");
    return solve_log_gamma(k, Complex(std::log(-t), -kv * kPi));
}

}  // namespace gammainv
