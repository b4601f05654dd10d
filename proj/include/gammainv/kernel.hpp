#pragma once

// Shared numerical machinery: complex scalars, the principal logarithm,
// damped Newton with path continuation, a bracketing real root finder and
// adaptive Gauss-Kronrod quadrature with endpoint substitutions.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gammainv {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContinuationError : ConvergenceError {
    using ConvergenceError::ConvergenceError;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Principal logarithm with Im in (-pi, pi]. A signed zero imaginary part is
/// treated as +0, so log(-1) = i*pi regardless of the sign of zero.
Complex principal_log(Complex z);

struct NewtonConfig {
    int max_iter = 60;
    double residual_tol = 1e-12;
    double step_shrink = 0.5;
    int max_shrinks = 8;
    int max_path_segments = 4096;

    void validate() const;
};

/// f(z) together with f'(z).
using ValueAndDerivative = std::pair<Complex, Complex>;
using HolomorphicMap = std::function<ValueAndDerivative(Complex)>;
using DomainGuard = std::function<bool(Complex)>;

/// Damped Newton for f(z) = target. The tolerance is relative to
/// max(1, |target|). Throws ConvergenceError if the residual cannot be
/// reduced (after max_shrinks step reductions) or max_iter is reached, and
/// DomainError if the seed violates the guard. Evaluation failures of f
/// (DomainError) at a trial point count as guard violations.
Complex newton_solve(const HolomorphicMap& f, Complex seed, Complex target, const NewtonConfig& cfg,
                     const DomainGuard& guard = {});

struct PathPoint {
    Complex w;
    Complex z;
};

/// Tracks the solution of f(z) = w while w moves along the polyline
/// known.w -> vertices[0] -> ... -> vertices.back(). Each step is solved by
/// newton_solve from an Euler predictor; failed steps are halved until the
/// segment budget cfg.max_path_segments is exhausted (ContinuationError).
/// max_step bounds |dw| of a single step. If `visit` is set it receives every
/// accepted point.
Complex path_continuation(const HolomorphicMap& f, PathPoint known, std::span<const Complex> vertices,
                          const NewtonConfig& cfg, const DomainGuard& guard = {},
                          double max_step = std::numeric_limits<double>::infinity(),
                          const std::function<void(const PathPoint&)>& visit = {});

/// Root of a continuous f with f(lo) and f(hi) of opposite sign (Illinois
/// regula falsi with bisection safeguard). Throws DomainError if the bracket
/// does not straddle a sign change.
double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double xtol = 1e-15, int max_iter = 300);

enum class EndpointSubstitution { none, sqrt, log };
enum class SingularEnd { lower, upper };

struct QuadratureConfig {
    double abs_tol = 1e-9;
    int max_subdivisions = 2000;
    EndpointSubstitution endpoint_substitution = EndpointSubstitution::none;
    SingularEnd singular_end = SingularEnd::lower;
    // log substitution t = a + (b-a) e^{-u} is truncated at u = log_cutoff
    double log_cutoff = 40.0;

    void validate() const;
};

namespace detail {

// 15-point Kronrod nodes on [-1, 1] (non-negative half) and weights; the
// odd-indexed nodes are the 7-point Gauss nodes.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
inline double magnitude(const T& v) {
    return std::abs(v);
}

template <class T, class F>
std::pair<T, double> gauss_kronrod_15(F&& g, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T gauss = T(g(center)) * kWg[3];
    T kronrod = T(g(center)) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const T f1 = g(center - dx);
        const T f2 = g(center + dx);
        kronrod += (f1 + f2) * kWgk[j];
        if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
    }
    return {kronrod * half, magnitude(T((kronrod - gauss) * half))};
}

template <class T, class F>
T adaptive_gk(F&& g, double a, double b, double abs_tol, int max_subdivisions) {
    struct Piece {
        double a, b;
        T value;
        double error;
        bool operator<(const Piece& o) const { return error < o.error; }
    };
    std::priority_queue<Piece> heap;
    auto [v0, e0] = gauss_kronrod_15<T>(g, a, b);
    heap.push({a, b, v0, e0});
    T total = v0;
    double total_error = e0;
    int subdivisions = 0;
    while (total_error > abs_tol) {
        if (subdivisions >= max_subdivisions) {
            throw QuadratureError("adaptive_integrate: subdivision budget exhausted, error estimate " +
                                  std::to_string(total_error));
        }
        Piece worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw QuadratureError("adaptive_integrate: interval cannot be subdivided further");
        }
        auto [vl, el] = gauss_kronrod_15<T>(g, worst.a, mid);
        auto [vr, er] = gauss_kronrod_15<T>(g, mid, worst.b);
        total += vl + vr - worst.value;
        total_error += el + er - worst.error;
        heap.push({worst.a, mid, vl, el});
        heap.push({mid, worst.b, vr, er});
        ++subdivisions;
        if (total_error <= abs_tol) {
            // recompute from scratch to avoid drift in the running sums
            T fresh{};
            double fresh_error = 0.0;
            auto copy = heap;
            while (!copy.empty()) {
                fresh += copy.top().value;
                fresh_error += copy.top().error;
                copy.pop();
            }
            total = fresh;
            total_error = fresh_error;
        }
    }
    return total;
}

}  // namespace detail

/// Integral of g over (a, b) to cfg.abs_tol. T is double or Complex.
///
/// sqrt substitution: t = e + s^2 (resp. t = e - s^2) at the singular end e,
/// suited to integrands that behave like |t - e|^{-1/2} or sqrt(|t - e|).
/// log substitution: t = e +/- (b - a) e^{-u}, suited to logarithmic
/// singularities at e; the tail beyond u = log_cutoff is dropped.
template <class T = double, class F>
T adaptive_integrate(F&& g, double a, double b, const QuadratureConfig& cfg = {}) {
    cfg.validate();
    if (a == b) return T{};
    if (b < a) return -adaptive_integrate<T>(g, b, a, cfg);
    const double width = b - a;
    const bool at_lower = cfg.singular_end == SingularEnd::lower;
    const double end = at_lower ? a : b;
    const double dir = at_lower ? 1.0 : -1.0;

    switch (cfg.endpoint_substitution) {
        case EndpointSubstitution::none:
            return detail::adaptive_gk<T>(g, a, b, cfg.abs_tol, cfg.max_subdivisions);
        case EndpointSubstitution::sqrt: {
            auto h = [&](double s) -> T { return T(g(end + dir * s * s)) * (2.0 * s); };
            return detail::adaptive_gk<T>(h, 0.0, std::sqrt(width), cfg.abs_tol, cfg.max_subdivisions);
        }
        case EndpointSubstitution::log: {
            auto h = [&](double u) -> T {
                const double jac = width * std::exp(-u);
                return T(g(end + dir * jac)) * jac;
            };
            return detail::adaptive_gk<T>(h, 0.0, cfg.log_cutoff, cfg.abs_tol, cfg.max_subdivisions);
        }
    }
    throw std::logic_error("unknown endpoint substitution");
}

}  // namespace gammainv
