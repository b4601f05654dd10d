#include "gammainv/kernel.hpp"

#include <sstream>

namespace gammainv {

Complex principal_log(Complex z) {
    if (z == Complex(0.0, 0.0)) throw DomainError("principal_log: log(0) is undefined");
    // std::log honours the sign of a zero imaginary part; the cut convention
    // here puts the negative axis on the upper side.
    if (z.imag() == 0.0) z = Complex(z.real(), 0.0);
    return std::log(z);
}

void NewtonConfig::validate() const {
    if (!(residual_tol > 0.0)) throw std::invalid_argument("NewtonConfig: residual_tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("NewtonConfig: max_iter must be >= 1");
    if (!(step_shrink > 0.0 && step_shrink < 1.0))
        throw std::invalid_argument("NewtonConfig: step_shrink must lie in (0,1)");
    if (max_path_segments < 1) throw std::invalid_argument("NewtonConfig: max_path_segments must be >= 1");
}

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureConfig: abs_tol must be positive");
    if (max_subdivisions < 0) throw std::invalid_argument("QuadratureConfig: negative subdivision budget");
}

namespace {

// Evaluates f at z if the guard accepts it; nullopt-like flag otherwise.
bool try_eval(const HolomorphicMap& f, const DomainGuard& guard, Complex z, ValueAndDerivative& out) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    if (guard && !guard(z)) return false;
    try {
        out = f(z);
    } catch (const DomainError&) {
        return false;
    }
    return std::isfinite(std::abs(out.first)) && std::isfinite(std::abs(out.second));
}

}  // namespace

Complex newton_solve(const HolomorphicMap& f, Complex seed, Complex target, const NewtonConfig& cfg,
                     const DomainGuard& guard) {
    cfg.validate();
    const double tol = cfg.residual_tol * std::max(1.0, std::abs(target));
    ValueAndDerivative fz;
    if (!try_eval(f, guard, seed, fz)) throw DomainError("newton_solve: seed outside the prescribed domain");
    Complex z = seed;
    double residual = std::abs(fz.first - target);
    // accuracy attainable given that z and the target are only known to rounding
    auto attainable = [&] {
        return std::numeric_limits<double>::epsilon() * (std::abs(z) * std::abs(fz.second) + std::abs(target));
    };
    auto floor_tol = [&] { return std::max(tol, 2.0 * attainable()); };
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        if (residual <= floor_tol()) return z;
        if (fz.second == Complex(0.0, 0.0)) throw ConvergenceError("newton_solve: vanishing derivative");
        const Complex step = -(fz.first - target) / fz.second;
        double scale = 1.0;
        bool accepted = false;
        for (int shrink = 0; shrink <= cfg.max_shrinks; ++shrink, scale *= cfg.step_shrink) {
            const Complex trial = z + scale * step;
            ValueAndDerivative ft;
            if (!try_eval(f, guard, trial, ft)) continue;
            const double r = std::abs(ft.first - target);
            if (r < residual || r <= floor_tol()) {
                z = trial;
                fz = ft;
                residual = r;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            // stagnation at rounding level counts as convergence
            if (residual <= 64.0 * attainable()) return z;
            std::ostringstream msg;
            msg << "newton_solve: no decrease after step reduction at z = " << z << ", residual " << residual;
            throw ConvergenceError(msg.str());
        }
    }
    if (residual <= floor_tol() || residual <= 64.0 * attainable()) return z;
    throw ConvergenceError("newton_solve: max_iter reached, residual " + std::to_string(residual));
}

Complex path_continuation(const HolomorphicMap& f, PathPoint known, std::span<const Complex> vertices,
                          const NewtonConfig& cfg, const DomainGuard& guard, double max_step,
                          const std::function<void(const PathPoint&)>& visit) {
    cfg.validate();
    if (!(max_step > 0.0)) throw std::invalid_argument("path_continuation: max_step must be positive");
    int budget = cfg.max_path_segments;
    PathPoint current = known;
    for (const Complex vertex : vertices) {
        double fraction = 1.0;  // of the remaining segment attempted in one step
        while (current.w != vertex) {
            const Complex remaining = vertex - current.w;
            const double len = std::abs(remaining);
            double step_len = std::min(fraction * len, max_step);
            const bool last = step_len >= len;
            const Complex next_w = last ? vertex : current.w + remaining * (step_len / len);
            if (--budget < 0) throw ContinuationError("path_continuation: segment budget exhausted");
            try {
                Complex seed = current.z;
                ValueAndDerivative fz;
                if (try_eval(f, guard, current.z, fz) && fz.second != Complex(0.0, 0.0)) {
                    const Complex predicted = current.z + (next_w - current.w) / fz.second;
                    ValueAndDerivative unused;
                    if (try_eval(f, guard, predicted, unused)) seed = predicted;
                }
                const Complex z = newton_solve(f, seed, next_w, cfg, guard);
                current = {next_w, z};
                if (visit) visit(current);
                fraction = std::min(1.0, 2.0 * step_len / std::max(len - step_len, 1e-300));
                if (last) break;
            } catch (const ConvergenceError&) {
                fraction = 0.5 * step_len / len;
            } catch (const DomainError&) {
                fraction = 0.5 * step_len / len;
            }
        }
    }
    return current.z;
}

double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi, double xtol,
                           int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw DomainError("find_root_bracketed: bracket does not straddle a sign change");
    int side = 0;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::abs(hi - lo) <= xtol * std::max(1.0, std::abs(lo) + std::abs(hi))) break;
        double x = (lo * fhi - hi * flo) / (fhi - flo);
        // every third step is a plain bisection so the bracket always shrinks
        if (!(x > std::min(lo, hi) && x < std::max(lo, hi)) || iter % 3 == 2) x = 0.5 * (lo + hi);
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (std::signbit(fx) == std::signbit(fhi)) {
            hi = x;
            fhi = fx;
            if (side == -1) flo *= 0.5;
            side = -1;
        } else {
            lo = x;
            flo = fx;
            if (side == 1) fhi *= 0.5;
            side = 1;
        }
    }
    return std::abs(flo) < std::abs(fhi) ? lo : hi;
}

}  // namespace gammainv
