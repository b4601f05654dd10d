#include "gammainv/genus2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "gammainv/gamma.hpp"
#include "series_tail.hpp"

namespace gammainv {

namespace {

constexpr double kLog2Pi = 1.83787706640934548356065947281;
constexpr double kGuardSlack = 1e-9;
constexpr double kWindowSlack = 0.3;
constexpr double kMaxStep = 0.5;
constexpr double kDropStep = 1.6;

// log(1 + x) - x + x^2/2, by its Taylor series when |x| is small.
Complex phi(Complex x) {
    if (std::abs(x) >= 0.25) return principal_log(1.0 + x) - x + 0.5 * x * x;
    Complex power = x * x * x;
    Complex sum{};
    for (int n = 3; n < 60; ++n) {
        const Complex term = power / static_cast<double>(n);
        sum += (n % 2 == 1) ? term : -term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        power *= x;
    }
    return sum;
}

NewtonConfig pick_newton_config() {
    NewtonConfig cfg;
    cfg.residual_tol = 1e-15;
    return cfg;
}

}  // namespace

double LambdaRule::value(long j) const { return scale * std::pow(static_cast<double>(j), power); }

double LambdaRule::multiplicity(long j) const { return mult_linear * static_cast<double>(j) + mult_const; }

std::string LambdaRule::describe() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "lambda_j = %.17g * j^%.17g with multiplicity %.17g * j + %.17g", scale, power,
                  mult_linear, mult_const);
    return buf;
}

ClassGFunction::ClassGFunction(int r, double a, double b, LambdaRule rule, SeriesTruncation truncation)
    : r_(r), a_(a), b_(b), rule_(rule), truncation_(truncation) {
    if (r < 0) throw DomainError("ClassGFunction: r must be >= 0");
    if (!(rule.scale > 0.0) || !(rule.power > 0.0))
        throw DomainError("ClassGFunction: lambda rule needs positive scale and power");
    if (rule.mult_linear < 0.0 || !(rule.multiplicity(1) > 0.0))
        throw DomainError("ClassGFunction: multiplicities must be positive");
    if (truncation.min_terms < 1 || truncation.tail_order < 0 || truncation.tail_order == 1 ||
        truncation.tail_order == 2)
        throw DomainError("ClassGFunction: invalid truncation");
    // sum_j j^deg / j^{n p} diverges iff n p - deg <= 1
    const double deg = rule.mult_linear > 0.0 ? 1.0 : 0.0;
    if (2.0 * rule.power - deg > 1.0)
        throw DomainError("ClassGFunction: sequence is not of rank 2 (sum of lambda^-2 converges)");
    if (3.0 * rule.power - deg <= 1.0)
        throw DomainError("ClassGFunction: sequence is not of rank 2 (sum of lambda^-3 diverges)");
}

void ClassGFunction::require_off_cut(Complex z) const {
    if (z.imag() == 0.0 && z.real() <= 0.0) throw DomainError("log f: z lies on the cut (-inf, 0]");
}

ClassGFunction::Sums ClassGFunction::product_sums(Complex z, bool want_value, bool want_derivatives) const {
    const double r = std::abs(z);
    long n_terms = truncation_.min_terms;
    const double needed = std::ceil(std::pow(4.0 * r / rule_.scale, 1.0 / rule_.power));
    if (needed > static_cast<double>(n_terms)) n_terms = static_cast<long>(needed);
    Sums s{};
    for (long j = 1; j <= n_terms; ++j) {
        const double lambda = rule_.value(j);
        const double m = rule_.multiplicity(j);
        const Complex lz = lambda + z;
        if (lz == Complex(0.0, 0.0)) throw DomainError("log f: z is a zero of f");
        if (want_value) s.value += m * phi(z / lambda);
        if (want_derivatives) {
            const double l2 = lambda * lambda;
            s.first += m * z * z / (l2 * lz);
            s.second += m * z * (2.0 * lambda + z) / (l2 * lz * lz);
        }
    }
    // sum_{j > N} m_j phi(z / l_j) = sum_n (-1)^{n+1}/n (z/s)^n [alpha zeta_N(np - 1) + beta zeta_N(np)]
    const int max_order = truncation_.tail_order > 0 ? truncation_.tail_order : 400;
    const Complex x = z / rule_.scale;
    Complex xn = x * x;  // x^{n-1} at the start of iteration n
    for (int n = 3; n <= max_order; ++n) {
        const double np = n * rule_.power;
        double weight = rule_.mult_const * detail::zeta_tail(np, static_cast<double>(n_terms));
        if (rule_.mult_linear > 0.0) weight += rule_.mult_linear * detail::zeta_tail(np - 1.0, static_cast<double>(n_terms));
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        const Complex dterm = sign * xn * weight / rule_.scale;  // derivative of the n-th term
        const Complex vterm = dterm * z / static_cast<double>(n);
        if (want_value) s.value += vterm;
        if (want_derivatives) {
            s.first += dterm;
            s.second += (n - 1.0) * dterm / z;
        }
        if (truncation_.tail_order == 0 && std::abs(dterm) * std::max(1.0, r) < 1e-18) break;
        xn *= x;
    }
    return s;
}

Complex ClassGFunction::log_without_power(Complex z) const {
    return a_ * z * z + b_ * z + product_sums(z, true, false).value;
}

Complex ClassGFunction::log(Complex z) const {
    require_off_cut(z);
    Complex value = log_without_power(z);
    if (r_ > 0) value += static_cast<double>(r_) * principal_log(z);
    return value;
}

Complex ClassGFunction::log_prime(Complex z) const {
    require_off_cut(z);
    return static_cast<double>(r_) / z + 2.0 * a_ * z + b_ + product_sums(z, false, true).first;
}

Complex ClassGFunction::log_second(Complex z) const {
    require_off_cut(z);
    return -static_cast<double>(r_) / (z * z) + 2.0 * a_ + product_sums(z, false, true).second;
}

ValueAndDerivative ClassGFunction::log_with_derivative(Complex z) const {
    require_off_cut(z);
    const Sums s = product_sums(z, true, true);
    Complex value = a_ * z * z + b_ * z + s.value;
    if (r_ > 0) value += static_cast<double>(r_) * principal_log(z);
    return {value, static_cast<double>(r_) / z + 2.0 * a_ * z + b_ + s.first};
}

ClassGFunction ClassGFunction::scaled(double c) const {
    if (!(c > 0.0)) throw DomainError("ClassGFunction::scaled: c must be positive");
    LambdaRule rule = rule_;
    rule.scale /= c;
    return {r_, a_ * c * c, b_ * c, rule, truncation_};
}

ClassGFunction barnes_g_function(SeriesTruncation truncation) {
    constexpr double g = GammaConstants::euler_gamma;
    const double a = -(1.0 + g) / 2.0 - kPi * kPi / 12.0;
    const double b = 0.5 * kLog2Pi - 0.5 + g;
    return {1, a, b, LambdaRule{1.0, 1.0, 1.0, 1.0}, truncation};
}

ClassGFunction shifted_barnes_g_function(SeriesTruncation truncation) {
    constexpr double g = GammaConstants::euler_gamma;
    return {0, -(1.0 + g) / 2.0, 0.5 * (kLog2Pi - 1.0), LambdaRule{1.0, 1.0, 1.0, 0.0}, truncation};
}

ClassGFunction inverse_gamma2_function(SeriesTruncation truncation) {
    const ClassGFunction g = barnes_g_function(truncation);
    return {1, g.a(), g.b() - 0.5 * kLog2Pi, g.rule(), truncation};
}

double inflection_u(const ClassGFunction& fn) {
    if (fn.r() <= 0) throw DomainError("inflection_u: requires r > 0");
    auto second = [&](double x) { return fn.log_second(Complex(x, 0.0)).real(); };
    double lo = 1.0;
    double hi = 1.0;
    for (int i = 0; second(lo) >= 0.0; ++i) {
        if (i > 200) throw ConvergenceError("inflection_u: no negative value of (log f)'' near 0");
        lo *= 0.5;
    }
    for (int i = 0; second(hi) <= 0.0; ++i) {
        if (i > 200) throw ConvergenceError("inflection_u: no positive value of (log f)''");
        hi *= 2.0;
    }
    return find_root_bracketed(second, lo, hi, 1e-16);
}

ClassGDerived classify(const ClassGFunction& fn) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double u = inflection_u(fn);
    auto first = [&](double x) { return fn.log_prime(Complex(x, 0.0)).real(); };
    if (!(first(u) < 0.0)) return {u, nan, nan, false};
    double hi = 2.0 * u;
    for (int i = 0; first(hi) <= 0.0; ++i) {
        if (i > 200) throw ConvergenceError("classify: no sign change of (log f)' beyond u");
        hi *= 2.0;
    }
    const double beta = find_root_bracketed(first, u, hi, 1e-16);
    return {u, beta, std::exp(fn.log(Complex(beta, 0.0)).real()), true};
}

// --- Pick inverse ---------------------------------------------------------

PickInverse::PickInverse(ClassGFunction fn) : fn_(std::move(fn)), derived_(classify(fn_)) {
    if (!derived_.in_class_g) throw DomainError("PickInverse: function is not in the class (no interior minimum)");
    const NewtonConfig cfg = pick_newton_config();
    const HolomorphicMap f = [this](Complex z) {
        if (z.imag() < -kGuardSlack || z.real() < derived_.beta - kGuardSlack)
            throw DomainError("pick inverse: iterate left {Re z > beta} in the closed upper half plane");
        return fn_.log_with_derivative(z);
    };
    // anchor on the real axis right of beta, lifted to Im zeta = pi/2
    const double x_a = derived_.beta + 1.0;
    const PathPoint anchor{fn_.log(Complex(x_a, 0.0)), Complex(x_a, 0.0)};
    const double re0 = spine_step_ * std::round(anchor.w.real() / spine_step_);
    const Complex lifted(re0, kPi / 2.0);
    const PathPoint start{lifted, path_continuation(f, anchor, std::span(&lifted, 1), cfg, {}, kMaxStep)};
    // extend in both directions while continuation succeeds
    std::vector<PathPoint> left{start};
    std::vector<PathPoint> right{start};
    for (int j = 1; j <= 140; ++j) {
        const Complex next(re0 - j * spine_step_, kPi / 2.0);
        try {
            left.push_back({next, path_continuation(f, left.back(), std::span(&next, 1), cfg, {}, kMaxStep)});
        } catch (const ConvergenceError&) {
            break;
        }
    }
    for (int j = 1; j <= 120; ++j) {
        const Complex next(re0 + j * spine_step_, kPi / 2.0);
        try {
            right.push_back({next, path_continuation(f, right.back(), std::span(&next, 1), cfg, {}, kMaxStep)});
        } catch (const ConvergenceError&) {
            break;
        }
    }
    spine_.assign(left.rbegin(), left.rend());
    spine_.insert(spine_.end(), right.begin() + 1, right.end());
}

Complex PickInverse::solve_log(Complex zeta) const {
    if (zeta.imag() < -1e-12 || zeta.imag() > kPi + 1e-12)
        throw DomainError("pick inverse: target outside the strip 0 <= Im zeta <= pi");
    const double first_re = spine_.front().w.real();
    long idx = std::lround((zeta.real() - first_re) / spine_step_);
    idx = std::clamp<long>(idx, 0, static_cast<long>(spine_.size()) - 1);
    const PathPoint& start = spine_[static_cast<std::size_t>(idx)];
    const std::array<Complex, 2> vertices = {Complex(zeta.real(), kPi / 2.0), zeta};
    const HolomorphicMap f = [this](Complex z) {
        if (z.imag() < -kGuardSlack || z.real() < derived_.beta - kGuardSlack)
            throw DomainError("pick inverse: iterate left {Re z > beta} in the closed upper half plane");
        const ValueAndDerivative v = fn_.log_with_derivative(z);
        if (v.first.imag() < -kWindowSlack || v.first.imag() > kPi + kWindowSlack)
            throw DomainError("pick inverse: iterate left the strip");
        return v;
    };
    // the hop is at most half a spine step, so one bound serves both legs
    return path_continuation(f, start, vertices, pick_newton_config(), {}, kDropStep);
}

Complex PickInverse::operator()(Complex w) const {
    if (w.imag() > 0.0) return solve_log(principal_log(w));
    if (w.imag() < 0.0) return std::conj(solve_log(principal_log(std::conj(w))));
    if (!(w.real() > derived_.f_beta)) throw DomainError("inverse_f: w lies on the cut (-inf, f(beta)]");
    return {real_inverse(w.real()), 0.0};
}

Complex PickInverse::boundary_value(double x) const {
    if (!(x < derived_.f_beta) || x == 0.0) throw DomainError("boundary_value: requires x < f(beta), x != 0");
    return solve_log(x > 0.0 ? Complex(std::log(x), 0.0) : Complex(std::log(-x), kPi));
}

double PickInverse::real_inverse(double w) const {
    const double target = std::log(w);
    auto g = [&](double x) { return fn_.log(Complex(x, 0.0)).real() - target; };
    double hi = derived_.beta + 1.0;
    for (int i = 0; g(hi) <= 0.0; ++i) {
        if (i > 200) throw ConvergenceError("inverse_f: no bracket on the real axis");
        hi = derived_.beta + 2.0 * (hi - derived_.beta);
    }
    double x = find_root_bracketed(g, derived_.beta, hi, 1e-16);
    // Newton polish
    for (int iter = 0; iter < 3; ++iter) {
        const double gx = g(x);
        const double next = x - gx / fn_.log_prime(Complex(x, 0.0)).real();
        if (!(next > derived_.beta && next < hi) || std::abs(g(next)) >= std::abs(gx)) break;
        x = next;
    }
    return x;
}

Complex PickInverse::quadrant_square(Complex w) const {
    const Complex shifted = (*this)(w)-derived_.beta;
    return shifted * shifted;
}

Complex PickInverse::boundary_curve(double y) const {
    if (!(y > 0.0)) throw DomainError("boundary_curve: requires y > 0");
    return fn_.log(Complex(derived_.beta, y));
}

double PickInverse::density(double t) const {
    if (!(t > 0.0) || t == derived_.f_beta) throw DomainError("genus2 density: requires t > 0, t != f(beta)");
    return std::max(0.0, boundary_value(derived_.f_beta - t).imag() / (kPi * t));
}

Complex PickInverse::stieltjes_eval(Complex w, const QuadratureConfig& cfg) const {
    cfg.validate();
    const double fb = derived_.f_beta;
    if (w.imag() == 0.0 && w.real() <= fb) throw DomainError("genus2 stieltjes_eval: w lies on the cut");
    if (w.imag() < 0.0) return std::conj(stieltjes_eval(std::conj(w), cfg));
    const Complex v = w - fb;
    QuadratureConfig piece = cfg;
    piece.endpoint_substitution = EndpointSubstitution::none;
    piece.abs_tol = cfg.abs_tol / 4.0;
    const double cutoff = cfg.log_cutoff;
    // Im f^{-1}(f(beta) - t + i0) from log|f(beta) - t| and its sign
    auto im_boundary = [&](double log_abs_x, bool negative) {
        return std::max(0.0, solve_log(Complex(log_abs_x, negative ? kPi : 0.0)).imag());
    };
    // d ~ C t^{-1/2} at 0; below t_min the fitted model replaces the solve
    const double t_min = 1e-10 * fb;
    const double c_model = std::sqrt(t_min) * density(t_min);
    auto d_small = [&](double t) { return t < t_min ? c_model / std::sqrt(t) : density(t); };
    // [0, fb/2]: t = sigma^2
    auto p1 = [&](double sigma) -> Complex {
        const double t = sigma * sigma;
        return d_small(t) * 2.0 * sigma / (t + v);
    };
    // [fb/2, fb]: t = fb - (fb/2) e^{-u}
    auto p2 = [&](double u) -> Complex {
        const double gap = 0.5 * fb * std::exp(-u);
        const double t = fb - gap;
        return im_boundary(std::log(0.5 * fb) - u, false) / (kPi * t) * gap / (t + v);
    };
    // [fb, 2 fb]: t = fb + fb e^{-u}
    auto p3 = [&](double u) -> Complex {
        const double gap = fb * std::exp(-u);
        const double t = fb + gap;
        return im_boundary(std::log(fb) - u, true) / (kPi * t) * gap / (t + v);
    };
    // [2 fb, inf): t = 2 fb e^u
    auto p4 = [&](double u) -> Complex {
        const double t = 2.0 * fb * std::exp(u);
        return im_boundary(std::log(t - fb), true) / kPi / (t + v);
    };
    Complex integral = adaptive_integrate<Complex>(p1, 0.0, std::sqrt(0.5 * fb), piece);
    integral += adaptive_integrate<Complex>(p2, 0.0, cutoff, piece);
    integral += adaptive_integrate<Complex>(p3, 0.0, cutoff, piece);
    integral += adaptive_integrate<Complex>(p4, 0.0, cutoff, piece);
    return derived_.beta + v * integral;
}

double PickInverse::point_mass() const {
    double prev = 0.0;
    double last = 0.0;
    for (int j = 4; j <= 20; ++j) {
        const double y = std::ldexp(1.0, -j);
        prev = last;
        last = y * (*this)(Complex(0.0, y)).imag();
    }
    return 2.0 * last - prev;
}

// --- Barnes G and Gamma_2 -----------------------------------------------------

Complex barnes_g(Complex z) {
    static const ClassGFunction shifted = shifted_barnes_g_function();
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) return {0.0, 0.0};
    return std::exp(shifted.log_without_power(z - 1.0));
}

Complex gamma2(Complex z) {
    const Complex g = barnes_g(z);
    if (g == Complex(0.0, 0.0)) throw PoleError("gamma2: pole at a non-positive integer");
    return std::exp(0.5 * kLog2Pi * z) / g;
}

double gamma2_inverse(double w) {
    static const ClassGFunction inv = inverse_gamma2_function();
    static const ClassGDerived derived = classify(inv);
    const double peak = 1.0 / derived.f_beta;
    if (!(w > 0.0 && w < peak)) throw DomainError("gamma2_inverse: requires w in (0, Gamma_2(beta_2))");
    // log(1/Gamma_2) increases on (beta_2, inf) from log f(beta_2)
    const double target = -std::log(w);
    auto g = [&](double x) { return inv.log(Complex(x, 0.0)).real() - target; };
    double hi = derived.beta + 1.0;
    for (int i = 0; g(hi) <= 0.0; ++i) {
        if (i > 200) throw ConvergenceError("gamma2_inverse: no bracket");
        hi = derived.beta + 2.0 * (hi - derived.beta);
    }
    double x = find_root_bracketed(g, derived.beta, hi, 1e-16);
    for (int iter = 0; iter < 3; ++iter) {
        const double gx = g(x);
        const double next = x - gx / inv.log_prime(Complex(x, 0.0)).real();
        if (!(next > derived.beta && next < hi) || std::abs(g(next)) >= std::abs(gx)) break;
        x = next;
    }
    return x;
}

double gamma2_inverse_via_pick(double w) {
    static const PickInverse h(inverse_gamma2_function());
    if (!(w > 0.0)) throw DomainError("gamma2_inverse_via_pick: requires w > 0");
    return h(Complex(1.0 / w, 0.0)).real();
}

}  // namespace gammainv
