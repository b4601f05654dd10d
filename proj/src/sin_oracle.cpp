#include <algorithm>
#include <array>
#include <cmath>

#include "gammainv/branches.hpp"
#include "series_tail.hpp"

namespace gammainv {

namespace {

Complex clean_zero(Complex z) { return {z.real(), z.imag() == 0.0 ? 0.0 : z.imag()}; }

}  // namespace

Complex joukowski_inverse(Complex z) {
    z = clean_zero(z);
    // sqrt(z-1) sqrt(z+1) has its cut on [-1, 1] and behaves like z at infinity
    const Complex s = std::sqrt(clean_zero(z - 1.0)) * std::sqrt(clean_zero(z + 1.0));
    return z + s;
}

Complex lp_sin_inverse(Complex z) {
    if (!(z.imag() > 0.0)) throw DomainError("lp_sin_inverse: requires Im z > 0");
    return Complex(0.0, 1.0) * principal_log(joukowski_inverse(z)) + kPi / 2.0;
}

double lp_sin_inverse_boundary(double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw DomainError("lp_sin_inverse_boundary: requires x in [-1, 1]");
    const Complex w = joukowski_inverse(Complex(x, 0.0));
    return (Complex(0.0, 1.0) * principal_log(w) + kPi / 2.0).real();
}

ValueAndDerivative log_sin_product(Complex z) {
    if (z == Complex(0.0, 0.0)) throw DomainError("log_sin_product: log sin vanishes at 0");
    const double r = std::abs(z);
    const int n = std::max(64, static_cast<int>(std::ceil(4.0 * r / kPi)));
    Complex value = principal_log(z);
    Complex deriv = 1.0 / z;
    for (int j = 1; j <= n; ++j) {
        const double jp = j * kPi;
        const Complex a = 1.0 - z / jp;
        const Complex b = 1.0 + z / jp;
        if (a == Complex(0.0, 0.0) || b == Complex(0.0, 0.0)) throw DomainError("log_sin_product: zero of sin");
        value += principal_log(a) + principal_log(b);
        deriv += 1.0 / (z - jp) + 1.0 / (z + jp);
    }
    // sum_{j>n} Log(1 - (z/(j pi))^2) = -sum_m (z/pi)^{2m} zeta_n(2m) / m
    const Complex u = (z / kPi) * (z / kPi);
    Complex upow = u;
    for (int m = 1; m <= 60; ++m) {
        const double zt = detail::zeta_tail(2.0 * m, n);
        const Complex term = upow * zt / static_cast<double>(m);
        value -= term;
        deriv -= 2.0 * static_cast<double>(m) * term / z;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(value))) break;
        upow *= u;
    }
    return {value, deriv};
}

Complex lp_sin_inverse_comb(Complex z) {
    if (!(z.imag() > 0.0)) throw DomainError("lp_sin_inverse_comb: requires Im z > 0");
    const HolomorphicMap f = [](Complex x) {
        if (!(x.imag() > 0.0)) throw DomainError("lp_sin_inverse_comb: iterate left C+");
        const ValueAndDerivative v = log_sin_product(x);
        if (v.first.imag() < -0.3 || v.first.imag() > kPi + 0.3)
            throw DomainError("lp_sin_inverse_comb: iterate left the strip");
        return v;
    };
    NewtonConfig cfg;
    cfg.residual_tol = 1e-13;
    // anchor on the imaginary axis where sin(iy) = i sinh y
    const double log_r = 10.0;
    const Complex anchor_w(log_r, kPi / 2.0);
    const Complex seed(0.0, std::asinh(std::exp(log_r)));
    const PathPoint anchor{anchor_w, newton_solve(f, seed, anchor_w, cfg)};
    const Complex target = principal_log(z);
    const std::array<Complex, 2> vertices = {Complex(target.real(), kPi / 2.0), target};
    return path_continuation(f, anchor, vertices, cfg, {}, 0.5);
}

}  // namespace gammainv
