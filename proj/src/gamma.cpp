#include "gammainv/gamma.hpp"

#include <array>
#include <mutex>

namespace gammainv {

namespace {

// B_{2m} for m = 1..8
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};

constexpr double kStirlingThreshold = 10.0;

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

int shift_count(Complex z) {
    return z.real() >= kStirlingThreshold ? 0 : static_cast<int>(std::ceil(kStirlingThreshold - z.real()));
}

Complex log_gamma_stirling(Complex z) {
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv;
    for (std::size_t m = 1; m <= kBernoulli.size(); ++m) {
        series += kBernoulli[m - 1] / (2.0 * m * (2.0 * m - 1.0)) * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + GammaConstants::log_sqrt_two_pi + series;
}

}  // namespace

Complex log_gamma(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0) throw DomainError("log_gamma: argument on the cut (-inf, 0]");
    const int n = shift_count(z);
    Complex shift_sum = 0.0;
    for (int j = 0; j < n; ++j) shift_sum += principal_log(z + static_cast<double>(j));
    return log_gamma_stirling(z + static_cast<double>(n)) - shift_sum;
}

Complex gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at a non-positive integer");
    if (z.real() > 0.0) return std::exp(log_gamma(z));
    const int n = static_cast<int>(std::ceil(1.0 - z.real()));
    Complex product = 1.0;
    for (int j = 0; j < n; ++j) product *= z + static_cast<double>(j);
    return std::exp(log_gamma(z + static_cast<double>(n))) / product;
}

Complex psi(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("psi: pole at a non-positive integer");
    const int n = shift_count(z);
    Complex shift_sum = 0.0;
    for (int j = 0; j < n; ++j) shift_sum += 1.0 / (z + static_cast<double>(j));
    const Complex w = z + static_cast<double>(n);
    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv2;
    for (std::size_t m = 1; m <= kBernoulli.size(); ++m) {
        series += kBernoulli[m - 1] / (2.0 * m) * power;
        power *= inv2;
    }
    return std::log(w) - 0.5 * inv - series - shift_sum;
}

Complex psi_prime(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("psi_prime: pole at a non-positive integer");
    const int n = shift_count(z);
    Complex shift_sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const Complex d = z + static_cast<double>(j);
        shift_sum += 1.0 / (d * d);
    }
    const Complex w = z + static_cast<double>(n);
    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv2 * inv;
    for (std::size_t m = 1; m <= kBernoulli.size(); ++m) {
        series += kBernoulli[m - 1] * power;
        power *= inv2;
    }
    return inv + 0.5 * inv2 + series + shift_sum;
}

Complex binet_mu(Complex w) {
    if (!(w.real() > 0.0)) throw DomainError("binet_mu: requires Re w > 0");
    return log_gamma(w) - GammaConstants::log_sqrt_two_pi - (w - 0.5) * principal_log(w) + w;
}

CriticalPoint critical_point(int k) {
    if (k < 0) throw DomainError("critical_point: k must be non-negative");
    double lo = k == 0 ? 1.0 : -k + 1e-9;
    double hi = k == 0 ? 2.0 : -k + 1.0 - 1e-9;
    auto psi_real = [](double x) { return psi(Complex(x, 0.0)).real(); };
    double x = find_root_bracketed(psi_real, lo, hi, 1e-16);
    for (int iter = 0; iter < 3; ++iter) {
        const double value = psi_real(x);
        if (value == 0.0) break;
        const double next = x - value / psi_prime(Complex(x, 0.0)).real();
        if (!(next > lo && next < hi)) break;
        if (std::abs(psi_real(next)) >= std::abs(value)) break;
        x = next;
    }
    return {k, x, gamma(Complex(x, 0.0)).real()};
}

const CriticalPoint& cached_critical_point(int k) {
    if (k < 0 || k > kCriticalCache) throw DomainError("cached_critical_point: k outside cached range");
    static std::array<CriticalPoint, kCriticalCache + 1> table;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int j = 0; j <= kCriticalCache; ++j) table[j] = critical_point(j);
    });
    return table[k];
}

}  // namespace gammainv
