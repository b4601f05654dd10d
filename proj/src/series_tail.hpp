#pragma once

#include <array>
#include <cmath>

namespace gammainv::detail {

/// sum_{j > n} j^{-sigma} for real sigma > 1 by Euler-Maclaurin at n.
/// Accurate to double precision for n >= 32 and sigma up to ~100.
inline double zeta_tail(double sigma, double n) {
    // B_{2m} / (2m)!
    constexpr std::array<double, 6> kCoef = {1.0 / 12.0,           -1.0 / 720.0,           1.0 / 30240.0,
                                             -1.0 / 1209600.0,     1.0 / 47900160.0,       -691.0 / 1307674368000.0};
    double bracket = n / (sigma - 1.0) - 0.5;
    double rising = sigma;  // (sigma)_{2m-1}
    double inv_pow = 1.0 / n;
    const double inv_n2 = 1.0 / (n * n);
    for (std::size_t m = 0; m < kCoef.size(); ++m) {
        bracket += kCoef[m] * rising * inv_pow;
        rising *= (sigma + 2.0 * m + 1.0) * (sigma + 2.0 * m + 2.0);
        inv_pow *= inv_n2;
    }
    return std::pow(n, -sigma) * bracket;
}

}  // namespace gammainv::detail
