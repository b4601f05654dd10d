#pragma once

#include "gammainv/kernel.hpp"

namespace gammainv {

struct GammaConstants {
    static constexpr double euler_gamma = 0.577215664901532860606512090082;
    static constexpr double log_sqrt_two_pi = 0.918938533204672741780329736406;
};

/// log Gamma as the holomorphic function on C \ (-inf, 0] given by the
/// Weierstrass product with principal logarithms. This is not the principal
/// log of Gamma(z): Im log_gamma(x + i0) = -k*pi on (-k, -k+1).
///
/// Stirling series for Re z >= 10, otherwise upward recurrence
/// log Gamma(z) = log Gamma(z+n) - sum_j Log(z+j).
Complex log_gamma(Complex z);

/// Gamma(z); throws PoleError at 0, -1, -2, ...
Complex gamma(Complex z);

/// Digamma and trigamma; throw PoleError at non-positive integers.
Complex psi(Complex z);
Complex psi_prime(Complex z);

/// Binet remainder mu(w) = log Gamma(w) - log sqrt(2 pi) - (w - 1/2) Log w + w,
/// for Re w > 0.
Complex binet_mu(Complex w);

struct CriticalPoint {
    int k;
    double x;        // zero of psi: x_0 = alpha > 0, x_k in (-k, -k+1)
    double gamma_x;  // Gamma(x_k), sign (-1)^k
};

/// Bisection on psi over the bracket, polished by Newton with psi'.
CriticalPoint critical_point(int k);

/// Cached critical point for 0 <= k <= kCriticalCache (computed once).
inline constexpr int kCriticalCache = 16;
const CriticalPoint& cached_critical_point(int k);

}  // namespace gammainv
