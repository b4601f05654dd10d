#pragma once

// Branch inverses of Gamma. For k >= -1, g_k is the inverse of Gamma on
//   D_k = { z in C+ : -(k+1) pi < Im log Gamma(z) < -k pi },
// with Gamma(g_k(w)) = (-1)^{k+1} w for w in C+. G_k extends g_k by
// reflection and across R \ I_k; e_k(w) = G_k(-w) for even k.

#include <vector>

#include "gammainv/gamma.hpp"

namespace gammainv {

inline constexpr int kMaxBranch = 8;

/// Branch index k >= -1; k = -1 is the principal branch.
class BranchIndex {
public:
    explicit BranchIndex(int k);
    int value() const { return k_; }
    bool is_even() const { return k_ >= 0 && k_ % 2 == 0; }
    friend bool operator==(BranchIndex, BranchIndex) = default;

private:
    int k_;
};

/// Closed interval I_k (k >= 0) where G_k has its cut; lo < 0 < hi.
struct BranchInterval {
    int k;
    double lo;
    double hi;

    bool contains(double t) const { return t >= lo && t <= hi; }
    double width() const { return hi - lo; }
};

BranchInterval branch_interval(BranchIndex k);

/// Slits of the comb image of C+ under log Gamma: at height -k pi the
/// half-line [log|Gamma(x_k)|, inf).
struct CombDomain {
    struct Slit {
        double height;
        double start;
    };
    std::vector<Slit> slits;

    /// True if zeta lies off every listed slit. Points below the last listed
    /// slit level are reported as inside.
    bool contains(Complex zeta) const;
};

CombDomain comb_domain(int levels);

/// Im log_gamma(z) in (-(k+1) pi, -k pi); requires Im z > 0.
bool in_branch_domain(BranchIndex k, Complex z);

/// g_k(w) for Im w > 0.
Complex inverse_branch(BranchIndex k, Complex w);

/// G_k(w) for k >= 0 and w outside I_k (real w off I_k gives a real result).
Complex extended_inverse(BranchIndex k, Complex w);

/// g_{-1} extended to C \ (-inf, Gamma(x_0)].
Complex principal_inverse(Complex w);

/// e_k(w) = G_k(-w) for even k >= 0; cut [Gamma(x_{k+1}), Gamma(x_k)].
Complex even_inverse(BranchIndex k, Complex w);

enum class Side { plus, minus };

/// Boundary values h_k^{+/-}(t) = g_k(t + i0): side plus for t in (0, hi),
/// side minus for t in (lo, 0). Im of the result is >= 0.
Complex boundary_extension(BranchIndex k, Side side, double t);

/// Solves log_gamma(z) = zeta inside the closure of D_k (zeta in the
/// closed strip of branch k, off the slits).
Complex solve_log_gamma(BranchIndex k, Complex zeta);

// --- sin oracle -----------------------------------------------------------

/// Exterior inverse of the Joukowski map J(w) = (w + 1/w)/2: the root of
/// J(w) = z with |w| > 1 (for z on [-1, 1] the root with Im w >= 0).
Complex joukowski_inverse(Complex z);

/// Inverse of sin from C+ onto the half strip {|Re| < pi/2, Im > 0},
/// i Log(J^{-1}(z)) + pi/2. Requires Im z > 0.
Complex lp_sin_inverse(Complex z);

/// Boundary limit of lp_sin_inverse on [-1, 1] (equals asin x).
double lp_sin_inverse_boundary(double x);

/// log sin z from the product z prod (1 - z/(k pi))(1 + z/(k pi)) with
/// principal logarithms and an exact zeta tail; z in C+. Returns the value
/// and the derivative cot z.
ValueAndDerivative log_sin_product(Complex z);

/// (log sin)^{-1}(Log z) by Newton continuation on the product
/// representation; independent of the closed form.
Complex lp_sin_inverse_comb(Complex z);

}  // namespace gammainv
