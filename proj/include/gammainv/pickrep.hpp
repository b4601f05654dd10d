#pragma once

// Pick representation of the branch inverses. For k >= 0
//   G_k(z) = integral over I_k of d_k(t) / (t - z) dt - k,
// with density d_k(t) = Im g_k(t + i0) / pi, no linear term and no point mass.

#include <iosfwd>
#include <vector>

#include "gammainv/branches.hpp"

namespace gammainv {

/// d_k(t) for t in the interior of I_k, t != 0. Within 1e-10 |I_k| of an
/// endpoint the local model C sqrt(s) is used, C fitted at that distance.
double density(BranchIndex k, double t);

enum class GridScheme { uniform, endpoint_refined };

struct DensityNode {
    double t;
    double d;
};

struct DensityTable {
    int k;
    GridScheme scheme;
    std::vector<DensityNode> nodes;  // sorted by t
};

/// Node placement only (no density evaluation); n_nodes >= 16.
std::vector<double> density_nodes(BranchIndex k, int n_nodes, GridScheme scheme);

DensityTable density_table(BranchIndex k, int n_nodes, GridScheme scheme);

/// CSV with header `t,d` and 17 significant digits.
void write_density_csv(const DensityTable& table, std::ostream& out);

/// Default quadrature settings for the representation integrals.
QuadratureConfig representation_quadrature();

/// The representation integral minus k, at z off I_k (z may also be an
/// endpoint of I_k, where the integral still converges).
Complex stieltjes_eval(BranchIndex k, Complex z, const QuadratureConfig& cfg = representation_quadrature());

enum class Endpoint { left, right };

/// The representation evaluated at the left (right) end of I_k, which
/// reproduces x_k (x_{k+1}).
double endpoint_identity(BranchIndex k, Endpoint which, const QuadratureConfig& cfg = representation_quadrature());

/// Least-squares slope of log d_k against log s, s the distance to the
/// endpoint, over s in [1e-6, 1e-3] |I_k|.
double endpoint_exponent(BranchIndex k, Endpoint which);

struct PickParameters {
    double a;  // linear coefficient
    double b;  // constant term
    double c;  // point mass at 0
};

/// a from the secant slope of G_k at x = 1e6 (G_k(x) -> -k, so g_k(x)/x
/// itself is only O(k/x)), b = G_k(x) - a x, c by Richardson extrapolation
/// of y Im g_k(iy) over y = 2^-j, j = 4..20.
PickParameters pick_parameters(BranchIndex k);

}  // namespace gammainv
