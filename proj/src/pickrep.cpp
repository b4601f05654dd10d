#include "gammainv/pickrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "gammainv/sweep.hpp"

namespace gammainv {

namespace {

constexpr double kModelFraction = 1e-10;  // sqrt model below this fraction of |I_k|

double raw_density(BranchIndex k, double t) {
    const Side side = t > 0.0 ? Side::plus : Side::minus;
    return std::max(0.0, boundary_extension(k, side, t).imag() / kPi);
}

// d_k at distance s > 0 inside I_k from the given endpoint.
double density_from_end(BranchIndex k, const BranchInterval& interval, Endpoint end, double s) {
    const double anchor = end == Endpoint::left ? interval.lo : interval.hi;
    const double dir = end == Endpoint::left ? 1.0 : -1.0;
    const double s_min = kModelFraction * interval.width();
    if (s >= s_min) return raw_density(k, anchor + dir * s);
    const double fitted = raw_density(k, anchor + dir * s_min) / std::sqrt(s_min);
    return fitted * std::sqrt(s);
}

void require_k(BranchIndex k, const char* what) {
    if (k.value() < 0) throw DomainError(std::string(what) + ": requires k >= 0");
}

// Integral over I_k of d_k(t) / (t - z) dt. The outer quarters use
// t = end -/+ sigma^2, the inner quarters t = +/-(|end|/2) e^{-u}.
Complex representation_integral(BranchIndex k, Complex z, const QuadratureConfig& cfg) {
    const BranchInterval interval = branch_interval(k);
    QuadratureConfig piece_cfg = cfg;
    piece_cfg.endpoint_substitution = EndpointSubstitution::none;
    piece_cfg.abs_tol = cfg.abs_tol / 4.0;
    Complex total{};
    for (const Endpoint end : {Endpoint::left, Endpoint::right}) {
        const double anchor = end == Endpoint::left ? interval.lo : interval.hi;
        const double half = 0.5 * std::abs(anchor);
        const double dir = end == Endpoint::left ? 1.0 : -1.0;
        // s = sigma^2 measured from the endpoint, s in [0, half]
        auto outer = [&](double sigma) -> Complex {
            const double s = sigma * sigma;
            const Complex denom = (anchor - z) + dir * s;
            return density_from_end(k, interval, end, s) * (2.0 * sigma) / denom;
        };
        total += adaptive_integrate<Complex>(outer, 0.0, std::sqrt(half), piece_cfg);
        // t = -dir * half * e^{-u} approaches 0 from the side of this endpoint
        auto inner = [&](double u) -> Complex {
            const double mag = half * std::exp(-u);
            const double t = -dir * mag;
            return raw_density(k, t) * mag / (t - z);
        };
        total += adaptive_integrate<Complex>(inner, 0.0, cfg.log_cutoff, piece_cfg);
    }
    return total;
}

}  // namespace

double density(BranchIndex k, double t) {
    require_k(k, "density");
    const BranchInterval interval = branch_interval(k);
    if (!(t > interval.lo && t < interval.hi) || t == 0.0)
        throw DomainError("density: t must lie inside I_k and differ from 0");
    const double s_min = kModelFraction * interval.width();
    if (t > 0.0 && interval.hi - t < s_min) return density_from_end(k, interval, Endpoint::right, interval.hi - t);
    if (t < 0.0 && t - interval.lo < s_min) return density_from_end(k, interval, Endpoint::left, t - interval.lo);
    return raw_density(k, t);
}

std::vector<double> density_nodes(BranchIndex k, int n_nodes, GridScheme scheme) {
    require_k(k, "density_nodes");
    if (n_nodes < 16) throw DomainError("density_nodes: n_nodes must be >= 16");
    const BranchInterval interval = branch_interval(k);
    std::vector<double> t;
    t.reserve(static_cast<std::size_t>(n_nodes));
    if (scheme == GridScheme::uniform) {
        const double h = interval.width() / n_nodes;
        for (int j = 0; j < n_nodes; ++j) {
            double x = interval.lo + (j + 0.5) * h;
            if (x == 0.0) x = 0.25 * h;
            t.push_back(x);
        }
    } else {
        const int n_left = n_nodes / 2;
        // per side: log-spaced distances from 0, then quadratically clustered
        // distances from the endpoint
        auto side = [&](double length, int m, double sign) {
            const int m_log = m / 2;
            const int m_end = m - m_log;
            const double half = 0.5 * length;
            for (int j = 0; j < m_log; ++j) t.push_back(sign * half * std::pow(10.0, -6.0 * (1.0 - double(j) / m_log)));
            for (int j = 0; j < m_end; ++j) {
                const double frac = double(m_end - j) / m_end;
                t.push_back(sign * (length - half * frac * frac));
            }
        };
        side(-interval.lo, n_left, -1.0);
        side(interval.hi, n_nodes - n_left, 1.0);
    }
    std::sort(t.begin(), t.end());
    return t;
}

DensityTable density_table(BranchIndex k, int n_nodes, GridScheme scheme) {
    const std::vector<double> t = density_nodes(k, n_nodes, scheme);
    const std::vector<double> d = density_grid(k, t);
    DensityTable table{k.value(), scheme, {}};
    table.nodes.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) table.nodes.push_back({t[i], d[i]});
    return table;
}

void write_density_csv(const DensityTable& table, std::ostream& out) {
    out << "t,d\n";
    char line[96];
    for (const DensityNode& node : table.nodes) {
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", node.t, node.d);
        out << line;
    }
}

QuadratureConfig representation_quadrature() {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-8;
    cfg.max_subdivisions = 4000;
    cfg.log_cutoff = 40.0;
    return cfg;
}

Complex stieltjes_eval(BranchIndex k, Complex z, const QuadratureConfig& cfg) {
    require_k(k, "stieltjes_eval");
    cfg.validate();
    if (z.imag() < 0.0) return std::conj(stieltjes_eval(k, std::conj(z), cfg));
    const BranchInterval interval = branch_interval(k);
    if (z.imag() == 0.0 && z.real() > interval.lo && z.real() < interval.hi)
        throw DomainError("stieltjes_eval: z lies on the cut I_k");
    return representation_integral(k, Complex(z.real(), z.imag()), cfg) - static_cast<double>(k.value());
}

double endpoint_identity(BranchIndex k, Endpoint which, const QuadratureConfig& cfg) {
    require_k(k, "endpoint_identity");
    const BranchInterval interval = branch_interval(k);
    const double z = which == Endpoint::left ? interval.lo : interval.hi;
    return stieltjes_eval(k, Complex(z, 0.0), cfg).real();
}

double endpoint_exponent(BranchIndex k, Endpoint which) {
    require_k(k, "endpoint_exponent");
    const BranchInterval interval = branch_interval(k);
    constexpr int kSamples = 25;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int used = 0;
    for (int j = 0; j < kSamples; ++j) {
        const double s = interval.width() * std::pow(10.0, -6.0 + 3.0 * j / (kSamples - 1));
        const double d = density_from_end(k, interval, which, s);
        if (!(d > 1e-13)) continue;
        const double x = std::log(s);
        const double y = std::log(d);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++used;
    }
    if (used < 5) throw ConvergenceError("endpoint_exponent: too few resolvable density values");
    return (used * sxy - sx * sy) / (used * sxx - sx * sx);
}

PickParameters pick_parameters(BranchIndex k) {
    require_k(k, "pick_parameters");
    const double x = 1e6;
    const double g1 = extended_inverse(k, Complex(x, 0.0)).real();
    const double g2 = extended_inverse(k, Complex(2.0 * x, 0.0)).real();
    const double a = (g2 - g1) / x;
    const double b = g1 - a * x;
    // y Im g_k(iy) = O(y log y); one Richardson step on the finest pair
    double prev = 0.0;
    double last = 0.0;
    for (int j = 4; j <= 20; ++j) {
        const double y = std::ldexp(1.0, -j);
        prev = last;
        last = y * inverse_branch(k, Complex(0.0, y)).imag();
    }
    const double c = 2.0 * last - prev;
    return {std::max(0.0, a), b, std::max(0.0, c)};
}

}  // namespace gammainv
