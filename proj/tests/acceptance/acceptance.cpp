// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gammainv/branches.hpp"
#include "gammainv/genus2.hpp"
#include "gammainv/pickrep.hpp"

using namespace gammainv;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double branch_sign(int k) { return (k + 1) % 2 == 0 ? 1.0 : -1.0; }

Verdict branch_identity() {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> log_r(-5.0, 5.0), arg(1e-3, kPi - 1e-3);
    double worst = 0.0;
    bool upper = true;
    for (int k = -1; k <= 6; ++k) {
        for (int i = 0; i < 40; ++i) {
            const Complex w = std::polar(std::exp(log_r(rng)), arg(rng));
            const Complex z = inverse_branch(BranchIndex(k), w);
            worst = std::max(worst, std::abs(gamma(z) - branch_sign(k) * w) / std::max(1.0, std::abs(w)));
            upper = upper && z.imag() > 0.0;
        }
    }
    return {worst <= 1e-9 && upper, fmt("max scaled residual %.2e, all Im > 0: %s", worst) + (upper ? "yes" : "no")};
}

Verdict factorial_anchors() {
    const double w[] = {1, 2, 6, 24, 120};
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(principal_inverse(Complex(w[i], 0.0)).real() - (i + 2)));
    worst = std::max(worst, std::abs(extended_inverse(BranchIndex(1), Complex(4.0 * std::sqrt(kPi) / 3.0, 0.0)).real() + 1.5));
    worst = std::max(worst, std::abs(even_inverse(BranchIndex(0), Complex(-2.0 * std::sqrt(kPi), 0.0)).real() + 0.5));
    return {worst <= 1e-10, fmt("max error %.2e", worst)};
}

Verdict representation() {
    double worst = 0.0;
    for (int k = 1; k <= 4; ++k) {
        const BranchIndex b(k);
        const BranchInterval I = branch_interval(b);
        const double w = I.width();
        const Complex points[] = {Complex(10.0, 0.0),        Complex(-10.0, 0.0),          Complex(I.hi + 0.01 * w, 0.0),
                                  Complex(I.lo - 0.01 * w, 0.0), Complex(0.0, 1.0),            Complex(I.hi, 0.5 * w),
                                  Complex(I.lo, -0.5 * w),   Complex(0.3 * I.hi, 1e-3 * w), Complex(0.5 * I.lo, 1e-3 * w),
                                  Complex(0.5 * I.hi, -1e-2 * w)};
        for (const Complex z : points) worst = std::max(worst, std::abs(stieltjes_eval(b, z) - extended_inverse(b, z)));
    }
    return {worst <= 1e-5, fmt("max |representation - G_k| %.2e over 40 points", worst)};
}

Verdict pick_parameters_check() {
    double a_max = 0.0, b_err = 0.0, c_max = 0.0;
    for (int k = 1; k <= 4; ++k) {
        const PickParameters p = pick_parameters(BranchIndex(k));
        a_max = std::max(a_max, std::abs(p.a));
        b_err = std::max(b_err, std::abs(p.b + k));
        c_max = std::max(c_max, p.c);
    }
    return {a_max < 1e-6 && b_err < 1e-3 && c_max < 1e-4, fmt("max |a| %.2e, max |b+k| %.2e, max c %.2e", a_max, b_err, c_max)};
}

Verdict sum_rules() {
    double worst = 0.0;
    for (int k : {1, 3}) {
        worst = std::max(worst, std::abs(endpoint_identity(BranchIndex(k), Endpoint::left) - cached_critical_point(k).x));
        worst = std::max(worst, std::abs(endpoint_identity(BranchIndex(k), Endpoint::right) - cached_critical_point(k + 1).x));
    }
    return {worst <= 1e-4, fmt("max |integral - x| %.2e", worst)};
}

Verdict exponents() {
    double worst = 0.0;
    for (int k : {1, 2})
        for (const Endpoint e : {Endpoint::left, Endpoint::right})
            worst = std::max(worst, std::abs(endpoint_exponent(BranchIndex(k), e) - 0.5));
    return {worst <= 0.05, fmt("max |exponent - 0.5| %.2e", worst)};
}

Verdict monotonicity() {
    int violations = 0;
    for (int k : {1, 3}) {
        const DensityTable table = density_table(BranchIndex(k), 64, GridScheme::endpoint_refined);
        for (std::size_t i = 1; i < table.nodes.size(); ++i) {
            const DensityNode& a = table.nodes[i - 1];
            const DensityNode& b = table.nodes[i];
            if (b.t < 0.0 && !(b.d > a.d)) ++violations;
            if (a.t > 0.0 && !(b.d < a.d)) ++violations;
        }
    }
    return {violations == 0, fmt("%.0f violations", violations)};
}

Verdict sin_oracle() {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> re(-5.0, 5.0), im(0.01, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Complex z(re(rng), im(rng));
        worst = std::max(worst, std::abs(lp_sin_inverse_comb(z) - lp_sin_inverse(z)));
    }
    const double at_i = std::abs(lp_sin_inverse_comb(Complex(0.0, 1.0)) - Complex(0.0, std::log(1.0 + std::sqrt(2.0))));
    return {worst <= 1e-10 && at_i <= 1e-12, fmt("max comb/closed-form gap %.2e, error at i %.2e", worst, at_i)};
}

Verdict genus2_numbers() {
    const ClassGDerived g = classify(barnes_g_function());
    const ClassGDerived g2 = classify(inverse_gamma2_function());
    const double e1 = std::abs(g.beta - 2.568), e2 = std::abs(g.f_beta - 0.945);
    const double e3 = std::abs(g2.beta - 3.763), e4 = std::abs(g2.f_beta - 0.048);
    const bool pass = e1 <= 1e-3 && e2 <= 1e-3 && e3 <= 1e-3 && e4 <= 1e-3;
    return {pass, fmt("beta_G %.10f (ref 2.568), G(beta_G) %.10f (ref 0.945), ", g.beta, g.f_beta) +
                      fmt("beta_2 %.10f (ref 3.763), 1/Gamma_2(beta_2) %.10f (ref 0.048)", g2.beta, g2.f_beta)};
}

Verdict functional_equation() {
    double worst = 0.0;
    for (const Complex z : {Complex(0.5, 0.0), Complex(1.5, 0.0), Complex(2.5, 1.0), Complex(4.0, 2.0), Complex(-0.5, 0.3),
                            Complex(-2.5, 0.0), Complex(6.0, -3.0), Complex(0.1, 5.0)}) {
        const Complex lhs = barnes_g(z + 1.0);
        worst = std::max(worst, std::abs(lhs - gamma(z) * barnes_g(z)) / std::abs(lhs));
    }
    return {worst < 1e-10, fmt("max relative defect %.2e", worst)};
}

Verdict pick_property() {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> log_r(-3.0, 4.0), arg(1e-3, kPi - 1e-3);
    bool ok = true;
    for (const ClassGFunction& fn : {barnes_g_function(), inverse_gamma2_function()}) {
        const PickInverse inv(fn);
        for (int i = 0; i < 40; ++i) {
            const Complex z = inv(std::polar(std::exp(log_r(rng)), arg(rng)));
            ok = ok && z.imag() > 0.0 && z.real() > inv.derived().beta;
        }
    }
    const PickInverse g(barnes_g_function());
    const double e4 = std::abs(g(Complex(2.0, 0.0)).real() - 4.0);
    const double e5 = std::abs(g(Complex(12.0, 0.0)).real() - 5.0);
    return {ok && e4 <= 1e-8 && e5 <= 1e-8,
            std::string("upper half plane into Re z > beta: ") + (ok ? "yes" : "no") + fmt(", anchor errors %.2e %.2e", e4, e5)};
}

Verdict boundary_curve() {
    int violations = 0;
    for (const ClassGFunction& fn : {barnes_g_function(), inverse_gamma2_function()}) {
        const PickInverse inv(fn);
        Complex prev = inv.boundary_curve(0.01);
        for (int j = 1; j < 50; ++j) {
            const Complex c = inv.boundary_curve(0.01 * std::pow(5000.0, j / 49.0));
            if (!(c.real() < prev.real()) || !(c.imag() < prev.imag())) ++violations;
            prev = c;
        }
    }
    return {violations == 0, fmt("%.0f violations", violations)};
}

Verdict genus2_representation() {
    const PickInverse inv(barnes_g_function());
    const double fb = inv.derived().f_beta;
    double worst = 0.0;
    for (double w : {1.0, 1.5, 2.0, 5.0, 12.0, 100.0}) {
        if (!(w > fb)) return {false, "test point not above f(beta)"};
        worst = std::max(worst, std::abs(inv.stieltjes_eval(Complex(w, 0.0)) - inv(Complex(w, 0.0))));
    }
    return {worst <= 1e-4, fmt("max |representation - inverse| %.2e", worst)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"branch-inverse identity", branch_identity},
        {"factorial anchors", factorial_anchors},
        {"representation reproduction", representation},
        {"Pick parameters", pick_parameters_check},
        {"endpoint sum rules", sum_rules},
        {"endpoint exponent", exponents},
        {"density monotonicity", monotonicity},
        {"sin oracle", sin_oracle},
        {"genus-2 reference numbers", genus2_numbers},
        {"Barnes functional equation", functional_equation},
        {"genus-2 Pick property", pick_property},
        {"boundary curve monotonicity", boundary_curve},
        {"genus-2 representation", genus2_representation},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!v.pass) ++failures;
        std::printf("%s criterion %2d (%s): %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
