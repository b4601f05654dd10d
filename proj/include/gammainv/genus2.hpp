#pragma once

// Entire functions of genus 2 of the form
//   f(z) = z^r exp(a z^2 + b z) prod_j (1 + z/l_j) exp(-z/l_j + z^2/(2 l_j^2))
// with a rank-2 zero sequence l_j, their inflection and minimum points on the
// positive axis, and the Pick inverse f^{-1} on C \ (-inf, f(beta)].

#include <memory>
#include <string>
#include <vector>

#include "gammainv/kernel.hpp"

namespace gammainv {

/// Zeros at -scale * j^power (j = 1, 2, ...) with multiplicity
/// mult_linear * j + mult_const.
struct LambdaRule {
    double scale = 1.0;
    double power = 1.0;
    double mult_linear = 0.0;
    double mult_const = 1.0;

    double value(long j) const;
    double multiplicity(long j) const;
    std::string describe() const;
};

/// The product is summed exactly up to N terms, N >= min_terms and large
/// enough that |z| <= l_N / 4; the remainder is expanded in powers of z.
/// tail_order 0 sums that expansion to convergence, tail_order n >= 3 keeps
/// the powers 3..n only.
struct SeriesTruncation {
    long min_terms = 256;
    int tail_order = 0;
};

class ClassGFunction {
public:
    /// Throws DomainError unless r >= 0 and the rule has rank 2
    /// (sum l^-2 diverges, sum l^-3 converges, counted with multiplicity).
    ClassGFunction(int r, double a, double b, LambdaRule rule, SeriesTruncation truncation = {});

    int r() const { return r_; }
    double a() const { return a_; }
    double b() const { return b_; }
    const LambdaRule& rule() const { return rule_; }
    const SeriesTruncation& truncation() const { return truncation_; }

    /// log f with principal logarithms; z off (-inf, 0].
    Complex log(Complex z) const;
    Complex log_prime(Complex z) const;
    Complex log_second(Complex z) const;
    ValueAndDerivative log_with_derivative(Complex z) const;

    /// log f(z) - r Log z, defined for every z off the zero set.
    Complex log_without_power(Complex z) const;

    /// The instance z -> f(c z) (up to a constant factor), c > 0.
    ClassGFunction scaled(double c) const;

private:
    struct Sums {
        Complex value, first, second;
    };
    Sums product_sums(Complex z, bool want_value, bool want_derivatives) const;
    void require_off_cut(Complex z) const;

    int r_;
    double a_;
    double b_;
    LambdaRule rule_;
    SeriesTruncation truncation_;
};

/// log G: r = 1, zeros -j with multiplicity j + 1.
ClassGFunction barnes_g_function(SeriesTruncation truncation = {});
/// log G(z + 1): r = 0, zeros -j with multiplicity j.
ClassGFunction shifted_barnes_g_function(SeriesTruncation truncation = {});
/// log (1/Gamma_2) = log G - (z/2) log(2 pi).
ClassGFunction inverse_gamma2_function(SeriesTruncation truncation = {});

struct ClassGDerived {
    double u;       // zero of (log f)''
    double beta;    // minimum of f on (u, inf); NaN unless in_class_g
    double f_beta;  // f(beta); NaN unless in_class_g
    bool in_class_g;
};

/// Zero of (log f)'' on (0, inf); requires r > 0.
double inflection_u(const ClassGFunction& fn);

ClassGDerived classify(const ClassGFunction& fn);

/// f^{-1} = (log f)^{-1}(Log w) on C \ (-inf, f(beta)]; maps C+ into
/// {Re z > beta} and is real increasing on (f(beta), inf).
class PickInverse {
public:
    /// Throws DomainError if fn is not in the class.
    explicit PickInverse(ClassGFunction fn);

    const ClassGFunction& function() const { return fn_; }
    const ClassGDerived& derived() const { return derived_; }

    Complex operator()(Complex w) const;

    /// f^{-1}(x + i0) for real x < f(beta), x != 0.
    Complex boundary_value(double x) const;

    /// (f^{-1}(w) - beta)^2.
    Complex quadrant_square(Complex w) const;

    /// log f(beta + iy).
    Complex boundary_curve(double y) const;

    /// d(t) = Im f^{-1}(f(beta) - t + i0) / (pi t) for t > 0, t != f(beta).
    double density(double t) const;

    /// beta + (w - f(beta)) * integral_0^inf d(t) / (t + w - f(beta)) dt.
    Complex stieltjes_eval(Complex w, const QuadratureConfig& cfg = {}) const;

    /// Extrapolated y Im f^{-1}(iy) as y -> 0+ (reported only).
    double point_mass() const;

private:
    Complex solve_log(Complex zeta) const;
    double real_inverse(double w) const;

    ClassGFunction fn_;
    ClassGDerived derived_;
    double spine_step_ = 0.5;
    std::vector<PathPoint> spine_;  // Im zeta = pi/2, increasing Re zeta
};

/// G(z); 0 at the non-positive integers.
Complex barnes_g(Complex z);
/// Gamma_2(z) = (2 pi)^{z/2} / G(z); PoleError at the non-positive integers.
Complex gamma2(Complex z);
/// x > beta_2 with Gamma_2(x) = w, for w in (0, Gamma_2(beta_2)).
double gamma2_inverse(double w);
/// The same value read off the Pick inverse of 1/Gamma_2 at 1/w.
double gamma2_inverse_via_pick(double w);

}  // namespace gammainv
