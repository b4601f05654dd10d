#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gammainv/gamma.hpp"
#include "gammainv/genus2.hpp"

using namespace gammainv;

namespace {

// Reference values computed once with mpmath at 30 digits.
constexpr double kBetaG = 2.5576639327890194;
constexpr double kGBetaG = 0.9468456052697061;
constexpr double kBeta2 = 3.7480645241476726;
constexpr double kInvGamma2Beta2 = 0.048998984062747027;
constexpr double kU = 1.9258631233903723;

const PickInverse& barnes_inverse() {
    static const PickInverse inverse(barnes_g_function());
    return inverse;
}

const PickInverse& gamma2_pick() {
    static const PickInverse inverse(inverse_gamma2_function());
    return inverse;
}

}  // namespace

TEST_CASE("log G at the integers") {
    const ClassGFunction g = barnes_g_function();
    CHECK(std::abs(g.log(Complex(1.0, 0.0))) < 1e-13);
    CHECK(std::abs(g.log(Complex(2.0, 0.0))) < 1e-13);
    CHECK(g.log(Complex(4.0, 0.0)).real() == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(g.log(Complex(5.0, 0.0)).real() == doctest::Approx(std::log(12.0)).epsilon(1e-12));
    CHECK_THROWS_AS(g.log(Complex(-1.0, 0.0)), DomainError);
}

TEST_CASE("rank-2 gate") {
    CHECK_THROWS_AS(ClassGFunction(1, 0.1, 0.0, LambdaRule{1.0, 2.0 / 3.0, 0.0, 1.0}), DomainError);
    // 1/Gamma has simple zeros at the negative integers: sum l^-2 converges
    CHECK_THROWS_AS(ClassGFunction(1, 0.0, 0.0, LambdaRule{1.0, 1.0, 0.0, 1.0}), DomainError);
    // sum j / j^{3 p} with p = 2/3 diverges
    CHECK_THROWS_AS(ClassGFunction(1, 0.0, 0.0, LambdaRule{1.0, 2.0 / 3.0, 1.0, 0.0}), DomainError);
    CHECK_NOTHROW(ClassGFunction(1, 0.0, 0.0, LambdaRule{1.0, 0.5, 0.0, 1.0}));
    CHECK_THROWS_AS(ClassGFunction(-1, 0.0, 0.0, LambdaRule{1.0, 1.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("derivatives agree with finite differences") {
    const ClassGFunction g = barnes_g_function();
    const double h = 1e-5;
    for (const Complex z : {Complex(2.0, 0.0), Complex(3.0, 1.5), Complex(0.4, 2.0), Complex(-3.0, 0.5)}) {
        CAPTURE(z);
        const Complex fd1 = (g.log(z + h) - g.log(z - h)) / (2.0 * h);
        const Complex fd2 = (g.log_prime(z + h) - g.log_prime(z - h)) / (2.0 * h);
        CHECK(std::abs(fd1 - g.log_prime(z)) < 1e-7 * std::max(1.0, std::abs(fd1)));
        CHECK(std::abs(fd2 - g.log_second(z)) < 1e-7 * std::max(1.0, std::abs(fd2)));
        const ValueAndDerivative both = g.log_with_derivative(z);
        CHECK(std::abs(both.first - g.log(z)) < 1e-14 * std::max(1.0, std::abs(both.first)));
        CHECK(std::abs(both.second - g.log_prime(z)) < 1e-14 * std::max(1.0, std::abs(both.second)));
    }
}

TEST_CASE("adaptive truncation agrees with a long product and a third-order tail") {
    const ClassGFunction g = barnes_g_function();
    const ClassGFunction oracle = barnes_g_function(SeriesTruncation{100000, 3});
    for (const Complex z : {Complex(1.5, 0.0), Complex(2.5, 1.0), Complex(4.0, -2.0), Complex(0.3, 3.0)}) {
        CAPTURE(z);
        CHECK(std::abs(g.log(z) - oracle.log(z)) < 1e-8);
    }
}

TEST_CASE("Barnes G: frozen value and functional equation") {
    const Complex v = barnes_g(Complex(2.5, 1.0));
    CHECK(std::abs(v - Complex(0.743798312514264120, -0.095316784939472387)) < 1e-13);
    CHECK(barnes_g(Complex(4.0, 0.0)).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(barnes_g(Complex(-2.0, 0.0)) == Complex(0.0, 0.0));
    for (const Complex z : {Complex(0.5, 0.0), Complex(1.5, 0.0), Complex(2.5, 1.0), Complex(4.0, 2.0),
                            Complex(-0.5, 0.3), Complex(-2.5, 0.0), Complex(6.0, -3.0), Complex(0.1, 5.0)}) {
        CAPTURE(z);
        const Complex lhs = barnes_g(z + 1.0);
        CHECK(std::abs(lhs - gamma(z) * barnes_g(z)) < 1e-10 * std::abs(lhs));
    }
}

TEST_CASE("Gamma_2") {
    CHECK(gamma2(Complex(1.0, 0.0)).real() == doctest::Approx(std::sqrt(2.0 * kPi)).epsilon(1e-13));
    CHECK_THROWS_AS(gamma2(Complex(-1.0, 0.0)), PoleError);
    const double x = gamma2_inverse(0.01);
    CHECK(x > kBeta2);
    CHECK(gamma2(Complex(x, 0.0)).real() == doctest::Approx(0.01).epsilon(1e-11));
    CHECK(gamma2_inverse_via_pick(0.01) == doctest::Approx(x).epsilon(1e-11));
    CHECK(gamma2_inverse_via_pick(2.0) == doctest::Approx(gamma2_inverse(2.0)).epsilon(1e-11));
    CHECK_THROWS_AS(gamma2_inverse(25.0), DomainError);
    CHECK_THROWS_AS(gamma2_inverse(-1.0), DomainError);
}

TEST_CASE("inflection and minimum points") {
    const ClassGDerived g = classify(barnes_g_function());
    CHECK(g.in_class_g);
    CHECK(g.u == doctest::Approx(kU).epsilon(1e-12));
    CHECK(g.beta == doctest::Approx(kBetaG).epsilon(1e-12));
    CHECK(g.f_beta == doctest::Approx(kGBetaG).epsilon(1e-12));
    const ClassGDerived g2 = classify(inverse_gamma2_function());
    CHECK(g2.in_class_g);
    CHECK(g2.u == doctest::Approx(kU).epsilon(1e-12));
    CHECK(g2.beta == doctest::Approx(kBeta2).epsilon(1e-12));
    CHECK(g2.f_beta == doctest::Approx(kInvGamma2Beta2).epsilon(1e-12));

    const ClassGFunction fn = barnes_g_function();
    CHECK(fn.log_second(Complex(0.5 * g.u, 0.0)).real() < 0.0);
    CHECK(fn.log_second(Complex(2.0 * g.u, 0.0)).real() > 0.0);
    CHECK(std::abs(fn.log_prime(Complex(g.beta, 0.0)).real()) < 1e-12);
    CHECK(fn.log_second(Complex(g.beta, 0.0)).real() > 0.0);
    CHECK_THROWS_AS(inflection_u(shifted_barnes_g_function()), DomainError);
}

TEST_CASE("scaling moves u to u / c") {
    const ClassGFunction fn = barnes_g_function();
    for (double c : {0.5, 2.0, 3.0}) CHECK(inflection_u(fn.scaled(c)) == doctest::Approx(kU / c).epsilon(1e-10));
}

TEST_CASE("membership is lost once b is large") {
    const ClassGFunction g = barnes_g_function();
    double previous = -1e300;
    bool lost = false;
    for (double shift : {0.0, 0.2, 0.5, 1.0, 2.0}) {
        const ClassGFunction fn(1, g.a(), g.b() + shift, g.rule());
        const double u = inflection_u(fn);
        const double slope = fn.log_prime(Complex(u, 0.0)).real();
        CHECK(slope > previous);
        previous = slope;
        if (!classify(fn).in_class_g) lost = true;
    }
    CHECK(lost);
    CHECK_THROWS_AS(PickInverse(ClassGFunction(1, g.a(), g.b() + 2.0, g.rule())), DomainError);
}

TEST_CASE("Pick inverse: anchors and residuals") {
    const PickInverse& inv = barnes_inverse();
    CHECK(inv(Complex(2.0, 0.0)).real() == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(inv(Complex(12.0, 0.0)).real() == doctest::Approx(5.0).epsilon(1e-10));
    const Complex z = inv(Complex(1.0, 1.0));
    CHECK(z.imag() > 0.0);
    CHECK(z.real() > kBetaG);
    CHECK(std::abs(barnes_g(z) - Complex(1.0, 1.0)) < 1e-10 * std::sqrt(2.0));
    CHECK_THROWS_AS(inv(Complex(0.5, 0.0)), DomainError);
    CHECK(inv(Complex(1.0, -1.0)) == std::conj(z));
}

TEST_CASE("Pick inverse maps the upper half plane into Re z > beta") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> log_r(-3.0, 4.0), arg(0.02, kPi - 0.02);
    for (const PickInverse* inv : {&barnes_inverse(), &gamma2_pick()}) {
        const ClassGFunction& fn = inv->function();
        for (int i = 0; i < 40; ++i) {
            const Complex w = std::polar(std::exp(log_r(rng)), arg(rng));
            const Complex z = (*inv)(w);
            CAPTURE(w);
            CHECK(z.imag() > 0.0);
            CHECK(z.real() > inv->derived().beta);
            CHECK(std::abs(std::exp(fn.log(z)) - w) < 1e-10 * std::abs(w));
            CHECK(inv->quadrant_square(w).imag() > 0.0);
        }
        for (double dx : {0.5, 1.0, 5.0}) {
            const double x = inv->derived().beta + dx;
            const double w = std::exp(fn.log(Complex(x, 0.0)).real());
            CHECK((*inv)(Complex(w, 0.0)).real() == doctest::Approx(x).epsilon(1e-9));
        }
    }
}

TEST_CASE("quadrant square near the minimum") {
    const PickInverse& inv = barnes_inverse();
    const Complex q = inv.quadrant_square(Complex(3.0, 0.0));
    CHECK(q.real() > 0.0);
    CHECK(q.imag() == 0.0);
    CHECK(std::abs(inv.quadrant_square(Complex(kGBetaG * (1.0 + 1e-10), 0.0))) < 1e-8);
}

TEST_CASE("Im (log f)' > 0 right of u in the upper half plane") {
    for (const ClassGFunction& fn : {barnes_g_function(), inverse_gamma2_function()}) {
        for (double x : {kU + 0.01, 2.5, 4.0, 10.0}) {
            for (double y : {0.01, 0.5, 3.0, 20.0}) CHECK(fn.log_prime(Complex(x, y)).imag() > 0.0);
        }
    }
}

TEST_CASE("boundary curve decreases in both coordinates") {
    for (const PickInverse* inv : {&barnes_inverse(), &gamma2_pick()}) {
        Complex prev = inv->boundary_curve(0.01);
        CHECK(prev.imag() < 0.0);
        CHECK(std::abs(inv->boundary_curve(1e-9) - std::log(inv->derived().f_beta)) < 1e-8);
        for (int j = 1; j < 50; ++j) {
            const double y = 0.01 * std::pow(5000.0, j / 49.0);
            const Complex c = inv->boundary_curve(y);
            CHECK(c.real() < prev.real());
            CHECK(c.imag() < prev.imag());
            prev = c;
        }
    }
    CHECK(barnes_inverse().boundary_curve(1.0).imag() < 0.0);
}

TEST_CASE("genus-2 density and representation") {
    const PickInverse& inv = barnes_inverse();
    for (double t : {0.01, 0.3, 0.9, 1.2, 3.0, 10.0, 19.5}) CHECK(inv.density(t) > 0.0);
    CHECK_THROWS_AS(inv.density(-1.0), DomainError);
    CHECK_THROWS_AS(inv.density(inv.derived().f_beta), DomainError);
    CHECK(inv.stieltjes_eval(Complex(12.0, 0.0)).real() == doctest::Approx(5.0).epsilon(1e-6));
    const Complex w(1.0, 1.0);
    CHECK(std::abs(inv.stieltjes_eval(w) - inv(w)) < 1e-6);
    CHECK_THROWS_AS(inv.stieltjes_eval(Complex(0.5, 0.0)), DomainError);
    CHECK(std::isfinite(inv.point_mass()));
}
