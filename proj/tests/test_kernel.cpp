#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammainv/kernel.hpp"

using namespace gammainv;

TEST_CASE("principal_log puts the negative axis on the upper side") {
    CHECK(principal_log(Complex(-1.0, 0.0)).imag() == doctest::Approx(kPi));
    CHECK(principal_log(Complex(-1.0, -0.0)).imag() == doctest::Approx(kPi));
    CHECK(principal_log(Complex(-2.0, -1e-300)).imag() == doctest::Approx(-kPi));
    CHECK_THROWS_AS(principal_log(Complex(0.0, 0.0)), DomainError);
}

TEST_CASE("newton_solve finds square roots and honours the guard") {
    const HolomorphicMap square = [](Complex z) { return ValueAndDerivative{z * z, 2.0 * z}; };
    const Complex root = newton_solve(square, Complex(1.0, 1.0), Complex(0.0, 2.0), NewtonConfig{});
    CHECK(std::abs(root - Complex(1.0, 1.0)) < 1e-14);
    const Complex other = newton_solve(square, Complex(-1.0, -0.5), Complex(0.0, 2.0), NewtonConfig{});
    CHECK(std::abs(other - Complex(-1.0, -1.0)) < 1e-14);
    const DomainGuard upper = [](Complex z) { return z.imag() > 0.0; };
    CHECK_THROWS_AS(newton_solve(square, Complex(1.0, -1.0), Complex(0.0, 2.0), NewtonConfig{}, upper), DomainError);
}

TEST_CASE("newton_solve reports non-convergence") {
    const HolomorphicMap expo = [](Complex z) { return ValueAndDerivative{std::exp(z), std::exp(z)}; };
    NewtonConfig cfg;
    cfg.max_iter = 20;
    CHECK_THROWS_AS(newton_solve(expo, Complex(0.0, 0.0), Complex(0.0, 0.0), cfg), ConvergenceError);
    cfg.residual_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("path_continuation follows the logarithm around the origin") {
    const HolomorphicMap expo = [](Complex z) { return ValueAndDerivative{std::exp(z), std::exp(z)}; };
    const std::vector<Complex> loop = {Complex(0.0, 1.0), Complex(-1.0, 0.0), Complex(0.0, -1.0), Complex(1.0, 0.0)};
    const Complex z = path_continuation(expo, PathPoint{Complex(1.0, 0.0), Complex(0.0, 0.0)}, loop, NewtonConfig{},
                                        {}, 0.25);
    CHECK(std::abs(z - Complex(0.0, 2.0 * kPi)) < 1e-12);
}

TEST_CASE("path_continuation visits every accepted point and respects its budget") {
    const HolomorphicMap square = [](Complex z) { return ValueAndDerivative{z * z, 2.0 * z}; };
    int visits = 0;
    const Complex end = Complex(4.0, 0.0);
    path_continuation(square, PathPoint{Complex(1.0, 0.0), Complex(1.0, 0.0)}, std::span(&end, 1), NewtonConfig{}, {},
                      0.5, [&](const PathPoint&) { ++visits; });
    CHECK(visits == 6);
    NewtonConfig tight;
    tight.max_path_segments = 2;
    CHECK_THROWS_AS(path_continuation(square, PathPoint{Complex(1.0, 0.0), Complex(1.0, 0.0)}, std::span(&end, 1),
                                      tight, {}, 0.5),
                    ContinuationError);
}

TEST_CASE("find_root_bracketed") {
    const double x = find_root_bracketed([](double t) { return std::cos(t); }, 1.0, 2.0);
    CHECK(x == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK_THROWS_AS(find_root_bracketed([](double t) { return t * t + 1.0; }, -1.0, 1.0), DomainError);
}

TEST_CASE("adaptive_integrate with endpoint substitutions") {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    CHECK(adaptive_integrate([](double t) { return std::exp(t); }, 0.0, 1.0, cfg) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));

    cfg.endpoint_substitution = EndpointSubstitution::sqrt;
    CHECK(adaptive_integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, cfg) ==
          doctest::Approx(2.0).epsilon(1e-12));
    cfg.singular_end = SingularEnd::upper;
    CHECK(adaptive_integrate([](double t) { return 1.0 / std::sqrt(1.0 - t); }, 0.0, 1.0, cfg) ==
          doctest::Approx(2.0).epsilon(1e-12));

    cfg.endpoint_substitution = EndpointSubstitution::log;
    cfg.singular_end = SingularEnd::lower;
    CHECK(adaptive_integrate([](double t) { return std::log(t); }, 0.0, 1.0, cfg) ==
          doctest::Approx(-1.0).epsilon(1e-12));

    const Complex c = adaptive_integrate<Complex>([](double t) { return std::exp(Complex(0.0, t)); }, 0.0, kPi);
    CHECK(std::abs(c - Complex(0.0, 2.0)) < 1e-10);
}

TEST_CASE("adaptive_integrate reports an exhausted budget") {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-14;
    cfg.max_subdivisions = 3;
    CHECK_THROWS_AS(adaptive_integrate([](double t) { return std::sin(1.0 / t); }, 1e-3, 1.0, cfg), QuadratureError);
    cfg.abs_tol = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
