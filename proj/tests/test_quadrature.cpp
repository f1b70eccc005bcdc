#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "nrtw/detail/rk45.hpp"
#include "nrtw/quadrature.hpp"

using namespace nrtw;
using Complex = std::complex<double>;
using std::numbers::pi;

TEST_CASE("gk15 panel on smooth integrands") {
    auto r = quad::gk15([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(std::abs(r.value.real() - 2.0) < 1e-13);

    auto g = quad::gk15([](double x) { return std::exp(-x * x); }, -1.0, 1.0);
    CHECK(std::abs(g.value.real() - std::sqrt(pi) * std::erf(1.0)) < 1e-13);
}

TEST_CASE("adaptive integration handles endpoint singularities") {
    auto v = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                             {1e-11, 1e-11, 4000});
    CHECK(std::abs(v.real() - 2.0) < 1e-9);

    auto w = quad::integrate([](double x) { return std::log(x); }, 0.0, 1.0,
                             {1e-11, 1e-11, 4000});
    CHECK(std::abs(w.real() + 1.0) < 1e-9);
}

TEST_CASE("adaptive integration of complex-valued integrands") {
    auto v = quad::integrate([](double t) { return std::exp(Complex{0.0, t}); }, 0.0, 1.0);
    CHECK(std::abs(v - Complex{std::sin(1.0), 1.0 - std::cos(1.0)}) < 1e-12);
}

TEST_CASE("integrate_split stitches panels at declared break points") {
    auto f = [](double x) { return 1.0 / std::sqrt(std::abs(x)); };
    auto v = quad::integrate_split(f, {-1.0, 0.0, 1.0}, {1e-10, 1e-10, 4000});
    CHECK(std::abs(v.real() - 4.0) < 1e-8);
}

TEST_CASE("rk45 reproduces closed-form flows") {
    detail::Rk45<1> stepper;
    stepper.rel_tol = 1e-12;
    stepper.abs_tol = 1e-14;

    // y' = i y  ->  y = e^{it}
    auto rot = [](double, const std::array<Complex, 1>& y, std::array<Complex, 1>& d) {
        d[0] = Complex{0.0, 1.0} * y[0];
    };
    auto y = stepper.integrate(rot, 0.0, 2.0, {Complex{1.0, 0.0}});
    CHECK(std::abs(y[0] - std::exp(Complex{0.0, 2.0})) < 1e-10);

    // logistic y' = y(1-y), y(0)=1/2 -> y(t) = 1/(1+e^{-t})
    detail::Rk45<1> s2;
    s2.rel_tol = 1e-12;
    auto logistic = [](double, const std::array<Complex, 1>& y, std::array<Complex, 1>& d) {
        d[0] = y[0] * (1.0 - y[0]);
    };
    auto z = s2.integrate(logistic, 0.0, 3.0, {Complex{0.5, 0.0}});
    CHECK(std::abs(z[0].real() - 1.0 / (1.0 + std::exp(-3.0))) < 1e-10);

    // integration backwards in the independent variable
    auto back = s2.integrate(logistic, 3.0, 0.0, z);
    CHECK(std::abs(back[0].real() - 0.5) < 1e-10);
}
