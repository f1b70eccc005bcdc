#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "nrtw/solutions/scaling.hpp"
#include "nrtw/verify.hpp"

using namespace nrtw;
using namespace nrtw::solutions;
using Complex = std::complex<double>;

static std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

TEST_CASE("sc.beta0 with the sigma=-1 companion field") {
    double q = 2.5;
    ReductionSpec spec{ReductionCase::Scaling, q, -1.0,
                       {{"alpha", 0.5}, {"eps", 1.0 / (3.0 - q)}, {"sigma", -1.0}}};
    auto P = sc::P_beta0(spec);
    auto Q = sc::Q_sigma_m1(spec);
    auto z = linspace(-2.0, 2.0, 21);
    auto rep = verify::ode_residual(ReductionCase::Scaling, spec, P, &Q, z);
    CHECK(rep.max_abs < 1e-7);
}

TEST_CASE("sc.beta0 at q=2 solves the logarithmic-limit equation") {
    // the similarity forms stay regular at q = 2; the P-equation becomes
    // eps z P' + ... = b (log P)''
    ReductionSpec spec{ReductionCase::Scaling, 2.0, Complex{0.0, 1.0},
                       {{"alpha", Complex{0.0, 1.0}}, {"eps", 1.0}, {"sigma", -1.0}}};
    auto P = sc::P_beta0(spec);
    auto Q = sc::Q_sigma_m1(spec);
    auto z = linspace(-3.0, 3.0, 21);
    auto rep = verify::ode_residual(ReductionCase::Scaling, spec, P, &Q, z);
    CHECK(rep.max_abs < 1e-7);
}

TEST_CASE("sc.bernoulli closed P with quadrature Q") {
    double q = 2.5;
    ReductionSpec spec{ReductionCase::Scaling, q, -1.0,
                       {{"K", 1.0},
                        {"K1", 1.0},
                        {"K2", 0.0},
                        {"eps", 1.0 / (2.0 * (2.0 - q))},
                        {"sigma", 0.0},
                        {"gamma", 0.0}}};
    auto P = sc::P_gamma0(spec);
    auto Q = sc::Q_gamma0(spec, 0.5);
    auto z = linspace(0.5, 2.0, 16);
    auto rep = verify::ode_residual(ReductionCase::Scaling, spec, P, &Q, z);
    CHECK(rep.max_abs < 1e-6);

    // first integrals: Y = P^{2-q} solves the gamma = 0 equation, and
    // M = Y^{(q-1)/(q-2)} the linear one
    CurveFn Y{CurveKind::closed,
              [&, P](Complex zz) { return std::pow(P(zz), 2.0 - q); }};
    CHECK(verify::first_integral_residual("sc.eqY", spec, Y, z).max_abs < 1e-8);
    CurveFn M{CurveKind::closed,
              [&, P, q](Complex zz) {
                  return std::pow(std::pow(P(zz), 2.0 - q), (q - 1.0) / (q - 2.0));
              }};
    CHECK(verify::first_integral_residual("sc.M", spec, M, z).max_abs < 1e-8);
}

TEST_CASE("sc.bernoulli complex-b mode on the real slice") {
    double q = 2.5;
    ReductionSpec spec{ReductionCase::Scaling, q, Complex{0.0, 1.0},
                       {{"K", 1.0},
                        {"eps", 1.0 / (2.0 * (2.0 - q))},
                        {"sigma", 0.0},
                        {"gamma", 0.0}}};
    auto P = sc::P_gamma0(spec);
    auto z = linspace(0.5, 2.0, 16);
    auto rep = verify::ode_residual(ReductionCase::Scaling, spec, P, nullptr, z);
    CHECK(rep.max_abs < 1e-6);
}

TEST_CASE("sc.bernoulli hypergeometric Q matches the quadrature Q") {
    double q = 4.0;
    ReductionSpec spec{ReductionCase::Scaling, q, -1.0,
                       {{"K", 1.0},
                        {"K1", 1.0},
                        {"K2", 0.0},
                        {"eps", 1.0 / (2.0 * (2.0 - q))},
                        {"sigma", 0.0},
                        {"gamma", 0.0}}};
    auto Qq = sc::Q_gamma0(spec, 0.05);
    auto Qc = sc::Q_gamma0_closed(spec);
    Complex shift = Qc(0.05);  // quadrature anchors its constant at the window edge
    for (double z : linspace(0.05, 0.3, 9)) {
        Complex a = Qq(z);
        Complex b = Qc(z) - shift;
        CHECK(std::abs(a - b) < 1e-9 * (1.0 + std::abs(b)));
    }

    // the full system gate at q = 4
    auto P = sc::P_gamma0(spec);
    auto z = linspace(0.05, 0.3, 12);
    CHECK(verify::ode_residual(ReductionCase::Scaling, spec, P, &Qq, z).max_abs < 1e-6);
}

TEST_CASE("sc.bernoulli.q3 logarithmic branch") {
    ReductionSpec spec{ReductionCase::Scaling, 3.0, 1.0,
                       {{"C", 0.0},
                        {"K1", 1.0},
                        {"K2", 0.0},
                        {"eps", -0.5},
                        {"sigma", 0.0}}};
    auto P = sc::P_gamma0_q3(spec);
    auto Q = sc::Q_gamma0_q3(spec);
    auto z = linspace(1.2, 3.0, 16);
    auto rep = verify::ode_residual(ReductionCase::Scaling, spec, P, &Q, z);
    CHECK(rep.max_abs < 1e-6);

    // Q' from the incomplete-gamma form: dQ/dz = K1 e^C (-log z - C)^{1/2}
    const double h = 1e-4;
    for (double zz : {1.5, 2.0, 2.6}) {
        Complex fd = (-Q(zz + 2 * h) + 8.0 * Q(zz + h) - 8.0 * Q(zz - h) + Q(zz - 2 * h)) /
                     (12.0 * h);
        Complex expect = std::pow(Complex{-std::log(zz), 0.0}, 0.5);
        CHECK(std::abs(fd - expect) < 1e-8 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("sc.q52 generalized-tanh branch") {
    // gamma < 0 with b < 0 keeps A, B real and Y positive on z > 0, where
    // Y = P^{2-q} holds on the principal branch
    double q = 2.5;
    ReductionSpec spec{ReductionCase::Scaling, q, -0.5,
                       {{"gamma", -1.0},
                        {"K1", 1.0},
                        {"K2", 0.0},
                        {"eps", 1.0 / (2.0 * (2.0 - q))},
                        {"sigma", 0.0}}};
    auto P = sc::P_q52(spec);
    auto Y = sc::Y_q52(spec);
    auto Q = sc::Q_q52(spec, 1.0);
    auto z = linspace(1.0, 4.0, 16);

    // first integral with gamma != 0
    CHECK(verify::first_integral_residual("sc.eqY", spec, Y, z).max_abs < 1e-6);

    // P and Y wiring: Y = P^{2-q} = P^{-1/2} pointwise
    for (double zz : z) {
        CHECK(std::abs(P(zz) * Y(zz) * Y(zz) - 1.0) < 1e-10);
        CHECK(std::abs(std::pow(P(zz), -0.5) - Y(zz)) < 1e-10 * (1.0 + std::abs(Y(zz))));
    }

    auto rep = verify::ode_residual(ReductionCase::Scaling, spec, P, &Q, z);
    CHECK(rep.max_abs < 1e-6);
}

TEST_CASE("sc parameter validation") {
    CHECK_THROWS_AS(
        sc::P_beta0(ReductionSpec{ReductionCase::Scaling, 3.0, 1.0, {{"alpha", 1.0}}}),
        ValidationError);
    CHECK_THROWS_AS(
        sc::P_gamma0(ReductionSpec{ReductionCase::Scaling, 3.0, 1.0, {{"K", 1.0}}}),
        ValidationError);
    CHECK_THROWS_AS(
        sc::P_q52(ReductionSpec{ReductionCase::Scaling, 2.4, 1.0, {{"gamma", 1.0}}}),
        ValidationError);
}
