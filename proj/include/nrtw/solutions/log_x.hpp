#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <vector>

#include "nrtw/detail/rk45.hpp"
#include "nrtw/solutions/implicit.hpp"
#include "nrtw/solutions/types.hpp"

// log(x) reduction.  c2 = 0 separates and solves in closed form; c2 != 0
// autonomizes to w(P) = P', linear at q = 3 (quadrature-implicit P) and an
// Abel equation of the second kind in canonical form at q = 7/3.

namespace nrtw::solutions::lx {

// c2 = 0: P = (2b (q-3)(z+z0)/(q-1))^{1/(q-1)},
//         Q = K (z+z0)^{sigma(sigma+1)(q-1)/(2(q-3))}
inline CurveFn P_c2zero(const ReductionSpec& spec) {
    const double q = spec.q();
    if (std::abs(q - 3.0) < 1e-12)
        throw ValidationError("lx.c2zero: q = 3 degenerates the closed form");
    const Complex b = spec.b();
    const Complex z0 = spec.get_or("z0", {0.0, 0.0});
    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        return std::pow(2.0 * b * (q - 3.0) / (q - 1.0) * (z + z0), 1.0 / (q - 1.0));
    };
    return c;
}

inline CurveFn Q_c2zero(const ReductionSpec& spec) {
    const double q = spec.q();
    const Complex z0 = spec.get_or("z0", {0.0, 0.0});
    const Complex K = spec.get_or("K", {1.0, 0.0});
    const Complex sigma = spec.get_or("sigma", {0.0, 0.0});
    const Complex expo = sigma * (sigma + 1.0) * (q - 1.0) / (2.0 * (q - 3.0));
    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex { return K * std::pow(z + z0, expo); };
    return c;
}

// c2 != 0, q = 3: P' = w(P) = K P^2 - P^3/(b c2^2) - P/c2, inverted through
// the quadrature  int dP / w(P) = z - z_anchor  with P(z_anchor) = P_anchor.
inline CurveFn P_q3(const ReductionSpec& spec, double p_anchor, double z_anchor) {
    if (std::abs(spec.q() - 3.0) > 1e-12)
        throw ValidationError("lx.q3: requires q = 3");
    if (!spec.real_mode())
        throw ValidationError("lx.q3: implicit quadrature tracks real parameters only");
    const double b = spec.b().real();
    const double c2 = spec.get("c2").real();
    if (c2 == 0.0) throw ValidationError("lx.q3: requires c2 != 0");
    const double K = spec.get("K").real();

    auto w = [=](double P) { return K * P * P - P * P * P / (b * c2 * c2) - P / c2; };
    // cumulative map z(P), tracked incrementally from the anchor
    struct Map {
        std::function<double(double)> w;
        double p_last, z_last;
        quad::AdaptiveOptions opt{1e-12, 1e-12, 4000};
        double z_of(double P) {
            z_last += quad::integrate([this](double s) { return Complex{1.0 / w(s), 0.0}; },
                                      p_last, P, opt)
                          .real();
            p_last = P;
            return z_last;
        }
    };
    auto map = std::make_shared<Map>(Map{w, p_anchor, z_anchor});
    auto impl = std::make_shared<ImplicitCurve>(
        [map](double P, double z) { return map->z_of(P) - z; },
        [w](double P, double) { return 1.0 / w(P); }, p_anchor, 1e-12, 1e12);

    CurveFn c;
    c.kind = CurveKind::implicit;
    c.eval = [impl](Complex z) -> Complex {
        detail::require_real_axis(z, "lx.q3");
        return {impl->solve(z.real()), 0.0};
    };
    return c;
}

// closed general solution of the linearized w-equation at q = 3
inline CurveFn w_q3(const ReductionSpec& spec) {
    const Complex b = spec.b();
    const Complex c2 = spec.get("c2");
    const Complex K = spec.get("K");
    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex P) -> Complex {
        return K * P * P - P * P * P / (b * c2 * c2) - P / c2;
    };
    return c;
}

// ---- q = 7/3 canonical Abel data ----
//
// The chain w = P', s = w P^{-4/3}, xi = -P/(b c2^2) lands on
//    s ds/dxi - s = -(3/(4 b^{2/3} (c2^2)^{5/3})) xi^{-5/3}.
// All thirds-powers follow the real odd-root convention (cf. the module
// docs): principal complex powers would rotate the coefficient by a phase.

namespace detail {

// x^(k/3) with the real cube root for negative x
inline double third_pow(double x, int k) {
    return std::pow(std::cbrt(x), double(k));
}

} // namespace detail

struct AbelCanonical {
    double coef;  // 3 / (4 b^{2/3} (c2^2)^{5/3})
    Complex b;
    double c2;

    double residual(double xi, double s, double dsdxi) const {
        return s * dsdxi - s + coef * detail::third_pow(xi, -5);
    }

    // integrates s(xi) from initial data; returns the sampled path
    std::vector<std::pair<double, double>> integrate(double xi0, double s0,
                                                     double xi1, int samples) const {
        nrtw::detail::Rk45<1> stepper;
        stepper.rel_tol = 1e-11;
        stepper.abs_tol = 1e-13;
        std::vector<std::pair<double, double>> path;
        path.reserve(samples + 1);
        path.push_back({xi0, s0});
        auto rhs = [this](double xi, const std::array<Complex, 1>& y,
                          std::array<Complex, 1>& d) {
            d[0] = 1.0 - coef * detail::third_pow(xi, -5) / y[0];
        };
        double step = (xi1 - xi0) / samples;
        std::array<Complex, 1> y{Complex{s0, 0.0}};
        for (int i = 1; i <= samples; ++i) {
            y = stepper.integrate(rhs, xi0 + (i - 1) * step, xi0 + i * step, y);
            path.push_back({xi0 + i * step, y[0].real()});
        }
        return path;
    }
};

inline AbelCanonical make_q73(const ReductionSpec& spec) {
    if (std::abs(spec.q() - 7.0 / 3.0) > 1e-12)
        throw ValidationError("lx.q73: requires q = 7/3");
    if (spec.b().imag() != 0.0)
        throw ValidationError("lx.q73: the odd-root power convention needs real b");
    const double b = spec.b().real();
    const double c2 = spec.get("c2").real();
    if (c2 == 0.0) throw ValidationError("lx.q73: requires c2 != 0");
    double coef = 3.0 / (4.0 * detail::third_pow(b, 2) * detail::third_pow(c2 * c2, 5));
    return {coef, spec.b(), c2};
}

// residual of the pre-canonical w-equation at q = 7/3 along a sampled s(xi)
// path mapped back through P = -b c2^2 xi, w = s P^{4/3}
inline double q73_chain_residual(const AbelCanonical& ab,
                                 const std::vector<std::pair<double, double>>& path) {
    const double b = ab.b.real(), c2 = ab.c2;
    auto P_of = [&](double xi) { return -b * c2 * c2 * xi; };
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < path.size(); ++i) {
        // centred first derivative dw/dP on the sampled grid
        auto w_at = [&](std::size_t j) {
            return path[j].second * detail::third_pow(P_of(path[j].first), 4);
        };
        double hP = P_of(path[i + 1].first) - P_of(path[i].first);
        double dw = (-w_at(i + 2) + 8.0 * w_at(i + 1) - 8.0 * w_at(i - 1) + w_at(i - 2)) /
                    (12.0 * hP);
        double P = P_of(path[i].first);
        double w = w_at(i);
        double resid = w * dw - 4.0 / (3.0 * P) * w * w +
                       detail::third_pow(P, 4) * w / (b * c2 * c2) +
                       3.0 / (4.0 * c2 * c2) * P;
        worst = std::max(worst, std::abs(resid));
    }
    return worst;
}

} // namespace nrtw::solutions::lx
