#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "nrtw/detail/rk45.hpp"
#include "nrtw/errors.hpp"
#include "nrtw/specialfn/gamma_fn.hpp"

namespace nrtw::specialfn {

// Gaussian hypergeometric function 2F1(a, b; c; z) on the principal branch
// (cut along [1, inf)).  Strategy:
//   |z| small            -> power series
//   |z/(z-1)| small      -> Pfaff transformation
//   otherwise            -> linear transformation with the smallest
//                           transformed argument whose connection
//                           coefficients are well conditioned
//   no usable path       -> analytic continuation by integrating the
//                           hypergeometric ODE from a series anchor
// On the cut itself the value is the limit from below, consistent with
// principal powers of (1 - z).

namespace h2f1_detail {

inline constexpr double kSeriesRadius = 0.66;
inline constexpr double kSeriesRadiusMax = 0.88;
// minimum distance of c-a-b / a-b from an integer before a connection
// formula is considered ill-conditioned
inline constexpr double kDegenerateDist = 0.05;

inline double dist_to_integer(Complex z) {
    return std::abs(z - std::round(z.real())) +
           ((std::abs(z.imag()) > 0.5) ? 1.0 : 0.0);
}

inline Complex series(Complex a, Complex b, Complex c, Complex z,
                      int max_terms = 4000) {
    Complex term{1.0, 0.0}, sum{1.0, 0.0};
    int small_count = 0;
    for (int n = 0; n < max_terms; ++n) {
        Complex num = (a + double(n)) * (b + double(n));
        if (num == Complex{0.0, 0.0}) return sum;  // terminating series
        term *= num / ((c + double(n)) * double(n + 1)) * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++small_count >= 2) return sum;
        } else {
            small_count = 0;
        }
    }
    throw NonConvergenceError("2F1 series did not converge, |z|=" +
                              std::to_string(std::abs(z)));
}

// F'' from the hypergeometric ODE z(1-z)F'' + [c-(a+b+1)z]F' - abF = 0
struct OdeParams {
    Complex a, b, c;
};

inline Complex continue_along(const OdeParams& p, Complex z0, Complex f0,
                              Complex fp0, const std::vector<Complex>& waypoints) {
    nrtw::detail::Rk45<2> stepper;
    stepper.rel_tol = 3e-13;
    stepper.abs_tol = 1e-14;
    std::array<Complex, 2> y{f0, fp0};
    Complex zc = z0;
    for (Complex target : waypoints) {
        Complex dz = target - zc;
        Complex zs = zc;
        auto rhs = [&](double t, const std::array<Complex, 2>& s,
                       std::array<Complex, 2>& dydt) {
            Complex z = zs + t * dz;
            Complex denom = z * (1.0 - z);
            Complex fpp = ((p.a + p.b + 1.0) * z - p.c) / denom * s[1] +
                          p.a * p.b / denom * s[0];
            dydt[0] = dz * s[1];
            dydt[1] = dz * fpp;
        };
        y = stepper.integrate(rhs, 0.0, 1.0, y);
        zc = target;
    }
    return y[0];
}

} // namespace h2f1_detail

inline Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);

namespace h2f1_detail {

inline Complex by_continuation(Complex a, Complex b, Complex c, Complex z) {
    // anchor on the ray towards z where the series converges fast
    double bend = (z.imag() > 0.0) ? 1.0 : -1.0;
    if (z.imag() == 0.0 && z.real() > 1.0) bend = -1.0;  // cut: limit from below
    Complex dir = (std::abs(z) > 0.0) ? z / std::abs(z) : Complex{1.0, 0.0};
    Complex anchor = 0.4 * dir;
    Complex f0 = series(a, b, c, anchor);
    Complex fp0 = a * b / c * series(a + 1.0, b + 1.0, c + 1.0, anchor);
    std::vector<Complex> path;
    // detour around the singular point z = 1 if the straight segment
    // comes close to it
    Complex seg = z - anchor;
    double t_closest = std::clamp(((Complex{1.0, 0.0} - anchor) * std::conj(seg)).real() /
                                      std::norm(seg),
                                  0.0, 1.0);
    if (std::abs(anchor + t_closest * seg - 1.0) < 0.2)
        path.push_back(Complex{1.0, 0.45 * bend});
    path.push_back(z);
    return continue_along({a, b, c}, anchor, f0, fp0, path);
}

} // namespace h2f1_detail

inline Complex hyp2f1(Complex a, Complex b, Complex c, Complex z) {
    if (z.imag() == 0.0) z = Complex{z.real(), 0.0};  // drop signed-zero branch flips
    using namespace h2f1_detail;
    using detail::is_nonpositive_integer;

    if (is_nonpositive_integer(c)) {
        // allowed only when the series terminates before the parameter pole
        bool ok = false;
        for (Complex p : {a, b})
            if (is_nonpositive_integer(p) && p.real() > c.real() - 0.5) ok = true;
        if (!ok)
            throw PoleParameterError("2F1: c = " + std::to_string(c.real()) +
                                     " is a nonpositive integer");
    }
    if (z == Complex{0.0, 0.0}) return {1.0, 0.0};
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        return series(a, b, c, z);  // polynomial case, converges everywhere

    if (std::abs(z) <= kSeriesRadius) return series(a, b, c, z);

    const Complex w_pfaff = z / (z - 1.0);
    if (std::abs(w_pfaff) <= kSeriesRadius)
        return std::pow(1.0 - z, -a) * series(a, c - b, c, w_pfaff);

    // z = 1 exactly: Gauss summation (requires Re(c-a-b) > 0)
    if (std::abs(1.0 - z) < 1e-15) {
        Complex cab = c - a - b;
        if (cab.real() <= 0.0)
            throw NonConvergenceError("2F1 diverges at z=1 for Re(c-a-b) <= 0");
        return cgamma(c) * cgamma(cab) * rgamma(c - a) * rgamma(c - b);
    }

    const double d_cab = dist_to_integer(c - a - b);
    const double d_ab = dist_to_integer(a - b);

    struct Candidate {
        int id;
        double absw;
        bool usable;
    };
    const Complex w_1mz = 1.0 - z;
    const Complex w_inv = 1.0 / z;
    const Complex w_inv1mz = 1.0 / (1.0 - z);
    const Complex w_1minv = 1.0 - 1.0 / z;
    std::array<Candidate, 4> cands{{
        {0, std::abs(w_1mz), d_cab > kDegenerateDist},
        {1, std::abs(w_inv), d_ab > kDegenerateDist},
        {2, std::abs(w_inv1mz), d_ab > kDegenerateDist},
        {3, std::abs(w_1minv), d_cab > kDegenerateDist},
    }};
    int best = -1;
    for (const auto& cd : cands)
        if (cd.usable && cd.absw <= 0.72 && (best < 0 || cd.absw < cands[best].absw))
            best = cd.id;

    if (best >= 0) {
        switch (best) {
            case 0: {  // w = 1 - z
                Complex c1 = cgamma(c) * cgamma(c - a - b) * rgamma(c - a) * rgamma(c - b);
                Complex c2 = cgamma(c) * cgamma(a + b - c) * rgamma(a) * rgamma(b);
                return c1 * series(a, b, a + b - c + 1.0, w_1mz) +
                       c2 * std::pow(w_1mz, c - a - b) *
                           series(c - a, c - b, c - a - b + 1.0, w_1mz);
            }
            case 1: {  // w = 1/z
                Complex c1 = cgamma(c) * cgamma(b - a) * rgamma(b) * rgamma(c - a);
                Complex c2 = cgamma(c) * cgamma(a - b) * rgamma(a) * rgamma(c - b);
                return c1 * std::pow(-z, -a) * series(a, a - c + 1.0, a - b + 1.0, w_inv) +
                       c2 * std::pow(-z, -b) * series(b, b - c + 1.0, b - a + 1.0, w_inv);
            }
            case 2: {  // w = 1/(1-z)
                Complex c1 = cgamma(c) * cgamma(b - a) * rgamma(b) * rgamma(c - a);
                Complex c2 = cgamma(c) * cgamma(a - b) * rgamma(a) * rgamma(c - b);
                return c1 * std::pow(1.0 - z, -a) * series(a, c - b, a - b + 1.0, w_inv1mz) +
                       c2 * std::pow(1.0 - z, -b) * series(b, c - a, b - a + 1.0, w_inv1mz);
            }
            default: {  // w = 1 - 1/z
                Complex c1 = cgamma(c) * cgamma(c - a - b) * rgamma(c - a) * rgamma(c - b);
                Complex c2 = cgamma(c) * cgamma(a + b - c) * rgamma(a) * rgamma(b);
                return c1 * std::pow(z, -a) * series(a, a - c + 1.0, a + b - c + 1.0, w_1minv) +
                       c2 * std::pow(1.0 - z, c - a - b) * std::pow(z, a - c) *
                           series(c - a, 1.0 - a, c - a - b + 1.0, w_1minv);
            }
        }
    }

    if (std::abs(z) <= kSeriesRadiusMax) return series(a, b, c, z);
    if (std::abs(w_pfaff) <= kSeriesRadiusMax)
        return std::pow(1.0 - z, -a) * series(a, c - b, c, w_pfaff);

    return by_continuation(a, b, c, z);
}

} // namespace nrtw::specialfn
