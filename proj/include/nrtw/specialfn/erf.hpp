#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "nrtw/errors.hpp"

namespace nrtw::specialfn {

using Complex = std::complex<double>;

namespace erf_detail {

inline Complex taylor(Complex z, int max_terms = 300) {
    // erf(z) = 2/sqrt(pi) sum (-1)^n z^(2n+1) / (n! (2n+1))
    Complex z2 = z * z;
    Complex term = z;
    Complex sum = z;
    for (int n = 1; n < max_terms; ++n) {
        term *= -z2 / double(n);
        Complex add = term / double(2 * n + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum) && n > 3)
            return 2.0 / std::sqrt(std::numbers::pi) * sum;
    }
    throw NonConvergenceError("erf Taylor series did not converge");
}

// erfc(z) for Re z > 0 via the Laplace continued fraction (Lentz):
// sqrt(pi) e^{z^2} erfc(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
inline Complex erfc_cf(Complex z, int max_terms = 400) {
    const double tiny = 1e-290;
    const Complex b = z;  // all partial denominators are z
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i < max_terms; ++i) {
        Complex an = 0.5 * double(i);
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return std::exp(-z * z) / std::sqrt(std::numbers::pi) * h;
    }
    throw NonConvergenceError("erfc continued fraction did not converge");
}

} // namespace erf_detail

// Error function for complex argument (Taylor / continued fraction split at
// |z| = 3; the near-imaginary strip stays on Taylor, where all terms add
// with one sign and the split is unnecessary).
inline Complex erf(Complex z) {
    if (z.imag() == 0.0) return Complex{std::erf(z.real()), 0.0};
    double az = std::abs(z);
    if (az <= 3.0 || std::abs(z.real()) < 0.05 * az) return erf_detail::taylor(z);
    if (z.real() < 0.0) return -erf(-z);
    return 1.0 - erf_detail::erfc_cf(z);
}

inline Complex erfc(Complex z) {
    if (z.imag() == 0.0) return Complex{std::erfc(z.real()), 0.0};
    return 1.0 - erf(z);
}

// Inverse error function on (-1, 1): rational first guess for the normal
// quantile, then Halley steps on erf (erfc form near the tails).
inline double erf_inv(double y) {
    if (!(y > -1.0 && y < 1.0))
        throw DomainError("erf_inv: argument must lie in (-1, 1)");
    if (y == 0.0) return 0.0;
    const double ay = std::abs(y);
    const double sgn = (y > 0.0) ? 1.0 : -1.0;

    // Abramowitz-Stegun 26.2.23 quantile estimate, |error| < 4.5e-4
    double p = 0.5 * (1.0 - ay);  // lower-tail probability, in (0, 1/2]
    double t = std::sqrt(-2.0 * std::log(p));
    double x = t - (2.30753 + 0.27061 * t) /
                       (1.0 + t * (0.99229 + 0.04481 * t));
    x /= std::numbers::sqrt2;

    const double two_over_sqrt_pi = 2.0 / std::sqrt(std::numbers::pi);
    for (int it = 0; it < 4; ++it) {
        // f = erf(x) - ay, evaluated as erfc to keep the tails exact
        double f = (ay > 0.99) ? ((1.0 - ay) - std::erfc(x))
                               : (std::erf(x) - ay);
        double fp = two_over_sqrt_pi * std::exp(-x * x);
        double r = f / fp;
        double step = r / (1.0 + x * r);  // Halley with f'' = -2 x f'
        x -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
    }
    return sgn * x;
}

} // namespace nrtw::specialfn
