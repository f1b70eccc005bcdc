#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace nrtw::specialfn {

using Complex = std::complex<double>;

namespace detail {

// Lanczos approximation, g = 7, 9 terms.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_c[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_nonpositive_integer(Complex z, double tol = 1e-13) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < tol;
}

} // namespace detail

// Gamma function for complex argument.  Returns inf at the poles.
inline Complex cgamma(Complex z) {
    using std::numbers::pi;
    if (detail::is_nonpositive_integer(z))
        return {std::numeric_limits<double>::infinity(), 0.0};
    if (z.real() < 0.5)  // reflection
        return pi / (std::sin(pi * z) * cgamma(1.0 - z));
    z -= 1.0;
    Complex x = detail::lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += detail::lanczos_c[i] / (z + Complex(i, 0));
    Complex t = z + detail::lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// 1/Gamma; exactly zero at the poles, which keeps connection-formula
// coefficients finite when a parameter is a nonpositive integer.
inline Complex rgamma(Complex z) {
    if (detail::is_nonpositive_integer(z)) return {0.0, 0.0};
    return 1.0 / cgamma(z);
}

} // namespace nrtw::specialfn
