#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "nrtw/errors.hpp"
#include "nrtw/specialfn/gamma_fn.hpp"

namespace nrtw::specialfn {

namespace ig_detail {

// Kummer-type series for the lower function: gamma(a,z) = z^a e^-z
// sum_n z^n / (a (a+1) ... (a+n)).  Good for Re z >= 0, |z| moderate.
inline Complex lower_series(Complex a, Complex z, int max_terms = 2000) {
    Complex denom = a;
    Complex term = 1.0 / a;
    Complex sum = term;
    for (int n = 1; n < max_terms; ++n) {
        denom += 1.0;
        term *= z / denom;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            return std::pow(z, a) * std::exp(-z) * sum;
    }
    throw NonConvergenceError("gamma_lower series did not converge");
}

// Direct alternating series, stable for Re z < 0 where the Kummer form
// cancels catastrophically against exp(-z).
inline Complex lower_series_alt(Complex a, Complex z, int max_terms = 3000) {
    Complex term = 1.0;  // (-1)^n z^n / n!
    Complex sum = 1.0 / a;
    for (int n = 1; n < max_terms; ++n) {
        term *= -z / double(n);
        Complex add = term / (a + double(n));
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum) && n > 4)
            return std::pow(z, a) * sum;
    }
    throw NonConvergenceError("gamma_lower alternating series did not converge");
}

// Continued fraction for the upper function (modified Lentz), Re z > 0.
inline Complex upper_cf(Complex a, Complex z, int max_terms = 2000) {
    const double tiny = 1e-290;
    Complex b = z + 1.0 - a;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i < max_terms; ++i) {
        Complex an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return std::pow(z, a) * std::exp(-z) * h;
    }
    throw NonConvergenceError("gamma_upper continued fraction did not converge");
}

} // namespace ig_detail

// Upper incomplete gamma Gamma(a, z) on the principal branch of z^a.
inline Complex gamma_upper(Complex a, Complex z) {
    if (z.imag() == 0.0) z = Complex{z.real(), 0.0};  // drop signed-zero branch flips
    using namespace ig_detail;
    if (z == Complex{0.0, 0.0}) {
        if (a.real() <= 0.0)
            throw DomainError("gamma_upper(a, 0) diverges for Re(a) <= 0");
        return cgamma(a);
    }
    const double az = std::abs(z);
    if (z.real() > 0.0 && az > std::abs(a) + 1.5) return upper_cf(a, z);
    if (detail::is_nonpositive_integer(a)) {
        // Gamma(a) pole: climb the recurrence from a+m where the series works
        int m = int(1.5 - a.real());
        Complex am = a + double(m);
        Complex g = gamma_upper(am, z);
        for (int i = m - 1; i >= 0; --i) {
            am -= 1.0;
            g = (g - std::pow(z, am) * std::exp(-z)) / am;
        }
        return g;
    }
    Complex lower = (z.real() >= 0.0) ? lower_series(a, z) : lower_series_alt(a, z);
    return cgamma(a) - lower;
}

} // namespace nrtw::specialfn
