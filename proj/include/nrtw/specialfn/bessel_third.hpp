#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "nrtw/errors.hpp"

namespace nrtw::specialfn {

// Bessel and modified Bessel functions of order 1/3 on x > 0, the only order
// the Abel-equation parametrisations need.  Orders +-1/3 (and the +-2/3, 4/3
// neighbours used by derivative recurrences) share generic kernels:
//   J, I   ascending series (J switches to the Hankel expansion at x = 12,
//          I at x = 30)
//   Y      connection formula from J_{+-nu} below the switch, Hankel above
//   K      connection formula from I_{+-nu} for x < 2, Steed's continued
//          fraction beyond (the asymptotic series bottoms out near 1e-7 in
//          the mid range, far short of target accuracy)

enum class BesselKind { J, Y, I, K };

namespace bessel_detail {

inline constexpr double jy_switch = 12.0;
inline constexpr double i_switch = 30.0;
inline constexpr double k_switch = 2.0;

inline double j_series(double nu, double x, int max_terms = 400) {
    const double x2 = 0.25 * x * x;
    double term = std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
    double sum = term;
    for (int k = 1; k < max_terms; ++k) {
        term *= -x2 / (double(k) * (nu + double(k)));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum) && k > 3) return sum;
    }
    throw NonConvergenceError("Bessel J series did not converge");
}

inline double i_series(double nu, double x, int max_terms = 600) {
    const double x2 = 0.25 * x * x;
    double term = std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
    double sum = term;
    for (int k = 1; k < max_terms; ++k) {
        term *= x2 / (double(k) * (nu + double(k)));
        sum += term;
        if (term < 1e-17 * sum && k > 3) return sum;
    }
    throw NonConvergenceError("Bessel I series did not converge");
}

// Hankel expansion; sums P and Q to their smallest terms.
inline void hankel_pq(double nu, double x, double& p, double& q) {
    const double mu = 4.0 * nu * nu;
    p = 1.0;
    q = (mu - 1.0) / (8.0 * x);
    double term = q;
    double prev = std::abs(term);
    int k = 1;
    while (k < 60) {
        term *= (mu - double(2 * k + 1) * double(2 * k + 1)) / (8.0 * x * double(k + 1));
        double mag = std::abs(term);
        if (mag > prev) break;  // divergent tail reached
        if (k % 2 == 1)
            p += (((k + 1) / 2) % 2 == 1) ? -term : term;
        else
            q += ((k / 2) % 2 == 1) ? -term : term;
        prev = mag;
        ++k;
    }
}

inline void jy_asymptotic(double nu, double x, double& j, double& y) {
    using std::numbers::pi;
    double p, q;
    hankel_pq(nu, x, p, q);
    const double chi = x - (0.5 * nu + 0.25) * pi;
    const double f = std::sqrt(2.0 / (pi * x));
    j = f * (p * std::cos(chi) - q * std::sin(chi));
    y = f * (p * std::sin(chi) + q * std::cos(chi));
}

inline double i_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= -(mu - double(2 * k - 1) * double(2 * k - 1)) / (8.0 * x * double(k));
        if (std::abs(term) > 1.0) break;
        sum += term;
        if (std::abs(term) < 1e-17) break;
    }
    return std::exp(x) / std::sqrt(2.0 * std::numbers::pi * x) * sum;
}

// Steed's continued fraction (CF2) for K_mu, K_{mu+1}; |mu| < 1, x >= 2.
inline void k_cf2(double mu, double x, double& kmu, double& kmup1) {
    using std::numbers::pi;
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 10000; ++i) {
        a -= 2.0 * double(i - 1);
        c = -a * c / double(i);
        double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 1e-16) {
            h = a1 * h;
            kmu = std::sqrt(pi / (2.0 * x)) * std::exp(-x) / s;
            kmup1 = kmu * (mu + x + 0.5 - h) / x;
            return;
        }
    }
    throw NonConvergenceError("Bessel K continued fraction did not converge");
}

inline double j_any(double nu, double x) {
    if (x < jy_switch) return j_series(nu, x);
    double j, y;
    jy_asymptotic(nu, x, j, y);
    return j;
}

inline double y_any(double nu, double x) {
    using std::numbers::pi;
    if (x < jy_switch)
        return (j_series(nu, x) * std::cos(nu * pi) - j_series(-nu, x)) /
               std::sin(nu * pi);
    double j, y;
    jy_asymptotic(nu, x, j, y);
    return y;
}

inline double i_any(double nu, double x) {
    return (x < i_switch) ? i_series(nu, x) : i_asymptotic(nu, x);
}

// K_nu for nu in (0, 1); even in nu.
inline double k_frac(double nu, double x) {
    using std::numbers::pi;
    nu = std::abs(nu);
    if (x < k_switch)
        return 0.5 * pi * (i_series(-nu, x) - i_series(nu, x)) / std::sin(nu * pi);
    double kmu, kmup1;
    k_cf2(nu, x, kmu, kmup1);
    return kmu;
}

inline double k_any(double nu, double x) {
    nu = std::abs(nu);
    if (nu < 1.0) return k_frac(nu, x);
    // one upward recurrence step covers the 4/3 order:
    // K_{nu} = K_{nu-2} + 2(nu-1)/x K_{nu-1}, K being even in its order
    double km1 = k_frac(nu - 1.0, x);
    double km2 = k_frac(nu - 2.0, x);
    return km2 + 2.0 * (nu - 1.0) / x * km1;
}

} // namespace bessel_detail

// order 1/3 values
inline double bessel_third(BesselKind kind, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_third: requires x > 0");
    constexpr double nu = 1.0 / 3.0;
    switch (kind) {
        case BesselKind::J: return bessel_detail::j_any(nu, x);
        case BesselKind::Y: return bessel_detail::y_any(nu, x);
        case BesselKind::I: return bessel_detail::i_any(nu, x);
        default: return bessel_detail::k_any(nu, x);
    }
}

// d/dx of the order-1/3 functions via the stable +-1 order recurrences
inline double bessel_third_deriv(BesselKind kind, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_third_deriv: requires x > 0");
    constexpr double nu = 1.0 / 3.0;
    using namespace bessel_detail;
    switch (kind) {
        case BesselKind::J: return nu / x * j_any(nu, x) - j_any(nu + 1.0, x);
        case BesselKind::Y: return nu / x * y_any(nu, x) - y_any(nu + 1.0, x);
        case BesselKind::I: return nu / x * i_any(nu, x) + i_any(nu + 1.0, x);
        default: return nu / x * k_any(nu, x) - k_any(nu + 1.0, x);
    }
}

} // namespace nrtw::specialfn
