#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "nrtw/errors.hpp"

namespace nrtw::specialfn {

using Complex = std::complex<double>;

struct WeierstrassInvariants {
    Complex g2{0.0, 0.0};
    Complex g3{0.0, 0.0};

    Complex discriminant() const { return g2 * g2 * g2 - 27.0 * g3 * g3; }
    bool degenerate(double tol = 1e-12) const {
        double scale = std::max({std::abs(g2) * std::abs(g2) * std::abs(g2),
                                 std::abs(g3) * std::abs(g3), 1e-300});
        return std::abs(discriminant()) < tol * scale;
    }
};

namespace wp_detail {

inline constexpr int kLaurentTerms = 12;
inline constexpr double kPoleMagnitude = 1e12;

// Laurent coefficients c_k of wp(z) = z^-2 + sum_{k>=2} c_k z^(2k-2)
inline std::array<Complex, kLaurentTerms + 1> laurent_coeffs(const WeierstrassInvariants& inv) {
    std::array<Complex, kLaurentTerms + 1> c{};
    c[2] = inv.g2 / 20.0;
    c[3] = inv.g3 / 28.0;
    for (int k = 4; k <= kLaurentTerms; ++k) {
        Complex s{0.0, 0.0};
        for (int m = 2; m <= k - 2; ++m) s += c[m] * c[k - m];
        c[k] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * s;
    }
    return c;
}

inline Complex laurent_eval(Complex z, const std::array<Complex, kLaurentTerms + 1>& c,
                            double& trunc) {
    Complex z2 = z * z;
    Complex sum = 1.0 / z2;
    Complex zp = z2;  // z^(2k-2) for k = 2
    Complex last{0.0, 0.0};
    for (int k = 2; k <= kLaurentTerms; ++k) {
        last = c[k] * zp;
        sum += last;
        zp *= z2;
    }
    trunc = std::abs(last);
    return sum;
}

} // namespace wp_detail

// Weierstrass elliptic function via the Laurent series near the origin plus
// repeated application of the duplication formula.
inline Complex weierstrass_p(Complex z, const WeierstrassInvariants& inv) {
    using namespace wp_detail;
    if (z == Complex{0.0, 0.0})
        throw PoleError("weierstrass_p: z = 0 is a lattice pole");

    const auto c = laurent_coeffs(inv);

    // shrink until the truncated Laurent tail is negligible
    int doublings = 0;
    Complex zs = z;
    double trunc;
    Complex p = laurent_eval(zs, c, trunc);
    while (trunc > 1e-17 * std::abs(p) && doublings < 48) {
        zs *= 0.5;
        ++doublings;
        p = laurent_eval(zs, c, trunc);
    }

    for (int i = 0; i < doublings; ++i) {
        Complex p2 = p * p;
        Complex dp2 = 4.0 * p * p2 - inv.g2 * p - inv.g3;  // (wp')^2
        Complex ddp = 6.0 * p2 - 0.5 * inv.g2;             // wp''
        if (std::abs(dp2) == 0.0)
            throw PoleError("weierstrass_p: duplication hit a half-period");
        p = -2.0 * p + 0.25 * ddp * ddp / dp2;
        if (std::abs(p) > kPoleMagnitude) {
            double dist = 1.0 / std::sqrt(std::abs(p));
            throw PoleError("weierstrass_p: argument within ~" + std::to_string(dist) +
                            " of a lattice point");
        }
    }
    return p;
}

inline Complex weierstrass_p(Complex z, Complex g2, Complex g3) {
    return weierstrass_p(z, WeierstrassInvariants{g2, g3});
}

} // namespace nrtw::specialfn
