#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "nrtw/errors.hpp"

namespace nrtw::detail {

// Newton iteration with a bisection safeguard on a bracketing interval.
// f must be monotone-ish inside [lo, hi] with f(lo), f(hi) of opposite sign;
// fprime may underestimate but must not be zero at the root.
inline double newton_bisect(const std::function<double(double)>& f,
                            const std::function<double(double)>& fprime,
                            double lo, double hi, double x0,
                            double xtol = 1e-14, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw BracketError("newton_bisect: endpoints do not bracket a root");

    double x = (x0 > lo && x0 < hi) ? x0 : 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        double fx = f(x);
        if (fx == 0.0) return x;
        if (std::signbit(fx) == std::signbit(flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        double dfx = fprime(x);
        double step = (dfx != 0.0) ? fx / dfx : 0.0;
        double xn = x - step;
        if (!(xn > lo && xn < hi) || step == 0.0)
            xn = 0.5 * (lo + hi);  // Newton left the bracket
        if (std::abs(xn - x) < xtol * (1.0 + std::abs(xn))) return xn;
        x = xn;
    }
    throw NonConvergenceError("newton_bisect: no convergence, final bracket [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Grow [a, b] around a seed until f changes sign.  Expansion is stepwise
// with capped growth and every new segment is checked against the previous
// endpoint, so narrow sign-change valleys are not jumped over.
inline std::pair<double, double> grow_bracket(const std::function<double(double)>& f,
                                              double seed, double step0 = 0.5,
                                              double lo_limit = -1e12,
                                              double hi_limit = 1e12,
                                              int max_grow = 400) {
    auto usable = [](double v) { return std::isfinite(v); };
    double a = std::max(seed - step0, lo_limit);
    double b = std::min(seed + step0, hi_limit);
    double fa = f(a), fb = f(b);
    if (usable(fa) && usable(fb) && std::signbit(fa) != std::signbit(fb))
        return {a, b};
    double step = step0;
    const double step_cap = 8.0 * step0;
    for (int i = 0; i < max_grow; ++i) {
        step = std::min(step * 1.6, step_cap);
        if (a > lo_limit) {
            double an = std::max(a - step, lo_limit);
            double fan = f(an);
            if (usable(fan) && usable(fa) && std::signbit(fan) != std::signbit(fa))
                return {an, a};
            a = an;
            fa = fan;
        }
        if (b < hi_limit) {
            double bn = std::min(b + step, hi_limit);
            double fbn = f(bn);
            if (usable(fbn) && usable(fb) && std::signbit(fbn) != std::signbit(fb))
                return {b, bn};
            b = bn;
            fb = fbn;
        }
        if (usable(fa) && usable(fb) && std::signbit(fa) != std::signbit(fb))
            return {a, b};
    }
    throw BracketError("grow_bracket: no sign change found");
}

} // namespace nrtw::detail
