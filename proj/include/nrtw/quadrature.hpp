#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

#include "nrtw/errors.hpp"

namespace nrtw::quad {

using Complex = std::complex<double>;

// Gauss(7)-Kronrod(15) node/weight table on [-1, 1].  All nodes are interior,
// so integrands may be singular at the endpoints of a panel.
namespace gk {
// positive Kronrod abscissae (x = 0 handled separately)
inline constexpr double xk[7] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898};
inline constexpr double wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};  // wk[7] is the x=0 weight
// Gauss weights attach to xk[1], xk[3], xk[5] and x = 0
inline constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};
} // namespace gk

struct PanelResult {
    Complex value;
    double err;
};

template <class F>
PanelResult gk15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    Complex f0 = f(mid);
    Complex k = gk::wk[7] * f0;
    Complex g = gk::wg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = hl * gk::xk[i];
        Complex s = f(mid - dx) + f(mid + dx);
        k += gk::wk[i] * s;
        if (i % 2 == 1) g += gk::wg[i / 2] * s;
    }
    k *= hl;
    g *= hl;
    // |K - G| overestimates the K15 error on smooth panels, which just buys
    // a few extra subdivisions; on singular panels it does not lie
    return {k, std::abs(k - g)};
}

struct AdaptiveOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_panels = 4000;
};

// Globally adaptive bisection driven by per-panel error estimates.
template <class F>
Complex integrate(const F& f, double a, double b, AdaptiveOptions opt = {}) {
    if (a == b) return Complex{0.0, 0.0};
    struct Panel {
        double a, b, err;
        Complex val;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    std::priority_queue<Panel> heap;
    auto first = gk15(f, a, b);
    heap.push({a, b, first.err, first.value});
    Complex total = first.value;
    double total_err = first.err;
    int panels = 1;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (panels >= opt.max_panels)
            throw NonConvergenceError("adaptive quadrature: panel budget exhausted, err=" +
                                      std::to_string(total_err));
        Panel worst = heap.top();
        heap.pop();
        double m = 0.5 * (worst.a + worst.b);
        if (m == worst.a || m == worst.b)
            throw NonConvergenceError("adaptive quadrature: panel underflow near " +
                                      std::to_string(m));
        auto left = gk15(f, worst.a, m);
        auto right = gk15(f, m, worst.b);
        total += left.value + right.value - worst.val;
        total_err += left.err + right.err - worst.err;
        heap.push({worst.a, m, left.err, left.value});
        heap.push({m, worst.b, right.err, right.value});
        ++panels;
    }
    return total;
}

// Integrate over a list of panels split at known awkward points (kinks,
// integrable endpoint singularities).
template <class F>
Complex integrate_split(const F& f, const std::vector<double>& breaks,
                        AdaptiveOptions opt = {}) {
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        total += integrate(f, breaks[i], breaks[i + 1], opt);
    return total;
}

} // namespace nrtw::quad
