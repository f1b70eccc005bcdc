#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "nrtw/errors.hpp"

namespace nrtw::detail {

// Dormand-Prince 5(4) with PI step control for small complex systems.
// State is std::array<std::complex<double>, N>; the independent variable is
// real.  RHS signature: void(double t, const State&, State& dydt).
template <std::size_t N>
struct Rk45 {
    using Complex = std::complex<double>;
    using State = std::array<Complex, N>;
    using Rhs = std::function<void(double, const State&, State&)>;

    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double h_init = 1e-3;
    long max_steps = 200000;

    // Integrates y from t0 to t1; calls observer(t, y) after every accepted
    // step (observer may be null).
    State integrate(const Rhs& rhs, double t0, double t1, State y,
                    const std::function<void(double, const State&)>& observer = {}) const {
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                                c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                                a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                                a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                                b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                                b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                                e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                                e6 = 22.0 / 525, e7 = -1.0 / 40;

        if (t0 == t1) return y;
        const double dir = (t1 > t0) ? 1.0 : -1.0;
        double t = t0;
        double h = dir * std::min(std::abs(h_init), std::abs(t1 - t0));
        State k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
        rhs(t, y, k1);
        double err_prev = 1.0;
        for (long step = 0; step < max_steps; ++step) {
            if (dir * (t + h - t1) > 0.0) h = t1 - t;
            auto stage = [&](State& out, auto... terms) {
                for (std::size_t i = 0; i < N; ++i) {
                    Complex acc = 0.0;
                    ((acc += terms.first * terms.second[i]), ...);
                    out[i] = y[i] + h * acc;
                }
            };
            using P = std::pair<double, const State&>;
            stage(ytmp, P{a21, k1});
            rhs(t + c2 * h, ytmp, k2);
            stage(ytmp, P{a31, k1}, P{a32, k2});
            rhs(t + c3 * h, ytmp, k3);
            stage(ytmp, P{a41, k1}, P{a42, k2}, P{a43, k3});
            rhs(t + c4 * h, ytmp, k4);
            stage(ytmp, P{a51, k1}, P{a52, k2}, P{a53, k3}, P{a54, k4});
            rhs(t + c5 * h, ytmp, k5);
            stage(ytmp, P{a61, k1}, P{a62, k2}, P{a63, k3}, P{a64, k4}, P{a65, k5});
            rhs(t + h, ytmp, k6);
            stage(ynew, P{b1, k1}, P{b3, k3}, P{b4, k4}, P{b5, k5}, P{b6, k6});
            rhs(t + h, ynew, k7);

            double err = 0.0;
            for (std::size_t i = 0; i < N; ++i) {
                Complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                 e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                double sc = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                double r = std::abs(e) / sc;
                err = std::max(err, r);
            }
            if (err <= 1.0) {
                t += h;
                y = ynew;
                k1 = k7;  // FSAL
                if (observer) observer(t, y);
                if (t == t1 || dir * (t1 - t) <= 0.0) return y;
                double fac = 0.9 * std::pow(err > 1e-300 ? err : 1e-300, -0.7 / 5.0) *
                             std::pow(err_prev, 0.4 / 5.0);
                fac = std::min(5.0, std::max(0.2, fac));
                h *= fac;
                err_prev = (err > 1e-300) ? err : 1e-300;
            } else {
                h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 5.0));
            }
            if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(t)))
                throw NonConvergenceError("rk45: step size underflow at t=" + std::to_string(t));
        }
        throw NonConvergenceError("rk45: step budget exhausted");
    }
};

} // namespace nrtw::detail
