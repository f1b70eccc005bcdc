#pragma once

#include <cmath>

#include "nrtw/solutions/types.hpp"

namespace nrtw::solutions {

struct LiftOptions {
    // evaluate fractional powers/logs of t (or x) through the principal
    // complex branch instead of rejecting nonpositive arguments
    bool principal_branch_override = false;
};

// Assembles the physical fields from a reduced profile pair according to the
// similarity form of the case:
//   travelling wave: Psi = P(x - c4 t),            Phi = Q e^{c6 t}
//   scaling:         Psi = P(z) t^{(1-2eps)/(q-1)}, Phi = Q(z) t^{-sigma}, z = x t^{-eps}
//   log t:           Psi = P(z) t^{1/(q-1)},        Phi = Q(z) t^{-sigma}, z = x - c4 log t
//   log x:           Psi = P(z) x^{-2/(q-1)},       Phi = Q(z) x^{-sigma}, z = t - c2 log x
inline FieldPair lift(const ReductionSpec& spec, const CurveFn& P, const CurveFn& Q,
                      LiftOptions opt = {}) {
    const double q = spec.q();
    const Complex b = spec.b();

    auto guard_positive = [opt](double v, const char* what) {
        if (v <= 0.0 && !opt.principal_branch_override)
            throw DomainError(std::string(what) +
                              " must be positive for fractional powers; pass the "
                              "principal-branch override to continue anyway");
    };

    switch (spec.kase()) {
        case ReductionCase::TravellingWave: {
            Complex alpha = spec.get("alpha");
            Complex c4 = alpha * b;
            Complex c6 = spec.get_or("c6", {0.0, 0.0});
            auto psi = [P, c4](double x, double t) { return P(Complex{x, 0.0} - c4 * t); };
            auto phi = [Q, c4, c6](double x, double t) {
                return Q(Complex{x, 0.0} - c4 * t) * std::exp(c6 * t);
            };
            return {psi, phi, spec};
        }
        case ReductionCase::Scaling: {
            Complex eps = spec.get("eps");
            Complex sigma = spec.get_or("sigma", {0.0, 0.0});
            auto psi = [=](double x, double t) {
                guard_positive(t, "scaling lift: t");
                Complex tc{t, 0.0};
                Complex z = x * std::pow(tc, -eps);
                return P(z) * std::pow(tc, (1.0 - 2.0 * eps) / (q - 1.0));
            };
            auto phi = [=](double x, double t) {
                guard_positive(t, "scaling lift: t");
                Complex tc{t, 0.0};
                Complex z = x * std::pow(tc, -eps);
                return Q(z) * std::pow(tc, -sigma);
            };
            return {psi, phi, spec};
        }
        case ReductionCase::LogT: {
            Complex c4 = spec.get_or("c4", {0.0, 0.0});
            Complex sigma = spec.get_or("sigma", {0.0, 0.0});
            auto psi = [=](double x, double t) {
                guard_positive(t, "log-t lift: t");
                Complex tc{t, 0.0};
                Complex z = x - c4 * std::log(tc);
                return P(z) * std::pow(tc, 1.0 / (q - 1.0));
            };
            auto phi = [=](double x, double t) {
                guard_positive(t, "log-t lift: t");
                Complex tc{t, 0.0};
                Complex z = x - c4 * std::log(tc);
                return Q(z) * std::pow(tc, -sigma);
            };
            return {psi, phi, spec};
        }
        default: {
            Complex c2 = spec.get_or("c2", {0.0, 0.0});
            Complex sigma = spec.get_or("sigma", {0.0, 0.0});
            auto psi = [=](double x, double t) {
                guard_positive(x, "log-x lift: x");
                Complex xc{x, 0.0};
                Complex z = t - c2 * std::log(xc);
                return P(z) * std::pow(xc, -2.0 / (q - 1.0));
            };
            auto phi = [=](double x, double t) {
                guard_positive(x, "log-x lift: x");
                Complex xc{x, 0.0};
                Complex z = t - c2 * std::log(xc);
                return Q(z) * std::pow(xc, -sigma);
            };
            return {psi, phi, spec};
        }
    }
}

} // namespace nrtw::solutions
