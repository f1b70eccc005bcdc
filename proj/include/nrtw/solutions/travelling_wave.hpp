#pragma once

#include <cmath>
#include <memory>
#include <numbers>

#include "nrtw/gtf.hpp"
#include "nrtw/solutions/implicit.hpp"
#include "nrtw/solutions/types.hpp"

// Travelling-wave reduction: P' = alpha P^q + beta P^{q-1} (first integral
// of the P-equation, beta the integration constant), plus the companion
// Q-equation with c6 = 0.

namespace nrtw::solutions::tw {

enum class GtfBranch { r1, r2 };
enum class PolyCase { q32_tanh, q32_tan, q0_implicit, q12_implicit, integer_q_implicit };
enum class TrigKind { hyperbolic, circular };

namespace detail {

inline void require_q(const ReductionSpec& spec, double q_expected, const char* family) {
    if (std::abs(spec.q() - q_expected) > 1e-12)
        throw ValidationError(std::string(family) + ": requires q = " +
                              std::to_string(q_expected));
}

inline void require_real_constants(const ReductionSpec& spec, const char* family) {
    if (!spec.real_mode())
        throw ValidationError(std::string(family) +
                              ": implicit branch tracking needs real constants");
}

} // namespace detail

// exact generalized-tangent solutions of the first integral
inline CurveFn P_gtf(const ReductionSpec& spec, GtfBranch branch) {
    const double q = spec.q();
    const Complex alpha = spec.get("alpha");
    const Complex beta = spec.get("beta");
    const Complex z0 = spec.get_or("z0", {0.0, 0.0});

    CurveFn c;
    c.kind = CurveKind::closed;
    if (branch == GtfBranch::r1) {
        if (!(q < 2.0))
            throw ValidationError("tw.gtf.r1: the tan exponent 1/(2-q) requires q < 2");
        const double a = 1.0 / (2.0 - q);
        const Complex gamma1 =
            std::pow(alpha, 2.0 - q) * (2.0 - q) / std::pow(beta, 1.0 - q);
        auto par = gtf::GtfParams::single(a);
        auto st = std::make_shared<gtf::ContinuationState>();
        c.eval = [=](Complex z) -> Complex {
            Complex w = gtf::tan_pq(gamma1 * (z + z0), par, st.get()).value;
            return beta / alpha * std::pow(w, 1.0 / (2.0 - q));
        };
    } else {
        if (!(q > 1.0))
            throw ValidationError("tw.gtf.r2: the tan exponent 1/(q-1) requires q > 1");
        const double a = 1.0 / (q - 1.0);
        const Complex gamma2 =
            std::pow(beta, q - 1.0) * (1.0 - q) / std::pow(alpha, q - 2.0);
        auto par = gtf::GtfParams::single(a);
        auto st = std::make_shared<gtf::ContinuationState>();
        c.eval = [=](Complex z) -> Complex {
            Complex w = gtf::tan_pq(gamma2 * (z + z0), par, st.get()).value;
            return beta / alpha * std::pow(w, 1.0 / (1.0 - q));
        };
    }
    return c;
}

// companion field for the r2 branch, c6 = 0
inline CurveFn Q_gtf(const ReductionSpec& spec) {
    const double q = spec.q();
    if (!(q > 1.0)) throw ValidationError("tw.gtf.r2 Q: requires q > 1");
    const Complex alpha = spec.get("alpha");
    const Complex beta = spec.get("beta");
    const Complex z0 = spec.get_or("z0", {0.0, 0.0});
    const Complex K1 = spec.get_or("K1", {1.0, 0.0});
    const Complex K2 = spec.get_or("K2", {0.0, 0.0});
    if (spec.get_or("c6", {0.0, 0.0}) != Complex{0.0, 0.0})
        throw ValidationError("tw.gtf.r2 Q: closed form exists for c6 = 0 only");

    const double a = 1.0 / (q - 1.0);
    const Complex gamma2 = std::pow(beta, q - 1.0) * (1.0 - q) / std::pow(alpha, q - 2.0);
    const Complex front = K1 * std::pow(alpha, q - 2.0) / std::pow(beta, q - 1.0);
    const double m = (2.0 - q) / (q - 1.0);
    auto par = gtf::GtfParams::single(a);
    auto st = std::make_shared<gtf::ContinuationState>();

    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        Complex zt = gamma2 * (z + z0);
        Complex s = gtf::sin_pq(zt, par, st.get()).value;
        Complex co = gtf::cos_pq(zt, par, st.get()).value;
        return front * (s * std::pow(co, m) - zt) + K2;
    };
    return c;
}

// q = 3/2 closed forms and the implicitly-defined polynomial-map cases
inline CurveFn P_polynomial(const ReductionSpec& spec, PolyCase pc) {
    const Complex alpha = spec.get("alpha");
    const Complex beta = spec.get("beta");
    const Complex z0 = spec.get_or("z0", {0.0, 0.0});

    CurveFn c;
    switch (pc) {
        case PolyCase::q32_tanh: {
            detail::require_q(spec, 1.5, "tw.q32.tanh");
            if (spec.real_mode() && (alpha * beta).real() >= 0.0)
                throw ValidationError("tw.q32.tanh: needs alpha*beta < 0");
            Complex k0 = std::sqrt(-beta / alpha);
            Complex k1 = -alpha * k0 / 2.0;
            c.kind = CurveKind::closed;
            c.eval = [=](Complex z) {
                Complex t = std::tanh(k1 * z + z0);
                return k0 * k0 * t * t;
            };
            return c;
        }
        case PolyCase::q32_tan: {
            detail::require_q(spec, 1.5, "tw.q32.tan");
            if (spec.real_mode() && (alpha * beta).real() <= 0.0)
                throw ValidationError("tw.q32.tan: needs alpha*beta > 0");
            Complex k0 = std::sqrt(beta / alpha);
            Complex k1 = alpha * k0 / 2.0;
            c.kind = CurveKind::closed;
            c.eval = [=](Complex z) {
                Complex t = std::tan(k1 * z + z0);
                return k0 * k0 * t * t;
            };
            return c;
        }
        case PolyCase::q0_implicit: {
            detail::require_q(spec, 0.0, "tw.q0");
            detail::require_real_constants(spec, "tw.q0");
            double al = alpha.real(), be = beta.real(), zz0 = z0.real();
            // alpha P - beta log(beta + alpha P) = alpha^2 (z + z0)
            auto resid = [=](double P, double z) {
                return al * P - be * std::log(be + al * P) - al * al * (z + zz0);
            };
            auto slope = [=](double P, double) { return al * al * P / (be + al * P); };
            double lo = (al > 0.0) ? -be / al + 1e-12 : -1e12;
            double hi = (al > 0.0) ? 1e12 : -be / al - 1e-12;
            return make_implicit_curve(resid, slope, 1.0, lo, hi);
        }
        case PolyCase::q12_implicit: {
            detail::require_q(spec, 0.5, "tw.q12");
            detail::require_real_constants(spec, "tw.q12");
            double al = alpha.real(), be = beta.real(), zz0 = z0.real();
            double ab = al * be;
            std::function<double(double, double)> resid;
            if (ab > 0.0) {
                double s = std::sqrt(ab);
                resid = [=](double u, double z) {
                    return 1.0 / u + s / al * std::atan(be * u / s) -
                           0.5 * al * (z + zz0);
                };
            } else {
                double s = std::sqrt(-ab);
                resid = [=](double u, double z) {
                    return 1.0 / u + s / al * std::atanh(be * u / s) -
                           0.5 * al * (z + zz0);
                };
            }
            auto slope = [=](double u, double) {
                return -1.0 / (u * u) + be / (al + be * u * u);
            };
            CurveFn u_curve = make_implicit_curve(resid, slope, 0.5, 1e-12, 1e12);
            CurveFn out;
            out.kind = CurveKind::implicit;
            out.eval = [u_curve](Complex z) -> Complex {
                Complex u = u_curve(z);
                return 1.0 / (u * u);
            };
            return out;
        }
        default: {  // integer q >= 3
            double q = spec.q();
            double qi = std::round(q);
            if (std::abs(q - qi) > 1e-12 || qi < 3.0)
                throw ValidationError("tw.integer: requires integer q >= 3");
            detail::require_real_constants(spec, "tw.integer");
            int n = int(qi);
            double al = alpha.real(), be = beta.real(), zz0 = z0.real();
            double ratio = -al / be;
            if (!(ratio > 0.0))
                throw ValidationError("tw.integer: real branch needs -alpha/beta > 0");
            double front = std::pow(ratio, double(n - 2));
            auto resid = [=](double P, double z) {
                double sum = std::log(1.0 + be / (al * P));
                double rj = 1.0;
                for (int j = 1; j <= n - 2; ++j) {
                    rj /= ratio;
                    sum += rj / (double(j) * std::pow(P, j));
                }
                return front * sum + be * (z + zz0);
            };
            auto slope = [=](double P, double) {
                // closed derivative: -beta P^{1-q} / (alpha P + beta)
                return -be * std::pow(P, 1.0 - q) / (al * P + be);
            };
            double lo = (al > 0.0 && be < 0.0) ? -be / al + 1e-12 : 1e-12;
            return make_implicit_curve(resid, slope, std::max(1.0, lo * 2.0), lo, 1e12);
        }
    }
}

// companion field for the q = 3/2 closed forms, c6 = 0
inline CurveFn Q_q32(const ReductionSpec& spec, TrigKind trig) {
    detail::require_q(spec, 1.5, "tw.q32 Q");
    const Complex alpha = spec.get("alpha");
    const Complex beta = spec.get("beta");
    const Complex z0 = spec.get_or("z0", {0.0, 0.0});
    const Complex K = spec.get_or("K", {1.0, 0.0});
    const Complex Kt = spec.get_or("Ktilde", {0.0, 0.0});

    Complex k0 = (trig == TrigKind::hyperbolic) ? std::sqrt(-beta / alpha)
                                                : std::sqrt(beta / alpha);
    Complex k1 = (trig == TrigKind::hyperbolic) ? -alpha * k0 / 2.0 : alpha * k0 / 2.0;

    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        Complex u = k1 * z + z0;
        Complex osc = (trig == TrigKind::hyperbolic) ? std::sinh(2.0 * u)
                                                     : std::sin(2.0 * u);
        return 0.5 * K * z + K / (4.0 * k1) * osc + Kt;
    };
    return c;
}

} // namespace nrtw::solutions::tw
