#pragma once

#include <cmath>
#include <memory>
#include <numbers>

#include "nrtw/gtf.hpp"
#include "nrtw/specialfn/hyp2f1.hpp"
#include "nrtw/specialfn/incomplete_gamma.hpp"
#include "nrtw/solutions/implicit.hpp"
#include "nrtw/solutions/types.hpp"

// Scaling reduction.  Two integrable choices of the scaling weight:
// eps = 1/(3-q) (direct integration, constant beta = 0 here) and
// eps = 1/(2(2-q)) (integrating factor; Bernoulli for gamma = 0, a
// generalized-tanh solution for gamma != 0 at q = 5/2).

namespace nrtw::solutions::sc {

// beta = 0 branch: P^{1-q} = (1-q)/b (z^2/(2(3-q)) + alpha)
inline CurveFn P_beta0(const ReductionSpec& spec) {
    const double q = spec.q();
    if (std::abs(q - 3.0) < 1e-12)
        throw ValidationError("sc.beta0: q = 3 degenerates the 3-q denominators");
    const Complex b = spec.b();
    const Complex alpha = spec.get("alpha");
    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        Complex w = (1.0 - q) / b * (z * z / (2.0 * (3.0 - q)) + alpha);
        return std::pow(w, 1.0 / (1.0 - q));
    };
    return c;
}

// particular companion field for sigma = -1
inline CurveFn Q_sigma_m1(const ReductionSpec& spec) {
    const double q = spec.q();
    if (spec.get_or("sigma", {-1.0, 0.0}) != Complex{-1.0, 0.0})
        throw ValidationError("sc.beta0 Q: the closed particular solution needs sigma = -1");
    const Complex alpha = spec.get("alpha");
    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex { return z * z + 2.0 * alpha * (1.0 - q); };
    return c;
}

// gamma = 0 (Bernoulli) branch, q != 3:
// P^{1-q} = (q-1) z^2 / (2b(q-3)) + K z^{(q-1)/(q-2)}
inline CurveFn P_gamma0(const ReductionSpec& spec) {
    const double q = spec.q();
    if (std::abs(q - 3.0) < 1e-12)
        throw ValidationError("sc.bernoulli: q = 3 has its own logarithmic branch");
    if (std::abs(q - 2.0) < 1e-12)
        throw ValidationError("sc.bernoulli: q = 2 degenerates the exponent (q-1)/(q-2)");
    const Complex b = spec.b();
    const Complex K = spec.get("K");
    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        Complex w = (q - 1.0) * z * z / (2.0 * b * (q - 3.0)) +
                    K * std::pow(z, (q - 1.0) / (q - 2.0));
        return std::pow(w, 1.0 / (1.0 - q));
    };
    return c;
}

// companion field for sigma = 0 by quadrature of
// Q' = K1 [ K + (q-1)/(2b(q-3)) z^{(q-3)/(q-2)} ]^{1/(q-1)}
inline CurveFn Q_gamma0(const ReductionSpec& spec, double anchor) {
    const double q = spec.q();
    const Complex b = spec.b();
    const Complex K = spec.get("K");
    const Complex K1 = spec.get_or("K1", {1.0, 0.0});
    const Complex K2 = spec.get_or("K2", {0.0, 0.0});
    auto integrand = [=](double z) -> Complex {
        Complex w = K + (q - 1.0) / (2.0 * b * (q - 3.0)) *
                            std::pow(Complex{z, 0.0}, (q - 3.0) / (q - 2.0));
        return K1 * std::pow(w, 1.0 / (q - 1.0));
    };
    auto integral = std::make_shared<CumulativeIntegral>(integrand, anchor);
    CurveFn c;
    c.kind = CurveKind::quadrature;
    c.eval = [=](Complex z) -> Complex {
        detail::require_real_axis(z, "sc.bernoulli Q");
        return integral->value(z.real()) + K2;
    };
    return c;
}

// hypergeometric closed form of the same Q.  The antiderivative identity
// d/dz [ z 2F1(1/m, -s; 1+1/m; -lambda z^m) ] = (1 + lambda z^m)^s forces a
// minus sign on the argument relative to the printed bracket.
inline CurveFn Q_gamma0_closed(const ReductionSpec& spec) {
    const double q = spec.q();
    const Complex b = spec.b();
    const Complex K = spec.get("K");
    const Complex K1 = spec.get_or("K1", {1.0, 0.0});
    const Complex K2 = spec.get_or("K2", {0.0, 0.0});
    const Complex a1{(q - 2.0) / (q - 3.0), 0.0};
    const Complex a2{1.0 / (1.0 - q), 0.0};
    const Complex c1{(2.0 * q - 5.0) / (q - 3.0), 0.0};
    const Complex lambda = (q - 1.0) / (2.0 * b * K * (q - 3.0));
    const double m = (q - 3.0) / (q - 2.0);

    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        Complex arg = -lambda * std::pow(z, m);
        return K1 * std::pow(K, 1.0 / (q - 1.0)) * z *
                   specialfn::hyp2f1(a1, a2, c1, arg) +
               K2;
    };
    return c;
}

// gamma = 0, q = 3: P^{-2} = z^2 (log z + C)/b
inline CurveFn P_gamma0_q3(const ReductionSpec& spec) {
    if (std::abs(spec.q() - 3.0) > 1e-12)
        throw ValidationError("sc.bernoulli.q3: requires q = 3");
    const Complex b = spec.b();
    const Complex C = spec.get("C");
    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        Complex w = z * z * (std::log(z) + C) / b;
        return std::pow(w, -0.5);
    };
    return c;
}

// Q = K1 Gamma(3/2, -log z - C) + K2 (sigma = 0)
inline CurveFn Q_gamma0_q3(const ReductionSpec& spec) {
    const Complex C = spec.get("C");
    const Complex K1 = spec.get_or("K1", {1.0, 0.0});
    const Complex K2 = spec.get_or("K2", {0.0, 0.0});
    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        return K1 * specialfn::gamma_upper(1.5, -std::log(z) - C) + K2;
    };
    return c;
}

// gamma != 0, q = 5/2: P = (2 gamma b / z^2) tanh_{2/3}^{-2/3}(B/z) with
// A = (2 gamma b)^{-1/2} and B tied to it through A B = -3 gamma.  Writing B
// as -3 sqrt(2 b gamma^3) is the same thing only while the principal square
// roots factor; tying the product keeps the first integral exact on every
// branch.
inline CurveFn P_q52(const ReductionSpec& spec) {
    if (std::abs(spec.q() - 2.5) > 1e-12)
        throw ValidationError("sc.q52: requires q = 5/2");
    const Complex b = spec.b();
    const Complex gamma = spec.get("gamma");
    const Complex B = -3.0 * gamma * std::sqrt(2.0 * gamma * b);
    auto par = gtf::GtfParams::single(2.0 / 3.0);
    auto st = std::make_shared<gtf::ContinuationState>();
    CurveFn c;
    c.kind = CurveKind::closed;
    c.singular_points = {0.0};
    c.eval = [=](Complex z) -> Complex {
        Complex t = gtf::tanh_pq(B / z, par, st.get()).value;
        return 2.0 * gamma * b / (z * z) * std::pow(t, -2.0 / 3.0);
    };
    return c;
}

// the first-integral variable Y = A z tanh_{2/3}^{1/3}(B/z); on real windows
// it is the sign-flipped branch of P^{2-q}, so P Y^2 = 1 identically
inline CurveFn Y_q52(const ReductionSpec& spec) {
    const Complex b = spec.b();
    const Complex gamma = spec.get("gamma");
    const Complex A = 1.0 / std::sqrt(2.0 * gamma * b);
    const Complex B = -3.0 * gamma * std::sqrt(2.0 * gamma * b);
    auto par = gtf::GtfParams::single(2.0 / 3.0);
    auto st = std::make_shared<gtf::ContinuationState>();
    CurveFn c;
    c.kind = CurveKind::closed;
    c.singular_points = {0.0};
    c.eval = [=](Complex z) -> Complex {
        Complex t = gtf::tanh_pq(B / z, par, st.get()).value;
        return A * z * std::pow(t, 1.0 / 3.0);
    };
    return c;
}

// companion field, sigma = 0: quadrature of K1 sinh_{2/3}^{2/3}(B/z)
inline CurveFn Q_q52(const ReductionSpec& spec, double anchor) {
    const Complex b = spec.b();
    const Complex gamma = spec.get("gamma");
    const Complex K1 = spec.get_or("K1", {1.0, 0.0});
    const Complex K2 = spec.get_or("K2", {0.0, 0.0});
    const Complex B = -3.0 * gamma * std::sqrt(2.0 * gamma * b);
    auto par = gtf::GtfParams::single(2.0 / 3.0);
    auto st = std::make_shared<gtf::ContinuationState>();
    auto integrand = [=](double z) -> Complex {
        Complex s = gtf::sinh_pq(B / z, par, st.get()).value;
        return K1 * std::pow(s, 2.0 / 3.0);
    };
    auto integral = std::make_shared<CumulativeIntegral>(integrand, anchor);
    CurveFn c;
    c.kind = CurveKind::quadrature;
    c.singular_points = {0.0};
    c.eval = [=](Complex z) -> Complex {
        detail::require_real_axis(z, "sc.q52 Q");
        return integral->value(z.real()) + K2;
    };
    return c;
}

} // namespace nrtw::solutions::sc
