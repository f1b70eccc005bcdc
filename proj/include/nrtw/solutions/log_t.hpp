#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "nrtw/detail/rk45.hpp"
#include "nrtw/gtf.hpp"
#include "nrtw/specialfn/bessel_third.hpp"
#include "nrtw/specialfn/erf.hpp"
#include "nrtw/specialfn/weierstrass.hpp"
#include "nrtw/solutions/types.hpp"

// log(t) reduction, c4 = 0 branch: P'^2 = (C - log(P)/b) P^4 at q = 3 (the
// inverse-error-function solution), the biparametric sinh solution for
// general q, and the Sundman power-type transformations.  c4 != 0 maps to an
// Abel equation with parametric Gaussian/Bessel solutions.

namespace nrtw::solutions::lt {

namespace detail {

// complex inverse of erf by Newton from a real seed
inline Complex erf_inv_c(Complex w) {
    if (w.imag() == 0.0) return {specialfn::erf_inv(w.real()), 0.0};
    double seed_arg = std::clamp(w.real(), -1.0 + 1e-12, 1.0 - 1e-12);
    Complex x{specialfn::erf_inv(seed_arg), 0.0};
    const double spi = std::sqrt(std::numbers::pi);
    for (int it = 0; it < 80; ++it) {
        Complex f = specialfn::erf(x) - w;
        Complex step = f * 0.5 * spi * std::exp(x * x);
        x -= step;
        if (std::abs(step) < 1e-14 * (1.0 + std::abs(x))) return x;
    }
    throw NonConvergenceError("erf_inv: complex Newton did not converge");
}

} // namespace detail

enum class SignBranch { upper, lower };

// q = 3, c4 = 0: P = exp{ [erf^-1(1 -+ (A/sqrt(pi))(z+z0))]^2 + bC },
// A = i e^{bC} / sqrt(b).  A is real exactly when b < 0 (real mode).
inline CurveFn P_erf(const ReductionSpec& spec, SignBranch sign) {
    if (std::abs(spec.q() - 3.0) > 1e-12)
        throw ValidationError("lt.erf: requires q = 3");
    const Complex b = spec.b();
    const Complex C = spec.get("C");
    const Complex z0 = spec.get_or("z0", {0.0, 0.0});
    const Complex A = Complex{0.0, 1.0} * std::exp(b * C) / std::sqrt(b);
    const double sg = (sign == SignBranch::upper) ? -1.0 : 1.0;
    const bool real_a = std::abs(A.imag()) < 1e-14 * std::abs(A);
    const double spi = std::sqrt(std::numbers::pi);

    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        Complex w = 1.0 + sg * A / spi * (z + z0);
        Complex g;
        if (real_a && w.imag() == 0.0) {
            if (!(w.real() > -1.0 && w.real() < 1.0))
                throw DomainError("lt.erf: erf^-1 argument left (-1, 1)");
            g = Complex{specialfn::erf_inv(w.real()), 0.0};
        } else {
            g = detail::erf_inv_c(w);
        }
        return std::exp(g * g + b * C);
    };
    return c;
}

// general q (not 1, 2, 3), c4 = 0:
// P = A^{1/(q-3)} sinh_{2,(q-3)/(q-2)}^{1/(2-q)}((2-q) sqrt(K) A^{(q-2)/(q-3)} (z+z0))
inline CurveFn P_sinh(const ReductionSpec& spec) {
    const double q = spec.q();
    for (double bad : {1.0, 2.0, 3.0})
        if (std::abs(q - bad) < 1e-12)
            throw ValidationError("lt.sinh: q in {1,2,3} is excluded");
    const Complex b = spec.b();
    const Complex K = spec.get("K");
    const Complex z0 = spec.get_or("z0", {0.0, 0.0});
    const double s_exp = (q - 3.0) / (q - 2.0);
    if (!(s_exp > 0.0))
        throw ValidationError("lt.sinh: exponent (q-3)/(q-2) must be positive "
                              "for the implemented sinh branch");
    const Complex A = 2.0 / (K * b * (q - 1.0) * (q - 3.0));
    const Complex rate = (2.0 - q) * std::sqrt(K) * std::pow(A, (q - 2.0) / (q - 3.0));
    const Complex front = std::pow(A, 1.0 / (q - 3.0));
    auto par = gtf::GtfParams(2.0, s_exp);
    auto st = std::make_shared<gtf::ContinuationState>();

    CurveFn c;
    c.kind = CurveKind::closed;
    c.eval = [=](Complex z) -> Complex {
        Complex r = gtf::sinh_pq(rate * (z + z0), par, st.get()).value;
        return front * std::pow(r, 1.0 / (2.0 - q));
    };
    return c;
}

// ---- Sundman power-type transformation ----
//
// P = V^eps, dZ = eps P^delta dtau maps P'^2 = P^{2(q-1)} + A P^{q+1} onto
// V'^2 = A V^m + V^n for ten admissible (m, n) pairs; three of them have
// elementary/elliptic closed forms.

struct SundmanFamily {
    int m, n;
    double q;
    Complex A;
    Complex tau0;

    double eps() const { return double(n - m) / (q - 3.0); }
    double delta() const {
        return (2.0 * m * (q - 2.0) - n * (q - 1.0) - 2.0 * (q - 3.0)) /
               (2.0 * double(n - m));
    }

    bool has_closed_form() const {
        return (m == 1 && n == 2) || (m == 2 && n == 3) || (m == 0 && n == 3);
    }

    // V(tau) for the three worked pairs
    Complex V(double tau) const {
        Complex u = tau + tau0;
        if (m == 1 && n == 2) return -A / 2.0 * (1.0 + std::cosh(u));
        if (m == 2 && n == 3) {
            Complex sech = 1.0 / std::cosh(0.5 * std::sqrt(A) * u);
            return -A * sech * sech;
        }
        if (m == 0 && n == 3)
            return 4.0 * specialfn::weierstrass_p(u, {Complex{0.0, 0.0}, -A / 16.0});
        throw UnsupportedPairError("sundman: no closed V for (m,n)=(" +
                                   std::to_string(m) + "," + std::to_string(n) + ")");
    }

    // residual of V'^2 = A V^m + V^n for any candidate V by five-point
    // differences, normalized by the size of the equation terms (near the
    // elliptic pole V^3 reaches 1e6 and an absolute comparison would only
    // test the finite-difference noise)
    Complex v_residual(const std::function<Complex(double)>& Vf, double tau,
                       double h = 1e-4) const {
        Complex vm2 = Vf(tau - 2 * h), vm1 = Vf(tau - h), v0 = Vf(tau),
                vp1 = Vf(tau + h), vp2 = Vf(tau + 2 * h);
        Complex d1 = (-vp2 + 8.0 * vp1 - 8.0 * vm1 + vm2) / (12.0 * h);
        Complex t1 = A * std::pow(v0, double(m));
        Complex t2 = std::pow(v0, double(n));
        double scale = std::max({1.0, std::abs(t1), std::abs(t2)});
        return (d1 * d1 - t1 - t2) / scale;
    }

    // reconstructs (Z(tau), P(tau)) by integrating dZ = eps P^delta dtau
    // alongside P = V^eps from tau_begin
    ParametricCurve reconstruct(double tau_begin, double tau_end, int samples) const {
        auto Vf = [this](double tau) { return V(tau); };
        nrtw::detail::Rk45<1> stepper;
        stepper.rel_tol = 1e-9;
        stepper.abs_tol = 1e-12;
        auto pts = std::make_shared<std::vector<std::pair<double, Complex>>>();
        pts->reserve(samples + 1);
        const double e = eps(), d = delta();
        auto rhs = [=](double tau, const std::array<Complex, 1>&,
                       std::array<Complex, 1>& dy) {
            dy[0] = e * std::pow(std::pow(Vf(tau), e), d);
        };
        pts->push_back({tau_begin, Complex{0.0, 0.0}});
        double step = (tau_end - tau_begin) / samples;
        std::array<Complex, 1> y{Complex{0.0, 0.0}};
        for (int i = 1; i <= samples; ++i) {
            double t0 = tau_begin + (i - 1) * step;
            double t1 = tau_begin + i * step;
            y = stepper.integrate(rhs, t0, t1, y);
            pts->push_back({t1, y[0]});
        }
        ParametricCurve pc;
        pc.x = [pts, tau_begin, step](double tau) -> Complex {
            int i = int(std::lround((tau - tau_begin) / step));
            if (i < 0 || i >= int(pts->size()))
                throw DomainError("sundman reconstruction: tau outside sampled range");
            return (*pts)[i].second;
        };
        auto self = *this;
        pc.y = [self](double tau) { return std::pow(self.V(tau), self.eps()); };
        return pc;
    }
};

inline SundmanFamily make_sundman(const ReductionSpec& spec, int m, int n) {
    if (!(n > m) || m < 0 || n > 4)
        throw UnsupportedPairError("sundman: (m,n) must satisfy 0 <= m < n <= 4");
    if (std::abs(spec.q() - 3.0) < 1e-12)
        throw ValidationError("sundman: q = 3 collapses the exponent map");
    return {m, n, spec.q(), spec.get_or("A", {1.0, 0.0}),
            spec.get_or("tau0", {0.0, 0.0})};
}

// ---- c4 != 0: Abel equation w w_y = w + A y^{2-q} ----

enum class AbelCase { q3, q4, q52 };

struct AbelParametric {
    std::function<Complex(double)> y;
    std::function<Complex(double)> w;
    Complex A;
    double q;

    // residual of the Abel equation along the parameter, dw/dy by centred
    // differences in tau.  For non-integer 2-q the parametrisation runs on
    // an analytic branch of y^{2-q} whose sign flips with the oscillating
    // Bessel combinations, so the magnitudes of the two sides are compared
    // instead of fixing a root branch.
    Complex residual(double tau, double h = 1e-5) const {
        Complex dy = (-y(tau + 2 * h) + 8.0 * y(tau + h) - 8.0 * y(tau - h) +
                      y(tau - 2 * h)) /
                     (12.0 * h);
        Complex dw = (-w(tau + 2 * h) + 8.0 * w(tau + h) - 8.0 * w(tau - h) +
                      w(tau - 2 * h)) /
                     (12.0 * h);
        Complex wv = w(tau), yv = y(tau);
        double e = 2.0 - q;
        if (std::abs(e - std::round(e)) < 1e-12)
            return wv * (dw / dy) - wv - A * std::pow(yv, e);
        double lhs = std::abs(wv * (dw / dy) - wv);
        double rhs = std::abs(A) * std::pow(std::abs(yv), e);
        return {lhs - rhs, 0.0};
    }
};

inline AbelParametric make_abel(const ReductionSpec& spec, AbelCase qcase,
                                SignBranch sign) {
    const Complex b = spec.b();
    const Complex c4 = spec.get("c4");
    if (c4 == Complex{0.0, 0.0})
        throw ValidationError("lt.abel: requires c4 != 0");
    const double q = spec.q();
    const Complex A = std::pow(-b, 2.0 - q) / (c4 * c4 * (q - 1.0));
    const double sg = (sign == SignBranch::upper) ? 1.0 : -1.0;

    AbelParametric out;
    out.A = A;
    out.q = q;

    switch (qcase) {
        case AbelCase::q3: {
            if (std::abs(q - 3.0) > 1e-12)
                throw ValidationError("lt.abel.q3: requires q = 3");
            // A = -+ 2K^2 (upper/lower)
            Complex K2req = -sg * A / 2.0;
            Complex K = std::sqrt(K2req);
            if (spec.has("Kabel")) {
                Complex Kgiven = spec.get("Kabel");
                if (std::abs(Kgiven * Kgiven - K2req) > 1e-10 * std::abs(K2req))
                    throw ValidationError(
                        "lt.abel.q3: K inconsistent with A = (-b)^{2-q}/(c4^2(q-1))");
                K = Kgiven;
            }
            const Complex C = spec.get_or("Cabel", {0.0, 0.0});
            auto f = [=](double tau) -> Complex {
                const double spi2 = 0.5 * std::sqrt(std::numbers::pi);
                if (sign == SignBranch::upper)
                    return spi2 * std::erf(tau) - C;
                // int_0^tau e^{s^2} ds = imag part of erf(i tau) * sqrt(pi)/2
                return spi2 * specialfn::erf(Complex{0.0, tau}).imag() - C;
            };
            out.y = [=](double tau) -> Complex {
                return K * std::exp(-sg * tau * tau) / f(tau);
            };
            out.w = [=](double tau) -> Complex {
                Complex fv = f(tau);
                return K / fv * (std::exp(-sg * tau * tau) + sg * 2.0 * tau * fv);
            };
            return out;
        }
        case AbelCase::q52: {
            if (std::abs(q - 2.5) > 1e-12)
                throw ValidationError("lt.abel.q52: requires q = 5/2");
            // A = +- a^{3/2}/3
            Complex a32 = sg * 3.0 * A;
            Complex a = std::pow(a32, 2.0 / 3.0);
            if (spec.has("a")) {
                Complex agiven = spec.get("a");
                if (std::abs(std::pow(agiven, 1.5) - a32) > 1e-10 * std::abs(a32))
                    throw ValidationError(
                        "lt.abel.q52: a inconsistent with A = +-a^{3/2}/3");
                a = agiven;
            }
            const Complex C1 = spec.get_or("C1", {1.0, 0.0});
            const Complex C2 = spec.get_or("C2", {0.0, 0.0});
            const bool upper = (sign == SignBranch::upper);
            auto Z = [=](double tau) -> Complex {
                using specialfn::BesselKind;
                if (upper)
                    return C1 * specialfn::bessel_third(BesselKind::J, tau) +
                           C2 * specialfn::bessel_third(BesselKind::Y, tau);
                return C1 * specialfn::bessel_third(BesselKind::I, tau) +
                       C2 * specialfn::bessel_third(BesselKind::K, tau);
            };
            auto Zp = [=](double tau) -> Complex {
                using specialfn::BesselKind;
                if (upper)
                    return C1 * specialfn::bessel_third_deriv(BesselKind::J, tau) +
                           C2 * specialfn::bessel_third_deriv(BesselKind::Y, tau);
                return C1 * specialfn::bessel_third_deriv(BesselKind::I, tau) +
                       C2 * specialfn::bessel_third_deriv(BesselKind::K, tau);
            };
            out.y = [=](double tau) -> Complex {
                Complex zv = Z(tau);
                Complex u1 = tau * Zp(tau) + zv / 3.0;
                return a * std::pow(tau, -4.0 / 3.0) * u1 * u1 / (zv * zv);
            };
            out.w = [=](double tau) -> Complex {
                Complex zv = Z(tau);
                Complex u1 = tau * Zp(tau) + zv / 3.0;
                Complex u2 = u1 * u1 + sg * tau * tau * zv * zv;
                return a * std::pow(tau, -4.0 / 3.0) * u2 / (zv * zv);
            };
            return out;
        }
        default: {
            if (std::abs(q - 4.0) > 1e-12)
                throw ValidationError("lt.abel.q4: requires q = 4");
            // A = -36 a^3
            Complex a = std::pow(-A / 36.0, 1.0 / 3.0);
            if (A.imag() == 0.0 && A.real() > 0.0)
                a = -std::cbrt(A.real() / 36.0);  // real negative root
            if (spec.has("a")) {
                Complex agiven = spec.get("a");
                if (std::abs(-36.0 * agiven * agiven * agiven - A) >
                    1e-10 * std::abs(A))
                    throw ValidationError("lt.abel.q4: a inconsistent with A = -36 a^3");
                a = agiven;
            }
            const Complex C1 = spec.get_or("C1", {1.0, 0.0});
            const Complex C2 = spec.get_or("C2", {0.0, 0.0});
            const bool upper = (sign == SignBranch::upper);
            auto Z = [=](double tau) -> Complex {
                using specialfn::BesselKind;
                if (upper)
                    return C1 * specialfn::bessel_third(BesselKind::J, tau) +
                           C2 * specialfn::bessel_third(BesselKind::Y, tau);
                return C1 * specialfn::bessel_third(BesselKind::I, tau) +
                       C2 * specialfn::bessel_third(BesselKind::K, tau);
            };
            auto Zp = [=](double tau) -> Complex {
                using specialfn::BesselKind;
                if (upper)
                    return C1 * specialfn::bessel_third_deriv(BesselKind::J, tau) +
                           C2 * specialfn::bessel_third_deriv(BesselKind::Y, tau);
                return C1 * specialfn::bessel_third_deriv(BesselKind::I, tau) +
                       C2 * specialfn::bessel_third_deriv(BesselKind::K, tau);
            };
            out.y = [=](double tau) -> Complex {
                Complex zv = Z(tau);
                Complex u1 = tau * Zp(tau) + zv / 3.0;
                Complex u2 = u1 * u1 + sg * tau * tau * zv * zv;
                return 2.0 * a * std::pow(tau, 4.0 / 3.0) * zv * zv / u2;
            };
            out.w = [=](double tau) -> Complex {
                Complex zv = Z(tau);
                Complex u1 = tau * Zp(tau) + zv / 3.0;
                Complex u2 = u1 * u1 + sg * tau * tau * zv * zv;
                Complex u3 = sg * 2.0 / 3.0 * tau * tau * zv * zv * zv - 2.0 * u1 * u2;
                return sg * 3.0 * a * std::pow(tau, -2.0 / 3.0) * u3 / (zv * u2);
            };
            return out;
        }
    }
}

} // namespace nrtw::solutions::lt
