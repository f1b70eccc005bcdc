#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "nrtw/errors.hpp"
#include "nrtw/specialfn/hyp2f1.hpp"

namespace nrtw::gtf {

using Complex = std::complex<double>;

// Exponent pair of the generalized trigonometric functions.  The classical
// theory wants p, q > 1; everything here also accepts exponents in (0, 1],
// where only the maximal monotone branch exists (no periodic extension).
struct GtfParams {
    double p;
    double q;

    GtfParams(double p_, double q_) : p(p_), q(q_) {
        if (!(p > 0.0) || !(q > 0.0))
            throw ValidationError("GtfParams: requires p > 0 and q > 0, got p=" +
                                  std::to_string(p_) + " q=" + std::to_string(q_));
    }
    // single-parameter family tan_a, sinh_a, ...: p = q = a
    static GtfParams single(double a) { return {a, a}; }

    bool classical() const { return p > 1.0 && q > 1.0; }
};

enum class Branch { principal, analytic_continuation };

struct GtfValue {
    Complex value;
    Branch branch = Branch::principal;

    double real() const { return value.real(); }
};

// arcsin_{p,q}(z) = z 2F1(1/p, 1/q; 1 + 1/q; z^q)
inline Complex arcsin_pq(Complex z, const GtfParams& par) {
    if (z == Complex{0.0, 0.0}) return z;
    return z * specialfn::hyp2f1(1.0 / par.p, 1.0 / par.q, 1.0 + 1.0 / par.q,
                                 std::pow(z, par.q));
}

// arcsinh_{p,q}(z) = z 2F1(1/p, 1/q; 1 + 1/q; -z^q)
inline Complex arcsinh_pq(Complex z, const GtfParams& par) {
    if (z == Complex{0.0, 0.0}) return z;
    return z * specialfn::hyp2f1(1.0 / par.p, 1.0 / par.q, 1.0 + 1.0 / par.q,
                                 -std::pow(z, par.q));
}

// half-period constant pi_{p,q} = 2 arcsin_{p,q}(1); +inf when the defining
// integral diverges (p <= 1)
inline double pi_pq(const GtfParams& par) {
    if (par.p <= 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::exp(std::lgamma(1.0 + 1.0 / par.q) +
                          std::lgamma(1.0 - 1.0 / par.p) -
                          std::lgamma(1.0 + 1.0 / par.q - 1.0 / par.p));
}

namespace detail {

// sin on the principal domain [0, pi_pq/2]: Newton on arcsin(s) = x with the
// quadrature-free derivative (1 - s^q)^(-1/p), bisection safeguard
inline double sin_principal(double x, const GtfParams& par) {
    if (x == 0.0) return 0.0;
    const double half_pi = 0.5 * pi_pq(par);
    if (x == half_pi) return 1.0;
    if (x < 0.0 || x > half_pi)
        throw DomainError("sin_principal: argument outside [0, pi_pq/2]");

    auto arcsin_real = [&](double s) {
        return arcsin_pq(Complex{s, 0.0}, par).real();
    };

    double lo = 0.0, hi = 1.0;
    double flo = -x;
    // never evaluate the hypergeometric form exactly at s = 1
    while (true) {
        double probe = 1.0 - 0.5 * (1.0 - lo);
        if (1.0 - probe < 1e-15) {
            hi = probe;
            break;
        }
        double fp = arcsin_real(probe) - x;
        if (fp >= 0.0) {
            hi = probe;
            break;
        }
        lo = probe;
        flo = fp;
    }

    double s = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double f = arcsin_real(s) - x;
        if (std::signbit(f) == std::signbit(flo)) {
            lo = s;
            flo = f;
        } else {
            hi = s;
        }
        double deriv_inv = std::pow(std::max(0.0, 1.0 - std::pow(s, par.q)), 1.0 / par.p);
        double sn = s - f * deriv_inv;
        if (!(sn > lo && sn < hi)) sn = 0.5 * (lo + hi);
        if (std::abs(sn - s) < 1e-15 * (1.0 + std::abs(sn))) return sn;
        s = sn;
    }
    throw NonConvergenceError("sin_pq: Newton did not converge, bracket [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// monotone inversion of arcsinh on s >= 0
inline double sinh_principal(double x, const GtfParams& par) {
    if (x == 0.0) return 0.0;
    if (x < 0.0) throw DomainError("sinh_principal: requires x >= 0");
    auto arcsinh_real = [&](double s) {
        return arcsinh_pq(Complex{s, 0.0}, par).real();
    };
    double lo = 0.0, hi = std::max(1.0, x);
    double fhi = arcsinh_real(hi) - x;
    int grow = 0;
    while (fhi < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++grow > 80)
            throw DomainError("sinh_pq: argument beyond the finite range of arcsinh");
        fhi = arcsinh_real(hi) - x;
    }
    double flo = arcsinh_real(lo) - x;
    double s = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double f = arcsinh_real(s) - x;
        if (std::signbit(f) == std::signbit(flo)) {
            lo = s;
            flo = f;
        } else {
            hi = s;
        }
        double deriv_inv = std::pow(1.0 + std::pow(s, par.q), 1.0 / par.p);
        double sn = s - f * deriv_inv;
        if (!(sn > lo && sn < hi)) sn = 0.5 * (lo + hi);
        if (std::abs(sn - s) < 1e-15 * (1.0 + std::abs(sn))) return sn;
        s = sn;
    }
    throw NonConvergenceError("sinh_pq: Newton did not converge");
}

struct Fold {
    double u;          // argument folded into [0, pi/2]
    double sign_sin;
    double sign_cos;
    bool principal;
};

inline Fold fold_real(double x, const GtfParams& par) {
    if (par.classical()) {
        const double P = pi_pq(par);
        double r = std::fmod(x, 2.0 * P);
        if (r < 0.0) r += 2.0 * P;
        Fold f{};
        f.principal = (x >= 0.0 && x <= 0.5 * P);
        if (r <= 0.5 * P) {
            f = {r, 1.0, 1.0, f.principal};
        } else if (r <= P) {
            f = {P - r, 1.0, -1.0, f.principal};
        } else if (r <= 1.5 * P) {
            f = {r - P, -1.0, -1.0, f.principal};
        } else {
            f = {2.0 * P - r, -1.0, 1.0, f.principal};
        }
        return f;
    }
    // monotone-branch regime: odd extension only
    double P2 = 0.5 * pi_pq(par);  // may be +inf
    double ax = std::abs(x);
    if (ax > P2)
        throw DomainError("gtf: argument outside the maximal monotone branch for exponents <= 1");
    return {ax, x < 0.0 ? -1.0 : 1.0, 1.0, x >= 0.0};
}

} // namespace detail

// ---- real-argument evaluation (periodic/odd extension) ----

inline GtfValue sin_pq(double x, const GtfParams& par) {
    auto f = detail::fold_real(x, par);
    double s = detail::sin_principal(f.u, par);
    return {Complex{f.sign_sin * s, 0.0},
            f.principal ? Branch::principal : Branch::analytic_continuation};
}

inline GtfValue cos_pq(double x, const GtfParams& par) {
    auto f = detail::fold_real(x, par);
    double s = detail::sin_principal(f.u, par);
    double c = std::pow(std::max(0.0, 1.0 - std::pow(s, par.q)), 1.0 / par.p);
    return {Complex{f.sign_cos * c, 0.0},
            f.principal ? Branch::principal : Branch::analytic_continuation};
}

inline GtfValue tan_pq(double x, const GtfParams& par) {
    auto f = detail::fold_real(x, par);
    double s = detail::sin_principal(f.u, par);
    double c = std::pow(std::max(0.0, 1.0 - std::pow(s, par.q)), 1.0 / par.p);
    if (c == 0.0) throw PoleError("tan_pq: cos_pq vanishes at x=" + std::to_string(x));
    return {Complex{f.sign_sin * f.sign_cos * s / c, 0.0},
            f.principal ? Branch::principal : Branch::analytic_continuation};
}

inline GtfValue sinh_pq(double x, const GtfParams& par) {
    double s = detail::sinh_principal(std::abs(x), par);
    return {Complex{x < 0.0 ? -s : s, 0.0}, Branch::principal};
}

inline GtfValue cosh_pq(double x, const GtfParams& par) {
    double s = detail::sinh_principal(std::abs(x), par);
    return {Complex{std::pow(1.0 + std::pow(s, par.q), 1.0 / par.p), 0.0},
            Branch::principal};
}

inline GtfValue tanh_pq(double x, const GtfParams& par) {
    double s = detail::sinh_principal(std::abs(x), par);
    double c = std::pow(1.0 + std::pow(s, par.q), 1.0 / par.p);
    return {Complex{(x < 0.0 ? -s : s) / c, 0.0}, Branch::principal};
}

// ---- complex-argument evaluation ----
//
// Off the real axis sin/cos are continued analytically along the straight
// path from a real-axis seed.  The pair (s, c) obeys s' = c, and c follows
// from differentiating the defining identity.  The fractional powers that
// appear are tracked as extra state variables g = s^(q-1), h = c^(2-p),
// turning the system rational:
//     s' = c
//     c' = -+ (q/p) g h        (- circular, + hyperbolic)
//     g' = (q-1) g c / s
//     h' = (2-p) h c' / c
// so no principal-branch snapping can occur mid-path.  Genuine branch points
// (zeros of sin or cos, for non-classical exponents) abort with PoleError.

// warm-start cache for sweeps along a curve; one instance per curve, not
// shared across threads
struct ContinuationState {
    bool valid = false;
    bool hyperbolic = false;
    Complex z{0.0, 0.0};
    Complex s{0.0, 0.0}, c{0.0, 0.0}, g{0.0, 0.0}, h{0.0, 0.0};
};

namespace detail {

struct TrackedPoint {
    Complex s, c, g, h;
};

inline constexpr double kTrackMin = 1e-4;  // closest approach to a branch point

inline TrackedPoint track_segment(Complex z0, Complex z1, TrackedPoint y0,
                                  const GtfParams& par, bool hyperbolic) {
    nrtw::detail::Rk45<4> stepper;
    stepper.rel_tol = 1e-12;
    stepper.abs_tol = 1e-14;
    const Complex dz = z1 - z0;
    const double sgn = hyperbolic ? 1.0 : -1.0;
    const double p = par.p, q = par.q;
    auto rhs = [&](double, const std::array<Complex, 4>& y, std::array<Complex, 4>& d) {
        const Complex &s = y[0], &c = y[1], &g = y[2], &h = y[3];
        if (std::abs(s) < kTrackMin || std::abs(c) < kTrackMin)
            throw PoleError("gtf continuation: path passes a branch point (sin or cos zero)");
        Complex cp = sgn * (q / p) * g * h;
        d[0] = dz * c;
        d[1] = dz * cp;
        d[2] = dz * (q - 1.0) * g * c / s;
        d[3] = dz * (2.0 - p) * h * cp / c;
    };
    auto y = stepper.integrate(rhs, 0.0, 1.0, {y0.s, y0.c, y0.g, y0.h});
    return {y[0], y[1], y[2], y[3]};
}

// real-axis seed with both |sin| and |cos| clear of zero; the nudge rule is
// deterministic so repeated evaluations continue along the same path
inline std::pair<double, TrackedPoint> seed_point(double x_target, const GtfParams& par,
                                                  bool hyperbolic) {
    double step;
    double cap = std::numeric_limits<double>::infinity();
    if (!hyperbolic) {
        double half = 0.5 * pi_pq(par);
        step = std::isfinite(half) ? 0.12 * half : 0.25;
        if (!par.classical() && std::isfinite(half)) cap = half * (1.0 - 1e-9);
    } else {
        step = 0.25;
    }
    double xr = std::clamp(x_target, -cap, cap);
    if (!std::isfinite(xr)) xr = 0.0;
    for (int k = 0; k <= 60; ++k) {
        for (double cand : {xr + k * step, xr - k * step}) {
            if (std::abs(cand) > cap) continue;
            double s, c;
            try {
                if (hyperbolic) {
                    s = sinh_pq(cand, par).real();
                    c = cosh_pq(cand, par).real();
                } else {
                    s = sin_pq(cand, par).real();
                    c = cos_pq(cand, par).real();
                }
            } catch (const DomainError&) {
                continue;
            }
            if (std::abs(s) > 0.05 && std::abs(c) > 0.05) {
                TrackedPoint y{Complex{s, 0.0}, Complex{c, 0.0},
                               std::pow(Complex{s, 0.0}, par.q - 1.0),
                               std::pow(Complex{c, 0.0}, 2.0 - par.p)};
                return {cand, y};
            }
            if (k == 0) break;  // first candidate pair coincides
        }
    }
    throw NonConvergenceError("gtf continuation: no usable real-axis seed");
}

inline TrackedPoint continue_tracked(Complex target, const GtfParams& par,
                                     bool hyperbolic, ContinuationState* st) {
    Complex z0;
    TrackedPoint y;
    if (st && st->valid && st->hyperbolic == hyperbolic &&
        std::abs(st->z - target) < 1.0) {
        z0 = st->z;
        y = {st->s, st->c, st->g, st->h};
    } else {
        auto [xr, seed] = seed_point(target.real(), par, hyperbolic);
        z0 = Complex{xr, 0.0};
        y = seed;
    }
    y = track_segment(z0, target, y, par, hyperbolic);
    if (st) {
        st->valid = true;
        st->hyperbolic = hyperbolic;
        st->z = target;
        st->s = y.s;
        st->c = y.c;
        st->g = y.g;
        st->h = y.h;
    }
    return y;
}

} // namespace detail

inline GtfValue sin_pq(Complex z, const GtfParams& par, ContinuationState* st = nullptr) {
    if (z.imag() == 0.0) return sin_pq(z.real(), par);
    return {detail::continue_tracked(z, par, false, st).s, Branch::analytic_continuation};
}

inline GtfValue cos_pq(Complex z, const GtfParams& par, ContinuationState* st = nullptr) {
    if (z.imag() == 0.0) return cos_pq(z.real(), par);
    return {detail::continue_tracked(z, par, false, st).c, Branch::analytic_continuation};
}

inline GtfValue tan_pq(Complex z, const GtfParams& par, ContinuationState* st = nullptr) {
    if (z.imag() == 0.0) return tan_pq(z.real(), par);
    auto y = detail::continue_tracked(z, par, false, st);
    if (y.c == Complex{0.0, 0.0}) throw PoleError("tan_pq: cos_pq vanishes");
    return {y.s / y.c, Branch::analytic_continuation};
}

inline GtfValue sinh_pq(Complex z, const GtfParams& par, ContinuationState* st = nullptr) {
    if (z.imag() == 0.0) return sinh_pq(z.real(), par);
    return {detail::continue_tracked(z, par, true, st).s, Branch::analytic_continuation};
}

inline GtfValue cosh_pq(Complex z, const GtfParams& par, ContinuationState* st = nullptr) {
    if (z.imag() == 0.0) return cosh_pq(z.real(), par);
    return {detail::continue_tracked(z, par, true, st).c, Branch::analytic_continuation};
}

inline GtfValue tanh_pq(Complex z, const GtfParams& par, ContinuationState* st = nullptr) {
    if (z.imag() == 0.0) return tanh_pq(z.real(), par);
    auto y = detail::continue_tracked(z, par, true, st);
    if (y.c == Complex{0.0, 0.0}) throw PoleError("tanh_pq: cosh_pq vanishes");
    return {y.s / y.c, Branch::analytic_continuation};
}

// supremum of arcsinh_pq on the positive axis: finite exactly when q > p,
// bounding the domain of the real hyperbolic functions
inline double arcsinh_sup(const GtfParams& par) {
    if (par.q <= par.p) return std::numeric_limits<double>::infinity();
    return std::exp(std::lgamma(1.0 / par.q) + std::lgamma(1.0 / par.p - 1.0 / par.q) -
                    std::lgamma(1.0 / par.p)) /
           par.q;
}

// residual of the four duality relations tying (p,q) to (r,q) through
// 1/p + 1/r = 1 + 1/q; x must sit inside both principal domains
inline double duality_residual(double x, const GtfParams& par) {
    double rinv = 1.0 + 1.0 / par.q - 1.0 / par.p;
    if (rinv <= 0.0) throw DomainError("duality: conjugate exponent r is not positive");
    double r = 1.0 / rinv;
    GtfParams dual{r, par.q};

    double cap_pq = 0.5 * pi_pq(par);
    double cap_rq = 0.5 * pi_pq(dual);
    if (!(std::abs(x) < cap_pq) || !(std::abs(x) < cap_rq))
        throw DomainError("duality: x outside a principal domain");

    double sh_pq = sinh_pq(x, par).real();
    double ch_pq = cosh_pq(x, par).real();
    double s_rq = sin_pq(x, dual).real();
    double c_rq = cos_pq(x, dual).real();
    double sh_rq = sinh_pq(x, dual).real();
    double ch_rq = cosh_pq(x, dual).real();
    double s_pq = sin_pq(x, par).real();
    double c_pq = cos_pq(x, par).real();

    double res = 0.0;
    res = std::max(res, std::abs(sh_pq - s_rq / std::pow(c_rq, r / par.q)));
    res = std::max(res, std::abs(ch_pq - std::pow(c_rq, -r / par.p)));
    res = std::max(res, std::abs(s_pq - sh_rq / std::pow(ch_rq, r / par.q)));
    res = std::max(res, std::abs(c_pq - std::pow(ch_rq, -r / par.p)));
    return res;
}

} // namespace nrtw::gtf
