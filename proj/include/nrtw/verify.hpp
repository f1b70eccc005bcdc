#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nrtw/errors.hpp"
#include "nrtw/solutions/types.hpp"

namespace nrtw::verify {

using Complex = std::complex<double>;
using solutions::CurveFn;
using solutions::FieldPair;
using solutions::ReductionCase;
using solutions::ReductionSpec;

struct TooFewPointsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResidualReport {
    double max_abs = 0.0;
    double rms = 0.0;
    int points_evaluated = 0;
    int points_skipped_singular = 0;
    std::optional<double> conv_order;
    std::vector<double> steps_used;
    bool non_monotone = false;

    void absorb(double r) {
        max_abs = std::max(max_abs, r);
        rms += r * r;
        ++points_evaluated;
    }
    void finalize() {
        if (points_evaluated > 0) rms = std::sqrt(rms / points_evaluated);
    }
};

namespace detail {

inline bool finite(Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

struct Jet {
    Complex f, d1, d2;
    bool ok;
};

// five-point central stencil for value, first and second derivative
template <class F>
Jet jet5(const F& f, double z, double h) {
    Complex fm2, fm1, f0, fp1, fp2;
    try {
        fm2 = f(z - 2 * h);
        fm1 = f(z - h);
        f0 = f(z);
        fp1 = f(z + h);
        fp2 = f(z + 2 * h);
    } catch (const std::exception&) {
        return {{}, {}, {}, false};
    }
    if (!finite(fm2) || !finite(fm1) || !finite(f0) || !finite(fp1) || !finite(fp2))
        return {{}, {}, {}, false};
    Complex d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    Complex d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    return {f0, d1, d2, true};
}

// (P^{2-q})'' / (2-q), with the q -> 2 limit (log P)''
template <class F>
Jet nonlinear_lap(const F& P, double z, double h, double q) {
    if (std::abs(2.0 - q) < 1e-12)
        return jet5([&](double zz) { return std::log(P(zz)); }, z, h);
    double e = 2.0 - q;
    auto jet = jet5([&](double zz) { return std::pow(P(zz), e); }, z, h);
    if (jet.ok) {
        jet.f /= e;
        jet.d1 /= e;
        jet.d2 /= e;
    }
    return jet;
}

inline double step_for(double z, double h_scale) {
    return h_scale * std::max(1.0, std::abs(z));
}

} // namespace detail

// Residuals of the reduced ODE system of one case, by 5-point stencils.
// Q may be null (checks the P-equation only).  Stencil step is
// h_scale * max(1, |z|); the default balances the h^4 truncation term
// against eps/h^2 roundoff in the second derivatives.
inline ResidualReport ode_residual(ReductionCase kase, const ReductionSpec& spec,
                                   const CurveFn& P, const CurveFn* Q,
                                   std::span<const double> z_samples,
                                   double h_scale = 1e-3) {
    const double q = spec.q();
    const Complex b = spec.b();
    ResidualReport rep;

    auto Pf = [&](double z) { return P(z); };

    for (double z : z_samples) {
        const double h = detail::step_for(z, h_scale);
        auto jp = detail::jet5(Pf, z, h);
        if (!jp.ok) {
            ++rep.points_skipped_singular;
            continue;
        }
        Complex rP;
        bool okP = true;
        switch (kase) {
            case ReductionCase::TravellingWave: {
                Complex alpha = spec.get("alpha");
                auto nl = detail::nonlinear_lap(Pf, z, h, q);
                okP = nl.ok;
                if (okP) rP = nl.d2 - alpha * jp.d1;
                break;
            }
            case ReductionCase::Scaling: {
                Complex eps = spec.get("eps");
                auto nl = detail::nonlinear_lap(Pf, z, h, q);
                okP = nl.ok;
                if (okP)
                    rP = eps * z * jp.d1 + (2.0 * eps - 1.0) / (q - 1.0) * jp.f -
                         b * nl.d2;
                break;
            }
            case ReductionCase::LogT: {
                Complex c4 = spec.get_or("c4", {0.0, 0.0});
                auto nl = detail::nonlinear_lap(Pf, z, h, q);
                okP = nl.ok;
                if (okP) rP = jp.f - c4 * (q - 1.0) * jp.d1 + b * (q - 1.0) * nl.d2;
                break;
            }
            case ReductionCase::LogX: {
                Complex c2 = spec.get_or("c2", {0.0, 0.0});
                // B = c2 P^{1-q} P' + 2/(q-1) P^{2-q}; residual P' + b(c2 B' + (3-q)/(q-1) B)
                Complex Pv = jp.f, P1 = jp.d1, P2 = jp.d2;
                Complex Pm_q = std::pow(Pv, -q);
                Complex P1m_q = Pm_q * Pv;   // P^{1-q}
                Complex P2m_q = P1m_q * Pv;  // P^{2-q}
                Complex B = c2 * P1m_q * P1 + 2.0 / (q - 1.0) * P2m_q;
                Complex Bp = c2 * ((1.0 - q) * Pm_q * P1 * P1 + P1m_q * P2) +
                             2.0 * (2.0 - q) / (q - 1.0) * P1m_q * P1;
                rP = P1 + b * (c2 * Bp + (3.0 - q) / (q - 1.0) * B);
                break;
            }
        }
        if (!okP || !detail::finite(rP)) {
            ++rep.points_skipped_singular;
            continue;
        }
        double r = std::abs(rP);

        if (Q) {
            auto jq = detail::jet5([&](double zz) { return (*Q)(zz); }, z, h);
            if (!jq.ok) {
                ++rep.points_skipped_singular;
                continue;
            }
            Complex P1m_q = std::pow(jp.f, 1.0 - q);
            Complex rQ;
            switch (kase) {
                case ReductionCase::TravellingWave: {
                    Complex alpha = spec.get("alpha");
                    Complex c6 = spec.get_or("c6", {0.0, 0.0});
                    rQ = b * P1m_q * jq.d2 + alpha * b * jq.d1 - c6 * jq.f;
                    break;
                }
                case ReductionCase::Scaling: {
                    Complex eps = spec.get("eps");
                    Complex sigma = spec.get_or("sigma", {0.0, 0.0});
                    rQ = eps * z * jq.d1 + sigma * jq.f + b * P1m_q * jq.d2;
                    break;
                }
                case ReductionCase::LogT: {
                    Complex c4 = spec.get_or("c4", {0.0, 0.0});
                    Complex sigma = spec.get_or("sigma", {0.0, 0.0});
                    rQ = c4 * jq.d1 + sigma * jq.f + b * P1m_q * jq.d2;
                    break;
                }
                case ReductionCase::LogX: {
                    Complex c2 = spec.get_or("c2", {0.0, 0.0});
                    Complex sigma = spec.get_or("sigma", {0.0, 0.0});
                    rQ = jq.d1 - b * P1m_q *
                                     ((sigma + 1.0) * (c2 * jq.d1 + sigma * jq.f) +
                                      c2 * (c2 * jq.d2 + sigma * jq.d1));
                    break;
                }
            }
            if (!detail::finite(rQ)) {
                ++rep.points_skipped_singular;
                continue;
            }
            r = std::max(r, std::abs(rQ));
        }
        rep.absorb(r);
    }
    rep.finalize();
    if (rep.points_evaluated == 0)
        throw TooFewPointsError("ode_residual: all sample points were singular");
    return rep;
}

struct GridRect {
    double x0, x1;
    int nx;
    double t0, t1;
    int nt;
};

// Residuals of the governing pair of field equations on a space-time grid,
// second-order central differences with step h (the q -> 2 limit replaces
// (Psi^{2-q})_xx/(2-q) by (log Psi)_xx).
inline ResidualReport pde_residual(const FieldPair& fields, const GridRect& grid,
                                   double h) {
    const double q = fields.spec.q();
    const Complex b = fields.spec.b();
    ResidualReport rep;
    rep.steps_used = {h};

    auto nl_xx = [&](double x, double t) -> std::pair<Complex, bool> {
        auto w = [&](double xx) -> Complex {
            Complex ps = fields.psi(xx, t);
            return (std::abs(2.0 - q) < 1e-12) ? std::log(ps)
                                               : std::pow(ps, 2.0 - q) / (2.0 - q);
        };
        Complex wm, w0, wp;
        try {
            wm = w(x - h);
            w0 = w(x);
            wp = w(x + h);
        } catch (const std::exception&) {
            return {{}, false};
        }
        Complex v = (wp - 2.0 * w0 + wm) / (h * h);
        return {v, detail::finite(v)};
    };

    for (int i = 0; i < grid.nx; ++i) {
        double x = grid.x0 + (grid.x1 - grid.x0) * (grid.nx == 1 ? 0.5 : double(i) / (grid.nx - 1));
        for (int j = 0; j < grid.nt; ++j) {
            double t = grid.t0 + (grid.t1 - grid.t0) * (grid.nt == 1 ? 0.5 : double(j) / (grid.nt - 1));
            Complex psi_t, phi_t, psi0, phi0, phi_xx;
            try {
                psi_t = (fields.psi(x, t + h) - fields.psi(x, t - h)) / (2.0 * h);
                phi_t = (fields.phi(x, t + h) - fields.phi(x, t - h)) / (2.0 * h);
                psi0 = fields.psi(x, t);
                phi0 = fields.phi(x, t);
                phi_xx = (fields.phi(x + h, t) - 2.0 * phi0 + fields.phi(x - h, t)) / (h * h);
            } catch (const std::exception&) {
                ++rep.points_skipped_singular;
                continue;
            }
            auto [wxx, ok] = nl_xx(x, t);
            Complex r1 = psi_t + b * wxx;
            Complex r2 = phi_t - b * std::pow(psi0, 1.0 - q) * phi_xx;
            if (!ok || !detail::finite(psi_t) || !detail::finite(r1) || !detail::finite(r2)) {
                ++rep.points_skipped_singular;
                continue;
            }
            rep.absorb(std::max(std::abs(r1), std::abs(r2)));
        }
    }
    rep.finalize();
    int total = grid.nx * grid.nt;
    if (rep.points_skipped_singular * 2 > total)
        throw TooFewPointsError("pde_residual: more than half the grid points were singular");
    return rep;
}

// Named first-order relations the derivations pass through; they catch
// algebra slips one integration earlier than the full systems.
inline ResidualReport first_integral_residual(const std::string& relation_id,
                                              const ReductionSpec& spec,
                                              const CurveFn& curve,
                                              std::span<const double> z_samples,
                                              double h_scale = 1e-4) {
    const double q = spec.q();
    const Complex b = spec.b();
    ResidualReport rep;

    std::function<Complex(double, const detail::Jet&)> relation;
    if (relation_id == "tw.p") {
        // P' = alpha P^q + beta P^{q-1}
        Complex alpha = spec.get("alpha"), beta = spec.get("beta");
        relation = [=](double, const detail::Jet& j) {
            return j.d1 - alpha * std::pow(j.f, q) - beta * std::pow(j.f, q - 1.0);
        };
    } else if (relation_id == "sc.eqY") {
        // Y' = z Y^{1/(2-q)} / (2b) + Y/z - gamma/z  (curve is Y)
        Complex gamma = spec.get("gamma");
        relation = [=](double z, const detail::Jet& j) {
            return j.d1 - z * std::pow(j.f, 1.0 / (2.0 - q)) / (2.0 * b) - j.f / z +
                   gamma / z;
        };
    } else if (relation_id == "sc.M") {
        // M' = (q-1)/(q-2) M/z + (q-1)/(2b(q-2)) z   (curve is M = Y^{(q-1)/(q-2)})
        relation = [=](double z, const detail::Jet& j) {
            return j.d1 - (q - 1.0) / (q - 2.0) * j.f / z -
                   (q - 1.0) / (2.0 * b * (q - 2.0)) * z;
        };
    } else if (relation_id == "lt.G") {
        // dG/dP = 2(q-1) G/P - 2 P^q / (b(q-1))   (curve maps P to G)
        relation = [=](double Pv, const detail::Jet& j) {
            return j.d1 - 2.0 * (q - 1.0) * j.f / Pv +
                   2.0 * std::pow(Complex{Pv, 0.0}, q) / (b * (q - 1.0));
        };
    } else if (relation_id == "lt.p2") {
        // P'^2 = P^{2(q-1)} + A P^{q+1}  (curve parameterized by Z)
        Complex A = spec.get("A");
        relation = [=](double, const detail::Jet& j) {
            return j.d1 * j.d1 - std::pow(j.f, 2.0 * (q - 1.0)) -
                   A * std::pow(j.f, q + 1.0);
        };
    } else if (relation_id == "lt.erf") {
        // P'^2 = (C - log(P)/b) P^4
        Complex C = spec.get("C");
        relation = [=](double, const detail::Jet& j) {
            return j.d1 * j.d1 -
                   (C - std::log(j.f) / b) * j.f * j.f * j.f * j.f;
        };
    } else if (relation_id == "lx.w") {
        // dw/dP = 2 w/P + 1/c2 - P^2/(b c2^2)   (q = 3; curve maps P to w)
        Complex c2 = spec.get("c2");
        relation = [=](double Pv, const detail::Jet& j) {
            return j.d1 - 2.0 * j.f / Pv - 1.0 / c2 + Pv * Pv / (b * c2 * c2);
        };
    } else {
        throw UnknownRelationError("first_integral_residual: unknown relation '" +
                                   relation_id + "'");
    }

    for (double z : z_samples) {
        auto j = detail::jet5([&](double zz) { return curve(zz); }, z,
                              detail::step_for(z, h_scale));
        if (!j.ok) {
            ++rep.points_skipped_singular;
            continue;
        }
        Complex r = relation(z, j);
        if (!detail::finite(r)) {
            ++rep.points_skipped_singular;
            continue;
        }
        rep.absorb(std::abs(r));
    }
    rep.finalize();
    if (rep.points_evaluated == 0)
        throw TooFewPointsError("first_integral_residual: all points singular");
    return rep;
}

// Runs a residual operation over a decreasing step sequence and fits the
// convergence order as the least-squares slope of log(residual) vs log(h).
inline ResidualReport convergence_study(
    const std::function<ResidualReport(double)>& residual_op,
    const std::vector<double>& steps) {
    if (steps.size() < 3)
        throw ValidationError("convergence_study: needs at least 3 step sizes");
    for (std::size_t i = 1; i < steps.size(); ++i)
        if (!(steps[i] < steps[i - 1]))
            throw ValidationError("convergence_study: steps must strictly decrease");

    std::vector<double> maxima;
    ResidualReport last;
    for (double h : steps) {
        last = residual_op(h);
        maxima.push_back(last.max_abs);
    }
    ResidualReport rep = last;
    rep.steps_used = steps;
    rep.non_monotone = false;
    for (std::size_t i = 1; i < maxima.size(); ++i)
        if (maxima[i] >= maxima[i - 1]) rep.non_monotone = true;

    // least-squares slope
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = int(steps.size());
    for (int i = 0; i < n; ++i) {
        double lx = std::log(steps[i]);
        double ly = std::log(std::max(maxima[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    rep.conv_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return rep;
}

} // namespace nrtw::verify
