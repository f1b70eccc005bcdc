#pragma once

#include <functional>
#include <memory>

#include "nrtw/detail/roots.hpp"
#include "nrtw/errors.hpp"
#include "nrtw/quadrature.hpp"
#include "nrtw/solutions/types.hpp"

namespace nrtw::solutions {

// Root-solved curve: P(z) defined by R(P, z) = 0.  Consecutive queries reuse
// the previous root as the bracket seed, so a sweep follows one continuous
// branch.  Each returned value is re-checked against the relation.
class ImplicitCurve {
public:
    ImplicitCurve(std::function<double(double, double)> residual,
                  std::function<double(double, double)> d_dP, double p_seed,
                  double p_lo = -1e12, double p_hi = 1e12)
        : residual_(std::move(residual)),
          d_dP_(std::move(d_dP)),
          seed_(p_seed),
          lo_limit_(p_lo),
          hi_limit_(p_hi) {}

    double solve(double z) const {
        double seed = has_prev_ ? prev_ : seed_;
        auto f = [&](double P) { return residual_(P, z); };
        auto [lo, hi] = nrtw::detail::grow_bracket(
            f, seed, 0.1 * std::max(1.0, std::abs(seed)), lo_limit_, hi_limit_);
        double root = nrtw::detail::newton_bisect(
            f, [&](double P) { return d_dP_(P, z); }, lo, hi, seed);
        double check = std::abs(residual_(root, z));
        if (!(check < 1e-10 * (1.0 + std::abs(z))))
            throw NonConvergenceError("implicit curve: residual " +
                                      std::to_string(check) + " above tolerance at z=" +
                                      std::to_string(z));
        prev_ = root;
        has_prev_ = true;
        return root;
    }

private:
    std::function<double(double, double)> residual_;
    std::function<double(double, double)> d_dP_;
    double seed_;
    double lo_limit_, hi_limit_;
    mutable double prev_ = 0.0;
    mutable bool has_prev_ = false;
};

inline CurveFn make_implicit_curve(std::function<double(double, double)> residual,
                                   std::function<double(double, double)> d_dP,
                                   double p_seed, double p_lo = -1e12,
                                   double p_hi = 1e12) {
    auto impl = std::make_shared<ImplicitCurve>(std::move(residual), std::move(d_dP),
                                                p_seed, p_lo, p_hi);
    CurveFn c;
    c.kind = CurveKind::implicit;
    c.eval = [impl](Complex z) -> Complex {
        detail::require_real_axis(z, "implicit curve");
        return {impl->solve(z.real()), 0.0};
    };
    return c;
}

// Quadrature-defined antiderivative: I(z) = scale * int_anchor^z f + offset.
// Increments are accumulated so sweeps do not re-integrate from the anchor.
class CumulativeIntegral {
public:
    CumulativeIntegral(std::function<Complex(double)> integrand, double anchor,
                       quad::AdaptiveOptions opt = {1e-12, 1e-12, 4000})
        : f_(std::move(integrand)), z_last_(anchor), opt_(opt) {}

    Complex value(double z) const {
        acc_ += quad::integrate(f_, z_last_, z, opt_);
        z_last_ = z;
        return acc_;
    }

private:
    std::function<Complex(double)> f_;
    mutable double z_last_;
    mutable Complex acc_{0.0, 0.0};
    quad::AdaptiveOptions opt_;
};

} // namespace nrtw::solutions
