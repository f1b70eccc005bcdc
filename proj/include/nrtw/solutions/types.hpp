#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nrtw/errors.hpp"

namespace nrtw::solutions {

using Complex = std::complex<double>;

enum class ReductionCase { TravellingWave, Scaling, LogT, LogX };

inline std::string to_string(ReductionCase c) {
    switch (c) {
        case ReductionCase::TravellingWave: return "travelling-wave";
        case ReductionCase::Scaling: return "scaling";
        case ReductionCase::LogT: return "log-t";
        default: return "log-x";
    }
}

// One solution instance: the reduction case, the nonlinearity index q, the
// combined constant b, and the family's free constants by name.  q = 1 is
// excluded globally (the equation degenerates to the linear one); q = 2 is
// rejected by the individual families whose formulas divide by 2 - q, and
// allowed where they stay regular.
class ReductionSpec {
public:
    ReductionSpec(ReductionCase kase, double q, Complex b,
                  std::map<std::string, Complex> constants = {})
        : case_(kase), q_(q), b_(b), constants_(std::move(constants)) {
        if (std::abs(q - 1.0) < 1e-12)
            throw ValidationError("ReductionSpec: q = 1 is the linear equation");
        if (b == Complex{0.0, 0.0})
            throw ValidationError("ReductionSpec: b must be nonzero");
    }

    ReductionCase kase() const { return case_; }
    double q() const { return q_; }
    Complex b() const { return b_; }

    bool has(const std::string& name) const { return constants_.count(name) > 0; }

    Complex get(const std::string& name) const {
        auto it = constants_.find(name);
        if (it == constants_.end())
            throw ValidationError("ReductionSpec: missing constant '" + name + "'");
        return it->second;
    }

    Complex get_or(const std::string& name, Complex fallback) const {
        auto it = constants_.find(name);
        return it == constants_.end() ? fallback : it->second;
    }

    void set(const std::string& name, Complex value) { constants_[name] = value; }

    const std::map<std::string, Complex>& constants() const { return constants_; }

    // true when every constant (and b) has zero imaginary part: the regime
    // in which curves stay real and residual gates are certified
    bool real_mode() const {
        if (b_.imag() != 0.0) return false;
        for (const auto& [k, v] : constants_)
            if (v.imag() != 0.0) return false;
        return true;
    }

private:
    ReductionCase case_;
    double q_;
    Complex b_;
    std::map<std::string, Complex> constants_;
};

enum class CurveKind { closed, quadrature, implicit, parametric };

// A reduced-profile function z -> value.  Closed forms accept complex z;
// quadrature/implicit kinds are defined along the real axis and reject
// off-axis arguments.
struct CurveFn {
    CurveKind kind = CurveKind::closed;
    std::function<Complex(Complex)> eval;
    std::vector<double> singular_points;  // family-declared exclusion loci

    Complex operator()(Complex z) const { return eval(z); }
    Complex operator()(double z) const { return eval(Complex{z, 0.0}); }
};

// parametric solutions (Abel families, Sundman reconstructions)
struct ParametricCurve {
    std::function<Complex(double)> x;
    std::function<Complex(double)> y;
};

// The physical fields lifted from a reduction.
struct FieldPair {
    std::function<Complex(double, double)> psi;
    std::function<Complex(double, double)> phi;
    ReductionSpec spec;
};

namespace detail {

inline void require_real_axis(Complex z, const char* what) {
    if (z.imag() != 0.0)
        throw DomainError(std::string(what) + ": defined along the real axis only");
}

} // namespace detail

} // namespace nrtw::solutions
