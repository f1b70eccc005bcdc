#pragma once

// Evaluation kernels for the classical special functions the solution
// families are written in.  All complex powers anywhere in this library are
// principal-branch: w^s = exp(s Log w) with Log the principal logarithm.

#include "nrtw/specialfn/bessel_third.hpp"
#include "nrtw/specialfn/erf.hpp"
#include "nrtw/specialfn/gamma_fn.hpp"
#include "nrtw/specialfn/hyp2f1.hpp"
#include "nrtw/specialfn/incomplete_gamma.hpp"
#include "nrtw/specialfn/weierstrass.hpp"
