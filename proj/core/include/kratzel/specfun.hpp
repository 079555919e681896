#pragma once

#include "kratzel/errors.hpp"

namespace kratzel::specfun {

// ln Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 terms), accurate to
// better than 1e-14 relative over [1e-3, 1e3].
double ln_gamma(double x);

// Gamma(x) for x > 0.  Throws overflow_error once exp(ln_gamma(x)) leaves
// double range (x > ~171.62).
double gamma(double x);

// Gamma(x+a) / Gamma(x+1), computed in log space so it stays finite for x up
// to 1e6 and beyond.  Requires x > 0 and x + a > 0.
double gamma_ratio(double x, double a);

// B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b), a > 0, b > 0.
double beta(double a, double b);

}  // namespace kratzel::specfun
