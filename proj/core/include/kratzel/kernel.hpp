#pragma once

#include "kratzel/quad.hpp"

namespace kratzel::kernel {

using quad::EvalResult;
using quad::QuadConfig;

// Parameters (n, nu) of the Kraetzel kernel lambda_nu^(n).  The integral
// representation converges only for nu > 1/n - 1 (strict).
struct KernelParams {
    int n = 2;
    double nu = 0.0;

    void validate() const;
};

// Order/argument pair of K_nu(x); nu >= 0, x > 0.
struct BesselArg {
    double nu = 0.0;
    double x = 1.0;

    void validate() const;
};

// lambda_nu^(n)(x) = (2 pi)^((n-1)/2) sqrt(n) (x/n)^(n nu) / Gamma(nu+1-1/n)
//                    * int_1^inf (t^n - 1)^(nu-1/n) e^(-x t) dt
// evaluated by shifting t = 1 + r (origin exponent nu - 1/n, decay rate x)
// and assembling the prefactor in log space.
EvalResult kratzel_kernel(const KernelParams& p, double x, const QuadConfig& cfg);

// K_nu(x) from the integral representation
//   sqrt(pi) (x/2)^nu / Gamma(nu+1/2) * int_1^inf e^(-x t) (t^2-1)^(nu-1/2) dt.
// Takes the closed form sqrt(pi/(2x)) e^(-x) when |nu - 1/2| <= 1e-14.
EvalResult bessel_k(const BesselArg& a, const QuadConfig& cfg);

// Quadrature path unconditionally (no half-integer shortcut); the dispatching
// bessel_k is the production entry point.
EvalResult bessel_k_quadrature(const BesselArg& a, const QuadConfig& cfg);

// Relation between the n = 2 kernel and K_nu:
//   lambda_nu^(2)(x) = 2 (x/2)^nu K_nu(x).
double kernel_from_bessel(double nu, double x, double k_value);
double bessel_from_kernel(double nu, double x, double lambda_value);

}  // namespace kratzel::kernel
