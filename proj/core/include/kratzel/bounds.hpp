#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kratzel/kernel.hpp"

namespace kratzel::bounds {

using kernel::KernelParams;
using quad::QuadConfig;

// Relative tolerance used to classify a parameter point as an equality case
// (nu = 1/n resp. nu = 1/2) and to accept equality-case margins.
inline constexpr double tol_eq = 1e-9;

enum class BoundKind { StrictLower, Equality, StrictUpper };

struct BoundDirection {
    BoundKind kind = BoundKind::StrictLower;
    // Smallest x for which the bound applies; 0 when it holds for all x > 0.
    double valid_x_min = 0.0;
};

enum class Verdict { Satisfied, Violated, Indeterminate };

// One verified inequality instance at a single parameter point.
struct BoundReport {
    int n = 0;
    double nu = 0.0;
    double x = 0.0;
    double exact = 0.0;
    double bound = 0.0;
    BoundDirection direction;
    // Signed relative slack, normalized so positive means satisfied.
    double margin = 0.0;
    bool satisfied = false;
    Verdict verdict = Verdict::Indeterminate;
    std::string which;
};

// Right-hand side of the kernel inequality:
//   (2 pi)^((n-1)/2) sqrt(n)/(n-1) (x/n)^(n nu)
//     * Gamma(x/(n-1) + 1/n - nu) / Gamma(x/(n-1) + 1) * e^(-x).
// n >= 2; in the reversed regime (nu > 1/n) requires x > (n-1)(nu - 1/n).
double theorem_kernel_bound(const KernelParams& p, double x);

// Right-hand side of the Bessel inequality:
//   sqrt(pi/2) x^nu Gamma(x + 1/2 - nu) / Gamma(x + 1) * e^(-x).
// In the reversed regime (nu > 1/2) requires x > nu - 1/2.
double theorem_bessel_bound(double nu, double x);

// Which way the kernel inequality points at (n, nu), and from which x on.
BoundDirection bound_direction(int n, double nu);

struct Envelope {
    double lower = 0.0;
    double upper = 0.0;
};

// Two-sided bounds on sqrt(2x/pi) e^x K_nu(x) for 0 <= nu < 1/2:
//   (x/(x + 1/2 - nu))^(nu + 1/2)  <  .  <  1.
Envelope corollary_envelope(double nu, double x);

// Luke's two-sided bounds on sqrt(2x/pi) e^x K_nu(x) for 0 <= nu < 1/2, with
// c = (1/4 - nu^2)/2:
//   1 - c/(x + c)  <  .  <  1 - c/(x + (9/4 - nu^2)/4).
Envelope luke_envelope(double nu, double x);

// Luke's lower bound restated as a bound on K_nu itself:
//   sqrt(pi/(2x)) e^(-x) * luke_lower.
double luke_implied_k_lower(double nu, double x);

// The K_0 inequality chain a < b < c:
//   a = 1/sqrt(x + 1/2),  b = Gamma(x+1/2)/Gamma(x+1),
//   c = sqrt(2/pi) e^x K_0(x).
struct K0Chain {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};
K0Chain k0_chain(double x, const QuadConfig& cfg);

// Gautschi: Gamma(x+a)/Gamma(x+1) > 1/(x+a)^(1-a) for 0 < a < 1.  Returns the
// right-hand side.
double gautschi_lower(double x, double a);

// Evaluate every inequality whose domain contains (n, nu, x); out-of-domain
// inequalities are skipped, quadrature failures surface as Indeterminate.
std::vector<BoundReport> verify_point(int n, double nu, double x,
                                      const QuadConfig& cfg);

// Smallest x in [x_min, x_max] at which the Bessel theorem bound and Luke's
// implied K lower bound cross, if they do.
std::optional<double> crossover_x(double nu, double x_min, double x_max);

}  // namespace kratzel::bounds
