#pragma once

#include <functional>

#include "kratzel/errors.hpp"

namespace kratzel::quad {

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;     // underflow guard, not an accuracy target
    int max_refinements = 60;    // bisection depth limit per panel
    double tail_cutoff = 0.0;    // r beyond which the integrand is negligible;
                                 // <= 0 means derive it from the decay rate

    void validate() const;
};

struct EvalResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long long n_evals = 0;
};

using Integrand = std::function<double(double)>;

// Integrate f over [0, inf) where f behaves like r^alpha near the origin
// (alpha > -1) and decays like exp(-decay_rate * r) in the tail.  The origin
// singularity is removed by the substitution r = w^(1/(alpha+1)) before
// adaptive Gauss-Kronrod refinement; the tail is truncated where the
// exponential envelope drops below abs_tol.
EvalResult integrate_exp_tail(const Integrand& f, double singularity_exponent,
                              double decay_rate, const QuadConfig& cfg);

// Adaptive Gauss-Kronrod over a finite interval [a, b].  No endpoint
// evaluations, so integrable endpoint behaviour is tolerated but not
// accelerated.
EvalResult integrate_interval(const Integrand& f, double a, double b,
                              const QuadConfig& cfg);

// The integrand in w-space after the substitution r = w^(1/(alpha+1)):
//   g(w) = f(w^p) * p * w^(p-1),  p = 1/(alpha+1).
// Bounded at w -> 0 whenever f(r) ~ c r^alpha there.  Exposed so the
// substitution itself can be checked in isolation.
Integrand substituted_integrand(const Integrand& f, double singularity_exponent);

// Truncation point for an exp(-decay_rate * r) envelope against abs_tol.
double default_tail_cutoff(double decay_rate, double abs_tol);

}  // namespace kratzel::quad
