#pragma once

#include <stdexcept>
#include <string>

namespace kratzel {

// Precondition violation: an argument is outside the domain of the requested
// function (non-positive x, nu at or below the convergence boundary, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Result magnitude exceeds double range.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Quadrature failed to meet the requested tolerance within the refinement
// budget.  Carries the best estimate reached so far.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& msg, double best_value,
                   double best_err, long long n_evals)
        : std::runtime_error(msg),
          best_value(best_value), best_err(best_err), n_evals(n_evals) {}

    double best_value;
    double best_err;
    long long n_evals;
};

}  // namespace kratzel
