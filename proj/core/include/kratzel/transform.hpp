#pragma once

#include <string>
#include <vector>

#include "kratzel/kernel.hpp"

namespace kratzel::transform {

using kernel::KernelParams;
using quad::EvalResult;
using quad::QuadConfig;

// An integrand f for the transform: either a named builtin or a sampled grid
// (linear interpolation between nodes, zero outside the node range).
class FunctionSpec {
public:
    enum class Kind { ExpDecay, PowerExp, Sampled };

    static FunctionSpec exp_decay(double mu);                     // e^(-mu t)
    static FunctionSpec power_exp(double power, double mu);       // t^p e^(-mu t)
    static FunctionSpec sampled(std::vector<double> nodes,
                                std::vector<double> values);

    // Parse a two-column CSV (t, f) with a header row.  Throws domain_error
    // naming the offending line on malformed input.
    static FunctionSpec from_csv_file(const std::string& path);

    double operator()(double t) const;

    Kind kind() const { return kind_; }
    double mu() const { return mu_; }
    double power() const { return power_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }

    // Exponential decay rate of |f| in the tail; 0 for compactly supported f.
    double decay_rate() const;
    // End of support, +inf for the builtins.
    double support_end() const;

private:
    FunctionSpec() = default;

    Kind kind_ = Kind::ExpDecay;
    double mu_ = 1.0;
    double power_ = 0.0;
    std::vector<double> nodes_;
    std::vector<double> values_;
};

// L_nu^(n){f}(z) = int_0^inf lambda_nu^(n)(z t) f(t) dt.  Kernel values are
// memoized per distinct z*t on the outer quadrature grid; err_estimate
// combines the outer rule error with the inner kernel tolerance.
EvalResult kratzel_transform(const FunctionSpec& f, const KernelParams& p,
                             double z, const QuadConfig& cfg);

struct TransformRow {
    double z = 0.0;
    double value = 0.0;
    double err_estimate = 0.0;
    bool ok = false;
    std::string error;
};

// One row per z, order preserved; per-point failures are recorded in the row
// instead of aborting the sweep.
std::vector<TransformRow> transform_grid(const FunctionSpec& f,
                                         const KernelParams& p,
                                         const std::vector<double>& z_values,
                                         const QuadConfig& cfg);

}  // namespace kratzel::transform
