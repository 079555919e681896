#include "kratzel/kernel.hpp"

#include <cmath>

#include "kratzel/specfun.hpp"

namespace kratzel::kernel {

namespace {

constexpr double ln_two_pi = 1.8378770664093454835606594728112;

void require_positive_x(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw domain_error("x must be positive");
}

// Truncation point for an r^growth * exp(-rate * r) envelope.
double tail_cutoff(double rate, double growth, double abs_tol) {
    const double base = quad::default_tail_cutoff(rate, abs_tol);
    double r = base;
    if (growth > 0.0) {
        for (int i = 0; i < 4; ++i)
            r = base + growth * std::log1p(r) / rate;
    }
    return r;
}

// Assemble exp(log_prefactor - x + log integral) from a shifted-integral
// result, propagating the quadrature error estimate.
EvalResult assemble(double log_prefactor, double x,
                    const EvalResult& shifted) {
    const double value = std::exp(log_prefactor - x + std::log(shifted.value));
    const double rel_err =
        shifted.value > 0.0 ? shifted.err_estimate / shifted.value : 0.0;
    return {value, std::abs(value) * rel_err, shifted.n_evals};
}

}  // namespace

void KernelParams::validate() const {
    if (n < 1) throw domain_error("kernel order n must be >= 1");
    if (!std::isfinite(nu) || !(nu > 1.0 / n - 1.0))
        throw domain_error("kernel requires nu > 1/n - 1");
}

void BesselArg::validate() const {
    if (!std::isfinite(nu) || nu < 0.0)
        throw domain_error("Bessel order nu must be >= 0");
    require_positive_x(x);
}

EvalResult kratzel_kernel(const KernelParams& p, double x,
                          const QuadConfig& cfg) {
    p.validate();
    require_positive_x(x);

    const double n = static_cast<double>(p.n);
    const double alpha = p.nu - 1.0 / n;  // origin exponent of (t^n-1)^(nu-1/n)

    QuadConfig qc = cfg;
    if (qc.tail_cutoff <= 0.0)
        qc.tail_cutoff = tail_cutoff(x, n * alpha, qc.abs_tol);

    // t = 1 + r; the e^{-x} factor is pulled out of the integral
    const auto integrand = [n, alpha, x](double r) {
        return std::pow(std::expm1(n * std::log1p(r)), alpha) * std::exp(-x * r);
    };
    const EvalResult shifted = quad::integrate_exp_tail(integrand, alpha, x, qc);

    const double log_pref = 0.5 * (n - 1.0) * ln_two_pi + 0.5 * std::log(n) +
                            n * p.nu * (std::log(x) - std::log(n)) -
                            specfun::ln_gamma(p.nu + 1.0 - 1.0 / n);
    return assemble(log_pref, x, shifted);
}

EvalResult bessel_k_quadrature(const BesselArg& a, const QuadConfig& cfg) {
    a.validate();
    const double alpha = a.nu - 0.5;
    const double x = a.x;

    QuadConfig qc = cfg;
    if (qc.tail_cutoff <= 0.0)
        qc.tail_cutoff = tail_cutoff(x, 2.0 * alpha, qc.abs_tol);

    const auto integrand = [alpha, x](double r) {
        return std::pow(r * (r + 2.0), alpha) * std::exp(-x * r);
    };
    const EvalResult shifted = quad::integrate_exp_tail(integrand, alpha, x, qc);

    const double log_pref = 0.5 * std::log(M_PI) + a.nu * std::log(0.5 * x) -
                            specfun::ln_gamma(a.nu + 0.5);
    return assemble(log_pref, x, shifted);
}

EvalResult bessel_k(const BesselArg& a, const QuadConfig& cfg) {
    a.validate();
    if (std::abs(a.nu - 0.5) <= 1e-14) {
        const double value = std::sqrt(M_PI / (2.0 * a.x)) * std::exp(-a.x);
        return {value, std::abs(value) * 4e-16, 1};
    }
    return bessel_k_quadrature(a, cfg);
}

double kernel_from_bessel(double nu, double x, double k_value) {
    if (!std::isfinite(nu) || nu < 0.0)
        throw domain_error("nu must be >= 0");
    require_positive_x(x);
    if (!(k_value > 0.0)) throw domain_error("k_value must be positive");
    return 2.0 * std::pow(0.5 * x, nu) * k_value;
}

double bessel_from_kernel(double nu, double x, double lambda_value) {
    if (!std::isfinite(nu) || nu < 0.0)
        throw domain_error("nu must be >= 0");
    require_positive_x(x);
    if (!(lambda_value > 0.0))
        throw domain_error("lambda_value must be positive");
    return lambda_value / (2.0 * std::pow(0.5 * x, nu));
}

}  // namespace kratzel::kernel
