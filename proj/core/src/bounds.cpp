#include "kratzel/bounds.hpp"

#include <cmath>

#include "kratzel/specfun.hpp"

namespace kratzel::bounds {

namespace {

constexpr double ln_two_pi = 1.8378770664093454835606594728112;

void require_positive_x(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw domain_error("x must be positive");
}

double normalized_margin(double exact, double bound, BoundKind kind) {
    const double scale = std::max(std::abs(exact), 1e-300);
    switch (kind) {
        case BoundKind::StrictLower: return (exact - bound) / scale;
        case BoundKind::StrictUpper: return (bound - exact) / scale;
        case BoundKind::Equality: return -std::abs(exact - bound) / scale;
    }
    return 0.0;
}

BoundReport make_report(std::string which, int n, double nu, double x,
                        double exact, double bound, BoundDirection dir) {
    BoundReport r;
    r.n = n;
    r.nu = nu;
    r.x = x;
    r.exact = exact;
    r.bound = bound;
    r.direction = dir;
    r.margin = normalized_margin(exact, bound, dir.kind);
    r.satisfied = r.margin >= -tol_eq;
    r.verdict = r.satisfied ? Verdict::Satisfied : Verdict::Violated;
    r.which = std::move(which);
    return r;
}

BoundReport indeterminate_report(std::string which, int n, double nu, double x,
                                 double best, double bound, BoundDirection dir) {
    BoundReport r;
    r.n = n;
    r.nu = nu;
    r.x = x;
    r.exact = best;
    r.bound = bound;
    r.direction = dir;
    r.margin = 0.0;
    r.satisfied = false;
    r.verdict = Verdict::Indeterminate;
    r.which = std::move(which);
    return r;
}

}  // namespace

BoundDirection bound_direction(int n, double nu) {
    if (n < 2) throw domain_error("bound direction requires n >= 2");
    if (!std::isfinite(nu) || nu < 0.0)
        throw domain_error("nu must be >= 0");
    const double thr = 1.0 / n;
    if (nu < thr - tol_eq) return {BoundKind::StrictLower, 0.0};
    if (nu <= thr + tol_eq) return {BoundKind::Equality, 0.0};
    return {BoundKind::StrictUpper, (n - 1.0) * (nu - thr)};
}

double theorem_kernel_bound(const KernelParams& p, double x) {
    if (p.n < 2) throw domain_error("kernel bound requires n >= 2");
    if (!std::isfinite(p.nu) || p.nu < 0.0)
        throw domain_error("nu must be >= 0");
    require_positive_x(x);

    const double n = static_cast<double>(p.n);
    const double y = x / (n - 1.0);
    const double garg = y + 1.0 / n - p.nu;
    // garg > 0 is exactly x > (n-1)(nu - 1/n), the reversed-regime threshold
    if (!(garg > 0.0))
        throw domain_error("bound requires x > (n-1)(nu - 1/n)");

    // The (n/(n-1))^(nu-1/n) factor comes out of the proof's substitution; it
    // is 1 at the equality point nu = 1/n.
    const double lv = 0.5 * (n - 1.0) * ln_two_pi + 0.5 * std::log(n) -
                      std::log(n - 1.0) +
                      (p.nu - 1.0 / n) * std::log(n / (n - 1.0)) +
                      n * p.nu * std::log(x / n) + specfun::ln_gamma(garg) -
                      specfun::ln_gamma(y + 1.0) - x;
    return std::exp(lv);
}

double theorem_bessel_bound(double nu, double x) {
    if (!std::isfinite(nu) || nu < 0.0)
        throw domain_error("nu must be >= 0");
    require_positive_x(x);
    const double garg = x + 0.5 - nu;
    if (!(garg > 0.0))
        throw domain_error("bound requires x > nu - 1/2");
    const double lv = 0.5 * std::log(0.5 * M_PI) + nu * std::log(x) +
                      specfun::ln_gamma(garg) - specfun::ln_gamma(x + 1.0) - x;
    return std::exp(lv);
}

Envelope corollary_envelope(double nu, double x) {
    if (!(nu >= 0.0 && nu < 0.5))
        throw domain_error("corollary envelope requires 0 <= nu < 1/2");
    require_positive_x(x);
    return {std::pow(x / (x + 0.5 - nu), nu + 0.5), 1.0};
}

Envelope luke_envelope(double nu, double x) {
    if (!(nu >= 0.0 && nu < 0.5))
        throw domain_error("Luke envelope requires 0 <= nu < 1/2");
    require_positive_x(x);
    const double c = 0.5 * (0.25 - nu * nu);
    return {1.0 - c / (x + c), 1.0 - c / (x + 0.25 * (2.25 - nu * nu))};
}

double luke_implied_k_lower(double nu, double x) {
    return std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) *
           luke_envelope(nu, x).lower;
}

K0Chain k0_chain(double x, const QuadConfig& cfg) {
    require_positive_x(x);
    const double a = 1.0 / std::sqrt(x + 0.5);
    const double b = specfun::gamma_ratio(x, 0.5);
    const kernel::EvalResult k = kernel::bessel_k({0.0, x}, cfg);
    const double c =
        std::sqrt(2.0 / M_PI) * std::exp(x + std::log(k.value));
    return {a, b, c};
}

double gautschi_lower(double x, double a) {
    require_positive_x(x);
    if (!(a > 0.0 && a < 1.0))
        throw domain_error("Gautschi bound requires 0 < a < 1");
    return std::exp(-(1.0 - a) * std::log(x + a));
}

std::vector<BoundReport> verify_point(int n, double nu, double x,
                                      const QuadConfig& cfg) {
    std::vector<BoundReport> out;
    if (n < 2 || !(nu >= 0.0)) throw domain_error("verify_point requires n >= 2, nu >= 0");
    require_positive_x(x);

    // Eq. (5): kernel vs its gamma-ratio bound
    {
        const BoundDirection dir = bound_direction(n, nu);
        const bool in_domain =
            dir.kind != BoundKind::StrictUpper || x > dir.valid_x_min;
        if (in_domain) {
            const double bound = theorem_kernel_bound({n, nu}, x);
            try {
                const double exact = kernel::kratzel_kernel({n, nu}, x, cfg).value;
                out.push_back(make_report("eq5", n, nu, x, exact, bound, dir));
            } catch (const accuracy_error& e) {
                out.push_back(
                    indeterminate_report("eq5", n, nu, x, e.best_value, bound, dir));
            }
        }
    }

    // everything below concerns K_nu, independent of the requested n
    const BoundDirection dir6 = bound_direction(2, nu);
    const bool eq6_in_domain =
        dir6.kind != BoundKind::StrictUpper || x > dir6.valid_x_min;
    const bool scaled_in_domain = nu < 0.5;
    if (!eq6_in_domain && !scaled_in_domain) return out;

    double k_value = 0.0;
    bool k_ok = false;
    double k_best = 0.0;
    try {
        k_value = kernel::bessel_k({nu, x}, cfg).value;
        k_ok = true;
    } catch (const accuracy_error& e) {
        k_best = e.best_value;
    }

    if (eq6_in_domain) {
        const double bound = theorem_bessel_bound(nu, x);
        if (k_ok)
            out.push_back(make_report("eq6", n, nu, x, k_value, bound, dir6));
        else
            out.push_back(
                indeterminate_report("eq6", n, nu, x, k_best, bound, dir6));
    }

    if (scaled_in_domain) {
        const double kv = k_ok ? k_value : k_best;
        const double log_k = std::log(std::max(kv, 1e-300));
        // both envelopes sandwich the same scaled quantity sqrt(2x/pi) e^x K
        const double mid = std::sqrt(2.0 * x / M_PI) * std::exp(x + log_k);
        const Envelope cor = corollary_envelope(nu, x);
        const Envelope luke = luke_envelope(nu, x);

        const auto push = [&](const char* which, double exact, double bound,
                              BoundKind kind) {
            if (k_ok)
                out.push_back(make_report(which, n, nu, x, exact, bound,
                                          {kind, 0.0}));
            else
                out.push_back(indeterminate_report(which, n, nu, x, exact, bound,
                                                   {kind, 0.0}));
        };
        push("corollary_lower", mid, cor.lower, BoundKind::StrictLower);
        push("corollary_upper", mid, cor.upper, BoundKind::StrictUpper);
        push("luke_lower", mid, luke.lower, BoundKind::StrictLower);
        push("luke_upper", mid, luke.upper, BoundKind::StrictUpper);

        if (std::abs(nu) <= tol_eq) {
            const double a = 1.0 / std::sqrt(x + 0.5);
            const double b = specfun::gamma_ratio(x, 0.5);
            const double c = std::sqrt(2.0 / M_PI) * std::exp(x + log_k);
            push("eq1_lower", b, a, BoundKind::StrictLower);
            push("eq1_upper", c, b, BoundKind::StrictLower);
        }
    }
    return out;
}

std::optional<double> crossover_x(double nu, double x_min, double x_max) {
    if (!(nu >= 0.0 && nu < 0.5))
        throw domain_error("crossover requires 0 <= nu < 1/2");
    if (!(0.0 < x_min && x_min < x_max))
        throw domain_error("crossover requires 0 < x_min < x_max");

    const auto diff = [nu](double x) {
        return theorem_bessel_bound(nu, x) - luke_implied_k_lower(nu, x);
    };

    const int steps = 256;
    const double lmin = std::log(x_min), lmax = std::log(x_max);
    double prev_x = x_min;
    double prev_d = diff(prev_x);
    for (int i = 1; i <= steps; ++i) {
        const double x = std::exp(lmin + (lmax - lmin) * i / steps);
        const double d = diff(x);
        if ((prev_d > 0.0) != (d > 0.0)) {
            double lo = prev_x, hi = x;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((diff(mid) > 0.0) == (prev_d > 0.0))
                    lo = mid;
                else
                    hi = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_x = x;
        prev_d = d;
    }
    return std::nullopt;
}

}  // namespace kratzel::bounds
