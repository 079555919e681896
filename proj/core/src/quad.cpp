#include "kratzel/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace kratzel::quad {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct RuleResult {
    double value;
    double err;
};

RuleResult gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double k = wgk[7] * fc;
    double g = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * xgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        k += wgk[i] * fsum;
        if (i % 2 == 1) g += wg[i / 2] * fsum;
    }
    k *= h;
    g *= h;
    return {k, std::abs(k - g)};
}

struct Accum {
    double value = 0.0;
    double err = 0.0;
    long long n_evals = 0;
    bool failed = false;
    // errors below round-off of the whole integral cannot be resolved and do
    // not need to be: accept panels once they drop under this floor
    double noise_floor = 0.0;
};

void refine(const Integrand& f, double a, double b, double tol, int depth,
            const QuadConfig& cfg, Accum& acc) {
    const RuleResult r = gk15(f, a, b);
    acc.n_evals += 15;
    const double width_floor = 1e-15 * (std::abs(a) + std::abs(b) + 1.0);
    if (r.err <= tol || r.err <= cfg.abs_tol || r.err <= acc.noise_floor ||
        (b - a) <= width_floor) {
        acc.value += r.value;
        acc.err += r.err;
        return;
    }
    if (depth >= cfg.max_refinements) {
        acc.value += r.value;
        acc.err += r.err;
        acc.failed = true;
        return;
    }
    const double m = 0.5 * (a + b);
    refine(f, a, m, 0.5 * tol, depth + 1, cfg, acc);
    refine(f, m, b, 0.5 * tol, depth + 1, cfg, acc);
}

EvalResult run_panels(const Integrand& f, const std::vector<double>& bp,
                      const QuadConfig& cfg) {
    const std::size_t np = bp.size() - 1;

    // rough pass to size the error budget
    double rough_total = 0.0;
    std::vector<RuleResult> rough(np);
    for (std::size_t i = 0; i < np; ++i) {
        rough[i] = gk15(f, bp[i], bp[i + 1]);
        rough_total += rough[i].value;
    }

    const double global_tol =
        std::max(cfg.rel_tol * std::abs(rough_total), cfg.abs_tol);

    Accum acc;
    acc.n_evals = static_cast<long long>(np) * 15;
    acc.noise_floor = std::numeric_limits<double>::epsilon() *
                      std::abs(rough_total);
    for (std::size_t i = 0; i < np; ++i)
        refine(f, bp[i], bp[i + 1], global_tol / static_cast<double>(np), 0,
               cfg, acc);

    if (acc.failed)
        throw accuracy_error("quadrature did not converge within max_refinements",
                             acc.value, acc.err, acc.n_evals);
    return {acc.value, acc.err, acc.n_evals};
}

// geometric breakpoints 0, s, 2s, 4s, ... clipped to [0, end]
std::vector<double> geometric_breakpoints(double scale, double end) {
    std::vector<double> bp{0.0};
    double s = std::min(scale, end);
    if (s <= 0.0) s = end;
    while (bp.back() < end) {
        const double next = (bp.size() == 1) ? s : 2.0 * bp.back();
        bp.push_back(std::min(next, end));
        if (bp.size() > 4096) break;  // cannot happen for sane scales
    }
    return bp;
}

}  // namespace

void QuadConfig::validate() const {
    if (!(rel_tol > 0.0) || !std::isfinite(rel_tol))
        throw domain_error("rel_tol must be positive");
    if (max_refinements < 1)
        throw domain_error("max_refinements must be >= 1");
}

Integrand substituted_integrand(const Integrand& f, double singularity_exponent) {
    const double p = 1.0 / (singularity_exponent + 1.0);
    return [f, p](double w) -> double {
        if (w <= 0.0) return 0.0;
        const double r = std::pow(w, p);
        if (r == 0.0) return 0.0;
        return f(r) * p * std::pow(w, p - 1.0);
    };
}

double default_tail_cutoff(double decay_rate, double abs_tol) {
    const double floor_tol = std::max(abs_tol, 5e-324);
    return (-std::log(floor_tol) + 45.0) / decay_rate;
}

EvalResult integrate_interval(const Integrand& f, double a, double b,
                              const QuadConfig& cfg) {
    cfg.validate();
    if (!(b > a)) throw domain_error("integrate_interval requires b > a");
    return run_panels(f, {a, 0.5 * (a + b), b}, cfg);
}

EvalResult integrate_exp_tail(const Integrand& f, double singularity_exponent,
                              double decay_rate, const QuadConfig& cfg) {
    cfg.validate();
    if (!(singularity_exponent > -1.0))
        throw domain_error("singularity exponent must be > -1");
    if (!(decay_rate > 0.0))
        throw domain_error("decay rate must be positive");

    const double cutoff = cfg.tail_cutoff > 0.0
                              ? cfg.tail_cutoff
                              : default_tail_cutoff(decay_rate, cfg.abs_tol);

    // exponent exactly 0: the power substitution is the identity, skip it
    if (std::abs(singularity_exponent) < 1e-14) {
        return run_panels(f, geometric_breakpoints(1.0 / decay_rate, cutoff),
                          cfg);
    }

    const double q = singularity_exponent + 1.0;  // w = r^q
    const Integrand g = substituted_integrand(f, singularity_exponent);
    const double w_end = std::pow(cutoff, q);
    const double w_scale = std::pow(1.0 / decay_rate, q);
    return run_panels(g, geometric_breakpoints(w_scale, w_end), cfg);
}

}  // namespace kratzel::quad
