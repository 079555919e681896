// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kratzel/bounds.hpp"
#include "kratzel/kernel.hpp"
#include "kratzel/specfun.hpp"
#include "kratzel/transform.hpp"

using namespace kratzel;
using quad::QuadConfig;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i)
        xs[i] = std::exp(std::log(lo) +
                         (std::log(hi) - std::log(lo)) * i / (count - 1));
    return xs;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// 1. oracle agreement
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    QuadConfig cfg;
    bool ok = true;
    std::ostringstream detail;

    // K_0(1), mpmath 40 digits, computed ahead of the build
    const double k0_1 = 0.4210244382407083333356273792126090361362;
    const double got = kernel::bessel_k({0.0, 1.0}, cfg).value;
    if (rel_err(got, k0_1) > 1e-9) {
        ok = false;
        detail << "K_0(1) off by " << rel_err(got, k0_1);
    }

    double worst = 0.0;
    for (const double x : log_grid(0.05, 50.0, 20)) {
        const double closed = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
        worst = std::max(worst,
                         rel_err(kernel::bessel_k({0.5, x}, cfg).value, closed));
    }
    if (worst > 1e-12) {
        ok = false;
        detail << " K_{1/2} worst rel err " << worst;
    }
    const double dt = seconds_since(t0);
    if (dt >= 5.0) {
        ok = false;
        detail << " runtime " << dt << "s >= 5s";
    }
    report(1, "oracle agreement (K_0(1), K_{1/2} closed form)", ok,
           detail.str());
}

// 2. relation (4)
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    QuadConfig cfg;
    double worst = 0.0;
    for (const double nu : {0.0, 0.1, 0.25, 0.5, 1.0, 2.3}) {
        for (const double x : log_grid(0.05, 50.0, 40)) {
            const double lam = kernel::kratzel_kernel({2, nu}, x, cfg).value;
            const double k = kernel::bessel_k({nu, x}, cfg).value;
            worst = std::max(
                worst, rel_err(lam, kernel::kernel_from_bessel(nu, x, k)));
        }
    }
    const double dt = seconds_since(t0);
    std::ostringstream detail;
    detail << "max discrepancy " << worst << ", " << dt << "s";
    report(2, "relation (4): lambda^(2) vs 2(x/2)^nu K_nu", worst <= 1e-8 && dt < 30.0,
           detail.str());
}

// 3. n=1 collapse
void criterion_3() {
    QuadConfig cfg;
    double worst = 0.0;
    for (const double nu : {0.25, 0.5, 1.0, 3.0})
        for (const double x : {0.1, 2.0, 20.0})
            worst = std::max(
                worst, rel_err(kernel::kratzel_kernel({1, nu}, x, cfg).value,
                               std::exp(-x)));
    std::ostringstream detail;
    detail << "max rel err " << worst;
    report(3, "n=1 collapse to e^{-x}", worst <= 1e-9, detail.str());
}

// 4. Theorem 1(ii) full regime sweep
void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    QuadConfig cfg;
    bool ok = true;
    std::ostringstream detail;
    long violations = 0;

    const auto xs = log_grid(1e-3, 1e2, 40);

    // strict lower, margin must clear 10x the quadrature error estimate
    for (const double nu : {0.0, 0.1, 0.2, 0.3, 0.4, 0.49}) {
        for (const double x : xs) {
            const auto k = kernel::bessel_k({nu, x}, cfg);
            const double bound = bounds::theorem_bessel_bound(nu, x);
            if (!(k.value - bound > 10.0 * k.err_estimate)) ++violations;
        }
    }
    // equality at nu = 1/2
    double worst_eq = 0.0;
    for (const double x : xs) {
        worst_eq = std::max(worst_eq,
                            rel_err(bounds::theorem_bessel_bound(0.5, x),
                                    kernel::bessel_k({0.5, x}, cfg).value));
    }
    if (worst_eq > 1e-10) {
        ok = false;
        detail << "equality worst " << worst_eq << " ";
    }
    // reversed regime
    for (const double nu : {0.75, 1.0, 2.0}) {
        for (const double x : log_grid((nu - 0.5) * 1.01, 100.0, 40)) {
            const auto k = kernel::bessel_k({nu, x}, cfg);
            const double bound = bounds::theorem_bessel_bound(nu, x);
            if (!(bound - k.value > 10.0 * k.err_estimate)) ++violations;
        }
    }
    const double dt = seconds_since(t0);
    if (violations > 0) ok = false;
    if (dt >= 60.0) ok = false;
    detail << violations << " violations, " << dt << "s";
    report(4, "Theorem 1(ii) regimes (Eq. 6)", ok, detail.str());
}

// 5. Theorem 1(i) sweep over n
void criterion_5() {
    QuadConfig cfg;
    long violations = 0;
    long checked = 0;
    for (const int n : {2, 3, 4, 5}) {
        const double recip = 1.0 / n;
        const std::vector<double> nus = {0.0, 0.5 * recip, recip,
                                         recip + 0.5, recip + 2.0};
        for (const double nu : nus) {
            const auto dir = bounds::bound_direction(n, nu);
            std::vector<double> xs;
            if (dir.kind == bounds::BoundKind::StrictUpper)
                xs = log_grid(dir.valid_x_min * 1.01, 100.0, 20);
            else
                xs = log_grid(1e-2, 50.0, 20);
            for (const double x : xs) {
                const auto lam = kernel::kratzel_kernel({n, nu}, x, cfg);
                const double bound = bounds::theorem_kernel_bound({n, nu}, x);
                ++checked;
                switch (dir.kind) {
                    case bounds::BoundKind::StrictLower:
                        if (!(lam.value - bound > 10.0 * lam.err_estimate))
                            ++violations;
                        break;
                    case bounds::BoundKind::Equality:
                        if (rel_err(lam.value, bound) > bounds::tol_eq)
                            ++violations;
                        break;
                    case bounds::BoundKind::StrictUpper:
                        if (!(bound - lam.value > 10.0 * lam.err_estimate))
                            ++violations;
                        break;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << checked << " points, " << violations << " violations";
    report(5, "Theorem 1(i) regimes (Eq. 5), n in {2..5}", violations == 0,
           detail.str());
}

// 6. corollary/Luke sandwiches, Eq. (1) chain, Gautschi
void criterion_6() {
    QuadConfig cfg;
    long violations = 0;
    for (const double nu : {0.0, 0.1, 0.2, 0.3, 0.4, 0.49}) {
        for (const double x : log_grid(1e-3, 1e2, 40)) {
            const double k = kernel::bessel_k({nu, x}, cfg).value;
            const double mid =
                std::sqrt(2.0 * x / M_PI) * std::exp(x + std::log(k));
            const auto cor = bounds::corollary_envelope(nu, x);
            const auto luke = bounds::luke_envelope(nu, x);
            if (!(cor.lower < mid && mid < cor.upper)) ++violations;
            if (!(luke.lower < mid && mid < luke.upper)) ++violations;
        }
    }
    for (const double x : log_grid(1e-3, 1e2, 40)) {
        const auto chain = bounds::k0_chain(x, cfg);
        if (!(chain.a < chain.b && chain.b < chain.c)) ++violations;
    }
    for (const double a : {0.1, 0.5, 0.9}) {
        for (const double x : log_grid(1e-2, 1e2, 40)) {
            if (!(specfun::gamma_ratio(x, a) > bounds::gautschi_lower(x, a)))
                ++violations;
        }
    }
    std::ostringstream detail;
    detail << violations << " violations";
    report(6, "corollary/Luke sandwiches, Eq. (1) chain, Gautschi",
           violations == 0, detail.str());
}

// 7. small-x slope and crossover
void criterion_7() {
    bool ok = true;
    std::ostringstream detail;
    for (const double nu : {0.1, 0.3}) {
        const auto xs = log_grid(1e-4, 1e-2, 12);
        // least-squares slope of ln(bound) vs ln(x)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const double x : xs) {
            const double lx = std::log(x);
            const double ly = std::log(bounds::theorem_bessel_bound(nu, x));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        const double n = static_cast<double>(xs.size());
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        detail << "slope(nu=" << nu << ")=" << slope << " ";
        if (std::abs(slope - nu) > 0.02) ok = false;
    }
    const auto x_star = bounds::crossover_x(0.25, 1e-3, 1e2);
    if (x_star) {
        detail << "crossover x*=" << *x_star;
    } else {
        ok = false;
        detail << "no crossover found";
    }
    report(7, "small-x slope O(x^nu) and Eq.(6)/Luke crossover", ok,
           detail.str());
}

// 8. transform reductions
void criterion_8() {
    QuadConfig cfg;
    bool ok = true;
    std::ostringstream detail;
    double worst = 0.0;

    const double mus[] = {0.5, 1.0, 3.0};
    const double zs[] = {0.7, 2.0};
    for (const double mu : mus) {
        for (const double z : zs) {
            const auto f = transform::FunctionSpec::exp_decay(mu);
            const double got =
                transform::kratzel_transform(f, {1, 0.5}, z, cfg).value;
            worst = std::max(worst, rel_err(got, 1.0 / (mu + z)));
        }
    }
    if (worst > 1e-7) ok = false;
    detail << "n=1 worst " << worst;

    double worst2 = 0.0;
    const auto f1 = transform::FunctionSpec::exp_decay(1.0);
    for (const double z : {0.5, 1.0, 2.0}) {
        const double got =
            transform::kratzel_transform(f1, {2, 0.5}, z, cfg).value;
        worst2 = std::max(
            worst2, rel_err(got, std::sqrt(M_PI) / (1.0 + z)));
    }
    if (worst2 > 1e-7) ok = false;
    detail << ", n=2 nu=1/2 worst " << worst2;

    // linearity on shared sampled nodes
    const std::vector<double> nodes{0.5, 1.0, 2.0, 3.0};
    const std::vector<double> fv{1.0, 0.2, 0.8, 0.1};
    const std::vector<double> gv{0.3, 1.0, 0.4, 0.6};
    std::vector<double> combo(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        combo[i] = 1.5 * fv[i] + 2.5 * gv[i];
    const kernel::KernelParams p{2, 0.25};
    const auto tf = transform::kratzel_transform(
        transform::FunctionSpec::sampled(nodes, fv), p, 1.0, cfg);
    const auto tg = transform::kratzel_transform(
        transform::FunctionSpec::sampled(nodes, gv), p, 1.0, cfg);
    const auto tc = transform::kratzel_transform(
        transform::FunctionSpec::sampled(nodes, combo), p, 1.0, cfg);
    const double lin_err =
        std::abs(tc.value - (1.5 * tf.value + 2.5 * tg.value));
    const double lin_tol = tc.err_estimate + 1.5 * tf.err_estimate +
                           2.5 * tg.err_estimate + 1e-9 * std::abs(tc.value);
    if (!(lin_err <= lin_tol)) ok = false;
    detail << ", linearity err " << lin_err;

    report(8, "transform reductions and linearity", ok, detail.str());
}

// 9. end-to-end CLI verify, deterministic output
void criterion_9() {
    bool ok = true;
    std::ostringstream detail;
    const std::string csv_a = "acceptance_verify_a.csv";
    const std::string csv_b = "acceptance_verify_b.csv";
    const std::string cmd = std::string(KRATZEL_CLI_PATH) +
                            " verify --out ";
    const int rc_a = std::system((cmd + csv_a + " > /dev/null").c_str());
    const int rc_b = std::system((cmd + csv_b + " > /dev/null").c_str());
    if (rc_a != 0 || rc_b != 0) {
        ok = false;
        detail << "nonzero exit (" << rc_a << ", " << rc_b << ")";
    } else {
        std::ifstream fa(csv_a), fb(csv_b);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        if (sa.str().empty() || sa.str() != sb.str()) {
            ok = false;
            detail << "outputs differ or empty";
        } else {
            detail << sa.str().substr(0, sa.str().find('\n')) << " ... "
                   << "byte-identical";
        }
    }
    std::remove(csv_a.c_str());
    std::remove(csv_b.c_str());
    report(9, "CLI verify default sweep, deterministic CSV", ok, detail.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
