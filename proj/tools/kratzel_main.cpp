// Command-line front end: evaluate kernels and Bessel functions, print bound
// tables, run verification sweeps, and compute Kraetzel transforms.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 indeterminate numerics.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kratzel/bounds.hpp"
#include "kratzel/kernel.hpp"
#include "kratzel/transform.hpp"

namespace {

using namespace kratzel;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_indeterminate = 3;

std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

double default_rel_tol() {
    if (const char* env = std::getenv("KRATZEL_RTOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return 1e-10;
}

struct GridFlags {
    double x_min = 0.0;
    double x_max = 0.0;
    int count = 0;
    bool log_spacing = false;
};

std::vector<double> make_grid(const GridFlags& g) {
    if (!(g.x_min > 0.0) || !(g.x_max > g.x_min) || g.count < 2)
        throw domain_error("grid requires 0 < x-min < x-max and count >= 2");
    std::vector<double> xs(g.count);
    if (g.log_spacing) {
        const double l0 = std::log(g.x_min), l1 = std::log(g.x_max);
        for (int i = 0; i < g.count; ++i)
            xs[i] = std::exp(l0 + (l1 - l0) * i / (g.count - 1));
    } else {
        for (int i = 0; i < g.count; ++i)
            xs[i] = g.x_min + (g.x_max - g.x_min) * i / (g.count - 1);
    }
    return xs;
}

// Writes either to a file or stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "stdout") {
            file_.open(path);
            if (!file_) throw domain_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

const char* direction_name(bounds::BoundKind k) {
    switch (k) {
        case bounds::BoundKind::StrictLower: return "lower";
        case bounds::BoundKind::Equality: return "equality";
        case bounds::BoundKind::StrictUpper: return "upper";
    }
    return "?";
}

const char* verdict_name(bounds::Verdict v) {
    switch (v) {
        case bounds::Verdict::Satisfied: return "satisfied";
        case bounds::Verdict::Violated: return "violated";
        case bounds::Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

int run_eval(const std::string& kind, std::optional<int> n, double nu,
             bool nu_recip_n, double x, double rel_tol) {
    quad::QuadConfig cfg;
    cfg.rel_tol = rel_tol;
    kernel::EvalResult r;
    if (kind == "bessel") {
        r = kernel::bessel_k({nu, x}, cfg);
    } else if (kind == "kernel") {
        if (!n) throw domain_error("--kind kernel requires --n");
        if (nu_recip_n) nu = 1.0 / *n;
        r = kernel::kratzel_kernel({*n, nu}, x, cfg);
    } else {
        throw domain_error("--kind must be kernel or bessel");
    }
    std::cout << fmt15(r.value) << " " << fmt15(r.err_estimate) << "\n";
    return exit_ok;
}

int run_bounds(double nu, std::optional<double> x_single, const GridFlags& g,
               double rel_tol, const std::string& out_path) {
    quad::QuadConfig cfg;
    cfg.rel_tol = rel_tol;
    std::vector<double> xs =
        x_single ? std::vector<double>{*x_single} : make_grid(g);

    Output out(out_path);
    std::ostream& os = out.stream();
    os << "x,exact,eq6_bound,corollary_lower_scaled,corollary_upper_scaled,"
          "luke_lower_scaled,luke_upper_scaled,eq6_margin,"
          "corollary_lower_margin,corollary_upper_margin,"
          "luke_lower_margin,luke_upper_margin\n";

    for (const double x : xs) {
        const double k = kernel::bessel_k({nu, x}, cfg).value;
        os << fmt15(x) << "," << fmt15(k);

        std::string eq6_bound, eq6_margin;
        if (nu <= 0.5 || x > nu - 0.5) {
            const double b = bounds::theorem_bessel_bound(nu, x);
            double m = (k - b) / std::abs(k);
            if (nu > 0.5 + bounds::tol_eq) m = -m;
            if (std::abs(nu - 0.5) <= bounds::tol_eq) m = -std::abs(m);
            eq6_bound = fmt15(b);
            eq6_margin = fmt15(m);
        }

        std::string cl, cu, ll, lu, clm, cum, llm, lum;
        if (nu < 0.5) {
            // both envelopes bound sqrt(2x/pi) e^x K_nu(x)
            const double mid = std::sqrt(2.0 * x / M_PI) *
                               std::exp(x + std::log(k));
            const auto cor = bounds::corollary_envelope(nu, x);
            const auto luke = bounds::luke_envelope(nu, x);
            cl = fmt15(cor.lower);
            cu = fmt15(cor.upper);
            ll = fmt15(luke.lower);
            lu = fmt15(luke.upper);
            clm = fmt15((mid - cor.lower) / mid);
            cum = fmt15((cor.upper - mid) / mid);
            llm = fmt15((mid - luke.lower) / mid);
            lum = fmt15((luke.upper - mid) / mid);
        }
        os << "," << eq6_bound << "," << cl << "," << cu << "," << ll << ","
           << lu << "," << eq6_margin << "," << clm << "," << cum << ","
           << llm << "," << lum << "\n";
    }
    return exit_ok;
}

int run_verify(std::vector<int> n_values, std::vector<double> nu_values,
               bool nu_recip_n, const GridFlags& g, double rel_tol,
               const std::string& out_path) {
    quad::QuadConfig cfg;
    cfg.rel_tol = rel_tol;
    for (const int n : n_values)
        if (n < 2) throw domain_error("verify requires n >= 2");

    const std::vector<double> xs = make_grid(g);

    long checked = 0, failed = 0, indeterminate = 0;
    Output out(out_path);
    std::ostream& os = out.stream();
    os << "n,nu,x,which,direction,exact,bound,margin,verdict\n";

    for (const int n : n_values) {
        std::vector<double> nus = nu_values;
        if (nu_recip_n) nus.push_back(1.0 / n);
        for (const double nu : nus) {
            for (const double x : xs) {
                for (const auto& r : bounds::verify_point(n, nu, x, cfg)) {
                    ++checked;
                    if (r.verdict == bounds::Verdict::Violated) ++failed;
                    if (r.verdict == bounds::Verdict::Indeterminate)
                        ++indeterminate;
                    os << r.n << "," << fmt15(r.nu) << "," << fmt15(r.x) << ","
                       << r.which << "," << direction_name(r.direction.kind)
                       << "," << fmt15(r.exact) << "," << fmt15(r.bound) << ","
                       << fmt15(r.margin) << "," << verdict_name(r.verdict)
                       << "\n";
                }
            }
        }
    }
    std::cout << "checked=" << checked << " failed=" << failed
              << " indeterminate=" << indeterminate << "\n";
    if (failed > 0) return exit_verify_failed;
    if (indeterminate > 0) return exit_indeterminate;
    return exit_ok;
}

int run_transform(const std::string& input, const std::string& builtin,
                  double mu, double power, int n, double nu, bool nu_recip_n,
                  std::vector<double> z_values, const GridFlags& g,
                  double rel_tol, const std::string& out_path) {
    quad::QuadConfig cfg;
    cfg.rel_tol = rel_tol;
    if (nu_recip_n) nu = 1.0 / n;

    transform::FunctionSpec f = transform::FunctionSpec::exp_decay(1.0);
    if (!input.empty()) {
        f = transform::FunctionSpec::from_csv_file(input);
    } else if (builtin == "exp-decay") {
        f = transform::FunctionSpec::exp_decay(mu);
    } else if (builtin == "power-exp") {
        f = transform::FunctionSpec::power_exp(power, mu);
    } else {
        throw domain_error("need --input or --builtin exp-decay|power-exp");
    }

    if (z_values.empty()) z_values = make_grid(g);

    const auto rows = transform::transform_grid(f, {n, nu}, z_values, cfg);

    Output out(out_path);
    std::ostream& os = out.stream();
    os << "z,value,err_estimate\n";
    bool any_failed = false;
    for (const auto& row : rows) {
        if (row.ok) {
            os << fmt15(row.z) << "," << fmt15(row.value) << ","
               << fmt15(row.err_estimate) << "\n";
        } else {
            any_failed = true;
            os << fmt15(row.z) << ",,\n";
            std::cerr << "z=" << fmt15(row.z) << ": " << row.error << "\n";
        }
    }
    return any_failed ? exit_indeterminate : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kraetzel kernel, modified Bessel K, and inequality toolkit"};
    app.require_subcommand(1);

    const double rt_default = default_rel_tol();

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a kernel or K_nu value");
    std::string ev_kind;
    int ev_n = 0;
    double ev_nu = 0.0, ev_x = 0.0, ev_rtol = rt_default;
    bool ev_recip = false;
    eval->add_option("--kind", ev_kind, "kernel|bessel")->required();
    eval->add_option("--n", ev_n, "kernel order n");
    eval->add_option("--nu", ev_nu, "order nu");
    eval->add_flag("--nu-eq-recip-n", ev_recip, "set nu = 1/n exactly");
    eval->add_option("--x", ev_x, "argument x")->required();
    eval->add_option("--rel-tol", ev_rtol, "quadrature relative tolerance");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "K_nu bound table as CSV");
    double b_nu = 0.0, b_rtol = rt_default;
    double b_x = 0.0;
    bool b_have_x = false;
    GridFlags b_grid;
    std::string b_out;
    bnd->add_option("--nu", b_nu, "order nu")->required();
    auto* b_x_opt = bnd->add_option("--x", b_x, "single x");
    bnd->add_option("--x-min", b_grid.x_min);
    bnd->add_option("--x-max", b_grid.x_max);
    bnd->add_option("--x-count", b_grid.count);
    bnd->add_flag("--x-log", b_grid.log_spacing, "log-spaced grid");
    bnd->add_option("--rel-tol", b_rtol);
    bnd->add_option("--out", b_out, "output path or 'stdout'");

    // verify
    auto* ver = app.add_subcommand("verify", "inequality verification sweep");
    std::vector<int> v_n{2, 3};
    std::vector<double> v_nu{0.0, 0.25, 1.0};
    bool v_recip = true;
    GridFlags v_grid{0.05, 50.0, 40, true};
    double v_rtol = rt_default;
    std::string v_out;
    ver->add_option("--n", v_n, "kernel orders (n >= 2)");
    ver->add_option("--nu", v_nu, "nu values");
    ver->add_flag("--nu-eq-recip-n,!--no-nu-eq-recip-n", v_recip,
                  "also sweep nu = 1/n per n (default on)");
    ver->add_option("--x-min", v_grid.x_min);
    ver->add_option("--x-max", v_grid.x_max);
    ver->add_option("--x-count", v_grid.count);
    ver->add_flag("--x-log,!--no-x-log", v_grid.log_spacing);
    ver->add_option("--rel-tol", v_rtol);
    ver->add_option("--out", v_out, "output path or 'stdout'");

    // transform
    auto* tr = app.add_subcommand("transform", "Kraetzel transform L{f}(z)");
    std::string t_input, t_builtin, t_out;
    double t_mu = 1.0, t_power = 1.0, t_nu = 0.0, t_rtol = rt_default;
    int t_n = 1;
    bool t_recip = false;
    std::vector<double> t_z;
    GridFlags t_grid;
    tr->add_option("--input", t_input, "sampled-function CSV (t,f)");
    tr->add_option("--builtin", t_builtin, "exp-decay|power-exp");
    tr->add_option("--mu", t_mu, "builtin decay rate");
    tr->add_option("--power", t_power, "builtin power");
    tr->add_option("--n", t_n, "kernel order n");
    tr->add_option("--nu", t_nu, "kernel order nu");
    tr->add_flag("--nu-eq-recip-n", t_recip, "set nu = 1/n exactly");
    tr->add_option("--z", t_z, "z values (strictly increasing)");
    tr->add_option("--x-min", t_grid.x_min, "z-grid min");
    tr->add_option("--x-max", t_grid.x_max, "z-grid max");
    tr->add_option("--x-count", t_grid.count, "z-grid count");
    tr->add_flag("--x-log", t_grid.log_spacing);
    tr->add_option("--rel-tol", t_rtol);
    tr->add_option("--out", t_out, "output path or 'stdout'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (*eval)
            return run_eval(ev_kind,
                            eval->count("--n") ? std::optional<int>(ev_n)
                                               : std::nullopt,
                            ev_nu, ev_recip, ev_x, ev_rtol);
        if (*bnd) {
            b_have_x = b_x_opt->count() > 0;
            return run_bounds(b_nu,
                              b_have_x ? std::optional<double>(b_x)
                                       : std::nullopt,
                              b_grid, b_rtol, b_out);
        }
        if (*ver)
            return run_verify(v_n, v_nu, v_recip, v_grid, v_rtol, v_out);
        if (*tr)
            return run_transform(t_input, t_builtin, t_mu, t_power, t_n, t_nu,
                                 t_recip, t_z, t_grid, t_rtol, t_out);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const accuracy_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_indeterminate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
