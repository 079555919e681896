#include "kratzel/transform.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace kratzel::transform {

namespace {

constexpr double sqrt_pi = 1.7724538509055160272981674833411;

// Memoizing kernel evaluator for a fixed (n, nu); closed forms for n = 1 and
// the (n = 2, nu = 1/2) reduction, quadrature otherwise.
class KernelCache {
public:
    KernelCache(const KernelParams& p, const QuadConfig& outer_cfg)
        : p_(p), inner_cfg_(outer_cfg) {
        inner_cfg_.rel_tol = std::max(outer_cfg.rel_tol * 0.1, 1e-12);
        inner_cfg_.tail_cutoff = 0.0;
    }

    double operator()(double x) {
        if (x <= 0.0) return 0.0;
        if (p_.n == 1) return std::exp(-x);
        // lambda_{1/2}^(2)(x) = 2 (x/2)^{1/2} K_{1/2}(x) = sqrt(pi) e^{-x}
        if (p_.n == 2 && std::abs(p_.nu - 0.5) <= 1e-14)
            return sqrt_pi * std::exp(-x);
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
        const double v = kernel::kratzel_kernel(p_, x, inner_cfg_).value;
        cache_.emplace(x, v);
        return v;
    }

    double inner_rel_tol() const { return inner_cfg_.rel_tol; }

private:
    KernelParams p_;
    QuadConfig inner_cfg_;
    std::map<double, double> cache_;
};

}  // namespace

FunctionSpec FunctionSpec::exp_decay(double mu) {
    if (!(mu > 0.0)) throw domain_error("exp-decay rate mu must be positive");
    FunctionSpec f;
    f.kind_ = Kind::ExpDecay;
    f.mu_ = mu;
    return f;
}

FunctionSpec FunctionSpec::power_exp(double power, double mu) {
    if (!(mu > 0.0)) throw domain_error("power-exp rate mu must be positive");
    if (!(power > -1.0)) throw domain_error("power-exp exponent must be > -1");
    FunctionSpec f;
    f.kind_ = Kind::PowerExp;
    f.mu_ = mu;
    f.power_ = power;
    return f;
}

FunctionSpec FunctionSpec::sampled(std::vector<double> nodes,
                                   std::vector<double> values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw domain_error("sampled function needs equally many nodes and values");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!std::isfinite(nodes[i]) || nodes[i] <= 0.0)
            throw domain_error("nodes must be positive and finite");
        if (!std::isfinite(values[i]))
            throw domain_error("values must be finite");
        if (i > 0 && nodes[i] <= nodes[i - 1])
            throw domain_error("nodes must be strictly increasing");
    }
    FunctionSpec f;
    f.kind_ = Kind::Sampled;
    f.nodes_ = std::move(nodes);
    f.values_ = std::move(values);
    return f;
}

FunctionSpec FunctionSpec::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open input file: " + path);
    std::string line;
    std::vector<double> nodes, values;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) continue;  // header
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string ts, fs;
        if (!std::getline(ss, ts, ',') || !std::getline(ss, fs)) {
            throw domain_error("malformed CSV at line " +
                               std::to_string(line_no) + ": expected t,f");
        }
        double t, v;
        try {
            t = std::stod(ts);
            v = std::stod(fs);
        } catch (const std::exception&) {
            throw domain_error("malformed CSV at line " +
                               std::to_string(line_no) + ": not a number");
        }
        if (!std::isfinite(t) || t <= 0.0)
            throw domain_error("line " + std::to_string(line_no) +
                               ": nodes must be positive");
        if (!nodes.empty() && t <= nodes.back())
            throw domain_error("line " + std::to_string(line_no) +
                               ": nodes must be strictly increasing");
        nodes.push_back(t);
        values.push_back(v);
    }
    if (nodes.empty()) throw domain_error("input file has no data rows");
    return sampled(std::move(nodes), std::move(values));
}

double FunctionSpec::operator()(double t) const {
    switch (kind_) {
        case Kind::ExpDecay:
            return std::exp(-mu_ * t);
        case Kind::PowerExp:
            return t <= 0.0 ? 0.0 : std::pow(t, power_) * std::exp(-mu_ * t);
        case Kind::Sampled: {
            if (t < nodes_.front() || t > nodes_.back()) return 0.0;
            const auto it =
                std::upper_bound(nodes_.begin(), nodes_.end(), t);
            if (it == nodes_.begin()) return values_.front();
            if (it == nodes_.end()) return values_.back();
            const std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
            const double w = (t - nodes_[i - 1]) / (nodes_[i] - nodes_[i - 1]);
            return values_[i - 1] + w * (values_[i] - values_[i - 1]);
        }
    }
    return 0.0;
}

double FunctionSpec::decay_rate() const {
    return kind_ == Kind::Sampled ? 0.0 : mu_;
}

double FunctionSpec::support_end() const {
    return kind_ == Kind::Sampled ? nodes_.back()
                                  : std::numeric_limits<double>::infinity();
}

EvalResult kratzel_transform(const FunctionSpec& f, const KernelParams& p,
                             double z, const QuadConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!std::isfinite(z) || z <= 0.0) throw domain_error("z must be positive");

    KernelCache kern(p, cfg);
    const auto integrand = [&](double t) { return kern(z * t) * f(t); };

    EvalResult outer;
    if (f.kind() == FunctionSpec::Kind::Sampled) {
        // compact support: integrate node interval by node interval
        const auto& nodes = f.nodes();
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            const EvalResult part =
                quad::integrate_interval(integrand, nodes[i], nodes[i + 1], cfg);
            outer.value += part.value;
            outer.err_estimate += part.err_estimate;
            outer.n_evals += part.n_evals;
        }
        if (nodes.size() == 1) outer.n_evals = 1;
    } else {
        // the kernel contributes an e^{-zt} envelope on top of f's own decay;
        // singularity exponent 0: the kernel is bounded (or at worst log-
        // singular) at the origin
        const double alpha =
            f.kind() == FunctionSpec::Kind::PowerExp ? f.power() : 0.0;
        outer = quad::integrate_exp_tail(integrand, alpha,
                                         z + f.decay_rate(), cfg);
    }

    outer.err_estimate += std::abs(outer.value) * kern.inner_rel_tol();
    if (outer.n_evals == 0) outer.n_evals = 1;
    return outer;
}

std::vector<TransformRow> transform_grid(const FunctionSpec& f,
                                         const KernelParams& p,
                                         const std::vector<double>& z_values,
                                         const QuadConfig& cfg) {
    for (std::size_t i = 1; i < z_values.size(); ++i)
        if (!(z_values[i] > z_values[i - 1]))
            throw domain_error("z values must be strictly increasing");

    std::vector<TransformRow> rows;
    rows.reserve(z_values.size());
    for (const double z : z_values) {
        TransformRow row;
        row.z = z;
        try {
            const EvalResult r = kratzel_transform(f, p, z, cfg);
            row.value = r.value;
            row.err_estimate = r.err_estimate;
            row.ok = true;
        } catch (const accuracy_error& e) {
            row.value = e.best_value;
            row.err_estimate = e.best_err;
            row.error = e.what();
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kratzel::transform
