#include "fixpoint/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace fixpoint {

namespace {

double validate(double v, const char* who) {
    if (!std::isfinite(v) || v < 0.0)
        throw GaugeError(std::string(who) + " evaluator returned " + std::to_string(v));
    return v;
}

}  // namespace

double ScalarGauge::operator()(double t) const {
    if (t < 0.0) throw GaugeError("gauge argument negative: " + std::to_string(t));
    return validate(fn(t), "scalar gauge");
}

ScalarGauge linear_gauge(double alpha) {
    return {[alpha](double t) { return alpha * t; }, true, "linear", alpha};
}

ScalarGauge rational_gauge(double c) {
    return {[c](double t) { return t / (1.0 + c * t); }, true, "rational", c};
}

ScalarGauge zero_gauge() {
    return {[](double) { return 0.0; }, true, "zero", 0.0};
}

ScalarGauge identity_gauge() {
    return {[](double t) { return t; }, true, "identity", 0.0};
}

double GaugeFamily5::operator()(const std::array<double, 5>& t) const {
    for (double v : t)
        if (v < 0.0) throw GaugeError("family argument negative");
    return validate(fn(t), "five-argument family");
}

ScalarGauge GaugeFamily5::diagonal() const {
    auto f = *this;
    ScalarGauge g;
    g.fn = [f](double t) { return f({t, t, t, 2 * t, 2 * t}); };
    g.tag = "diagonal5:" + tag;
    g.p1 = p1;
    return g;
}

GaugeFamily5 scaled_max_family5(double c) {
    GaugeFamily5 f;
    f.fn = [c](const std::array<double, 5>& t) {
        return c * *std::max_element(t.begin(), t.end());
    };
    f.tag = "scaled-max";
    f.p1 = c;
    return f;
}

GaugeFamily5 zero_family5() {
    GaugeFamily5 f;
    f.fn = [](const std::array<double, 5>&) { return 0.0; };
    f.tag = "zero";
    return f;
}

GaugeFamily5 projection_family5(int index) {
    GaugeFamily5 f;
    f.fn = [index](const std::array<double, 5>& t) { return t[index]; };
    f.tag = "projection";
    f.p1 = index;
    return f;
}

int PointGaugeFamily::n_at(int x) const {
    if (x < 0 || x >= size()) throw InputError("family has no record for point");
    return exponent[x];
}

double PointGaugeFamily::eval(int x, std::span<const double> args) const {
    if (x < 0 || x >= size()) throw InputError("family has no record for point");
    const int want = 2 * exponent[x] + 1;
    if (static_cast<int>(args.size()) != want)
        throw InputError("family arity mismatch: got " + std::to_string(args.size()) +
                         ", expected " + std::to_string(want));
    for (double v : args)
        if (v < 0.0) throw GaugeError("family argument negative");
    return validate(fn[x](args), "point family");
}

ScalarGauge PointGaugeFamily::diagonal(int x) const {
    const int arity = 2 * n_at(x) + 1;
    auto f = fn[x];
    ScalarGauge g;
    g.fn = [f, arity](double t) {
        std::vector<double> args(arity, t);
        return f(args);
    };
    g.tag = "diagonal:" + tag;
    g.p1 = p1;
    return g;
}

PointGaugeFamily scaled_max_point_family(std::vector<int> exponents, double c) {
    PointGaugeFamily fam;
    fam.tag = "scaled-max";
    fam.p1 = c;
    fam.exponent = std::move(exponents);
    for (size_t i = 0; i < fam.exponent.size(); ++i)
        fam.fn.push_back([c](std::span<const double> args) {
            double m = 0.0;
            for (double v : args) m = std::max(m, v);
            return c * m;
        });
    return fam;
}

PointGaugeFamily tail_max_point_family(std::vector<int> exponents, double c) {
    PointGaugeFamily fam;
    fam.tag = "tail-max";
    fam.p1 = c;
    fam.exponent = std::move(exponents);
    for (size_t i = 0; i < fam.exponent.size(); ++i) {
        const int n = fam.exponent[i];
        fam.fn.push_back([c, n](std::span<const double> args) {
            return c * std::max(args[n - 1], args[2 * n]);
        });
    }
    return fam;
}

SamplingPlan SamplingPlan::standard(std::uint64_t seed) {
    SamplingPlan plan;
    for (int k = -6; k <= 3; ++k) plan.grid.push_back(std::pow(10.0, k));
    plan.seed = seed;
    return plan;
}

std::vector<double> SamplingPlan::samples() const {
    std::vector<double> out = grid;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    for (int i = 0; i < random_points; ++i) out.push_back(std::exp(u(rng)));
    std::sort(out.begin(), out.end());
    return out;
}

std::string SamplingPlan::describe() const {
    std::ostringstream os;
    os << "grid[" << grid.size() << "] + " << random_points
       << " log-uniform samples of [" << lo << "," << hi << "], seed " << seed;
    return os.str();
}

double iterate(const ScalarGauge& phi, double t, int n) {
    if (n < 0) throw InputError("negative iterate count");
    double v = t;
    for (int k = 0; k < n; ++k) v = phi(v);
    return v;
}

NormalityReport check_comparison(const ScalarGauge& phi, const SamplingPlan& plan) {
    NormalityReport report;
    report.plan = plan.describe();
    auto pts = plan.samples();
    report.samples_used = static_cast<int>(pts.size());

    if (phi(0.0) > 0.0) {
        report.f1 = false;
        report.first_failure = 0.0;
    }
    for (double t : pts) {
        if (!(phi(t) < t)) {
            report.f1 = false;
            if (!report.first_failure) report.first_failure = t;
            break;
        }
    }
    // pts is sorted; adjacent comparisons cover monotonicity on the sample
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (phi(pts[i]) > phi(pts[i + 1])) {
            report.increasing = false;
            if (!report.first_failure) report.first_failure = pts[i];
            break;
        }
    }

    // iterate decay: fail only on a detected stall at a positive level
    const double decay_tol = 1e-9;
    const int budget = 10000;
    for (double t : pts) {
        double v = t;
        for (int k = 0; k < budget; ++k) {
            double w = phi(v);
            if (w <= decay_tol) break;
            if (w >= v * (1.0 - 1e-9)) { // stall: phi^n(t) cannot reach 0
                report.iterate_decay = false;
                if (!report.first_failure) report.first_failure = t;
                break;
            }
            v = w;
        }
        if (!report.iterate_decay) break;
    }
    return report;
}

bool gamma_beta_valid(const ScalarGauge& phi, double gamma, double beta, int samples) {
    if (beta <= 0.0) return false;
    const double top = (gamma + beta) * (1.0 - 1e-12);
    if (phi(0.0) > gamma) return false;
    for (int j = 1; j <= samples; ++j) {
        double t = top * static_cast<double>(j) / samples;
        if (phi(t) > gamma) return false;
    }
    return true;
}

std::optional<double> gamma_beta(const ScalarGauge& phi, double gamma, int max_bisect) {
    if (gamma <= 0.0) throw InputError("gamma must be positive");
    double hi = 10.0 * gamma;
    if (gamma_beta_valid(phi, gamma, hi)) return hi;
    double lo = 0.0; // [0, gamma) is covered whenever phi(t) <= t there
    for (int k = 0; k < max_bisect; ++k) {
        double mid = 0.5 * (lo + hi);
        if (gamma_beta_valid(phi, gamma, mid))
            lo = mid;
        else
            hi = mid;
    }
    const double beta_min = 1e-9 * gamma;
    if (lo >= beta_min && gamma_beta_valid(phi, gamma, lo)) return lo;
    return std::nullopt;
}

bool check_divergence(const ScalarGauge& g) {
    const double threshold = 1e3;
    double prev = -std::numeric_limits<double>::infinity();
    double last = 0.0;
    for (int k = 0; k <= 8; ++k) {
        double t = std::pow(10.0, k);
        last = t - g(t);
        if (last < prev - 1e-9) return false; // shrinking: not diverging
        prev = last;
    }
    return last > threshold;
}

NormalityReport check_normal5(const GaugeFamily5& f, const SamplingPlan& plan) {
    ScalarGauge g = f.diagonal();
    NormalityReport report = check_comparison(g, plan);
    report.divergence = check_divergence(g);
    return report;
}

std::vector<double> compose_family(const std::vector<ScalarGauge>& gauges, double t) {
    if (gauges.empty()) throw InputError("compose_family: empty gauge list");
    std::vector<double> out;
    double v = t;
    for (const auto& g : gauges) {
        v = g(v);
        out.push_back(v);
    }
    return out;
}

std::function<double(double, double, double)> matkowski_reduce(const GaugeFamily5& f) {
    return [f](double xi, double eta, double zeta) {
        return f({xi, eta, zeta, xi + eta, zeta + eta});
    };
}

}  // namespace fixpoint
