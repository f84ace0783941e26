#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fixpoint/errors.hpp"

namespace fixpoint {

/// Scalar gauge phi: R+ -> R+.  Evaluators must be stateless; the output is
/// validated (finite, nonnegative) on every call.  `tag`/`p1` identify the
/// built-in family for serialization; custom evaluators carry tag "custom"
/// and cannot round-trip through JSON.
struct ScalarGauge {
    std::function<double(double)> fn;
    bool declared_increasing = true;
    std::string tag = "custom";
    double p1 = 0.0;

    double operator()(double t) const;
};

ScalarGauge linear_gauge(double alpha);   // t -> alpha*t
ScalarGauge rational_gauge(double c);     // t -> t/(1+c*t)
ScalarGauge zero_gauge();
ScalarGauge identity_gauge();             // not a comparison function

/// Five-argument gauge family, increasing in each variable (declared).
struct GaugeFamily5 {
    std::function<double(const std::array<double, 5>&)> fn;
    std::string tag = "custom";
    double p1 = 0.0;

    double operator()(const std::array<double, 5>& t) const;
    /// Diagonal g(t) = f(t,t,t,2t,2t).
    ScalarGauge diagonal() const;
};

GaugeFamily5 scaled_max_family5(double c); // c * max(t1..t5)
GaugeFamily5 zero_family5();
GaugeFamily5 projection_family5(int index);

/// Per-point family: exponent n(x) >= 1 and evaluator f(x) on 2n(x)+1
/// nonnegative arguments (n orbit distances, then n+1 cross distances),
/// increasing in each variable.
struct PointGaugeFamily {
    std::vector<int> exponent;
    std::vector<std::function<double(std::span<const double>)>> fn;
    std::string tag = "custom";
    double p1 = 0.0;

    int size() const { return static_cast<int>(exponent.size()); }
    int n_at(int x) const;
    double eval(int x, std::span<const double> args) const;
    /// Diagonal g(x)(t) = f(x)(t,...,t).
    ScalarGauge diagonal(int x) const;
};

/// f(x) = c * max(args) with the given per-point exponents.
PointGaugeFamily scaled_max_point_family(std::vector<int> exponents, double c);

/// f(x) = c * max(last orbit distance, last cross distance); satisfies the
/// beta-search and vanishing-last-coordinate side conditions for any c < 1.
PointGaugeFamily tail_max_point_family(std::vector<int> exponents, double c);

/// Named sampling plan for semi-decided functional properties: the default
/// grid {10^k : k=-6..3} plus seeded random log-uniform points.
struct SamplingPlan {
    std::vector<double> grid;
    int random_points = 64;
    std::uint64_t seed = 20240;
    double lo = 1e-6, hi = 1e3;

    static SamplingPlan standard(std::uint64_t seed = 20240);
    std::vector<double> samples() const;
    std::string describe() const;
};

struct NormalityReport {
    bool f1 = true;            // phi(0) = 0 and phi(t) < t on samples
    bool increasing = true;
    bool iterate_decay = true; // no stall found in phi^n(t) -> 0
    bool divergence = true;    // t - g(t) -> oo (five-argument check only)
    int samples_used = 0;
    std::optional<double> first_failure;
    std::string plan;

    bool pass() const { return f1 && increasing && iterate_decay && divergence; }
};

/// phi^n(t); phi^0(t) = t.
double iterate(const ScalarGauge& phi, double t, int n);

/// Semi-decision: pass means no violation found on the sampling plan.
NormalityReport check_comparison(const ScalarGauge& phi,
                                 const SamplingPlan& plan = SamplingPlan::standard());

/// Searches beta > 0 with phi(t) <= gamma for all sampled t in [0, gamma+beta)
/// by bisection on (0, 10*gamma]; absent when no such beta is found, which for
/// a sampled range indicates phi is not a comparison function there.
std::optional<double> gamma_beta(const ScalarGauge& phi, double gamma,
                                 int max_bisect = 80);

/// Validity re-check used on gamma_beta results and closed-form candidates.
bool gamma_beta_valid(const ScalarGauge& phi, double gamma, double beta,
                      int samples = 256);

/// Normality of a five-argument family via its diagonal: iterate decay plus
/// divergence of t - g(t); both conditions checked independently.
NormalityReport check_normal5(const GaugeFamily5& f,
                              const SamplingPlan& plan = SamplingPlan::standard());

/// Divergence half of normality for a scalar gauge: t - g(t) -> oo sampled at
/// geometrically growing t.
bool check_divergence(const ScalarGauge& g);

/// Prefix compositions g_0(t), g_1(g_0(t)), ...
std::vector<double> compose_family(const std::vector<ScalarGauge>& gauges, double t);

/// Three-argument reduction F(xi,eta,zeta) = f(xi,eta,zeta,xi+eta,zeta+eta).
std::function<double(double, double, double)> matkowski_reduce(const GaugeFamily5& f);

}  // namespace fixpoint
