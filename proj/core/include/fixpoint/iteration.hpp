#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fixpoint/gauge.hpp"
#include "fixpoint/space.hpp"

namespace fixpoint {

enum class OrbitEnd { Fixed, Cycle, MaxSteps };

const char* to_string(OrbitEnd end);

/// A recorded Picard orbit: points, step distances, ascent flag, and the
/// gauge bounds phi^n(e(x0,x1)) when a gauge is attached.
struct OrbitTrace {
    int start = 0;
    std::vector<int> points;
    std::vector<double> step_dist; // e(x_k, x_{k+1})
    std::vector<double> bounds;    // phi^k(e(x0,x1)); empty without a gauge
    bool ascending = true;         // x_i <= x_j for i <= j, on the recorded prefix
    OrbitEnd end = OrbitEnd::Fixed;
    int terminated_at = 0;
};

/// Iterates T until a fixed point, a revisited point (cycle), or max_steps.
OrbitTrace orbit(const FiniteSpace& space, int x, int max_steps,
                 const DistTable* metric = nullptr, const ScalarGauge* phi = nullptr);

struct FixedPointResult {
    bool converged = false;
    int fixed_point = -1;
    int steps = 0;
    double final_step_distance = 0.0;
    double final_bound = 0.0;
    bool bound_ok = true; // every recorded step satisfied the phi^n bound
    OrbitTrace trace;
};

/// Successive approximation with a comparison-gauge certificate.  On finite
/// spaces convergence means the orbit becomes literally constant at a fixed
/// point; a fixed-point-free cycle yields converged = false.
FixedPointResult run_picard(const FiniteSpace& space, int x, const ScalarGauge& phi,
                            const DistTable* metric = nullptr, double tol = 1e-12);

struct CauchyCertificate {
    bool ok = false;
    double beta = 0.0;
    int rank_m = -1; // first rank with all later steps < beta/2
    std::optional<std::pair<int, int>> violation; // (k, n) with E(k,n) too large
};

/// Empirical replay of the Cauchy induction: locates the rank m with
/// E(k,1) < beta/2 for k >= m, then verifies E(k,n) < gamma + beta/2
/// exhaustively on the recorded trace.
CauchyCertificate cauchy_certificate(const OrbitTrace& trace, const ScalarGauge& phi,
                                     double gamma, const FiniteSpace& space,
                                     const DistTable* metric = nullptr);

/// Block orbit of the variable-exponent scheme: x_{i+1} = T^{n_i} x_i.
struct VariableOrbitTrace {
    int start = 0;
    std::vector<int> exponents;        // n_i
    std::vector<int> cumulative;       // m_i = n_0 + ... + n_i
    std::vector<int> block_points;     // x_0, x_1, ...
    std::vector<double> composite_bounds; // g(x_k) o ... o g(x_0)(t0)
    double alpha0 = 0.0;               // max of the first n(x) orbit distances
    double t0 = 0.0;                   // bound from the beta search
    std::vector<int> full_orbit;       // T^m x_0
    std::vector<double> step_dist;
    bool ascending = true;
    bool cauchy = true;                // tail steps below tol on the prefix
    bool bounds_dominate = true;       // recorded distances <= composite bounds
    bool normality_witnessed = true;   // the (t <= a + g(t) => t <= beta) search succeeded
};

VariableOrbitTrace run_variable_exponent(const FiniteSpace& space, int x,
                                         const PointGaugeFamily& family,
                                         int max_blocks, double tol = 1e-6);

enum class PicardMode { ModuloD, ModuloCLeq };

const char* to_string(PicardMode mode);

struct StartVerdict {
    int start = 0;
    bool converged = false;
    int limit = -1;
    bool ascent_ok = true; // T^n x <= limit for all recorded n (C-leq mode)
};

struct PicardReport {
    PicardMode mode = PicardMode::ModuloD;
    std::vector<int> fix_set;
    bool fix_singleton = false; // singleton, or <=-singleton in C-leq mode
    std::vector<StartVerdict> starts;
    std::vector<std::pair<int, bool>> maximality; // per fixed point (C-leq mode)

    bool picard() const;
};

/// Exhaustive orbit simulation from every admissible start.
PicardReport classify_picard(const FiniteSpace& space, PicardMode mode,
                             const DistTable* metric = nullptr);

}  // namespace fixpoint
