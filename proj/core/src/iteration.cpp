#include "fixpoint/iteration.hpp"

#include <algorithm>
#include <cmath>

#include "fixpoint/contraction.hpp"

namespace fixpoint {

const char* to_string(OrbitEnd end) {
    switch (end) {
        case OrbitEnd::Fixed: return "fixed";
        case OrbitEnd::Cycle: return "cycle";
        case OrbitEnd::MaxSteps: return "max-steps";
    }
    return "?";
}

const char* to_string(PicardMode mode) {
    return mode == PicardMode::ModuloD ? "modulo-d" : "modulo-C-leq";
}

namespace {

bool ascending_prefix(const FiniteSpace& space, const std::vector<int>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (!space.leq(points[i], points[j])) return false;
    return true;
}

}  // namespace

OrbitTrace orbit(const FiniteSpace& space, int x, int max_steps,
                 const DistTable* metric, const ScalarGauge* phi) {
    if (!space.has_selfmap()) throw InputError("orbit: no selfmap");
    if (x < 0 || x >= space.n) throw InputError("orbit: start out of range");
    const DistTable& d = metric ? *metric : space.dist;

    OrbitTrace trace;
    trace.start = x;
    std::vector<std::uint8_t> visited(space.n, 0);
    int p = x;
    trace.points.push_back(p);
    visited[p] = 1;
    trace.end = OrbitEnd::MaxSteps;
    for (int step = 0; step < max_steps; ++step) {
        int q = space.image(p);
        if (q == p) {
            trace.end = OrbitEnd::Fixed;
            break;
        }
        trace.step_dist.push_back(d[p][q]);
        trace.points.push_back(q);
        if (visited[q]) {
            trace.end = OrbitEnd::Cycle;
            break;
        }
        visited[q] = 1;
        p = q;
    }
    if (trace.end == OrbitEnd::MaxSteps && space.image(p) == p)
        trace.end = OrbitEnd::Fixed;
    trace.terminated_at = static_cast<int>(trace.points.size()) - 1;
    trace.ascending = ascending_prefix(space, trace.points);
    if (phi && !trace.step_dist.empty()) {
        double b = trace.step_dist[0];
        for (size_t k = 0; k < trace.step_dist.size(); ++k) {
            trace.bounds.push_back(b);
            b = (*phi)(b);
        }
    }
    return trace;
}

FixedPointResult run_picard(const FiniteSpace& space, int x, const ScalarGauge& phi,
                            const DistTable* metric, double tol) {
    FixedPointResult result;
    result.trace = orbit(space, x, space.n + 1, metric, &phi);
    const OrbitTrace& t = result.trace;
    result.converged = t.end == OrbitEnd::Fixed;
    result.steps = static_cast<int>(t.points.size()) - 1;
    if (result.converged) result.fixed_point = t.points.back();
    if (!t.step_dist.empty()) {
        result.final_step_distance = t.step_dist.back();
        result.final_bound = t.bounds.back();
    }
    for (size_t k = 0; k < t.step_dist.size(); ++k)
        if (t.step_dist[k] > t.bounds[k] + tol) result.bound_ok = false;
    return result;
}

CauchyCertificate cauchy_certificate(const OrbitTrace& trace, const ScalarGauge& phi,
                                     double gamma, const FiniteSpace& space,
                                     const DistTable* metric) {
    const DistTable& d = metric ? *metric : space.dist;
    CauchyCertificate cert;
    auto beta = gamma_beta(phi, gamma);
    if (!beta)
        throw PreconditionError("gamma-beta",
                                "no beta found for gamma = " + std::to_string(gamma));
    cert.beta = std::min(*beta, gamma * (1.0 - 1e-9)); // beta < gamma, as in the proof

    const auto& pts = trace.points;
    const int len = static_cast<int>(pts.size());
    // rank m: every later step distance is below beta/2
    int m = -1;
    for (int k = 0; k + 1 < len; ++k) {
        bool small_tail = true;
        for (int j = k; j + 1 < len; ++j)
            if (!(d[pts[j]][pts[j + 1]] < cert.beta / 2)) {
                small_tail = false;
                break;
            }
        if (small_tail) {
            m = k;
            break;
        }
    }
    if (m < 0 && len >= 1 && trace.end == OrbitEnd::Fixed) m = len - 1;
    if (m < 0) {
        cert.ok = false;
        cert.violation = {len - 1, 1};
        return cert;
    }
    cert.rank_m = m;
    cert.ok = true;
    for (int k = m; k < len && cert.ok; ++k)
        for (int n = 0; k + n < len; ++n)
            if (!(d[pts[k]][pts[k + n]] < gamma + cert.beta / 2)) {
                cert.ok = false;
                cert.violation = {k, n};
                break;
            }
    return cert;
}

VariableOrbitTrace run_variable_exponent(const FiniteSpace& space, int x,
                                         const PointGaugeFamily& family,
                                         int max_blocks, double tol) {
    if (!space.has_selfmap()) throw InputError("run_variable_exponent: no selfmap");
    if (family.size() != space.n) throw InputError("family size does not match carrier");
    if (!space.leq(x, space.image(x)))
        throw PreconditionError("e05", "start is not progressive (x <= Tx fails)");

    VariableOrbitTrace trace;
    trace.start = x;

    // full T-orbit prefix, long enough for the acceptance window
    const int horizon = std::max(2 * space.n + 4, 201);
    int p = x;
    trace.full_orbit.push_back(p);
    for (int m = 0; m < horizon; ++m) {
        int q = space.image(p);
        trace.step_dist.push_back(space.dist[p][q]);
        trace.full_orbit.push_back(q);
        p = q;
    }

    // block recursion x_{i+1} = T^{n_i} x_i
    trace.block_points.push_back(x);
    int cum = 0;
    for (int i = 0; i < max_blocks; ++i) {
        int xi = trace.block_points.back();
        int ni = family.n_at(xi);
        if (cum + ni >= static_cast<int>(trace.full_orbit.size())) break;
        cum += ni;
        trace.exponents.push_back(ni);
        trace.cumulative.push_back(cum);
        trace.block_points.push_back(trace.full_orbit[cum]);
        if (space.image(trace.block_points.back()) == trace.block_points.back()) break;
    }

    // t0 via the implication search: t <= alpha0 + g(x)(t) implies t <= beta
    const int n0 = family.n_at(x);
    ScalarGauge g0 = family.diagonal(x);
    trace.alpha0 = 0.0;
    for (int j = 1; j <= n0; ++j)
        trace.alpha0 = std::max(trace.alpha0, space.dist[x][trace.full_orbit[j]]);
    if (trace.alpha0 == 0.0) {
        trace.t0 = 0.0;
    } else {
        const double a = trace.alpha0;
        const double bmax = 10.0 * (a + 1.0);
        auto clear_above = [&](double beta) {
            // no sampled t > beta still satisfies t <= a + g(t)
            const int samples = 256;
            const double top = 10.0 * bmax;
            for (int j = 0; j <= samples; ++j) {
                double t = beta + (top - beta) * j / samples + 1e-15;
                if (t <= a + g0(t)) return false;
            }
            return true;
        };
        if (!clear_above(bmax)) {
            trace.normality_witnessed = false;
            trace.t0 = bmax;
        } else {
            double lo = a, hi = bmax;
            if (clear_above(lo))
                hi = lo;
            else
                for (int k = 0; k < 80; ++k) {
                    double mid = 0.5 * (lo + hi);
                    if (clear_above(mid))
                        hi = mid;
                    else
                        lo = mid;
                }
            trace.t0 = hi * (1.0 + 1e-9) + 1e-12;
        }
    }

    // composite bounds c_k = g(x_k) o ... o g(x_0)(t0)
    if (!trace.block_points.empty()) {
        std::vector<ScalarGauge> gauges;
        for (size_t k = 0; k + 1 < trace.block_points.size(); ++k)
            gauges.push_back(family.diagonal(trace.block_points[k]));
        if (!gauges.empty())
            trace.composite_bounds = compose_family(gauges, trace.t0);
    }

    // checks: d(x_{k+1}, T^m x_{k+1}) <= c_k for every recorded m
    const double slack = space.slack + 1e-12;
    for (size_t k = 0; k < trace.composite_bounds.size(); ++k) {
        int base = trace.cumulative[k];
        for (size_t m = base; m < trace.full_orbit.size(); ++m)
            if (space.dist[trace.full_orbit[base]][trace.full_orbit[m]] >
                trace.composite_bounds[k] + slack) {
                trace.bounds_dominate = false;
                break;
            }
        if (!trace.bounds_dominate) break;
    }
    // t0 itself must dominate d(x, T^m x)
    for (size_t m = 0; m < trace.full_orbit.size(); ++m)
        if (space.dist[x][trace.full_orbit[m]] > trace.t0 + slack)
            trace.bounds_dominate = false;

    trace.ascending = ascending_prefix(space, trace.full_orbit);
    int settle = -1;
    for (int s = static_cast<int>(trace.step_dist.size()); s-- > 0;) {
        if (!(trace.step_dist[s] < tol)) {
            settle = s;
            break;
        }
    }
    trace.cauchy = settle < 200;
    return trace;
}

bool PicardReport::picard() const {
    if (!fix_singleton) return false;
    for (const auto& s : starts)
        if (!s.converged || !s.ascent_ok) return false;
    for (const auto& [fp, ok] : maximality)
        if (!ok) return false;
    return true;
}

PicardReport classify_picard(const FiniteSpace& space, PicardMode mode,
                             const DistTable* metric) {
    if (!space.has_selfmap()) throw InputError("classify_picard: no selfmap");
    PicardReport report;
    report.mode = mode;
    for (int i = 0; i < space.n; ++i)
        if (space.image(i) == i) report.fix_set.push_back(i);

    std::vector<int> starts_set;
    if (mode == PicardMode::ModuloD) {
        starts_set.resize(space.n);
        for (int i = 0; i < space.n; ++i) starts_set[i] = i;
    } else {
        starts_set = progressive_sets(space).x_leq;
    }

    for (int s : starts_set) {
        OrbitTrace t = orbit(space, s, space.n + 1, metric);
        StartVerdict v;
        v.start = s;
        v.converged = t.end == OrbitEnd::Fixed;
        if (v.converged) v.limit = t.points.back();
        if (mode == PicardMode::ModuloCLeq && v.converged)
            for (int p : t.points)
                if (!space.leq(p, v.limit)) v.ascent_ok = false;
        report.starts.push_back(v);
    }

    if (mode == PicardMode::ModuloD) {
        report.fix_singleton = report.fix_set.size() == 1;
    } else {
        report.fix_singleton = true; // <=-singleton: comparable fixed points coincide
        for (int z : report.fix_set)
            for (int w : report.fix_set)
                if (z != w && space.leq(z, w)) report.fix_singleton = false;
        auto x_leq = progressive_sets(space).x_leq;
        for (int fp : report.fix_set) {
            bool maximal = true;
            for (int u : x_leq)
                if (space.leq(fp, u) && !space.leq(u, fp)) maximal = false;
            report.maximality.emplace_back(fp, maximal);
        }
    }
    return report;
}

}  // namespace fixpoint
