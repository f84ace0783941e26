// Acceptance gate: one check per line, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fixpoint/contraction.hpp"
#include "fixpoint/falsify.hpp"
#include "fixpoint/instances.hpp"
#include "fixpoint/iteration.hpp"
#include "fixpoint/maia.hpp"
#include "fixpoint/oracle.hpp"

using namespace fixpoint;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail = "") {
    std::printf("%s  %2d. %s%s%s\n", ok ? "PASS" : "FAIL", index, name,
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

InstanceSpec tree(TheoremId target, std::uint64_t seed, int n) {
    GeneratorParams gp;
    gp.seed = seed;
    gp.n = n;
    gp.target = target;
    return gen_theorem_instance(gp);
}

// Criterion 1: the halving-map carrier realizes the geometric closed form.
void maia_closed_form() {
    auto t0 = Clock::now();
    FiniteSpace grid = half_map_grid();
    auto dm = build_maia_metric(grid, 0.5, 1.5, 1e-12);
    double worst = 0.0;
    for (int i = 0; i < grid.n; ++i)
        for (int j = 0; j < grid.n; ++j)
            worst = std::max(worst, std::abs(dm.table[i][j] - 4.0 * grid.dist[i][j]));
    auto props = verify_maia_properties(dm);
    double elapsed = seconds_since(t0);
    bool ok = worst <= 1e-9 && props.pass() && elapsed < 1.0;
    char detail[128];
    std::snprintf(detail, sizeof detail, "max|e-4d| = %.3g, properties %s, %.2fs",
                  worst, props.pass() ? "pass" : "fail", elapsed);
    report(1, "derived-metric closed form on the halving grid", ok, detail);
}

// Criterion 2: suite soundness over 500 instances per theorem.
void suite_soundness() {
    auto t0 = Clock::now();
    int checked = 0, violations = 0;
    for (TheoremId id : {TheoremId::T2, TheoremId::T4, TheoremId::T9})
        for (int i = 0; i < 500; ++i) {
            int n = 4 + i % 5; // carrier sizes 4..8
            InstanceSpec spec = tree(id, 1000 + i, n);
            auto verdict = theorem_suite(spec.space, id, spec.suite_params());
            ++checked;
            if (!verdict.implication_respected()) ++violations;
        }
    double elapsed = seconds_since(t0);
    bool ok = checked == 1500 && violations == 0 && elapsed < 60.0;
    char detail[128];
    std::snprintf(detail, sizeof detail, "%d instances, %d violations, %.1fs", checked,
                  violations, elapsed);
    report(2, "theorem-suite soundness (T2, T4, T9)", ok, detail);
}

// Criterion 3: dropped hypotheses are certified necessary.
void necessity() {
    FalsifyParams p2;
    p2.theorem = TheoremId::T2;
    p2.drop = "b03";
    p2.trials = 1000;
    p2.seed = 7;
    auto r2 = falsify_campaign(p2);

    FalsifyParams p4;
    p4.theorem = TheoremId::T4;
    p4.drop = "c05";
    p4.trials = 1000;
    p4.seed = 7;
    auto r4 = falsify_campaign(p4);

    auto split = library_instance("two-components");
    auto curated =
        theorem_suite(split.space, TheoremId::T2, split.suite_params(), {"b03"});
    bool curated_ok = curated.hypotheses_pass() && !curated.conclusions_pass();

    bool ok = r2.found && r4.found && curated_ok;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "b03 trial %d, c05 trial %d, curated certificate %s", r2.trial,
                  r4.trial, curated_ok ? "ok" : "missing");
    report(3, "necessity of b03 and c05 via falsification", ok, detail);
}

// Criterion 4: step distances stay under the gauge envelope.
void orbit_decay() {
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 40 && ok; ++seed) {
        InstanceSpec spec = tree(TheoremId::T4, seed, 4 + seed % 5);
        for (int x = 0; x < spec.space.n && ok; ++x) {
            auto result = run_picard(spec.space, x, *spec.phi, nullptr, 1e-12);
            if (!result.converged || !result.bound_ok) ok = false;
        }
    }
    report(4, "orbit decay bounded by gauge iterates", ok);
}

// Criterion 5: the beta search and the analytic closed form both validate.
void gamma_beta_lemma() {
    ScalarGauge phi = rational_gauge(1.0);
    bool ok = true;
    for (double gamma : {0.1, 0.25, 0.5, 0.9}) {
        auto beta = gamma_beta(phi, gamma);
        double analytic = gamma * gamma / (1.0 - gamma);
        if (!beta || !gamma_beta_valid(phi, gamma, *beta) ||
            !gamma_beta_valid(phi, gamma, analytic))
            ok = false;
    }
    if (gamma_beta(identity_gauge(), 0.5)) ok = false; // no beta may exist here
    report(5, "gamma-beta search with analytic cross-check", ok);
}

// Criterion 6: M(x, Tx) collapses to the two orbit distances.
void m_identity() {
    bool ok = true;
    for (const auto& name : builtin_library()) {
        auto spec = library_instance(name);
        for (int x = 0; x < spec.space.n; ++x) {
            int tx = spec.space.image(x);
            int ttx = spec.space.image(tx);
            double m = hlm(spec.space, spec.space.dist, x, tx).m;
            double expected = std::max(spec.space.d(x, tx), spec.space.d(tx, ttx));
            if (std::abs(m - expected) > 1e-12) ok = false;
        }
    }
    report(6, "M(x,Tx) identity across the library", ok);
}

// Criterion 7: the variable-exponent engine produces a certified block orbit.
void variable_engine() {
    auto chain = library_instance("variable-exponent-chain");
    auto trace = run_variable_exponent(chain.space, 0, *chain.family, 64, 1e-6);
    bool ok = trace.ascending && trace.cauchy && trace.bounds_dominate &&
              trace.normality_witnessed;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "ascending %d, cauchy %d, bounds %d, t0 = %.3g", trace.ascending,
                  trace.cauchy, trace.bounds_dominate, trace.t0);
    report(7, "variable-exponent block orbit", ok, detail);
}

// Criterion 8: reported fixed points are maximal among progressive points.
void maximality() {
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 40 && ok; ++seed) {
        InstanceSpec spec = tree(TheoremId::T4, 100 + seed, 4 + seed % 5);
        auto report_mod = classify_picard(spec.space, PicardMode::ModuloCLeq);
        if (report_mod.maximality.empty()) ok = false;
        for (const auto& [fp, maximal] : report_mod.maximality)
            if (!maximal) ok = false;
    }
    report(8, "fixed-point maximality in modulo-(C,<=) mode", ok);
}

// Criterion 9: the derived metric carries every T2 instance into T3.
void reduction_pipeline() {
    bool ok = true;
    int carried = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        InstanceSpec spec = tree(TheoremId::T2, 200 + seed, 4 + seed % 5);
        auto t2 = theorem_suite(spec.space, TheoremId::T2, spec.suite_params());
        if (!t2.hypotheses_pass()) continue;
        auto dm = build_maia_metric(spec.space, spec.alpha, *spec.lambda, 1e-9);
        double max_tail = 0.0;
        for (const auto& row : dm.tail_bound)
            for (double t : row) max_tail = std::max(max_tail, t);
        SuiteParams params;
        params.e = dm.table;
        params.mu = 1.0 / dm.lambda;
        params.slack_override = 2.0 * max_tail + 1e-12;
        auto t3 = theorem_suite(spec.space, TheoremId::T3, params);
        ++carried;
        if (!t3.hypotheses_pass()) ok = false;
    }
    ok = ok && carried == 40;
    char detail[64];
    std::snprintf(detail, sizeof detail, "%d/40 instances carried", carried);
    report(9, "T2-to-T3 reduction via the derived metric", ok, detail);
}

// Criterion 10: pair bounds with monotonicity imply the chain hypotheses.
void bounds_imply_chains() {
    bool ok = true;
    int antecedents = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GeneratorParams gp;
        gp.seed = 300 + seed;
        gp.n = 4 + seed % 5;
        gp.chain = seed % 2 == 0; // mix chains and branching trees
        InstanceSpec spec = gen_tree_instance(gp);
        bool a04 = check_monotone(spec.space, MonotoneMode::EitherDirection).holds;
        bool a05 = check_bounds_and_directedness(spec.space).a05;
        if (!(a04 && a05)) continue;
        ++antecedents;
        if (!check_monotone(spec.space, MonotoneMode::Comparability).holds) ok = false;
        if (chain_components(spec.space).size() != 1) ok = false;
    }
    ok = ok && antecedents > 0;
    char detail[64];
    std::snprintf(detail, sizeof detail, "%d antecedent instances", antecedents);
    report(10, "pair bounds imply the chain hypotheses", ok, detail);
}

}  // namespace

int main() {
    maia_closed_form();
    suite_soundness();
    necessity();
    orbit_decay();
    gamma_beta_lemma();
    m_identity();
    variable_engine();
    maximality();
    reduction_pipeline();
    bounds_imply_chains();
    std::printf("%s (%d failure%s)\n", failures == 0 ? "ALL PASS" : "FAILED", failures,
                failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
