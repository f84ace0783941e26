#include "fixpoint/oracle.hpp"

#include <algorithm>

#include "fixpoint/contraction.hpp"

namespace fixpoint {

const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::T3: return "T3";
        case TheoremId::T4: return "T4";
        case TheoremId::C1: return "C1";
        case TheoremId::C2: return "C2";
        case TheoremId::T6: return "T6";
        case TheoremId::T7: return "T7";
        case TheoremId::T8: return "T8";
        case TheoremId::T9: return "T9";
    }
    return "?";
}

TheoremId theorem_from_string(const std::string& s) {
    for (TheoremId id : all_theorems())
        if (s == to_string(id)) return id;
    throw InputError("unknown theorem id: " + s);
}

std::vector<TheoremId> all_theorems() {
    return {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4,
            TheoremId::C1, TheoremId::C2, TheoremId::T6, TheoremId::T7,
            TheoremId::T8, TheoremId::T9};
}

bool SuiteVerdict::hypotheses_pass() const {
    for (const auto& h : hypotheses) {
        if (std::find(dropped.begin(), dropped.end(), h.id) != dropped.end()) continue;
        if (!h.pass) return false;
    }
    return true;
}

bool SuiteVerdict::conclusions_pass() const {
    return std::all_of(conclusions.begin(), conclusions.end(),
                       [](const ConclusionResult& c) { return c.pass; });
}

bool SuiteVerdict::implication_respected() const {
    return !(hypotheses_pass() && !conclusions_pass());
}

const HypothesisResult* SuiteVerdict::hypothesis(const std::string& id) const {
    for (const auto& h : hypotheses)
        if (h.id == id) return &h;
    return nullptr;
}

std::vector<int> enumerate_fixed_points(const FiniteSpace& space) {
    if (!space.has_selfmap()) throw InputError("enumerate_fixed_points: no selfmap");
    std::vector<int> out;
    for (int i = 0; i < space.n; ++i)
        if (space.image(i) == i) out.push_back(i);
    return out;
}

namespace {

// Straight-line orbit simulation, independent of the iteration engines.
// Returns the reached fixed point or -1.
int brute_limit(const FiniteSpace& space, int start) {
    int p = start;
    for (int step = 0; step <= space.n; ++step) {
        int q = space.image(p);
        if (q == p) return p;
        p = q;
    }
    return -1;
}

}  // namespace

PicardReport brute_picard_check(const FiniteSpace& space, PicardMode mode) {
    if (!space.has_selfmap()) throw InputError("brute_picard_check: no selfmap");
    PicardReport report;
    report.mode = mode;
    report.fix_set = enumerate_fixed_points(space);

    std::vector<int> starts;
    if (mode == PicardMode::ModuloD) {
        for (int i = 0; i < space.n; ++i) starts.push_back(i);
        report.fix_singleton = report.fix_set.size() == 1;
    } else {
        for (int i = 0; i < space.n; ++i)
            if (space.leq(i, space.image(i))) starts.push_back(i);
        report.fix_singleton = true;
        for (int z : report.fix_set)
            for (int w : report.fix_set)
                if (z != w && space.leq(z, w)) report.fix_singleton = false;
    }

    for (int s : starts) {
        StartVerdict v;
        v.start = s;
        v.limit = brute_limit(space, s);
        v.converged = v.limit >= 0;
        if (mode == PicardMode::ModuloCLeq && v.converged) {
            int p = s;
            for (int step = 0; step <= space.n; ++step) {
                if (!space.leq(p, v.limit)) v.ascent_ok = false;
                p = space.image(p);
            }
        }
        report.starts.push_back(v);
    }

    if (mode == PicardMode::ModuloCLeq) {
        for (int fp : report.fix_set) {
            bool maximal = true;
            for (int u : starts)
                if (space.leq(fp, u) && !space.leq(u, fp)) maximal = false;
            report.maximality.emplace_back(fp, maximal);
        }
    }
    return report;
}

namespace {

HypothesisResult auto_hyp(std::string id) {
    return {std::move(id), true, true, "holds on a finite carrier"};
}

// ambient structure: the distance axioms in the given mode, on any table
HypothesisResult axiom_hyp(std::string id, const FiniteSpace& space,
                           const DistTable& d, AxiomMode mode, double slack) {
    FiniteSpace probe;
    probe.n = space.n;
    probe.dist = d;
    probe.order = space.order;
    probe.slack = slack;
    auto report = check_axioms(probe, mode);
    HypothesisResult h{std::move(id), report.all_pass(), false, ""};
    if (!h.pass)
        for (const auto& c : report.checks)
            if (!c.pass) {
                h.note = c.name + " fails";
                break;
            }
    return h;
}

HypothesisResult from_contraction(std::string id, const FiniteSpace& space,
                                  ContractionVariant variant) {
    auto report = check_contraction(space, variant);
    HypothesisResult h{std::move(id), report.holds, false, ""};
    if (!report.holds && report.witness)
        h.note = "violated at (" + std::to_string((*report.witness)[0]) + "," +
                 std::to_string((*report.witness)[1]) + ")";
    return h;
}

ConclusionResult concl_picard_d(const FiniteSpace& space) {
    auto report = brute_picard_check(space, PicardMode::ModuloD);
    ConclusionResult c{"picard-mod-d", report.picard(), ""};
    if (!c.pass) c.note = "fix set size " + std::to_string(report.fix_set.size());
    return c;
}

std::vector<ConclusionResult> concl_picard_cleq(const FiniteSpace& space) {
    auto report = brute_picard_check(space, PicardMode::ModuloCLeq);
    bool points_ok = true;
    for (const auto& s : report.starts)
        if (!s.converged || !s.ascent_ok) points_ok = false;
    bool maximal_ok = true;
    for (const auto& [fp, ok] : report.maximality)
        if (!ok) maximal_ok = false;
    return {{"picard-points", points_ok, ""},
            {"fix-leq-singleton", report.fix_singleton, ""},
            {"maximality", maximal_ok, ""}};
}

std::vector<int> progressive_starts(const FiniteSpace& space) {
    std::vector<int> y;
    for (int i = 0; i < space.n; ++i)
        if (space.leq(i, space.image(i))) y.push_back(i);
    return y;
}

// Conclusions iii)-v): Z nonempty, orbits from Y converge into Z, comparable
// starts share the limit.
std::vector<ConclusionResult> concl_iii_iv_v(const FiniteSpace& space) {
    auto fix = enumerate_fixed_points(space);
    auto y = progressive_starts(space);
    std::vector<int> limit(space.n, -2);
    bool iv = true;
    for (int x : y) {
        limit[x] = brute_limit(space, x);
        if (limit[x] < 0) iv = false;
    }
    bool v = true;
    for (int a : y)
        for (int b : y)
            if (comparable(space, a, b) && limit[a] != limit[b]) v = false;
    return {{"Z-nonempty", !fix.empty(), ""},
            {"orbits-converge-into-Z", iv, ""},
            {"comparable-same-limit", v, ""}};
}

// Conclusion vi): z = lim T^n x satisfies (a) x <= z, (b) z <= y in Y => z = y.
std::vector<ConclusionResult> concl_vi(const FiniteSpace& space) {
    auto y = progressive_starts(space);
    bool a_ok = true, b_ok = true;
    for (int x : y) {
        int z = brute_limit(space, x);
        if (z < 0) {
            a_ok = b_ok = false;
            break;
        }
        if (!space.leq(x, z)) a_ok = false;
        for (int u : y)
            if (space.leq(z, u) && z != u) b_ok = false;
    }
    return {{"limit-upper-bound", a_ok, ""}, {"limit-leq-maximal-in-Y", b_ok, ""}};
}

HypothesisResult progressive_hyp(std::string id, const FiniteSpace& space,
                                 bool comparability) {
    auto sets = progressive_sets(space);
    bool pass = comparability ? !sets.x_comp.empty() : !sets.x_leq.empty();
    return {std::move(id), pass, false, pass ? "" : "progressive set empty"};
}

HypothesisResult normal_scalar_hyp(std::string id, const ScalarGauge& g,
                                   std::uint64_t seed) {
    auto rep = check_comparison(g, SamplingPlan::standard(seed));
    bool pass = rep.pass() && check_divergence(g);
    return {std::move(id), pass, false, rep.plan};
}

// (e08)+(e09) on realized block sequences: per progressive start, the diagonal
// gauges along the block orbit must compose down to zero.
HypothesisResult iterative_normal_hyps(const FiniteSpace& space,
                                       const PointGaugeFamily& family, bool e09,
                                       std::uint64_t seed) {
    std::string id = e09 ? "e09" : "e08";
    for (int x0 : progressive_starts(space)) {
        if (!e09) {
            ScalarGauge g = family.diagonal(x0);
            auto rep = check_comparison(g, SamplingPlan::standard(seed));
            if (!(rep.f1 && rep.increasing && check_divergence(g)))
                return {id, false, false, "g(x0) not normal at x0=" + std::to_string(x0)};
            continue;
        }
        // realized gauge sequence; once the block orbit settles at a fixed
        // point the same gauge repeats forever
        std::vector<ScalarGauge> gauges;
        int xi = x0;
        for (int i = 0; i < 200; ++i) {
            gauges.push_back(family.diagonal(xi));
            int next = space.iterate_map(xi, family.n_at(xi));
            if (next == xi) {
                while (gauges.size() < 200) gauges.push_back(family.diagonal(xi));
                break;
            }
            xi = next;
        }
        for (double t : {1e-3, 1.0, 1e3}) {
            auto seq = compose_family(gauges, t);
            if (!(seq.back() <= 1e-6))
                return {id, false, false,
                        "composites stall from x0=" + std::to_string(x0)};
        }
    }
    return {id, true, false, ""};
}

}  // namespace

SuiteVerdict theorem_suite(const FiniteSpace& space, TheoremId theorem,
                           const SuiteParams& params,
                           const std::vector<std::string>& drop) {
    if (!space.has_selfmap()) throw InputError("theorem_suite: no selfmap");
    SuiteVerdict verdict;
    verdict.theorem = theorem;
    verdict.dropped = drop;
    auto& hyps = verdict.hypotheses;

    const double slack = params.slack_override >= 0.0 ? params.slack_override : -1.0;
    auto linear_variant = [&](VariantTag tag, double a,
                              const DistTable* metric = nullptr) {
        ContractionVariant v;
        v.tag = tag;
        v.alpha = a;
        v.metric = metric;
        v.slack = slack;
        return v;
    };
    auto gauge_variant = [&](VariantTag tag, const ScalarGauge& phi,
                             const DistTable* metric = nullptr) {
        ContractionVariant v;
        v.tag = tag;
        v.phi = phi;
        v.metric = metric;
        v.slack = slack;
        return v;
    };
    ScalarGauge phi = params.phi ? *params.phi : linear_gauge(params.alpha);
    const double eff_slack = slack >= 0.0 ? slack : space.slack;

    // ambient structure first: the base distance axioms and the order axioms
    switch (theorem) {
        case TheoremId::T1:
        case TheoremId::T2:
        case TheoremId::T3:
        case TheoremId::C1:
        case TheoremId::C2:
            hyps.push_back(
                axiom_hyp("d-axioms", space, space.dist, AxiomMode::Metric, eff_slack));
            break;
        default:
            hyps.push_back(axiom_hyp("d-axioms", space, space.dist,
                                     AxiomMode::AlmostMetric, eff_slack));
            break;
    }
    hyps.push_back(
        axiom_hyp("quasi-order", space, space.dist, AxiomMode::QuasiOrder, eff_slack));

    switch (theorem) {
        case TheoremId::T1: {
            hyps.push_back(auto_hyp("complete"));
            hyps.push_back(auto_hyp("continuous"));
            hyps.push_back(from_contraction(
                "a02", space, linear_variant(VariantTag::OrderLinear, params.alpha)));
            hyps.push_back(progressive_hyp("a03", space, true));
            auto mono = check_monotone(space, MonotoneMode::EitherDirection);
            hyps.push_back({"a04", mono.holds, false,
                            mono.increasing ? "increasing" : "decreasing"});
            hyps.push_back({"a05", check_bounds_and_directedness(space).a05, false, ""});
            verdict.conclusions.push_back(concl_picard_d(space));
            break;
        }
        case TheoremId::T2: {
            hyps.push_back(auto_hyp("complete"));
            hyps.push_back(auto_hyp("continuous"));
            hyps.push_back(from_contraction(
                "a02", space, linear_variant(VariantTag::OrderLinear, params.alpha)));
            hyps.push_back({"b02",
                            check_monotone(space, MonotoneMode::Comparability).holds,
                            false, ""});
            hyps.push_back(
                {"b03", chain_components(space).size() == 1, false, ""});
            verdict.conclusions.push_back(concl_picard_d(space));
            break;
        }
        case TheoremId::T3: {
            const DistTable& e = params.e ? *params.e : space.dist;
            hyps.push_back(
                axiom_hyp("e-axioms", space, e, AxiomMode::AlmostMetric, eff_slack));
            hyps.push_back(auto_hyp("complete"));
            hyps.push_back(auto_hyp("continuous"));
            hyps.push_back(from_contraction(
                "b04", space, linear_variant(VariantTag::PlainLinear, params.mu, &e)));
            bool sub = true;
            const double s = slack >= 0.0 ? slack : space.slack;
            for (int i = 0; i < space.n && sub; ++i)
                for (int j = 0; j < space.n; ++j)
                    if (space.dist[i][j] > e[i][j] + s) {
                        sub = false;
                        break;
                    }
            hyps.push_back({"subordination", sub, false, ""});
            verdict.conclusions.push_back(concl_picard_d(space));
            break;
        }
        case TheoremId::T4: {
            const DistTable& e = params.e ? *params.e : space.dist;
            if (params.e)
                hyps.push_back(
                    axiom_hyp("e-axioms", space, e, AxiomMode::AlmostMetric, eff_slack));
            hyps.push_back(progressive_hyp("c04", space, false));
            hyps.push_back(
                {"c05", check_monotone(space, MonotoneMode::Leq).holds, false, ""});
            hyps.push_back(from_contraction("c06", space,
                                            gauge_variant(VariantTag::EMOrder, phi, &e)));
            auto rep = check_comparison(phi, SamplingPlan::standard(params.seed));
            hyps.push_back({"phi-comparison", rep.pass(), false, rep.plan});
            hyps.push_back(auto_hyp("ao-complete"));
            hyps.push_back(auto_hyp("ao-continuous"));
            hyps.push_back(auto_hyp("self-closed"));
            for (auto c : concl_picard_cleq(space)) verdict.conclusions.push_back(c);
            break;
        }
        case TheoremId::C1: {
            const DistTable& e = params.e ? *params.e : space.dist;
            hyps.push_back(from_contraction("d01", space,
                                            gauge_variant(VariantTag::EMPlain, phi, &e)));
            auto rep = check_comparison(phi, SamplingPlan::standard(params.seed));
            hyps.push_back({"phi-comparison", rep.pass(), false, rep.plan});
            hyps.push_back(auto_hyp("o-complete"));
            hyps.push_back(auto_hyp("o-continuous"));
            verdict.conclusions.push_back(concl_picard_d(space));
            break;
        }
        case TheoremId::C2: {
            hyps.push_back(progressive_hyp("a03", space, true));
            hyps.push_back({"b02",
                            check_monotone(space, MonotoneMode::Comparability).holds,
                            false, ""});
            hyps.push_back(
                from_contraction("d02", space, gauge_variant(VariantTag::PhiOrder, phi)));
            auto rep = check_comparison(phi, SamplingPlan::standard(params.seed));
            hyps.push_back({"phi-comparison", rep.pass(), false, rep.plan});
            auto bounds = check_bounds_and_directedness(space);
            hyps.push_back({"d03", bounds.d03, false, ""});
            hyps.push_back({"d04", bounds.d04, false, ""});
            hyps.push_back(auto_hyp("complete"));
            hyps.push_back(auto_hyp("o-continuous"));
            verdict.conclusions.push_back(concl_picard_d(space));
            break;
        }
        case TheoremId::T6:
        case TheoremId::T7:
        case TheoremId::T8: {
            if (!params.family)
                throw InputError("theorem suite requires a point gauge family");
            hyps.push_back(progressive_hyp("e05", space, false));
            hyps.push_back(
                {"e06", check_monotone(space, MonotoneMode::Leq).holds, false, ""});
            ContractionVariant it;
            it.tag = VariantTag::Iterative;
            it.family = params.family;
            it.slack = slack;
            hyps.push_back(from_contraction("e07", space, it));
            hyps.push_back(iterative_normal_hyps(space, *params.family, false, params.seed));
            hyps.push_back(iterative_normal_hyps(space, *params.family, true, params.seed));
            hyps.push_back(auto_hyp("qo-complete"));
            if (theorem == TheoremId::T6) {
                hyps.push_back(auto_hyp("self-closed"));
                hyps.push_back(auto_hyp("left-continuous"));
            } else {
                hyps.push_back(auto_hyp("interval-closed"));
                if (theorem == TheoremId::T7) {
                    auto anti = check_axioms(space, AxiomMode::Order);
                    const AxiomCheck* a = anti.find("antisymmetric");
                    hyps.push_back({"ordering", a && a->pass, false, ""});
                } else {
                    auto rep = check_e10_e11(*params.family, space, params.seed);
                    hyps.push_back({"e10", rep.e10, false, rep.plan});
                    hyps.push_back({"e11", rep.e11, false, rep.plan});
                }
            }
            for (auto c : concl_iii_iv_v(space)) verdict.conclusions.push_back(c);
            if (theorem != TheoremId::T6)
                for (auto c : concl_vi(space)) verdict.conclusions.push_back(c);
            break;
        }
        case TheoremId::T9: {
            hyps.push_back(progressive_hyp("e05", space, false));
            hyps.push_back(
                {"e06", check_monotone(space, MonotoneMode::Leq).holds, false, ""});
            ContractionVariant e12;
            e12.tag = VariantTag::IterativeUniform;
            e12.phi = phi;
            e12.exponents = params.exponents
                                ? *params.exponents
                                : std::vector<int>(static_cast<size_t>(space.n), 1);
            e12.slack = slack;
            hyps.push_back(from_contraction("e12", space, e12));
            hyps.push_back(normal_scalar_hyp("f-normal", phi, params.seed));
            hyps.push_back(auto_hyp("qo-complete"));
            hyps.push_back(auto_hyp("self-closed"));
            hyps.push_back(auto_hyp("left-continuous"));
            for (auto c : concl_iii_iv_v(space)) verdict.conclusions.push_back(c);
            break;
        }
    }
    return verdict;
}

}  // namespace fixpoint
