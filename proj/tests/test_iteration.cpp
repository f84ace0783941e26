#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixpoint/contraction.hpp"
#include "fixpoint/instances.hpp"
#include "fixpoint/iteration.hpp"
#include "fixpoint/oracle.hpp"

using namespace fixpoint;

namespace {

InstanceSpec tree(TheoremId target, std::uint64_t seed, int n = 7) {
    GeneratorParams gp;
    gp.seed = seed;
    gp.n = n;
    gp.target = target;
    return gen_theorem_instance(gp);
}

}  // namespace

TEST_CASE("orbit endings") {
    auto cyc = library_instance("two-cycle").space;
    auto t = orbit(cyc, 0, 10);
    CHECK(t.end == OrbitEnd::Cycle);
    CHECK(t.points == std::vector<int>{0, 1, 0});

    auto fix = library_instance("bounds-lattice").space;
    auto u = orbit(fix, 3, 10);
    CHECK(u.end == OrbitEnd::Fixed);
    CHECK(u.points == std::vector<int>{3, 0});
    CHECK(u.step_dist == std::vector<double>{2.0});

    auto v = orbit(fix, 3, 0);
    CHECK(v.end == OrbitEnd::MaxSteps);
    CHECK_THROWS_AS(orbit(fix, 99, 5), InputError);
}

TEST_CASE("successive approximation respects the gauge envelope") {
    InstanceSpec spec = tree(TheoremId::T4, 12, 8);
    ScalarGauge phi = *spec.phi;
    for (int x = 0; x < spec.space.n; ++x) {
        auto result = run_picard(spec.space, x, phi);
        CHECK(result.converged);
        CHECK(result.bound_ok);
        const auto& tr = result.trace;
        for (size_t k = 0; k < tr.step_dist.size(); ++k) {
            double bound = iterate(phi, tr.step_dist.empty() ? 0.0 : tr.step_dist[0],
                                   static_cast<int>(k));
            CHECK(tr.step_dist[k] <= bound + 1e-12);
        }
    }
}

TEST_CASE("picard run fails gracefully on a fixed-point-free cycle") {
    auto cyc = library_instance("two-cycle");
    auto result = run_picard(cyc.space, 0, linear_gauge(0.5));
    CHECK_FALSE(result.converged);
    CHECK(result.fixed_point == -1);
}

TEST_CASE("cauchy certificate on a converging orbit") {
    InstanceSpec spec = tree(TheoremId::T4, 5, 8);
    auto sets_start = progressive_sets(spec.space).x_leq;
    REQUIRE_FALSE(sets_start.empty());
    int x = sets_start.front();
    auto tr = orbit(spec.space, x, spec.space.n + 1, nullptr, &*spec.phi);
    double gamma = 1.0;
    auto cert = cauchy_certificate(tr, *spec.phi, gamma, spec.space);
    CHECK(cert.ok);
    CHECK(cert.beta > 0.0);
    CHECK(cert.beta < gamma);
    CHECK(cert.rank_m >= 0);
}

TEST_CASE("cauchy certificate needs a beta") {
    auto chain = library_instance("variable-exponent-chain");
    auto tr = orbit(chain.space, 0, 10);
    CHECK_THROWS_AS(cauchy_certificate(tr, identity_gauge(), 0.5, chain.space),
                    PreconditionError);
}

TEST_CASE("block orbit of the variable-exponent scheme") {
    auto chain = library_instance("variable-exponent-chain");
    auto tr = run_variable_exponent(chain.space, 0, *chain.family, 64);
    CHECK(tr.ascending);
    CHECK(tr.cauchy);
    CHECK(tr.bounds_dominate);
    CHECK(tr.normality_witnessed);
    // n(0)=1 -> x1=1, n(1)=2 -> x2=3, n(3)=2 -> x3=5 fixed
    CHECK(tr.exponents == std::vector<int>{1, 2, 2});
    CHECK(tr.block_points == std::vector<int>{0, 1, 3, 5});
    CHECK(tr.cumulative == std::vector<int>{1, 3, 5});
    REQUIRE(tr.composite_bounds.size() == 3);
    for (size_t k = 1; k < tr.composite_bounds.size(); ++k)
        CHECK(tr.composite_bounds[k] <= tr.composite_bounds[k - 1]);
}

TEST_CASE("variable scheme rejects non-progressive starts") {
    FiniteSpace s;
    s.n = 2;
    s.dist = {{0.0, 1.0}, {1.0, 0.0}};
    s.order = {{1, 1}, {0, 1}};
    s.selfmap = std::vector<int>{1, 0};
    auto fam = scaled_max_point_family({1, 1}, 0.5);
    CHECK_THROWS_AS(run_variable_exponent(s, 1, fam, 8), PreconditionError);
}

TEST_CASE("orbit classification agrees with the straight-line oracle") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        GeneratorParams gp;
        gp.seed = seed;
        gp.n = 6;
        FiniteSpace s = gen_random_space(gp);
        for (PicardMode mode : {PicardMode::ModuloD, PicardMode::ModuloCLeq}) {
            auto engine = classify_picard(s, mode);
            auto oracle = brute_picard_check(s, mode);
            CHECK(engine.picard() == oracle.picard());
            CHECK(engine.fix_set == oracle.fix_set);
            CHECK(engine.fix_singleton == oracle.fix_singleton);
            REQUIRE(engine.starts.size() == oracle.starts.size());
            for (size_t i = 0; i < engine.starts.size(); ++i) {
                CHECK(engine.starts[i].converged == oracle.starts[i].converged);
                if (engine.starts[i].converged)
                    CHECK(engine.starts[i].limit == oracle.starts[i].limit);
            }
        }
    }
}

TEST_CASE("ascent and maximality on a generated instance") {
    InstanceSpec spec = tree(TheoremId::T4, 21, 8);
    auto report = classify_picard(spec.space, PicardMode::ModuloCLeq);
    CHECK(report.picard());
    for (const auto& s : report.starts) CHECK(s.ascent_ok);
    for (const auto& [fp, ok] : report.maximality) CHECK(ok);
}
