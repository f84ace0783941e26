#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixpoint/instances.hpp"
#include "fixpoint/maia.hpp"
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

SuiteVerdict run(const InstanceSpec& spec, TheoremId theorem,
                 const std::vector<std::string>& drop = {}) {
    return theorem_suite(spec.space, theorem, spec.suite_params(), drop);
}

}  // namespace

TEST_CASE("theorem ids round-trip") {
    for (TheoremId id : all_theorems()) CHECK(theorem_from_string(to_string(id)) == id);
    CHECK_THROWS_AS(theorem_from_string("T5"), InputError);
}

TEST_CASE("fixed point enumeration") {
    CHECK(enumerate_fixed_points(library_instance("bounds-lattice").space) ==
          std::vector<int>{0});
    CHECK(enumerate_fixed_points(library_instance("two-cycle").space).empty());
    CHECK(enumerate_fixed_points(library_instance("two-components").space) ==
          std::vector<int>{0, 1});
}

TEST_CASE("every suite passes on its matched generated instance") {
    for (TheoremId id : all_theorems()) {
        InstanceSpec spec = tree(id, 31, 7);
        auto verdict = run(spec, id);
        CAPTURE(to_string(id));
        CHECK(verdict.hypotheses_pass());
        CHECK(verdict.conclusions_pass());
        CHECK(verdict.implication_respected());
    }
}

TEST_CASE("chain-connectedness failure is detected and decisive") {
    auto split = library_instance("two-components");
    auto verdict = run(split, TheoremId::T2);
    REQUIRE(verdict.hypothesis("b03") != nullptr);
    CHECK_FALSE(verdict.hypothesis("b03")->pass);
    CHECK_FALSE(verdict.conclusions_pass()); // two fixed points
    CHECK(verdict.implication_respected());

    // dropping b03 turns the instance into a counterexample certificate
    auto dropped = run(split, TheoremId::T2, {"b03"});
    CHECK(dropped.hypotheses_pass());
    CHECK_FALSE(dropped.conclusions_pass());
    CHECK_FALSE(dropped.implication_respected());
}

TEST_CASE("fixed-point-free cycle also certifies chain-connectedness") {
    auto cyc = library_instance("two-cycle");
    auto verdict = run(cyc, TheoremId::T2, {"b03"});
    CHECK(verdict.hypotheses_pass());
    CHECK_FALSE(verdict.conclusions_pass());
}

TEST_CASE("asymmetric distances fail the ambient metric hypothesis") {
    InstanceSpec spec = library_instance("two-cycle");
    spec.space.dist[1][0] = 0.4;
    auto verdict = run(spec, TheoremId::T2);
    REQUIRE(verdict.hypothesis("d-axioms") != nullptr);
    CHECK_FALSE(verdict.hypothesis("d-axioms")->pass);
    // the almost-metric suites accept the same table
    spec.phi = linear_gauge(0.5);
    auto t4 = run(spec, TheoremId::T4);
    CHECK(t4.hypothesis("d-axioms")->pass);
}

TEST_CASE("automatic hypotheses are recorded, not tested") {
    auto verdict = run(tree(TheoremId::T2, 2), TheoremId::T2);
    const auto* complete = verdict.hypothesis("complete");
    REQUIRE(complete != nullptr);
    CHECK(complete->automatic);
    CHECK(complete->pass);
    CHECK_FALSE(verdict.hypothesis("a02")->automatic);
}

TEST_CASE("maia chain: derived metric feeds the subordination suite") {
    InstanceSpec spec = tree(TheoremId::T2, 8, 8);
    auto dm = build_maia_metric(spec.space, spec.alpha, *spec.lambda, 1e-9);
    double max_tail = 0.0;
    for (const auto& row : dm.tail_bound)
        for (double t : row) max_tail = std::max(max_tail, t);

    SuiteParams params;
    params.e = dm.table;
    params.mu = 1.0 / dm.lambda;
    params.slack_override = 2.0 * max_tail + 1e-12;
    auto verdict = theorem_suite(spec.space, TheoremId::T3, params);
    CHECK(verdict.hypotheses_pass());
    CHECK(verdict.conclusions_pass());
}

TEST_CASE("comparability-order implication on generated carriers") {
    // pair bounds plus either-direction monotonicity force the chain setting
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        InstanceSpec spec = tree(TheoremId::T1, seed, 6);
        auto t1 = run(spec, TheoremId::T1);
        auto t2 = run(spec, TheoremId::T2);
        if (t1.hypothesis("a04")->pass && t1.hypothesis("a05")->pass) {
            CHECK(t2.hypothesis("b02")->pass);
            CHECK(t2.hypothesis("b03")->pass);
        }
    }
}

TEST_CASE("iterative suites flag a failing side condition") {
    auto chain = library_instance("variable-exponent-chain");
    SuiteParams params = chain.suite_params();
    // max over every argument breaks the beta search at exponent 2
    params.family = scaled_max_point_family({1, 2, 1, 2, 1, 1}, 0.5);
    auto verdict = theorem_suite(chain.space, TheoremId::T8, params);
    REQUIRE(verdict.hypothesis("e10") != nullptr);
    CHECK_FALSE(verdict.hypothesis("e10")->pass);
    CHECK(verdict.implication_respected());

    params.family = tail_max_point_family({1, 2, 1, 2, 1, 1}, 0.5);
    auto good = theorem_suite(chain.space, TheoremId::T8, params);
    CHECK(good.hypotheses_pass());
    CHECK(good.conclusions_pass());
}

TEST_CASE("suite demands its ingredients") {
    auto spec = tree(TheoremId::T2, 3);
    SuiteParams params; // no family attached
    CHECK_THROWS_AS(theorem_suite(spec.space, TheoremId::T6, params), InputError);
    FiniteSpace no_map = spec.space;
    no_map.selfmap.reset();
    CHECK_THROWS_AS(theorem_suite(no_map, TheoremId::T2, params), InputError);
    CHECK_THROWS_AS(brute_picard_check(no_map, PicardMode::ModuloD), InputError);
}
