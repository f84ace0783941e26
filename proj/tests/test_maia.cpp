#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "fixpoint/instances.hpp"
#include "fixpoint/maia.hpp"

using namespace fixpoint;

namespace {

// 0 -> 1 -> 2 -> 2 on the line {3, 1, 0}; the weighted series is finite
FiniteSpace merge_chain() {
    FiniteSpace s;
    s.n = 3;
    std::vector<double> v = {3.0, 1.0, 0.0};
    s.dist.assign(3, std::vector<double>(3, 0.0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s.dist[i][j] = std::abs(v[i] - v[j]);
    s.order.assign(3, std::vector<std::uint8_t>(3, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) s.order[i][j] = 1;
    s.selfmap = std::vector<int>{1, 2, 2};
    return s;
}

}  // namespace

TEST_CASE("default weight sits inside the admissible interval") {
    double lambda = default_lambda(0.25);
    CHECK(lambda == doctest::Approx(2.0));
    CHECK(lambda > 1.0);
    CHECK(lambda < 4.0);
    CHECK_THROWS_AS(default_lambda(1.5), InputError);
}

TEST_CASE("merged orbits truncate the series exactly") {
    FiniteSpace s = merge_chain();
    auto dm = build_maia_metric(s, 0.5, 1.5, 1e-9);
    // e(0,1) = d(0,1) + 1.5*d(1,2) + 0: orbits merge at step 2
    CHECK(dm.table[0][1] == doctest::Approx(2.0 + 1.5 * 1.0).epsilon(1e-12));
    CHECK(dm.tail_bound[0][1] == 0.0);
    CHECK(dm.table[1][2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dm.table[0][0] == 0.0);
    CHECK(verify_maia_properties(dm).pass());
}

TEST_CASE("derived metric satisfies the defining identity and subordination") {
    GeneratorParams gp;
    gp.seed = 4;
    gp.n = 8;
    gp.target = TheoremId::T2;
    InstanceSpec spec = gen_theorem_instance(gp);
    auto dm = build_maia_metric(spec.space, spec.alpha, *spec.lambda, 1e-9);
    auto props = verify_maia_properties(dm);
    CHECK(props.identity);
    CHECK(props.subordination);
    CHECK(props.contraction_mu);
    CHECK(props.axioms);
    CHECK(props.pass());
    CHECK(props.max_identity_defect < 1e-6);
    for (int i = 0; i < spec.space.n; ++i)
        for (int j = 0; j < spec.space.n; ++j)
            CHECK(spec.space.dist[i][j] <= dm.table[i][j] + 1e-12);
}

TEST_CASE("halving map: the derived metric is four times the base") {
    FiniteSpace grid = half_map_grid();
    auto dm = build_maia_metric(grid, 0.5, 1.5, 1e-12);
    double worst = 0.0;
    for (int i = 0; i < grid.n; ++i)
        for (int j = 0; j < grid.n; ++j)
            worst = std::max(worst, std::abs(dm.table[i][j] - 4.0 * grid.dist[i][j]));
    CHECK(worst <= 1e-9);
    CHECK(verify_maia_properties(dm).pass());
}

TEST_CASE("parameter validation") {
    FiniteSpace s = merge_chain();
    CHECK_THROWS_AS(build_maia_metric(s, 1.2, 1.1, 1e-9), InputError);
    CHECK_THROWS_AS(build_maia_metric(s, 0.5, 0.9, 1e-9), InputError);
    CHECK_THROWS_AS(build_maia_metric(s, 0.5, 2.5, 1e-9), InputError); // >= 1/alpha
    CHECK_THROWS_AS(build_maia_metric(s, 0.5, 1.5, 0.0), InputError);
    FiniteSpace no_map = s;
    no_map.selfmap.reset();
    CHECK_THROWS_AS(build_maia_metric(no_map, 0.5, 1.5, 1e-9), InputError);
}

TEST_CASE("hypothesis failures name the violated assumption") {
    FiniteSpace s = merge_chain();
    s.dist[0][1] = 0.7; // asymmetric now
    try {
        build_maia_metric(s, 0.5, 1.5, 1e-9);
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& err) {
        CHECK(err.hypothesis == "symmetry");
    }

    auto split = library_instance("two-components").space;
    try {
        build_maia_metric(split, 0.5, 1.5, 1e-9);
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& err) {
        CHECK(err.hypothesis == "b03");
    }

    FiniteSpace weak = merge_chain();
    weak.dist = {{0.0, 2.0, 3.0}, {2.0, 0.0, 1.9}, {3.0, 1.9, 0.0}};
    try {
        build_maia_metric(weak, 0.5, 1.5, 1e-9); // d(T0,T1) = 1.9 > 0.5*d(0,1)
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& err) {
        CHECK(err.hypothesis == "a02");
    }
}
