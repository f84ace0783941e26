#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixpoint/instances.hpp"
#include "fixpoint/space.hpp"

using namespace fixpoint;

namespace {

FiniteSpace lattice() { return library_instance("bounds-lattice").space; }

FiniteSpace from_values(std::vector<double> v) {
    FiniteSpace s;
    s.n = static_cast<int>(v.size());
    s.dist.assign(s.n, std::vector<double>(s.n, 0.0));
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) s.dist[i][j] = std::abs(v[i] - v[j]);
    s.order.assign(s.n, std::vector<std::uint8_t>(s.n, 0));
    for (int i = 0; i < s.n; ++i) s.order[i][i] = 1;
    return s;
}

}  // namespace

TEST_CASE("metric axioms hold on the authored lattice") {
    auto report = check_axioms(lattice(), AxiomMode::Metric);
    CHECK(report.all_pass());
    CHECK(report.checks.size() == 5);
}

TEST_CASE("triangle violations carry a witness") {
    auto s = lattice();
    s.dist[0][3] = 10.0;
    s.dist[3][0] = 10.0;
    auto report = check_axioms(s, AxiomMode::Metric);
    const auto* tri = report.find("triangular");
    REQUIRE(tri != nullptr);
    CHECK_FALSE(tri->pass);
    REQUIRE(tri->witness.size() == 3);
    auto [i, j, k] = std::tuple{tri->witness[0], tri->witness[1], tri->witness[2]};
    CHECK(s.dist[i][k] > s.dist[i][j] + s.dist[j][k]);
}

TEST_CASE("almost-metric mode waives symmetry") {
    FiniteSpace s = from_values({0.0, 1.0});
    s.dist[1][0] = 0.4; // asymmetric
    CHECK_FALSE(check_axioms(s, AxiomMode::Metric).all_pass());
    CHECK(check_axioms(s, AxiomMode::AlmostMetric).all_pass());
    CHECK_FALSE(s.symmetric());
}

TEST_CASE("sufficiency means zero distance only on the diagonal") {
    FiniteSpace s = from_values({0.0, 0.0, 1.0});
    auto report = check_axioms(s, AxiomMode::Metric);
    const auto* c = report.find("sufficient");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    CHECK(c->witness == std::vector<int>{0, 1});
}

TEST_CASE("order axioms: reflexivity, transitivity, antisymmetry") {
    FiniteSpace s = from_values({0.0, 1.0, 2.0});
    s.order[0][1] = s.order[1][2] = s.order[0][2] = 1;
    CHECK(check_axioms(s, AxiomMode::QuasiOrder).all_pass());
    CHECK(check_axioms(s, AxiomMode::Order).all_pass());

    s.order[1][0] = 1; // two-way pair
    auto report = check_axioms(s, AxiomMode::Order);
    CHECK_FALSE(report.find("antisymmetric")->pass);
    CHECK(check_axioms(s, AxiomMode::QuasiOrder).all_pass());

    s.order[0][2] = 0; // break transitivity instead
    s.order[1][0] = 0;
    CHECK_FALSE(check_axioms(s, AxiomMode::QuasiOrder).all_pass());
}

TEST_CASE("validate_shape rejects ragged tables") {
    FiniteSpace s = from_values({0.0, 1.0});
    s.dist[1].pop_back();
    CHECK_THROWS_AS(s.validate_shape(), InputError);
}

TEST_CASE("chains: degenerate, direct, and two-step") {
    auto s = lattice();
    CHECK(find_chain(s, 2, 2) == ChainPath{2});
    CHECK(find_chain(s, 0, 3) == ChainPath{0, 3});
    // 1 and 2 are incomparable; the lowest-index route goes through 0
    CHECK(find_chain(s, 1, 2) == ChainPath{1, 0, 2});
}

TEST_CASE("no chain across disconnected blocks") {
    auto s = library_instance("two-components").space;
    CHECK_FALSE(find_chain(s, 0, 1).has_value());
    auto blocks = chain_components(s);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<int>{0});
    CHECK(blocks[1] == std::vector<int>{1});
}

TEST_CASE("lattice bounds and directedness flags") {
    auto r = check_bounds_and_directedness(lattice());
    CHECK(r.a05);
    CHECK(r.d04);
    CHECK_FALSE(r.linear); // 1 and 2 stay incomparable
    CHECK_FALSE(r.d03);    // 1 <> 0 <> 2 but not 1 <> 2
}

TEST_CASE("directed carrier without transitive comparability") {
    auto s = library_instance("directed-not-transitive").space;
    auto r = check_bounds_and_directedness(s);
    CHECK(r.d04);
    CHECK_FALSE(r.d03);
    CHECK_FALSE(r.a05); // no lower bound for the pair (0, 1)
}

TEST_CASE("chain components partition agrees with find_chain") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratorParams gp;
        gp.seed = seed;
        gp.n = 7;
        gp.order_density = 0.25;
        FiniteSpace s = gen_random_space(gp);
        auto blocks = chain_components(s);
        std::vector<int> block_of(s.n, -1);
        for (size_t b = 0; b < blocks.size(); ++b)
            for (int x : blocks[b]) block_of[x] = static_cast<int>(b);
        for (int x = 0; x < s.n; ++x)
            for (int y = 0; y < s.n; ++y) {
                bool same = block_of[x] == block_of[y];
                CHECK(find_chain(s, x, y).has_value() == same);
                if (comparable(s, x, y)) CHECK(same);
            }
    }
}

TEST_CASE("pair bounds force chain connectedness") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GeneratorParams gp;
        gp.seed = seed;
        gp.n = 6;
        gp.order_density = 0.4;
        FiniteSpace s = gen_random_space(gp);
        if (check_bounds_and_directedness(s).a05)
            CHECK(chain_components(s).size() == 1);
    }
}
