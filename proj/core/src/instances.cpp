#include "fixpoint/instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fixpoint/contraction.hpp"
#include "fixpoint/maia.hpp"

namespace fixpoint {

SuiteParams InstanceSpec::suite_params() const {
    SuiteParams p;
    p.alpha = alpha;
    p.phi = phi;
    p.family = family;
    p.exponents = exponents;
    return p;
}

namespace {

DistTable abs_diff_table(const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    DistTable d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = std::abs(v[i] - v[j]);
    return d;
}

BoolTable reflexive_order(int n) {
    BoolTable o(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) o[i][i] = 1;
    return o;
}

// x <= y iff some iterate of x equals y
BoolTable reachability_order(const std::vector<int>& selfmap) {
    const int n = static_cast<int>(selfmap.size());
    BoolTable o = reflexive_order(n);
    for (int i = 0; i < n; ++i) {
        int p = i;
        for (int k = 0; k < n; ++k) {
            p = selfmap[p];
            o[i][p] = 1;
        }
    }
    return o;
}

}  // namespace

FiniteSpace gen_random_space(const GeneratorParams& params) {
    if (params.n < 1) throw GenerationError("n must be positive");
    const int n = params.n;
    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> weight(0.2, 2.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    FiniteSpace s;
    s.n = n;
    s.slack = 1e-12;
    s.dist.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double w = std::max(weight(rng), 1e-6);
            s.dist[i][j] = s.dist[j][i] = w;
        }
    // shortest-path closure restores the triangle inequality
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    s.dist[i][j] = std::min(s.dist[i][j], s.dist[i][k] + s.dist[k][j]);

    // random order: DAG along a random permutation, then transitive closure
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    s.order = reflexive_order(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < params.order_density) s.order[perm[i]][perm[j]] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (s.order[i][k] && s.order[k][j]) s.order[i][j] = 1;

    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) map[i] = pick(rng);
    s.selfmap = map;
    return s;
}

InstanceSpec gen_tree_instance(const GeneratorParams& params) {
    const int n = params.n;
    const double alpha = params.alpha;
    const int roots = params.chain ? 1 : std::max(1, params.components);
    if (n < 1 || roots > n) throw GenerationError("bad carrier size");
    if (!(alpha > 0.0 && alpha < 1.0)) throw GenerationError("alpha must be in (0,1)");
    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> base(0.2, 2.0);
    std::uniform_real_distribution<double> stretch(1.05, 1.5);

    std::vector<int> parent(n), map(n);
    std::vector<double> len(n, 0.0), u(n, 0.0);
    for (int i = 0; i < n; ++i) {
        if (i < roots) {
            parent[i] = i;
            u[i] = i * 7.25; // distinct embedding values per component
            continue;
        }
        if (params.chain) {
            parent[i] = i - 1;
        } else {
            std::uniform_int_distribution<int> pick(0, i - 1);
            parent[i] = pick(rng);
        }
        // edge lengths grow away from the roots, so they contract by at
        // least alpha toward the root
        len[i] = parent[i] < roots ? base(rng) : (len[parent[i]] / alpha) * stretch(rng);
        u[i] = u[parent[i]] + len[i];
    }
    for (int i = 0; i < n; ++i) map[i] = parent[i];

    double umax = *std::max_element(u.begin(), u.end());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(u[i] - u[j]) <= 1e-9 * std::max(1.0, umax))
                throw GenerationError("embedding collision");

    InstanceSpec spec;
    spec.provenance = "generated";
    spec.alpha = alpha;
    spec.space.n = n;
    spec.space.dist = abs_diff_table(u);
    spec.space.order = reachability_order(map);
    spec.space.selfmap = map;
    spec.space.slack = 1e-12;

    const TheoremId target = params.target.value_or(TheoremId::T2);
    spec.name = std::string("gen-") + to_string(target) + "-s" + std::to_string(params.seed);
    switch (target) {
        case TheoremId::T6:
        case TheoremId::T7:
        case TheoremId::T8: {
            std::uniform_int_distribution<int> exp_pick(1, 2);
            std::vector<int> exps(n);
            for (int i = 0; i < n; ++i) exps[i] = exp_pick(rng);
            // the beta-search side condition rules out max over every argument
            spec.family = target == TheoremId::T8
                              ? tail_max_point_family(exps, alpha)
                              : scaled_max_point_family(exps, alpha);
            break;
        }
        case TheoremId::T9:
            spec.phi = linear_gauge(alpha);
            spec.exponents = std::vector<int>(static_cast<size_t>(n), 1);
            break;
        default:
            spec.phi = linear_gauge(alpha);
            spec.lambda = default_lambda(alpha);
            break;
    }
    return spec;
}

InstanceSpec gen_theorem_instance(const GeneratorParams& params) {
    if (!params.target) throw GenerationError("gen_theorem_instance needs a target");
    GeneratorParams p = params;
    // pair bounds (T1), all-pair contractions (T3, C1) and transitive
    // comparability (C2) need a total order
    switch (*params.target) {
        case TheoremId::T1:
        case TheoremId::T3:
        case TheoremId::C1:
        case TheoremId::C2: p.chain = true; break;
        default: break;
    }
    for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
        p.seed = params.seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b9u;
        InstanceSpec spec;
        try {
            spec = gen_tree_instance(p);
        } catch (const GenerationError&) {
            continue;
        }
        auto verdict = theorem_suite(spec.space, *params.target, spec.suite_params());
        if (verdict.hypotheses_pass()) return spec;
    }
    throw GenerationError("no instance found for " +
                          std::string(to_string(*params.target)) + " within " +
                          std::to_string(params.max_attempts) + " attempts");
}

FiniteSpace half_map_grid(int depth) {
    if (depth < 1) throw InputError("depth must be positive");
    std::vector<double> v;
    v.push_back(0.0);
    for (int j = 0; j <= depth + 2; ++j) v.push_back(std::ldexp(1.0, -j));
    for (int k = 0; k <= depth; ++k) v.push_back(0.75 * std::ldexp(1.0, -k));
    std::sort(v.begin(), v.end());

    const int n = static_cast<int>(v.size());
    FiniteSpace s;
    s.n = n;
    s.slack = 1e-12;
    s.dist = abs_diff_table(v);
    s.order.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) s.order[i][j] = 1; // total order by value
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) {
        // largest carrier element not above the half; keeps T monotone while
        // the truncated points drain to 0
        auto it = std::upper_bound(v.begin(), v.end(), v[i] / 2.0);
        map[i] = static_cast<int>(it - v.begin()) - 1;
    }
    s.selfmap = map;
    return s;
}

std::vector<std::string> builtin_library() {
    return {"half-map-grid",  "two-components",        "two-cycle",
            "bounds-lattice", "directed-not-transitive", "variable-exponent-chain"};
}

InstanceSpec library_instance(const std::string& name) {
    InstanceSpec spec;
    spec.name = name;
    spec.provenance = "builtin";

    if (name == "half-map-grid") {
        spec.space = half_map_grid();
        spec.alpha = 0.5;
        spec.lambda = 1.5;
        spec.phi = linear_gauge(0.5);
        return spec;
    }
    if (name == "two-components") {
        // two isolated fixed points; chain-connectedness fails, nothing else does
        spec.space.n = 2;
        spec.space.dist = {{0.0, 1.0}, {1.0, 0.0}};
        spec.space.order = reflexive_order(2);
        spec.space.selfmap = std::vector<int>{0, 1};
        spec.alpha = 0.5;
        spec.phi = linear_gauge(0.5);
        return spec;
    }
    if (name == "two-cycle") {
        spec.space.n = 2;
        spec.space.dist = {{0.0, 1.0}, {1.0, 0.0}};
        spec.space.order = reflexive_order(2);
        spec.space.selfmap = std::vector<int>{1, 0};
        spec.alpha = 0.5;
        spec.phi = linear_gauge(0.5);
        return spec;
    }
    if (name == "bounds-lattice") {
        // bottom 0, incomparable 1 and 2, top 3; constant map to bottom
        spec.space.n = 4;
        spec.space.dist = {{0.0, 1.0, 1.0, 2.0},
                           {1.0, 0.0, 2.0, 1.0},
                           {1.0, 2.0, 0.0, 1.0},
                           {2.0, 1.0, 1.0, 0.0}};
        spec.space.order = reflexive_order(4);
        spec.space.order[0][1] = spec.space.order[0][2] = spec.space.order[0][3] = 1;
        spec.space.order[1][3] = spec.space.order[2][3] = 1;
        spec.space.selfmap = std::vector<int>{0, 0, 0, 0};
        spec.alpha = 0.5;
        spec.phi = linear_gauge(0.5);
        return spec;
    }
    if (name == "directed-not-transitive") {
        // every pair has the upper bound 2, but there are no lower bounds
        std::vector<double> v = {0.0, 2.0, 1.0};
        spec.space.n = 3;
        spec.space.dist = abs_diff_table(v);
        spec.space.order = reflexive_order(3);
        spec.space.order[0][2] = spec.space.order[1][2] = 1;
        spec.space.selfmap = std::vector<int>{2, 2, 2};
        spec.alpha = 0.5;
        spec.phi = linear_gauge(0.5);
        return spec;
    }
    if (name == "variable-exponent-chain") {
        // six-point descending chain with dyadic-exact distances
        const int n = 6;
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = std::ldexp(1.0, -2 * i) - std::ldexp(1.0, -10);
        spec.space.n = n;
        spec.space.dist = abs_diff_table(v);
        spec.space.order.assign(n, std::vector<std::uint8_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) spec.space.order[i][j] = 1;
        std::vector<int> map(n);
        for (int i = 0; i < n; ++i) map[i] = std::min(i + 1, n - 1);
        spec.space.selfmap = map;
        spec.space.slack = 0.0;
        spec.alpha = 0.5;
        std::vector<int> exps = {1, 2, 1, 2, 1, 1};
        spec.family = scaled_max_point_family(exps, 0.5);
        spec.exponents = exps;
        return spec;
    }
    throw InputError("unknown library instance: " + name);
}

}  // namespace fixpoint
