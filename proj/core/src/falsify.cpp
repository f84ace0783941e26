#include "fixpoint/falsify.hpp"

#include <random>

namespace fixpoint {

namespace {

bool needs_family(TheoremId id) {
    return id == TheoremId::T6 || id == TheoremId::T7 || id == TheoremId::T8;
}

void attach_gauges(InstanceSpec& spec, TheoremId theorem) {
    const int n = spec.space.n;
    if (needs_family(theorem)) {
        std::vector<int> exps(static_cast<size_t>(n), 1);
        spec.family = theorem == TheoremId::T8
                          ? tail_max_point_family(exps, spec.alpha)
                          : scaled_max_point_family(exps, spec.alpha);
    } else {
        spec.phi = linear_gauge(spec.alpha);
        if (theorem == TheoremId::T9)
            spec.exponents = std::vector<int>(static_cast<size_t>(n), 1);
    }
}

// two comparable points swapped by T, with an asymmetric distance; keeps the
// progressive set and the contraction alive while breaking monotonicity
InstanceSpec swap_gadget(TheoremId theorem) {
    InstanceSpec spec;
    spec.name = "swap-gadget";
    spec.provenance = "generated";
    spec.alpha = 0.5;
    spec.space.n = 2;
    spec.space.dist = {{0.0, 1.0}, {0.4, 0.0}};
    spec.space.order = {{1, 1}, {0, 1}};
    spec.space.selfmap = std::vector<int>{1, 0};
    spec.space.slack = 0.0;
    attach_gauges(spec, theorem);
    return spec;
}

InstanceSpec random_spec(TheoremId theorem, std::uint64_t seed, int max_n) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(2, std::max(2, max_n));
    std::uniform_real_distribution<double> density(0.1, 0.7);
    GeneratorParams gp;
    gp.seed = seed;
    gp.n = size(rng);
    gp.order_density = density(rng);
    InstanceSpec spec;
    spec.name = "random-s" + std::to_string(seed);
    spec.provenance = "generated";
    spec.alpha = 0.5;
    spec.space = gen_random_space(gp);
    attach_gauges(spec, theorem);
    return spec;
}

}  // namespace

FalsifyResult falsify_campaign(const FalsifyParams& params) {
    FalsifyResult result;
    std::vector<std::string> drop;
    if (params.drop) drop.push_back(*params.drop);

    for (int trial = 0; trial < params.trials; ++trial) {
        result.trials_run = trial + 1;
        const std::uint64_t seed = params.seed + static_cast<std::uint64_t>(trial);
        InstanceSpec spec;
        const char* strategy = "";
        try {
            switch (trial % 3) {
                case 0: {
                    strategy = "forest";
                    GeneratorParams gp;
                    gp.seed = seed;
                    std::mt19937_64 rng(seed);
                    std::uniform_int_distribution<int> size(4, std::max(4, params.max_n));
                    gp.n = size(rng);
                    gp.components = 2;
                    gp.target = params.theorem;
                    spec = gen_tree_instance(gp);
                    break;
                }
                case 1:
                    strategy = "gadget";
                    spec = swap_gadget(params.theorem);
                    break;
                default:
                    strategy = "random";
                    spec = random_spec(params.theorem, seed, params.max_n);
                    break;
            }
        } catch (const GenerationError&) {
            continue;
        }

        SuiteParams sp = spec.suite_params();
        sp.seed = params.suite.seed;
        sp.slack_override = params.suite.slack_override;
        SuiteVerdict verdict;
        try {
            verdict = theorem_suite(spec.space, params.theorem, sp, drop);
        } catch (const InputError&) {
            continue;
        }
        if (verdict.hypotheses_pass() && !verdict.conclusions_pass()) {
            result.found = true;
            result.trial = trial;
            result.counterexample = spec;
            result.verdict = verdict;
            result.strategy = strategy;
            return result;
        }
    }
    return result;
}

}  // namespace fixpoint
