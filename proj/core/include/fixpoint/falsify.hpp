#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixpoint/instances.hpp"
#include "fixpoint/oracle.hpp"

namespace fixpoint {

struct FalsifyParams {
    TheoremId theorem = TheoremId::T2;
    std::optional<std::string> drop; // hypothesis id removed from the antecedent
    int trials = 1000;
    std::uint64_t seed = 7;
    int max_n = 8;
    SuiteParams suite; // slack/seed knobs forwarded to the per-trial suites
};

struct FalsifyResult {
    bool found = false;
    int trial = -1;
    int trials_run = 0;
    std::optional<InstanceSpec> counterexample;
    std::optional<SuiteVerdict> verdict;
    std::string strategy;
};

/// Searches for a carrier where every non-dropped hypothesis passes and some
/// conclusion fails.  Without a dropped hypothesis a hit would refute the
/// implication itself; with one it certifies that the hypothesis is needed.
/// Trials rotate through targeted constructions (disconnected forests, an
/// order-breaking two-point gadget) and unconstrained random spaces.
FalsifyResult falsify_campaign(const FalsifyParams& params);

}  // namespace fixpoint
