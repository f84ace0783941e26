#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fixpoint/oracle.hpp"
#include "fixpoint/space.hpp"

namespace fixpoint {

struct GeneratorParams {
    std::uint64_t seed = 1;
    int n = 6;
    double alpha = 0.5;
    double order_density = 0.3;       // random-space mode only
    std::optional<TheoremId> target;  // required by gen_theorem_instance
    int components = 1;               // tree roots in the generated forest
    bool chain = false;               // single path, totally ordered carrier
    int max_attempts = 64;
};

/// A carrier bundled with the data a theorem suite needs to run on it.
struct InstanceSpec {
    std::string name;
    FiniteSpace space;
    double alpha = 0.5;
    std::optional<double> lambda;
    std::optional<ScalarGauge> phi;
    std::optional<PointGaugeFamily> family;
    std::optional<std::vector<int>> exponents;
    std::string provenance; // builtin | generated | file

    SuiteParams suite_params() const;
};

/// Random symmetric weights closed under shortest paths, a random transitive
/// order, a uniform selfmap.  No structural guarantees; falsifier raw material.
FiniteSpace gen_random_space(const GeneratorParams& params);

/// One rooted-forest instance without post-verification: T walks each tree
/// toward its root, the order is orbit reachability, distances come from a
/// one-dimensional embedding whose edge lengths shrink by at least alpha
/// toward the root.
InstanceSpec gen_tree_instance(const GeneratorParams& params);

/// Tree instances retried until the target theorem's hypotheses all pass.
InstanceSpec gen_theorem_instance(const GeneratorParams& params);

std::vector<std::string> builtin_library();
InstanceSpec library_instance(const std::string& name);

/// Dyadic carrier for the halving map: {0} with the chains 2^-j and
/// 0.75 * 2^-k, truncated at the given depth; points below the truncation
/// collapse to 0.
FiniteSpace half_map_grid(int depth = 96);

}  // namespace fixpoint
