#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fixpoint/errors.hpp"

namespace fixpoint {

using DistTable = std::vector<std::vector<double>>;
using BoolTable = std::vector<std::vector<std::uint8_t>>;

/// Finite quasi-ordered (almost-)metric space: carrier {0..n-1}, distance
/// table, order relation, optional self-map.  Immutable after construction;
/// every operation below is pure.
struct FiniteSpace {
    int n = 0;
    DistTable dist;                          // dist[i][j] >= 0, dist[i][i] = 0
    BoolTable order;                         // order[i][j] <=> i <= j
    std::optional<std::vector<int>> selfmap; // image under T
    double slack = 0.0; // comparison slack: 0 for authored tables,
                        // ~1e-12 for tables derived by computation

    bool leq(int i, int j) const { return order[i][j] != 0; }
    double d(int i, int j) const { return dist[i][j]; }

    /// Symmetry is computed from the table, not declared.
    bool symmetric() const;

    /// T(i); throws InputError when no selfmap is attached.
    int image(int i) const;
    /// T^k(i).
    int iterate_map(int i, int k) const;
    bool has_selfmap() const { return selfmap.has_value(); }

    /// Throws InputError on any dimension mismatch between the tables.
    void validate_shape() const;
};

enum class AxiomMode { Metric, AlmostMetric, QuasiOrder, Order };

const char* to_string(AxiomMode mode);

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::vector<int> witness; // first violating (i,j) or (i,j,k)
};

struct AxiomReport {
    AxiomMode mode = AxiomMode::Metric;
    std::vector<AxiomCheck> checks;

    bool all_pass() const;
    const AxiomCheck* find(const std::string& name) const;
};

/// Exhaustive axiom verification for the mode's axiom set.  Metric mode
/// requires symmetry; almost-metric waives it; order mode adds antisymmetry
/// on top of the quasi-order axioms.
AxiomReport check_axioms(const FiniteSpace& space, AxiomMode mode);

/// x <> y: x <= y or y <= x.
bool comparable(const FiniteSpace& space, int x, int y);

using ChainPath = std::vector<int>;

/// Shortest <>-chain from x to y (BFS on the comparability graph, lowest
/// index first); [x] for x == y; absent when no chain exists.
std::optional<ChainPath> find_chain(const FiniteSpace& space, int x, int y);

/// Connected components of the comparability graph, blocks sorted by their
/// smallest element.  Chain-connectedness holds iff exactly one component.
std::vector<std::vector<int>> chain_components(const FiniteSpace& space);

struct BoundsReport {
    bool a05 = false;    // every pair has lower and upper bounds
    bool d03 = false;    // comparability graph transitive
    bool d04 = false;    // incomparable pairs share a comparable c
    bool linear = false; // comparability = all pairs (actual equality test)
};

BoundsReport check_bounds_and_directedness(const FiniteSpace& space);

}  // namespace fixpoint
