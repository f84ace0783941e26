#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fixpoint/gauge.hpp"
#include "fixpoint/space.hpp"

namespace fixpoint {

/// Which contraction inequality to verify, with its quantified pair set:
///   OrderLinear      d(Tx,Ty) <= a*d(x,y)        over x <= y
///   PlainLinear      e(Tx,Ty) <= a*e(x,y)        over all pairs
///   EMOrder          e(Tx,Ty) <= phi(M(x,y))     over x <= y
///   EMPlain          e(Tx,Ty) <= phi(M(x,y))     over all pairs
///   PhiOrder         d(Tx,Ty) <= phi(d(x,y))     over x <= y
///   Iterative        per-point exponents and families, over x,y in Y, x <= y
///   IterativeUniform d(T^n(x)x,T^n(x)y) <= phi(d(x,y)) over x,y in Y, x <= y
enum class VariantTag {
    OrderLinear,
    PlainLinear,
    EMOrder,
    EMPlain,
    PhiOrder,
    Iterative,
    IterativeUniform,
};

const char* to_string(VariantTag tag);
VariantTag variant_from_string(const std::string& s);

struct ContractionVariant {
    VariantTag tag = VariantTag::OrderLinear;
    double alpha = 0.5;                        // linear tags
    std::optional<ScalarGauge> phi;            // EM/Phi/IterativeUniform tags
    std::optional<PointGaugeFamily> family;    // Iterative tag
    std::optional<std::vector<int>> exponents; // IterativeUniform per-point n(x)
    const DistTable* metric = nullptr;         // null: use space.dist
    double slack = -1.0;                       // < 0: use space.slack
};

struct ContractionReport {
    bool holds = true;
    std::optional<std::array<int, 2>> witness; // first violating pair, lexicographic
    double lhs = 0.0, rhs = 0.0;               // both sides at the witness
    long pairs_checked = 0;
};

struct ProgressiveSets {
    std::vector<int> x_leq;  // {x : x <= Tx}
    std::vector<int> x_comp; // {x : x <> Tx}
};

ProgressiveSets progressive_sets(const FiniteSpace& space);

enum class MonotoneMode { Leq, Comparability, EitherDirection };

struct MonotoneReport {
    bool holds = true;
    bool increasing = true;
    bool decreasing = true; // only meaningful for EitherDirection
    std::optional<std::array<int, 2>> witness;
};

MonotoneReport check_monotone(const FiniteSpace& space, MonotoneMode mode);

struct HLMTriple {
    double h = 0.0, l = 0.0, m = 0.0;
};

/// H(x,y) = max(e(x,Tx), e(y,Ty)); L(x,y) = (e(x,Ty)+e(Tx,y))/2;
/// M(x,y) = max(e(x,y), H, L).
HLMTriple hlm(const FiniteSpace& space, const DistTable& e, int x, int y);

/// Exhaustive verification of the variant's inequality over its pair set.
ContractionReport check_contraction(const FiniteSpace& space,
                                    const ContractionVariant& variant);

struct E10E11Report {
    bool e10 = true;
    bool e11 = true;
    std::string plan;
    std::optional<std::vector<double>> e10_witness; // alpha vector with no beta
    std::optional<std::vector<double>> e11_witness;
};

/// Semi-decided sampling check of the per-point gauge side conditions used by
/// the discontinuous-map theorem: a beta search for each sampled alpha vector,
/// and the strict diagonal inequality with vanishing last coordinate.
E10E11Report check_e10_e11(const PointGaugeFamily& family, const FiniteSpace& space,
                           std::uint64_t seed = 20240);

}  // namespace fixpoint
