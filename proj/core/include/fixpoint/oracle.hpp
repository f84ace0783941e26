#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fixpoint/gauge.hpp"
#include "fixpoint/iteration.hpp"
#include "fixpoint/space.hpp"

namespace fixpoint {

/// Theorem suites.  Every suite starts with the ambient-structure hypotheses
/// "d-axioms" (metric axioms for T1/T2/T3/C1/C2, almost-metric otherwise) and
/// "quasi-order"; T3 adds "e-axioms" for the second distance, as does T4 when
/// one is supplied.  The theorem-specific hypothesis ids are:
///   T1  complete* continuous* a02 a03 a04 a05
///   T2  complete* continuous* a02 b02 b03
///   T3  complete* continuous* b04 subordination
///   T4  c04 c05 c06 phi-comparison ao-complete* ao-continuous* self-closed*
///   C1  d01 phi-comparison o-complete* o-continuous*
///   C2  a03 b02 d02 phi-comparison d03 d04 complete* o-continuous*
///   T6  e05 e06 e07 e08 e09 qo-complete* self-closed* left-continuous*
///   T7  T6 plus antisymmetry (genuine ordering), interval-closed*
///   T8  e05..e09 e10 e11 qo-complete* interval-closed*
///   T9  e05 e06 e12 f-normal qo-complete* self-closed* left-continuous*
/// Starred hypotheses hold automatically on finite carriers and are recorded,
/// not tested.
enum class TheoremId { T1, T2, T3, T4, C1, C2, T6, T7, T8, T9 };

const char* to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& s);
std::vector<TheoremId> all_theorems();

struct SuiteParams {
    double alpha = 0.5;
    std::optional<ScalarGauge> phi;
    std::optional<PointGaugeFamily> family;
    std::optional<DistTable> e;             // second metric for T3
    double mu = 0.5;                        // contraction constant on e (T3)
    std::optional<std::vector<int>> exponents; // per-point n(x) for T9; default all 1
    double slack_override = -1.0;           // >= 0: overrides space.slack in checks
    std::uint64_t seed = 20240;
};

struct HypothesisResult {
    std::string id;
    bool pass = true;
    bool automatic = false; // holds on finite carriers, recorded not tested
    std::string note;
};

struct ConclusionResult {
    std::string id;
    bool pass = true;
    std::string note;
};

struct SuiteVerdict {
    TheoremId theorem = TheoremId::T2;
    std::vector<HypothesisResult> hypotheses;
    std::vector<ConclusionResult> conclusions;
    std::vector<std::string> dropped;

    bool hypotheses_pass() const; // over non-dropped hypotheses
    bool conclusions_pass() const;
    bool implication_respected() const;
    const HypothesisResult* hypothesis(const std::string& id) const;
};

/// Fix(T) by literal enumeration.
std::vector<int> enumerate_fixed_points(const FiniteSpace& space);

/// Ground-truth Picard verification: simulates every orbit to termination with
/// straight-line loops, independent of the iteration engines.
PicardReport brute_picard_check(const FiniteSpace& space, PicardMode mode);

/// Evaluates every hypothesis of the theorem via the checker modules and every
/// conclusion by brute force; `drop` removes hypothesis ids from the
/// implication's antecedent (used by the falsifier).
SuiteVerdict theorem_suite(const FiniteSpace& space, TheoremId theorem,
                           const SuiteParams& params,
                           const std::vector<std::string>& drop = {});

}  // namespace fixpoint
