#pragma once

#include "fixpoint/space.hpp"

namespace fixpoint {

/// Series metric e(x,y) = sum_n lambda^n d(T^n x, T^n y), truncated with a
/// certified geometric tail bound per entry.
struct DerivedMetric {
    FiniteSpace space; // base space (copy), with its d and T
    double alpha = 0.5;
    double lambda = 1.5;
    DistTable table;
    DistTable tail_bound;
    int truncation_N = 0; // largest number of terms summed for any entry
};

/// Geometric midpoint of the admissible interval (1, 1/alpha).
double default_lambda(double alpha);

/// Builds the series metric.  Preconditions checked before any summation:
/// selfmap present, 1 < lambda < 1/alpha, order-restricted linear contraction
/// at alpha, comparability-increasing T, chain-connected carrier, symmetric d.
/// A failed hypothesis raises PreconditionError naming it.
DerivedMetric build_maia_metric(const FiniteSpace& space, double alpha, double lambda,
                                double tol = 1e-9);

struct MaiaPropertyReport {
    bool identity = true;       // e(x,y) = d(x,y) + lambda*e(Tx,Ty)
    bool subordination = true;  // d <= e entrywise
    bool axioms = true;         // almost-metric axioms on the table
    bool contraction_mu = true; // e(Tx,Ty) <= (1/lambda)*e(x,y)
    double max_identity_defect = 0.0;

    bool pass() const { return identity && subordination && axioms && contraction_mu; }
};

/// Verifies the construction's properties within the recorded tail bounds.
MaiaPropertyReport verify_maia_properties(const DerivedMetric& dm);

}  // namespace fixpoint
