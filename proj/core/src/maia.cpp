#include "fixpoint/maia.hpp"

#include <algorithm>
#include <cmath>

#include "fixpoint/contraction.hpp"

namespace fixpoint {

double default_lambda(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must be in (0,1)");
    return std::sqrt(1.0 / alpha);
}

DerivedMetric build_maia_metric(const FiniteSpace& space, double alpha, double lambda,
                                double tol) {
    space.validate_shape();
    if (!space.has_selfmap()) throw InputError("build_maia_metric: no selfmap");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must be in (0,1)");
    if (!(lambda > 1.0 && lambda < 1.0 / alpha))
        throw InputError("lambda must be in (1, 1/alpha)");
    if (!(tol > 0.0)) throw InputError("tol must be positive");

    if (!space.symmetric())
        throw PreconditionError("symmetry", "base distance is not symmetric");
    ContractionVariant a02;
    a02.tag = VariantTag::OrderLinear;
    a02.alpha = alpha;
    if (!check_contraction(space, a02).holds)
        throw PreconditionError("a02", "T is not an order-restricted contraction at alpha");
    if (!check_monotone(space, MonotoneMode::Comparability).holds)
        throw PreconditionError("b02", "T is not comparability-increasing");
    if (chain_components(space).size() != 1)
        throw PreconditionError("b03", "carrier is not chain-connected");

    const int n = space.n;
    const double ratio = lambda * alpha;

    DerivedMetric dm;
    dm.space = space;
    dm.alpha = alpha;
    dm.lambda = lambda;
    dm.table.assign(n, std::vector<double>(n, 0.0));
    dm.tail_bound.assign(n, std::vector<double>(n, 0.0));

    // Orbit index tables T^k, grown on demand.
    std::vector<std::vector<int>> pow_map{std::vector<int>(n)};
    for (int i = 0; i < n; ++i) pow_map[0][i] = i;
    auto ensure_pow = [&](int k) {
        while (static_cast<int>(pow_map.size()) <= k) {
            const auto& prev = pow_map.back();
            std::vector<int> next(n);
            for (int i = 0; i < n; ++i) next[i] = space.image(prev[i]);
            pow_map.push_back(std::move(next));
        }
    };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            auto chain = find_chain(space, x, y);
            // chain exists: b03 verified above
            double chain_sum = 0.0;
            for (size_t i = 0; i + 1 < chain->size(); ++i)
                chain_sum += space.dist[(*chain)[i]][(*chain)[i + 1]];

            // smallest N with (lambda*alpha)^N * S / (1 - lambda*alpha) <= tol
            int N = 1;
            double tail = chain_sum * ratio / (1.0 - ratio);
            while (tail > tol) {
                tail *= ratio;
                ++N;
            }
            ensure_pow(N - 1);

            double sum = 0.0, factor = 1.0;
            for (int k = 0; k < N; ++k) {
                int xk = pow_map[k][x], yk = pow_map[k][y];
                if (xk == yk) { // merged orbits stay merged: series ends here
                    tail = 0.0;
                    break;
                }
                sum += factor * space.dist[xk][yk];
                factor *= lambda;
            }
            dm.table[x][y] = sum;
            dm.tail_bound[x][y] = tail;
            dm.truncation_N = std::max(dm.truncation_N, N);
        }
    return dm;
}

MaiaPropertyReport verify_maia_properties(const DerivedMetric& dm) {
    const FiniteSpace& s = dm.space;
    const int n = s.n;
    const auto& e = dm.table;
    const auto& tail = dm.tail_bound;
    const double lambda = dm.lambda;

    MaiaPropertyReport report;
    double max_tail = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) max_tail = std::max(max_tail, tail[i][j]);
    const double base_slack = 2.0 * max_tail + 1e-12;

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int tx = s.image(x), ty = s.image(y);
            double defect =
                std::abs(e[x][y] - (s.dist[x][y] + lambda * e[tx][ty]));
            report.max_identity_defect = std::max(report.max_identity_defect, defect);
            if (defect > 2.0 * (tail[x][y] + lambda * tail[tx][ty]) + 1e-12)
                report.identity = false;
            if (s.dist[x][y] > e[x][y] + 1e-12) report.subordination = false;
            if (e[tx][ty] > e[x][y] / lambda + base_slack) report.contraction_mu = false;
        }

    FiniteSpace derived;
    derived.n = n;
    derived.dist = e;
    derived.order = s.order;
    derived.slack = base_slack;
    report.axioms = check_axioms(derived, AxiomMode::AlmostMetric).all_pass();
    return report;
}

}  // namespace fixpoint
