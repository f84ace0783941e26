#include "fixpoint/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fixpoint {

const char* to_string(VariantTag tag) {
    switch (tag) {
        case VariantTag::OrderLinear: return "order-linear";
        case VariantTag::PlainLinear: return "plain-linear";
        case VariantTag::EMOrder: return "eM-order";
        case VariantTag::EMPlain: return "eM-plain";
        case VariantTag::PhiOrder: return "phi-order";
        case VariantTag::Iterative: return "iterative";
        case VariantTag::IterativeUniform: return "iterative-uniform";
    }
    return "?";
}

VariantTag variant_from_string(const std::string& s) {
    for (VariantTag t : {VariantTag::OrderLinear, VariantTag::PlainLinear,
                         VariantTag::EMOrder, VariantTag::EMPlain, VariantTag::PhiOrder,
                         VariantTag::Iterative, VariantTag::IterativeUniform})
        if (s == to_string(t)) return t;
    throw InputError("unknown contraction variant: " + s);
}

ProgressiveSets progressive_sets(const FiniteSpace& space) {
    if (!space.has_selfmap()) throw InputError("progressive_sets: no selfmap");
    ProgressiveSets sets;
    for (int x = 0; x < space.n; ++x) {
        int tx = space.image(x);
        if (space.leq(x, tx)) sets.x_leq.push_back(x);
        if (space.leq(x, tx) || space.leq(tx, x)) sets.x_comp.push_back(x);
    }
    return sets;
}

MonotoneReport check_monotone(const FiniteSpace& space, MonotoneMode mode) {
    if (!space.has_selfmap()) throw InputError("check_monotone: no selfmap");
    MonotoneReport report;
    std::optional<std::array<int, 2>> inc_witness, dec_witness;
    for (int x = 0; x < space.n; ++x)
        for (int y = 0; y < space.n; ++y) {
            int tx = space.image(x), ty = space.image(y);
            switch (mode) {
                case MonotoneMode::Leq:
                    if (space.leq(x, y) && !space.leq(tx, ty) && !inc_witness)
                        inc_witness = {{x, y}};
                    break;
                case MonotoneMode::Comparability:
                    if (comparable(space, x, y) && !comparable(space, tx, ty) &&
                        !inc_witness)
                        inc_witness = {{x, y}};
                    break;
                case MonotoneMode::EitherDirection:
                    if (space.leq(x, y)) {
                        if (!space.leq(tx, ty) && !inc_witness) inc_witness = {{x, y}};
                        if (!space.leq(ty, tx) && !dec_witness) dec_witness = {{x, y}};
                    }
                    break;
            }
        }
    report.increasing = !inc_witness;
    report.decreasing = !dec_witness;
    if (mode == MonotoneMode::EitherDirection) {
        report.holds = report.increasing || report.decreasing;
        report.witness = report.increasing ? dec_witness : inc_witness;
    } else {
        report.holds = report.increasing;
        report.witness = inc_witness;
    }
    return report;
}

HLMTriple hlm(const FiniteSpace& space, const DistTable& e, int x, int y) {
    if (!space.has_selfmap()) throw InputError("hlm: no selfmap");
    int tx = space.image(x), ty = space.image(y);
    HLMTriple t;
    t.h = std::max(e[x][tx], e[y][ty]);
    t.l = 0.5 * (e[x][ty] + e[tx][y]);
    t.m = std::max({e[x][y], t.h, t.l});
    return t;
}

namespace {

// Orbit distances d(x, T^j x) for j = 1..n, and d(x, T^j y) for j = 0..n.
std::vector<double> iterative_args(const FiniteSpace& space, const DistTable& d,
                                   int x, int y, int n) {
    std::vector<double> args;
    args.reserve(2 * n + 1);
    int p = x;
    for (int j = 1; j <= n; ++j) {
        p = space.image(p);
        args.push_back(d[x][p]);
    }
    p = y;
    for (int j = 0; j <= n; ++j) {
        args.push_back(d[x][p]);
        p = space.image(p);
    }
    return args;
}

}  // namespace

ContractionReport check_contraction(const FiniteSpace& space,
                                    const ContractionVariant& variant) {
    if (!space.has_selfmap()) throw InputError("check_contraction: no selfmap");
    const DistTable& d = variant.metric ? *variant.metric : space.dist;
    const double slack = variant.slack < 0.0 ? space.slack : variant.slack;

    const bool order_only = variant.tag == VariantTag::OrderLinear ||
                            variant.tag == VariantTag::EMOrder ||
                            variant.tag == VariantTag::PhiOrder;
    const bool progressive = variant.tag == VariantTag::Iterative ||
                             variant.tag == VariantTag::IterativeUniform;

    if ((variant.tag == VariantTag::EMOrder || variant.tag == VariantTag::EMPlain ||
         variant.tag == VariantTag::PhiOrder ||
         variant.tag == VariantTag::IterativeUniform) &&
        !variant.phi)
        throw InputError("variant requires a scalar gauge");
    if (variant.tag == VariantTag::Iterative) {
        if (!variant.family) throw InputError("iterative variant requires a family");
        if (variant.family->size() != space.n)
            throw InputError("family size does not match carrier");
    }
    if (variant.tag == VariantTag::IterativeUniform) {
        if (!variant.exponents) throw InputError("iterative-uniform variant requires exponents");
        if (static_cast<int>(variant.exponents->size()) != space.n)
            throw InputError("exponent table does not match carrier");
    }

    std::vector<std::uint8_t> in_y(space.n, 1);
    if (progressive) {
        std::fill(in_y.begin(), in_y.end(), 0);
        for (int x : progressive_sets(space).x_leq) in_y[x] = 1;
    }

    ContractionReport report;
    for (int x = 0; x < space.n; ++x) {
        if (progressive && !in_y[x]) continue;
        for (int y = 0; y < space.n; ++y) {
            if (progressive && !in_y[y]) continue;
            if ((order_only || progressive) && !space.leq(x, y)) continue;
            double lhs = 0.0, rhs = 0.0;
            switch (variant.tag) {
                case VariantTag::OrderLinear:
                case VariantTag::PlainLinear:
                    lhs = d[space.image(x)][space.image(y)];
                    rhs = variant.alpha * d[x][y];
                    break;
                case VariantTag::EMOrder:
                case VariantTag::EMPlain:
                    lhs = d[space.image(x)][space.image(y)];
                    rhs = (*variant.phi)(hlm(space, d, x, y).m);
                    break;
                case VariantTag::PhiOrder:
                    lhs = d[space.image(x)][space.image(y)];
                    rhs = (*variant.phi)(d[x][y]);
                    break;
                case VariantTag::Iterative: {
                    int n = variant.family->n_at(x);
                    lhs = d[space.iterate_map(x, n)][space.iterate_map(y, n)];
                    auto args = iterative_args(space, d, x, y, n);
                    rhs = variant.family->eval(x, args);
                    break;
                }
                case VariantTag::IterativeUniform: {
                    int n = (*variant.exponents)[x];
                    lhs = d[space.iterate_map(x, n)][space.iterate_map(y, n)];
                    rhs = (*variant.phi)(d[x][y]);
                    break;
                }
            }
            ++report.pairs_checked;
            if (lhs > rhs + slack) {
                report.holds = false;
                report.witness = {{x, y}};
                report.lhs = lhs;
                report.rhs = rhs;
                return report;
            }
        }
    }
    return report;
}

E10E11Report check_e10_e11(const PointGaugeFamily& family, const FiniteSpace& space,
                           std::uint64_t seed) {
    if (!space.has_selfmap()) throw InputError("check_e10_e11: no selfmap");
    if (family.size() != space.n) throw InputError("family size does not match carrier");
    E10E11Report report;
    report.plan = "32 log-uniform alpha vectors per point in [1e-3,1e2], seed " +
                  std::to_string(seed);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(std::log(1e-3), std::log(1e2));

    auto sets = progressive_sets(space);
    for (int x : sets.x_leq) {
        const int n = family.n_at(x);
        for (int trial = 0; trial < 32; ++trial) {
            std::vector<double> alpha(n);
            for (double& a : alpha) a = std::exp(u(rng));

            // (e10): alpha_n > 0; the left side is increasing in beta, so
            // testing geometrically shrinking candidates is exhaustive enough.
            {
                bool found = false;
                std::vector<double> args(2 * n + 1);
                std::copy(alpha.begin(), alpha.end(), args.begin());
                for (int k = 1; k <= 80 && !found; ++k) {
                    double beta = alpha[n - 1] * std::ldexp(1.0, -k);
                    std::fill(args.begin() + n, args.end(), beta);
                    if (beta + family.eval(x, args) < alpha[n - 1]) found = true;
                }
                if (!found && report.e10) {
                    report.e10 = false;
                    report.e10_witness = alpha;
                }
            }

            // (e11): needs alpha_1 > 0 with alpha_n = 0; vacuous at n = 1.
            if (n >= 2) {
                std::vector<double> a2 = alpha;
                a2[n - 1] = 0.0;
                std::vector<double> args;
                args.insert(args.end(), a2.begin(), a2.end());
                args.insert(args.end(), a2.begin(), a2.end());
                args.push_back(a2[0]);
                if (!(family.eval(x, args) < a2[0]) && report.e11) {
                    report.e11 = false;
                    report.e11_witness = a2;
                }
            }
        }
    }
    return report;
}

}  // namespace fixpoint
