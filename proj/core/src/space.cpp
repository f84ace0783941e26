#include "fixpoint/space.hpp"

#include <algorithm>
#include <deque>

namespace fixpoint {

bool FiniteSpace::symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist[i][j] != dist[j][i]) return false;
    return true;
}

int FiniteSpace::image(int i) const {
    if (!selfmap) throw InputError("space has no selfmap attached");
    return (*selfmap)[i];
}

int FiniteSpace::iterate_map(int i, int k) const {
    int p = i;
    for (int s = 0; s < k; ++s) p = image(p);
    return p;
}

void FiniteSpace::validate_shape() const {
    if (n < 0) throw InputError("negative point count");
    if (static_cast<int>(dist.size()) != n)
        throw InputError("dist has " + std::to_string(dist.size()) +
                         " rows, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(dist[i].size()) != n)
            throw InputError("dist row " + std::to_string(i) + " has " +
                             std::to_string(dist[i].size()) + " entries, expected " +
                             std::to_string(n));
    if (static_cast<int>(order.size()) != n)
        throw InputError("order has " + std::to_string(order.size()) +
                         " rows, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(order[i].size()) != n)
            throw InputError("order row " + std::to_string(i) + " has " +
                             std::to_string(order[i].size()) + " entries, expected " +
                             std::to_string(n));
    if (selfmap) {
        if (static_cast<int>(selfmap->size()) != n)
            throw InputError("selfmap has " + std::to_string(selfmap->size()) +
                             " entries, expected " + std::to_string(n));
        for (int i = 0; i < n; ++i)
            if ((*selfmap)[i] < 0 || (*selfmap)[i] >= n)
                throw InputError("selfmap[" + std::to_string(i) + "] out of range");
    }
}

const char* to_string(AxiomMode mode) {
    switch (mode) {
        case AxiomMode::Metric: return "metric";
        case AxiomMode::AlmostMetric: return "almost-metric";
        case AxiomMode::QuasiOrder: return "quasi-order";
        case AxiomMode::Order: return "order";
    }
    return "?";
}

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

AxiomCheck check_reflexive_zero(const FiniteSpace& s) {
    AxiomCheck c{"reflexive", true, {}};
    for (int i = 0; i < s.n; ++i)
        if (s.dist[i][i] != 0.0) return {"reflexive", false, {i, i}};
    return c;
}

AxiomCheck check_nonnegative(const FiniteSpace& s) {
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (!(s.dist[i][j] >= 0.0)) return {"nonnegative", false, {i, j}};
    return {"nonnegative", true, {}};
}

AxiomCheck check_symmetry(const FiniteSpace& s) {
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if (s.dist[i][j] != s.dist[j][i]) return {"symmetric", false, {i, j}};
    return {"symmetric", true, {}};
}

AxiomCheck check_triangular(const FiniteSpace& s) {
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            for (int k = 0; k < s.n; ++k)
                if (s.dist[i][k] > s.dist[i][j] + s.dist[j][k] + s.slack)
                    return {"triangular", false, {i, j, k}};
    return {"triangular", true, {}};
}

AxiomCheck check_sufficient(const FiniteSpace& s) {
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (i != j && s.dist[i][j] == 0.0) return {"sufficient", false, {i, j}};
    return {"sufficient", true, {}};
}

AxiomCheck check_order_reflexive(const FiniteSpace& s) {
    for (int i = 0; i < s.n; ++i)
        if (!s.leq(i, i)) return {"order-reflexive", false, {i, i}};
    return {"order-reflexive", true, {}};
}

AxiomCheck check_order_transitive(const FiniteSpace& s) {
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            if (!s.leq(i, j)) continue;
            for (int k = 0; k < s.n; ++k)
                if (s.leq(j, k) && !s.leq(i, k))
                    return {"order-transitive", false, {i, j, k}};
        }
    return {"order-transitive", true, {}};
}

AxiomCheck check_antisymmetric(const FiniteSpace& s) {
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if (s.leq(i, j) && s.leq(j, i)) return {"antisymmetric", false, {i, j}};
    return {"antisymmetric", true, {}};
}

}  // namespace

AxiomReport check_axioms(const FiniteSpace& space, AxiomMode mode) {
    space.validate_shape();
    AxiomReport report;
    report.mode = mode;
    switch (mode) {
        case AxiomMode::Metric:
            report.checks = {check_nonnegative(space), check_reflexive_zero(space),
                             check_symmetry(space), check_triangular(space),
                             check_sufficient(space)};
            break;
        case AxiomMode::AlmostMetric:
            report.checks = {check_nonnegative(space), check_reflexive_zero(space),
                             check_triangular(space), check_sufficient(space)};
            break;
        case AxiomMode::QuasiOrder:
            report.checks = {check_order_reflexive(space), check_order_transitive(space)};
            break;
        case AxiomMode::Order:
            report.checks = {check_order_reflexive(space), check_order_transitive(space),
                             check_antisymmetric(space)};
            break;
    }
    return report;
}

bool comparable(const FiniteSpace& space, int x, int y) {
    if (x < 0 || x >= space.n || y < 0 || y >= space.n)
        throw InputError("point index out of range");
    return space.leq(x, y) || space.leq(y, x);
}

std::optional<ChainPath> find_chain(const FiniteSpace& space, int x, int y) {
    if (x < 0 || x >= space.n || y < 0 || y >= space.n)
        throw InputError("point index out of range");
    if (x == y) return ChainPath{x}; // degenerate chain, stands for [x,x]
    std::vector<int> parent(space.n, -1);
    std::deque<int> queue{x};
    parent[x] = x;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < space.n; ++v) { // lowest index first: deterministic
            if (parent[v] != -1 || v == u) continue;
            if (!comparable(space, u, v)) continue;
            parent[v] = u;
            if (v == y) {
                ChainPath path{y};
                for (int p = y; p != x; p = parent[p]) path.push_back(parent[p]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> chain_components(const FiniteSpace& space) {
    std::vector<int> block(space.n, -1);
    std::vector<std::vector<int>> components;
    for (int s = 0; s < space.n; ++s) {
        if (block[s] != -1) continue;
        int id = static_cast<int>(components.size());
        components.push_back({});
        std::deque<int> queue{s};
        block[s] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            components[id].push_back(u);
            for (int v = 0; v < space.n; ++v)
                if (block[v] == -1 && comparable(space, u, v)) {
                    block[v] = id;
                    queue.push_back(v);
                }
        }
        std::sort(components[id].begin(), components[id].end());
    }
    return components;
}

BoundsReport check_bounds_and_directedness(const FiniteSpace& space) {
    const int n = space.n;
    BoundsReport r;
    r.a05 = true;
    for (int x = 0; x < n && r.a05; ++x)
        for (int y = 0; y < n && r.a05; ++y) {
            bool lower = false, upper = false;
            for (int c = 0; c < n; ++c) {
                lower = lower || (space.leq(c, x) && space.leq(c, y));
                upper = upper || (space.leq(x, c) && space.leq(y, c));
            }
            if (!lower || !upper) r.a05 = false;
        }

    auto comp = [&](int i, int j) { return space.leq(i, j) || space.leq(j, i); };

    r.d03 = true;
    for (int x = 0; x < n && r.d03; ++x)
        for (int y = 0; y < n && r.d03; ++y)
            for (int z = 0; z < n; ++z)
                if (comp(x, y) && comp(y, z) && !comp(x, z)) {
                    r.d03 = false;
                    break;
                }

    r.d04 = true;
    for (int x = 0; x < n && r.d04; ++x)
        for (int y = 0; y < n && r.d04; ++y) {
            if (comp(x, y)) continue;
            bool found = false;
            for (int c = 0; c < n; ++c)
                if (comp(x, c) && comp(y, c)) {
                    found = true;
                    break;
                }
            if (!found) r.d04 = false;
        }

    r.linear = true;
    for (int x = 0; x < n && r.linear; ++x)
        for (int y = 0; y < n; ++y)
            if (!comp(x, y)) {
                r.linear = false;
                break;
            }
    return r;
}

}  // namespace fixpoint
