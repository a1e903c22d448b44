#include "ripsmorse/metric.hpp"

#include "ripsmorse/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ripsmorse {

namespace {

constexpr long long kUnreached = std::numeric_limits<long long>::max() / 4;

long long lcm_checked(long long a, long long b) {
    long long g = std::gcd(a, b);
    long long r = (a / g) * b;
    if (r <= 0 || r > (1LL << 40))
        throw too_large("common denominator of input rationals exceeds 2^40");
    return r;
}

} // namespace

FiniteMetricSpace FiniteMetricSpace::from_matrix(const std::vector<std::vector<Rational>>& d,
                                                 std::optional<PointSet> orbit) {
    FiniteMetricSpace s;
    s.n_ = static_cast<int>(d.size());
    if (s.n_ == 0) throw metric_violation("empty distance matrix");
    if (s.n_ > 32) throw too_large("point count exceeds 32");
    long long den = 1;
    for (const auto& row : d) {
        if (static_cast<int>(row.size()) != s.n_) throw metric_violation("matrix is not square");
        for (const auto& r : row) den = lcm_checked(den, r.den);
    }
    s.denom_ = den;
    s.dist_.assign(static_cast<size_t>(s.n_) * s.n_, 0);
    for (int i = 0; i < s.n_; ++i)
        for (int j = 0; j < s.n_; ++j)
            s.dist_[static_cast<size_t>(i) * s.n_ + j] = d[i][j].num * (den / d[i][j].den);
    s.orbit_ = orbit;
    s.validate();
    return s;
}

FiniteMetricSpace FiniteMetricSpace::from_graph(const GraphSpec& g,
                                                std::optional<PointSet> orbit) {
    FiniteMetricSpace s;
    s.n_ = g.n;
    s.graph_flag_ = true;
    if (s.n_ <= 0) throw metric_violation("graph must have at least one vertex");
    if (s.n_ > 512) throw too_large("graph vertex count exceeds 512");
    long long den = 1;
    for (const auto& e : g.edges) {
        if (e.u < 0 || e.u >= s.n_ || e.v < 0 || e.v >= s.n_ || e.u == e.v)
            throw metric_violation("edge endpoints out of range or a loop");
        if (e.weight.num <= 0) throw metric_violation("edge weights must be positive");
        den = lcm_checked(den, e.weight.den);
    }
    s.denom_ = den;
    s.edges_ = g.edges;
    s.adj_.assign(static_cast<size_t>(s.n_), {});
    for (const auto& e : g.edges) {
        long long w = e.weight.num * (den / e.weight.den);
        s.adj_[static_cast<size_t>(e.u)].push_back({e.v, w});
        s.adj_[static_cast<size_t>(e.v)].push_back({e.u, w});
    }
    for (auto& nb : s.adj_) std::sort(nb.begin(), nb.end());

    // Exact all-pairs shortest paths (Floyd-Warshall on int64 numerators).
    size_t n = static_cast<size_t>(s.n_);
    s.dist_.assign(n * n, kUnreached);
    for (size_t i = 0; i < n; ++i) s.dist_[i * n + i] = 0;
    for (const auto& e : g.edges) {
        long long w = e.weight.num * (den / e.weight.den);
        size_t u = static_cast<size_t>(e.u), v = static_cast<size_t>(e.v);
        s.dist_[u * n + v] = std::min(s.dist_[u * n + v], w);
        s.dist_[v * n + u] = std::min(s.dist_[v * n + u], w);
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i) {
            long long dik = s.dist_[i * n + k];
            if (dik >= kUnreached) continue;
            const long long* dk = &s.dist_[k * n];
            long long* di = &s.dist_[i * n];
            for (size_t j = 0; j < n; ++j)
                if (dik + dk[j] < di[j]) di[j] = dik + dk[j];
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (s.dist_[i * n + j] >= kUnreached)
                throw disconnected_graph("vertices " + std::to_string(i) + " and " +
                                         std::to_string(j) + " are not connected");
    s.orbit_ = orbit;
    s.validate();
    return s;
}

void FiniteMetricSpace::validate() const {
    if (orbit_) {
        if (*orbit_ == 0) throw empty_subset("orbit marker X0 must be nonempty");
        if ((*orbit_ & ~all_points()) != 0)
            throw metric_violation("orbit marker references points outside the space");
    }
    size_t n = static_cast<size_t>(n_);
    for (size_t i = 0; i < n; ++i) {
        if (dist_[i * n + i] != 0) throw metric_violation("nonzero diagonal entry");
        for (size_t j = i + 1; j < n; ++j) {
            long long dij = dist_[i * n + j];
            if (dij != dist_[j * n + i]) throw metric_violation("asymmetric distances");
            if (dij <= 0)
                throw metric_violation("zero or negative distance between distinct points " +
                                       std::to_string(i) + "," + std::to_string(j));
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (dist_[i * n + j] > dist_[i * n + k] + dist_[k * n + j])
                    throw metric_violation("triangle inequality fails on (" + std::to_string(i) +
                                           "," + std::to_string(j) + "," + std::to_string(k) + ")");
}

long long FiniteMetricSpace::diam_num(PointSet s) const {
    long long best = 0;
    auto pts = elements(s);
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b)
            best = std::max(best, dist_num(pts[a], pts[b]));
    return best;
}

std::vector<int> FiniteMetricSpace::between(int x, int y) const {
    std::vector<int> out;
    long long dxy = dist_num(x, y);
    for (int v = 0; v < n_; ++v)
        if (dist_num(x, v) + dist_num(v, y) == dxy) out.push_back(v);
    return out;
}

std::vector<int> FiniteMetricSpace::geodesic_successors(int u, int t) const {
    std::vector<int> out;
    if (!graph_source()) return out;
    for (const auto& [v, w] : adj_[static_cast<size_t>(u)])
        if (w + dist_num(v, t) == dist_num(u, t)) out.push_back(v);
    return out;
}

namespace {

// DFS path enumeration over the shortest-path successor DAG. `ascending`
// controls the neighbour visit order, which selects which extremal
// geodesics appear first.
void enumerate_paths(const FiniteMetricSpace& s, int u, int target, bool ascending,
                     std::vector<int>& stack, std::vector<std::vector<int>>& out,
                     size_t limit) {
    if (out.size() >= limit) return;
    if (u == target) {
        out.push_back(stack);
        return;
    }
    auto succ = s.geodesic_successors(u, target);
    if (!ascending) std::reverse(succ.begin(), succ.end());
    for (int v : succ) {
        stack.push_back(v);
        enumerate_paths(s, v, target, ascending, stack, out, limit);
        stack.pop_back();
        if (out.size() >= limit) return;
    }
}

long long count_paths(const FiniteMetricSpace& s, int x, int y, long long cap) {
    // Counts geodesics by DP over vertices sorted by distance from x.
    std::vector<int> order;
    for (int v : s.between(x, y)) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (s.dist_num(x, a) != s.dist_num(x, b)) return s.dist_num(x, a) < s.dist_num(x, b);
        return a < b;
    });
    std::vector<long long> ways(static_cast<size_t>(s.size()), 0);
    ways[static_cast<size_t>(x)] = 1;
    for (int u : order) {
        if (ways[static_cast<size_t>(u)] == 0) continue;
        for (int v : s.geodesic_successors(u, y)) {
            ways[static_cast<size_t>(v)] =
                std::min(cap, ways[static_cast<size_t>(v)] + ways[static_cast<size_t>(u)]);
        }
    }
    return ways[static_cast<size_t>(y)];
}

} // namespace

std::vector<std::vector<int>> FiniteMetricSpace::geodesic_sample(int x, int y, int max_paths,
                                                                 long long* total) const {
    if (!graph_source())
        throw EngineError("NotAGraph", "geodesic enumeration requires a graph source");
    if (total) *total = count_paths(*this, x, y, 1LL << 40);
    std::vector<std::vector<int>> fwd, bwd;
    std::vector<int> stack{x};
    size_t half = static_cast<size_t>(max_paths + 1) / 2;
    enumerate_paths(*this, x, y, true, stack, fwd, half);
    stack.assign(1, x);
    enumerate_paths(*this, x, y, false, stack, bwd, static_cast<size_t>(max_paths));
    for (auto& p : bwd) {
        if (fwd.size() >= static_cast<size_t>(max_paths)) break;
        if (std::find(fwd.begin(), fwd.end(), p) == fwd.end()) fwd.push_back(std::move(p));
    }
    return fwd;
}

Rational covering_radius(const FiniteMetricSpace& space, PointSet x0) {
    if (x0 == 0) throw empty_subset("covering radius needs a nonempty subset");
    auto anchors = elements(x0);
    // Doubled distances keep edge-midpoint arithmetic integral.
    long long best2 = 0;
    for (int v = 0; v < space.size(); ++v) {
        long long near2 = std::numeric_limits<long long>::max();
        for (int a : anchors) near2 = std::min(near2, 2 * space.dist_num(v, a));
        best2 = std::max(best2, near2);
    }
    if (space.graph_source()) {
        for (const auto& e : space.edges()) {
            long long w = e.weight.num * (space.denom() / e.weight.den);
            long long near2 = std::numeric_limits<long long>::max();
            for (int a : anchors)
                near2 = std::min(near2, w + 2 * std::min(space.dist_num(e.u, a),
                                                         space.dist_num(e.v, a)));
            best2 = std::max(best2, near2);
        }
    }
    return {best2, 2 * space.denom()};
}

} // namespace ripsmorse
