#pragma once

#include "ripsmorse/pointset.hpp"
#include "ripsmorse/rational.hpp"

#include <optional>
#include <vector>

namespace ripsmorse {

struct GraphEdge {
    int u = 0;
    int v = 0;
    Rational weight{1};
};

struct GraphSpec {
    int n = 0;
    std::vector<GraphEdge> edges;
};

// Finite metric space with exact rational distances, stored as int64
// numerators over one shared positive denominator so every comparison,
// diameter and sublevel test is a plain integer comparison.
//
// Graph-sourced spaces keep their adjacency: geodesics, defect profiling
// and edge-midpoint covering radii need it. Immutable after construction.
class FiniteMetricSpace {
public:
    static FiniteMetricSpace from_matrix(const std::vector<std::vector<Rational>>& d,
                                         std::optional<PointSet> orbit = std::nullopt);
    static FiniteMetricSpace from_graph(const GraphSpec& g,
                                        std::optional<PointSet> orbit = std::nullopt);

    int size() const { return n_; }
    long long denom() const { return denom_; }
    bool graph_source() const { return graph_flag_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    std::optional<PointSet> orbit() const { return orbit_; }
    PointSet all_points() const { return n_ == 32 ? ~PointSet{0} : (PointSet{1} << n_) - 1; }

    long long dist_num(int i, int j) const { return dist_[static_cast<size_t>(i) * n_ + j]; }
    Rational distance(int i, int j) const { return {dist_num(i, j), denom_}; }

    // Max pairwise distance numerator within S (0 for singletons).
    long long diam_num(PointSet s) const;
    Rational diam(PointSet s) const { return {diam_num(s), denom_}; }

    // Vertices v on some geodesic from x to y, i.e. d(x,v) + d(v,y) = d(x,y).
    // Includes x and y themselves.
    std::vector<int> between(int x, int y) const;

    // Successors of u on shortest paths toward target t (graph sources only).
    std::vector<int> geodesic_successors(int u, int t) const;

    // All geodesic vertex paths from x to y, enumerated as a deterministic
    // sample: ascending-neighbour DFS prefix plus descending-neighbour DFS
    // prefix, so the two extremal paths are always present. Total count of
    // geodesics is returned in `total` (saturating at cap_probe).
    std::vector<std::vector<int>> geodesic_sample(int x, int y, int max_paths,
                                                  long long* total = nullptr) const;

private:
    FiniteMetricSpace() = default;
    void validate() const;

    int n_ = 0;
    long long denom_ = 1;
    std::vector<long long> dist_;
    std::vector<GraphEdge> edges_;            // empty for matrix sources
    std::vector<std::vector<std::pair<int, long long>>> adj_; // neighbour, weight numerator
    bool graph_flag_ = false;
    std::optional<PointSet> orbit_;
};

// Covering radius of X0: max over ambient points (and, for graph sources,
// edge midpoints) of the distance to the nearest point of X0.
Rational covering_radius(const FiniteMetricSpace& space, PointSet x0);

} // namespace ripsmorse
