#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ripsmorse {

// A subset of the point set {0..n-1}, n <= 20, encoded as a bitmask.
using PointSet = std::uint32_t;

inline int card(PointSet s) { return std::popcount(s); }

inline bool contains(PointSet s, int p) { return (s >> p) & 1u; }

inline bool subset_of(PointSet a, PointSet b) { return (a & ~b) == 0; }

inline std::vector<int> elements(PointSet s) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(card(s)));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

inline PointSet set_of(std::initializer_list<int> pts) {
    PointSet s = 0;
    for (int p : pts) s |= PointSet{1} << p;
    return s;
}

inline PointSet set_of(const std::vector<int>& pts) {
    PointSet s = 0;
    for (int p : pts) s |= PointSet{1} << p;
    return s;
}

// g . S = { g(x) : x in S } for a permutation given as an image table.
inline PointSet apply_perm(const std::vector<int>& perm, PointSet s) {
    PointSet out = 0;
    while (s) {
        out |= PointSet{1} << perm[std::countr_zero(s)];
        s &= s - 1;
    }
    return out;
}

// Canonical report order: by cardinality, then lexicographically on the
// sorted element list (i.e. lowest differing point decides).
inline bool canonical_less(PointSet a, PointSet b) {
    int ca = card(a), cb = card(b);
    if (ca != cb) return ca < cb;
    if (a == b) return false;
    PointSet diff = a ^ b;
    PointSet low = diff & (~diff + 1);
    return (a & low) != 0;
}

inline std::string set_label(PointSet s) {
    std::string out = "{";
    bool first = true;
    for (int p : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace ripsmorse
