#pragma once

// Homogeneous sets (modules), primality and substitution.

#include <optional>
#include <vector>

#include "p5g/graph.hpp"

namespace p5g {

/// A proper homogeneous set of some host graph: 2 <= |members| <= n-1 and no
/// outside vertex is mixed on it.
struct HomogeneousSet {
    VertexSet members;
    bool operator==(const HomogeneousSet&) const = default;
};

inline bool is_homogeneous(const Graph& g, Mask m) {
    const Mask outside = g.all() & ~m;
    bool ok = true;
    for_each_bit(outside, [&](std::size_t v) { ok = ok && !mixed_on(g, v, m); });
    return ok;
}

inline bool is_proper_homogeneous(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.has(v)) return false;
    if (s.size() < 2 || s.size() + 1 > g.order()) return false;
    return is_homogeneous(g, g.mask_of(s));
}

/// Smallest homogeneous set containing `seed`.
inline Mask module_closure(const Graph& g, Mask seed) {
    Mask m = seed;
    for (bool grew = true; grew;) {
        grew = false;
        Mask outside = g.all() & ~m;
        for_each_bit(outside, [&](std::size_t v) {
            if (mixed_on(g, v, m)) {
                m |= bit(v);
                grew = true;
            }
        });
    }
    return m;
}

namespace detail {

inline std::optional<Mask> largest_nontrivial(const std::vector<Mask>& parts) {
    std::optional<Mask> best;
    for (Mask p : parts)
        if (count(p) >= 2 && (!best || count(p) > count(*best))) best = p;
    return best;
}

} // namespace detail

/// A maximal proper homogeneous set, or nullopt when g is prime.
///
/// When g or its complement is disconnected the largest non-trivial
/// (anti-)component is returned; if all of them are single vertices, every
/// vertex but the last forms the module. Otherwise the maximal proper modules
/// partition V and the one containing u is the union of all proper pair
/// closures {u, w}; the largest of those is returned, ties by least member.
inline std::optional<HomogeneousSet> find_proper_homogeneous_set(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3) return std::nullopt;
    for (auto parts : {component_masks(g, g.all()), anti_component_masks(g, g.all())}) {
        if (parts.size() < 2) continue;
        if (auto best = detail::largest_nontrivial(parts)) return HomogeneousSet{g.set_of(*best)};
        return HomogeneousSet{g.set_of(g.all() & ~bit(n - 1))};
    }
    std::optional<Mask> best;
    Mask covered = 0;
    for (std::size_t u = 0; u < n; ++u) {
        if (covered & bit(u)) continue;
        Mask maximal = bit(u);
        for (std::size_t w = 0; w < n; ++w) {
            if (w == u) continue;
            Mask c = module_closure(g, bit(u) | bit(w));
            if (c != g.all()) maximal |= c;
        }
        covered |= maximal;
        if (count(maximal) >= 2 && (!best || count(maximal) > count(*best))) best = maximal;
    }
    if (!best) return std::nullopt;
    return HomogeneousSet{g.set_of(*best)};
}

inline bool is_prime(const Graph& g) { return !find_proper_homogeneous_set(g).has_value(); }

/// Substitutes g1 for u in g2. The vertex sets may share only u itself.
inline Graph substitute(const Graph& g1, const Graph& g2, Vertex u) {
    if (!g2.has(u)) throw PreconditionError("substitute: vertex " + std::to_string(u) + " not in host");
    const VertexSet rest = minus(g2.vertices(), {u});
    if (!disjoint(g1.vertices(), rest)) throw PreconditionError("substitute: vertex sets overlap");
    std::vector<Edge> edges = g1.edges();
    for (auto [x, y] : g2.edges()) {
        if (x != u && y != u) {
            edges.emplace_back(x, y);
            continue;
        }
        Vertex other = x == u ? y : x;
        for (Vertex w : g1.vertices()) edges.emplace_back(other, w);
    }
    return Graph::from_edges(unite(g1.vertices(), rest), edges);
}

struct QuotientFactor {
    Graph child;    // G[members]
    Graph quotient; // members collapsed onto `marker`
    Vertex marker;  // least member id
};

inline QuotientFactor quotient_factor(const Graph& g, const HomogeneousSet& h) {
    if (!is_proper_homogeneous(g, h.members)) throw PreconditionError("quotient_factor: not a proper homogeneous set");
    const Vertex marker = h.members.front();
    return {induced(g, h.members), remove(g, minus(h.members, {marker})), marker};
}

} // namespace p5g
