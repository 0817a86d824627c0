#pragma once

// Split graph divides (A, B, C, L, T), composable pairs, split graph
// unification, and factoring a divided graph into its composable pair.

#include <optional>
#include <string>
#include <vector>

#include "p5g/graph.hpp"
#include "p5g/skew.hpp"

namespace p5g {

struct SplitGraphDivide {
    VertexSet a, b, c, l, t;
    bool operator==(const SplitGraphDivide&) const = default;
};

/// Roles of a composable pair. g1 lives on A + L + T + {marker_c}, g2 on
/// B + C + L + T + {marker_a}.
struct PairRoles {
    VertexSet a, b, c, l, t;
    Vertex marker_a = 0;
    Vertex marker_c = 0;
    bool operator==(const PairRoles&) const = default;
};

struct ComposablePair {
    Graph g1;
    Graph g2;
    PairRoles roles;
};

/// First violated divide condition, or nullopt when d is a split graph divide of g.
inline std::optional<std::string> divide_violation(const Graph& g, const SplitGraphDivide& d) {
    const std::vector<const VertexSet*> parts{&d.a, &d.b, &d.c, &d.l, &d.t};
    VertexSet all;
    std::size_t total = 0;
    for (const VertexSet* p : parts) {
        for (Vertex v : *p)
            if (!g.has(v)) return "role vertex " + std::to_string(v) + " not in graph";
        all = unite(all, *p);
        total += p->size();
    }
    if (all != g.vertices() || total != g.order()) return "roles do not partition V";
    if (d.a.size() < 2) return "|A| < 2";
    if (d.c.size() < 2) return "|C| < 2";
    const Mask a = g.mask_of(d.a), b = g.mask_of(d.b), c = g.mask_of(d.c), l = g.mask_of(d.l), t = g.mask_of(d.t);
    if (l == 0 || !is_clique(g, l)) return "L is not a non-empty clique";
    if (!is_stable(g, t)) return "T is not stable";
    bool mixed = true;
    for_each_bit(l, [&](std::size_t v) { mixed = mixed && mixed_on(g, v, a); });
    if (!mixed) return "some vertex of L is not mixed on A";
    if (!complete_to(g, a, b)) return "A is not complete to B";
    if (!anticomplete_to(g, a, c | t)) return "A is not anti-complete to C + T";
    if (!complete_to(g, l, b | c)) return "L is not complete to B + C";
    if (!anticomplete_to(g, t, c)) return "T is not anti-complete to C";
    return std::nullopt;
}

inline bool validate_divide(const Graph& g, const SplitGraphDivide& d) { return !divide_violation(g, d); }

/// First violated composable-pair condition, or nullopt.
inline std::optional<std::string> pair_violation(const ComposablePair& p) {
    const PairRoles& r = p.roles;
    const std::vector<const VertexSet*> parts{&r.a, &r.b, &r.c, &r.l, &r.t};
    VertexSet all;
    std::size_t total = 0;
    for (const VertexSet* s : parts) {
        all = unite(all, *s);
        total += s->size();
    }
    if (all.size() != total) return "role sets are not pairwise disjoint";
    if (r.marker_a == r.marker_c) return "markers a and c coincide";
    if (contains(all, r.marker_a) || contains(all, r.marker_c)) return "a marker lies in a role set";
    if (r.a.empty()) return "A is empty";
    if (r.c.empty()) return "C is empty";
    if (p.g1.vertices() != unite(unite(r.a, r.l), unite(r.t, {r.marker_c})))
        return "V(G1) is not A + L + T + {c}";
    if (p.g2.vertices() != unite(unite(unite(r.b, r.c), unite(r.l, r.t)), {r.marker_a}))
        return "V(G2) is not B + C + L + T + {a}";

    const Graph& g1 = p.g1;
    const Mask a1 = g1.mask_of(r.a), l1 = g1.mask_of(r.l), t1 = g1.mask_of(r.t), c1 = g1.mask_of({r.marker_c});
    if (!is_clique(g1, l1)) return "L is not a clique in G1";
    if (!is_stable(g1, t1)) return "T is not stable in G1";
    if (!anticomplete_to(g1, a1, t1)) return "A is not anti-complete to T in G1";
    if (!complete_to(g1, c1, l1)) return "c is not complete to L in G1";
    if (!anticomplete_to(g1, c1, a1 | t1)) return "c is not anti-complete to A + T in G1";

    const Graph& g2 = p.g2;
    if (induced(g2, unite(r.l, r.t)) != induced(g1, unite(r.l, r.t))) return "G2[L + T] differs from G1[L + T]";
    const Mask b2 = g2.mask_of(r.b), c2 = g2.mask_of(r.c), l2 = g2.mask_of(r.l), t2 = g2.mask_of(r.t),
               a2 = g2.mask_of({r.marker_a});
    if (!anticomplete_to(g2, t2, c2)) return "T is not anti-complete to C in G2";
    if (!complete_to(g2, l2, b2 | c2)) return "L is not complete to B + C in G2";
    if (!complete_to(g2, a2, b2)) return "a is not complete to B in G2";
    if (!anticomplete_to(g2, a2, c2 | l2 | t2)) return "a is not anti-complete to C + L + T in G2";
    return std::nullopt;
}

/// Split graph unification: G[A+L+T] = G1 - c, G[B+C+L+T] = G2 - a, A complete
/// to B and anti-complete to C.
inline Graph unify(const ComposablePair& p) {
    if (auto why = pair_violation(p)) throw InvalidPair(*why);
    const PairRoles& r = p.roles;
    std::vector<Edge> edges;
    for (auto e : p.g1.edges())
        if (e.first != r.marker_c && e.second != r.marker_c) edges.push_back(e);
    for (auto e : p.g2.edges())
        if (e.first != r.marker_a && e.second != r.marker_a) edges.push_back(e);
    for (Vertex x : r.a)
        for (Vertex y : r.b) edges.emplace_back(x, y);
    VertexSet all = unite(unite(unite(r.a, r.b), unite(r.c, r.l)), r.t);
    return Graph::from_edges(std::move(all), edges);
}

/// G1 = G[A+L+T] plus a fresh c complete to L; G2 = G[B+C+L+T] plus a fresh a
/// complete to B. Fresh ids are max(V)+1 (a) and max(V)+2 (c).
inline ComposablePair factor(const Graph& g, const SplitGraphDivide& d) {
    if (auto why = divide_violation(g, d)) throw DivideInvalid(*why);
    ComposablePair p;
    p.roles = {d.a, d.b, d.c, d.l, d.t, g.max_id() + 1, g.max_id() + 2};
    const Vertex a = p.roles.marker_a, c = p.roles.marker_c;

    const VertexSet side1 = unite(unite(d.a, d.l), d.t);
    std::vector<Edge> e1 = induced(g, side1).edges();
    for (Vertex v : d.l) e1.emplace_back(c, v);
    p.g1 = Graph::from_edges(unite(side1, {c}), e1);

    const VertexSet side2 = unite(unite(d.b, d.c), unite(d.l, d.t));
    std::vector<Edge> e2 = induced(g, side2).edges();
    for (Vertex v : d.b) e2.emplace_back(a, v);
    p.g2 = Graph::from_edges(unite(side2, {a}), e2);
    return p;
}

/// Divide from a component-side usable case, with X_i := the special
/// component: A = X_i; B = vertices of Y complete to X_i; C = the other
/// non-trivial components, the vertices of Y anti-complete to X_i and the
/// vertices of S complete to K_i; L = K_i; T = vertices of S with a
/// non-neighbour in K_i.
inline SplitGraphDivide build_divide(const Graph& g, const UsableCase& uc) {
    if (uc.tag != UsableTag::Case3) throw PreconditionError("build_divide: needs the component-side case");
    const SkewDecomposition& d = uc.decomposition;
    if (uc.special_index >= d.x_parts.size()) throw PreconditionError("build_divide: special index out of range");
    const std::size_t i = uc.special_index;
    const Mask xi = g.mask_of(d.x_parts[i]), ki = g.mask_of(d.k_mixed[i]), s = g.mask_of(d.s);
    const Mask y = g.mask_of(y_side(d));

    Mask b = 0, c = 0, t = 0;
    for_each_bit(y, [&](std::size_t v) {
        if ((xi & ~g.row(v)) == 0) b |= bit(v);
        else if ((xi & g.row(v)) == 0) c |= bit(v);
    });
    for (std::size_t j = 0; j < d.x_parts.size(); ++j)
        if (j != i) c |= g.mask_of(d.x_parts[j]);
    for_each_bit(s, [&](std::size_t v) {
        if ((ki & ~g.row(v)) == 0) c |= bit(v);
        else t |= bit(v);
    });
    SplitGraphDivide out{g.set_of(xi), g.set_of(b), g.set_of(c), g.set_of(ki), g.set_of(t)};
    if (auto why = divide_violation(g, out)) throw DivideInvalid(*why);
    return out;
}

} // namespace p5g
