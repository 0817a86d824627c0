#pragma once

// Skew-partitions of prime, non-split {P5, house, C5}-free graphs: the
// H6-driven construction, greedy maximization into a usable skew-partition,
// the six-part decomposition, and the two-case classification that feeds the
// split graph divide.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "p5g/graph.hpp"
#include "p5g/modular.hpp"
#include "p5g/oracle.hpp"

namespace p5g {

/// G[x] disconnected, G[y] not anti-connected, x and y partition V.
struct SkewPartition {
    VertexSet x;
    VertexSet y;
    bool operator==(const SkewPartition&) const = default;
};

inline bool is_skew_partition(const Graph& g, const SkewPartition& sp) {
    if (sp.x.empty() || sp.y.empty() || !disjoint(sp.x, sp.y) || unite(sp.x, sp.y) != g.vertices()) return false;
    return !is_connected(g, g.mask_of(sp.x)) && !is_anti_connected(g, g.mask_of(sp.y));
}

inline std::size_t nontrivial_components(const Graph& g, Mask m) {
    std::size_t k = 0;
    for (Mask c : component_masks(g, m)) k += count(c) >= 2;
    return k;
}

inline std::size_t nontrivial_anti_components(const Graph& g, Mask m) {
    std::size_t k = 0;
    for (Mask c : anti_component_masks(g, m)) k += count(c) >= 2;
    return k;
}

/// ({X_i}, {Y_j}, S, K, {S_j}, {K_i}) of a skew-partition (X, Y).
struct SkewDecomposition {
    std::vector<VertexSet> x_parts; // non-trivial components of G[X]
    std::vector<VertexSet> y_parts; // non-trivial anti-components of G[Y]
    VertexSet s;                    // X minus the x_parts, a stable set
    VertexSet k;                    // Y minus the y_parts, a clique
    std::vector<VertexSet> s_mixed; // s_mixed[j]: vertices of S mixed on Y_j
    std::vector<VertexSet> k_mixed; // k_mixed[i]: vertices of K mixed on X_i
    bool operator==(const SkewDecomposition&) const = default;
};

inline VertexSet x_side(const SkewDecomposition& d) {
    VertexSet x = d.s;
    for (const auto& p : d.x_parts) x = unite(x, p);
    return x;
}

inline VertexSet y_side(const SkewDecomposition& d) {
    VertexSet y = d.k;
    for (const auto& p : d.y_parts) y = unite(y, p);
    return y;
}

// ---------------------------------------------------------------------------
// Attachment of outside vertices to an induced three-edge path a-b-c-d.

struct AttachmentClasses {
    VertexSet clone_a; // adjacent to b only among {b, c, d}
    VertexSet clone_b; // adjacent to a and c, not d
    VertexSet clone_c; // adjacent to b and d, not a
    VertexSet clone_d; // adjacent to c only among {a, b, c}
    VertexSet a_set;   // anti-complete to {a, b, c, d}
    VertexSet b_set;   // complete to {b, c}, anti-complete to {a, d}
    VertexSet c_set;   // complete to {a, b, c, d}
    bool operator==(const AttachmentClasses&) const = default;
};

class UnclassifiableVertex : public Error {
public:
    explicit UnclassifiableVertex(Vertex v)
        : Error("vertex " + std::to_string(v) + " attaches to the path in no admissible way"), vertex_(v) {}
    Vertex vertex() const noexcept { return vertex_; }

private:
    Vertex vertex_;
};

inline AttachmentClasses attachment_classes(const Graph& g, const std::array<Vertex, 4>& path) {
    if (!embeds(g, PatternKind::P4, {path.begin(), path.end()}))
        throw PreconditionError("attachment_classes: not an induced three-edge path");
    std::array<std::size_t, 4> at{};
    Mask on_path = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        at[i] = g.index_of(path[i]);
        on_path |= bit(at[i]);
    }
    AttachmentClasses out;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (on_path & bit(v)) continue;
        // signature bit i set iff v is adjacent to path[i]
        unsigned sig = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (g.row(v) & bit(at[i])) sig |= 1u << i;
        const bool a = sig & 1u, b = sig & 2u, c = sig & 4u, d = sig & 8u;
        VertexSet* cls = nullptr;
        if (b && !c && !d) cls = &out.clone_a;
        else if (a && c && !d) cls = &out.clone_b;
        else if (!a && b && d) cls = &out.clone_c;
        else if (!a && !b && c) cls = &out.clone_d;
        else if (sig == 0) cls = &out.a_set;
        else if (!a && b && c && !d) cls = &out.b_set;
        else if (sig == 15u) cls = &out.c_set;
        if (!cls) throw UnclassifiableVertex(g.id(v));
        cls->push_back(g.id(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Skew-partition from a decorated H6.

/// Where the decorated H6 was found relative to the graph being split.
enum class HitLocation { InGraph, InComplement };

namespace detail {

// The decorated H6 lives in the complement of g. Returns (X, Y) with G[X]
// having at least two non-trivial components.
inline SkewPartition skew_from_complement_hit(const Graph& g, const H6Hit& raw) {
    const Graph co = complement(g);
    for (Vertex v : raw.embedding)
        if (!g.has(v)) throw ConstructionFailed("H6 hit uses a vertex outside the graph");
    if (!embeds(co, PatternKind::H6, {raw.embedding.begin(), raw.embedding.end()}))
        throw ConstructionFailed("hit is not an induced H6 of the complement");
    H6Hit hit = decorate_h6(co, raw.embedding);
    if (!hit.v1_simplicial || !hit.v4_simplicial || (!hit.v2_anti_simplicial && !hit.v3_anti_simplicial))
        throw ConstructionFailed("H6 hit lacks the simplicial/anti-simplicial decoration");
    if (!hit.v2_anti_simplicial) {
        const auto& e = hit.embedding;
        hit = decorate_h6(co, {e[3], e[2], e[1], e[0], e[5], e[4]});
    }
    const auto& e = hit.embedding;
    // In g: a simplicial, b and c anti-simplicial, a-b-c-d an induced path,
    // b' complete to {a,b,c} and c' complete to {b,c,d}.
    const Vertex a = e[1], b = e[3], c = e[0], d = e[2], b_prime = e[5], c_prime = e[4];
    if (!embeds(g, PatternKind::P4, {a, b, c, d})) throw ConstructionFailed("a-b-c-d is not an induced path");

    AttachmentClasses cls;
    try {
        cls = attachment_classes(g, {a, b, c, d});
    } catch (const UnclassifiableVertex& ex) {
        throw ConstructionFailed(std::string("attachment: ") + ex.what());
    }
    if (!contains(cls.clone_b, b_prime) || !contains(cls.clone_c, c_prime))
        throw ConstructionFailed("b'/c' are not clones of b/c");

    const Mask cc = g.mask_of(cls.clone_c);
    Vertex b1 = cls.clone_b.front();
    std::size_t fewest = count(g.row(g.index_of(b1)) & cc);
    for (Vertex v : cls.clone_b) {
        std::size_t k = count(g.row(g.index_of(v)) & cc);
        if (k < fewest) fewest = k, b1 = v;
    }
    const Mask n_set = g.row(g.index_of(b1)) & cc;
    Mask y = g.mask_of(cls.c_set) | n_set | (g.mask_of(cls.clone_b) & ~bit(g.index_of(b1))) |
             bit(g.index_of(b)) | bit(g.index_of(c));
    SkewPartition sp{g.set_of(g.all() & ~y), g.set_of(y)};
    if (!is_skew_partition(g, sp) || nontrivial_components(g, g.all() & ~y) < 2)
        throw ConstructionFailed("constructed (X, Y) is not a skew-partition with two non-trivial components");
    return sp;
}

} // namespace detail

/// Skew-partition of a prime, non-split {P5, house, C5}-free graph from a
/// decorated H6. With the hit in the complement, G[X] gets at least two
/// non-trivial components; with the hit in g itself the construction runs in
/// the complement and the sides are swapped, so G[Y] gets at least two
/// non-trivial anti-components.
inline SkewPartition skew_from_special_h6(const Graph& g, const H6Hit& hit, HitLocation where) {
    if (is_split(g)) throw PreconditionError("skew_from_special_h6: graph is split");
    if (!is_prime(g)) throw PreconditionError("skew_from_special_h6: graph is not prime");
    if (where == HitLocation::InComplement) return detail::skew_from_complement_hit(g, hit);
    SkewPartition flipped = detail::skew_from_complement_hit(complement(g), hit);
    SkewPartition sp{flipped.y, flipped.x};
    if (!is_skew_partition(g, sp) || nontrivial_anti_components(g, g.mask_of(sp.y)) < 2)
        throw ConstructionFailed("mirrored partition lost its two non-trivial anti-components");
    return sp;
}

// ---------------------------------------------------------------------------

inline bool has_two_nontrivial_x(const Graph& g, const SkewPartition& sp) {
    return is_skew_partition(g, sp) && nontrivial_components(g, g.mask_of(sp.x)) >= 2;
}

/// Grows X one vertex at a time (ascending id, restarting after every
/// accepted move) while (X, V - X) stays a skew-partition with at least two
/// non-trivial components in G[X].
inline SkewPartition maximize_skew(const Graph& g, SkewPartition sp) {
    if (!has_two_nontrivial_x(g, sp))
        throw PreconditionError("maximize_skew: G[X] needs two non-trivial components");
    for (bool moved = true; moved;) {
        moved = false;
        for (Vertex v : sp.y) {
            SkewPartition next{unite(sp.x, {v}), minus(sp.y, {v})};
            if (has_two_nontrivial_x(g, next)) {
                sp = std::move(next);
                moved = true;
                break;
            }
        }
    }
    return sp;
}

inline SkewDecomposition decompose_skew(const Graph& g, const SkewPartition& sp) {
    if (!is_skew_partition(g, sp)) throw PreconditionError("decompose_skew: not a skew-partition");
    const Mask x = g.mask_of(sp.x), y = g.mask_of(sp.y);
    SkewDecomposition d;
    Mask s = 0, k = 0;
    std::vector<Mask> xs, ys;
    for (Mask c : component_masks(g, x)) {
        if (count(c) >= 2) xs.push_back(c);
        else s |= c;
    }
    for (Mask c : anti_component_masks(g, y)) {
        if (count(c) >= 2) ys.push_back(c);
        else k |= c;
    }
    if (!is_stable(g, s) || !is_clique(g, k))
        throw InternalStructureError("decompose_skew: S not stable or K not a clique");
    for (Mask c : xs) d.x_parts.push_back(g.set_of(c));
    for (Mask c : ys) d.y_parts.push_back(g.set_of(c));
    d.s = g.set_of(s);
    d.k = g.set_of(k);
    for (Mask yj : ys) {
        Mask sj = 0;
        for_each_bit(s, [&](std::size_t v) { sj |= mixed_on(g, v, yj) ? bit(v) : 0; });
        d.s_mixed.push_back(g.set_of(sj));
    }
    for (Mask xi : xs) {
        Mask ki = 0;
        for_each_bit(k, [&](std::size_t v) { ki |= mixed_on(g, v, xi) ? bit(v) : 0; });
        d.k_mixed.push_back(g.set_of(ki));
    }
    return d;
}

// ---------------------------------------------------------------------------
// Usable skew-partitions.

namespace detail {

inline bool pairwise_disjoint(const std::vector<VertexSet>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!disjoint(sets[i], sets[j])) return false;
    return true;
}

} // namespace detail

/// (a): m >= 2, {S_j} and {K_i} pairwise disjoint, every vertex of Y has a
/// neighbour in each X_i.
inline bool usable_a(const Graph& g, const SkewDecomposition& d) {
    if (d.x_parts.size() < 2 || !detail::pairwise_disjoint(d.s_mixed) || !detail::pairwise_disjoint(d.k_mixed))
        return false;
    const Mask y = g.mask_of(y_side(d));
    for (const auto& xi : d.x_parts) {
        const Mask xm = g.mask_of(xi);
        bool ok = true;
        for_each_bit(y, [&](std::size_t v) { ok = ok && (g.row(v) & xm) != 0; });
        if (!ok) return false;
    }
    return true;
}

/// (b): n >= 2, {S_j} and {K_i} pairwise disjoint, every vertex of X has a
/// non-neighbour in each Y_j.
inline bool usable_b(const Graph& g, const SkewDecomposition& d) {
    if (d.y_parts.size() < 2 || !detail::pairwise_disjoint(d.s_mixed) || !detail::pairwise_disjoint(d.k_mixed))
        return false;
    const Mask x = g.mask_of(x_side(d));
    for (const auto& yj : d.y_parts) {
        const Mask ym = g.mask_of(yj);
        bool ok = true;
        for_each_bit(x, [&](std::size_t v) { ok = ok && (ym & ~g.row(v)) != 0; });
        if (!ok) return false;
    }
    return true;
}

/// Component-side case. Holds when m >= 1; the K_i are non-empty and
/// pairwise disjoint; no vertex of Y - K_i is mixed on X_i; for every i at
/// least two vertices outside X_i and S are anti-complete to X_i; and some
/// K_i is complete to X - (X_i + S). Returns the least such i (0-based).
inline std::optional<std::size_t> case3_index(const Graph& g, const SkewDecomposition& d) {
    const std::size_t m = d.x_parts.size();
    if (m < 1) return std::nullopt;
    for (const auto& ki : d.k_mixed)
        if (ki.empty()) return std::nullopt;
    if (!detail::pairwise_disjoint(d.k_mixed)) return std::nullopt;
    const Mask x = g.mask_of(x_side(d)), y = g.mask_of(y_side(d)), s = g.mask_of(d.s);
    for (std::size_t i = 0; i < m; ++i) {
        const Mask xi = g.mask_of(d.x_parts[i]);
        bool ok = true;
        for_each_bit(y & ~g.mask_of(d.k_mixed[i]), [&](std::size_t v) { ok = ok && !mixed_on(g, v, xi); });
        if (!ok) return std::nullopt;
        std::size_t anti = 0;
        for_each_bit(g.all() & ~(xi | s), [&](std::size_t v) { anti += (g.row(v) & xi) == 0; });
        if (anti < 2) return std::nullopt;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Mask rest = x & ~(g.mask_of(d.x_parts[i]) | s);
        if (complete_to(g, g.mask_of(d.k_mixed[i]), rest)) return i;
    }
    return std::nullopt;
}

/// Anti-component-side case, the complement-dual of case3_index. Holds when
/// n >= 1; the S_j are non-empty and pairwise disjoint; no vertex of X - S_j
/// is mixed on Y_j; for every j at least two vertices outside Y_j and K are
/// complete to Y_j; and some S_j (j ranging over the anti-components) is
/// anti-complete to Y - (Y_j + K). Returns the least such j (0-based).
inline std::optional<std::size_t> case4_index(const Graph& g, const SkewDecomposition& d) {
    const std::size_t n = d.y_parts.size();
    if (n < 1) return std::nullopt;
    for (const auto& sj : d.s_mixed)
        if (sj.empty()) return std::nullopt;
    if (!detail::pairwise_disjoint(d.s_mixed)) return std::nullopt;
    const Mask x = g.mask_of(x_side(d)), y = g.mask_of(y_side(d)), k = g.mask_of(d.k);
    for (std::size_t j = 0; j < n; ++j) {
        const Mask yj = g.mask_of(d.y_parts[j]);
        bool ok = true;
        for_each_bit(x & ~g.mask_of(d.s_mixed[j]), [&](std::size_t v) { ok = ok && !mixed_on(g, v, yj); });
        if (!ok) return std::nullopt;
        std::size_t full = 0;
        for_each_bit(g.all() & ~(yj | k), [&](std::size_t v) { full += (yj & ~g.row(v)) == 0; });
        if (full < 2) return std::nullopt;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Mask rest = y & ~(g.mask_of(d.y_parts[j]) | k);
        if (anticomplete_to(g, g.mask_of(d.s_mixed[j]), rest)) return j;
    }
    return std::nullopt;
}

enum class UsableTag { Case3, Case4 };

struct UsableCase {
    UsableTag tag;
    SkewDecomposition decomposition;
    std::size_t special_index; // 0-based index returned by case3_index / case4_index
};

/// Case3 is preferred when both hold.
inline UsableCase classify_usable(const Graph& g, const SkewDecomposition& d) {
    if (auto i = case3_index(g, d)) return {UsableTag::Case3, d, *i};
    if (auto j = case4_index(g, d)) return {UsableTag::Case4, d, *j};
    throw NeitherCaseHolds("skew decomposition satisfies neither the component-side nor the anti-component-side case");
}

} // namespace p5g
