#pragma once

// Brute-force induced-pattern search. This is the ground truth every
// construction in the library is checked against, so it favours obviously
// correct enumeration over speed: positions of the pattern are filled one at
// a time in ascending host order, and each candidate set is narrowed by the
// exact adjacency the pattern demands toward earlier positions.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "p5g/graph.hpp"

namespace p5g {

enum class PatternKind { P5, House, C5, P4, H6 };

inline const char* to_string(PatternKind k) {
    switch (k) {
    case PatternKind::P5: return "P5";
    case PatternKind::House: return "house";
    case PatternKind::C5: return "C5";
    case PatternKind::P4: return "P4";
    case PatternKind::H6: return "H6";
    }
    return "?";
}

struct Pattern {
    std::size_t size;
    std::array<std::uint8_t, 6> adj; // adj[i] bit j: positions i and j adjacent
};

namespace detail {

constexpr Pattern pattern_from(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    Pattern p{n, {}};
    for (auto [a, b] : edges) {
        p.adj[a] |= static_cast<std::uint8_t>(1u << b);
        p.adj[b] |= static_cast<std::uint8_t>(1u << a);
    }
    return p;
}

constexpr Pattern complement_of(Pattern p) {
    for (std::size_t i = 0; i < p.size; ++i)
        p.adj[i] = static_cast<std::uint8_t>(~p.adj[i] & ((1u << p.size) - 1) & ~(1u << i));
    return p;
}

} // namespace detail

/// Fixed pattern adjacency. House is the complement of P5 on the same
/// positions, so a house p0-p1-p2-p3-p4 has p_i p_j non-adjacent iff |i-j| = 1.
/// H6 positions are v1..v6 with edges v1v2 v2v3 v3v4 v2v5 v3v6 v5v6.
constexpr Pattern pattern(PatternKind k) {
    switch (k) {
    case PatternKind::P5: return detail::pattern_from(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    case PatternKind::House:
        return detail::complement_of(detail::pattern_from(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    case PatternKind::C5: return detail::pattern_from(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    case PatternKind::P4: return detail::pattern_from(4, {{0, 1}, {1, 2}, {2, 3}});
    case PatternKind::H6: return detail::pattern_from(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {4, 5}});
    }
    return {};
}

struct PatternHit {
    PatternKind kind;
    std::vector<Vertex> embedding; // embedding[i] is the host vertex at pattern position i
    bool operator==(const PatternHit&) const = default;
};

/// True iff `embedding` induces exactly the pattern's edges in g.
inline bool embeds(const Graph& g, PatternKind kind, const std::vector<Vertex>& embedding) {
    const Pattern p = pattern(kind);
    if (embedding.size() != p.size) return false;
    for (std::size_t i = 0; i < p.size; ++i) {
        if (!g.has(embedding[i])) return false;
        for (std::size_t j = 0; j < p.size; ++j) {
            if (i == j) continue;
            if (embedding[i] == embedding[j]) return false;
            bool want = (p.adj[i] >> j) & 1u;
            if (g.adjacent(embedding[i], embedding[j]) != want) return false;
        }
    }
    return true;
}

/// Calls f(embedding-as-indices) for every induced embedding in ascending
/// lexicographic order of host indices; stops early when f returns true.
template <class F>
bool for_each_induced(const Graph& g, PatternKind kind, F&& f) {
    const Pattern p = pattern(kind);
    if (g.order() < p.size) return false;
    std::array<std::size_t, 6> emb{};
    auto rec = [&](auto&& self, std::size_t pos, Mask used) -> bool {
        if (pos == p.size) return f(emb);
        Mask cand = g.all() & ~used;
        for (std::size_t j = 0; j < pos; ++j)
            cand &= ((p.adj[pos] >> j) & 1u) ? g.row(emb[j]) : ~g.row(emb[j]);
        for (; cand; cand &= cand - 1) {
            emb[pos] = lowest(cand);
            if (self(self, pos + 1, used | bit(emb[pos]))) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

inline std::optional<PatternHit> find_induced(const Graph& g, PatternKind kind) {
    std::optional<PatternHit> hit;
    const std::size_t k = pattern(kind).size;
    for_each_induced(g, kind, [&](const std::array<std::size_t, 6>& emb) {
        PatternHit h{kind, {}};
        for (std::size_t i = 0; i < k; ++i) h.embedding.push_back(g.id(emb[i]));
        hit = std::move(h);
        return true;
    });
    return hit;
}

/// First forbidden pattern found, checked in the order P5, house, C5.
inline std::optional<PatternHit> class_witness(const Graph& g, bool triple) {
    for (PatternKind k : {PatternKind::P5, PatternKind::House, PatternKind::C5}) {
        if (k == PatternKind::C5 && !triple) break;
        if (auto hit = find_induced(g, k)) return hit;
    }
    return std::nullopt;
}

/// {P5, house}-free, or {P5, house, C5}-free when `triple` is set.
inline bool is_class_member(const Graph& g, bool triple) { return !class_witness(g, triple).has_value(); }

struct H6Hit {
    std::array<Vertex, 6> embedding; // v1..v6
    bool v1_simplicial = false;
    bool v4_simplicial = false;
    bool v2_anti_simplicial = false;
    bool v3_anti_simplicial = false;
    bool operator==(const H6Hit&) const = default;
};

/// Re-derives the decoration flags of an H6 embedding from the host.
inline H6Hit decorate_h6(const Graph& g, const std::array<Vertex, 6>& e) {
    return H6Hit{e, is_simplicial(g, e[0]), is_simplicial(g, e[3]), is_anti_simplicial(g, e[1]),
                 is_anti_simplicial(g, e[2])};
}

/// An induced H6 whose degree-one vertices are simplicial and with at least
/// one anti-simplicial degree-three vertex. The result is normalized so that
/// v2 is anti-simplicial, applying the automorphism (v1 v2 v5) <-> (v4 v3 v6)
/// when only v3 qualifies.
inline std::optional<H6Hit> find_special_h6(const Graph& g) {
    const std::size_t n = g.order();
    Mask simplicial = 0, anti_simplicial = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_clique(g, g.row(i))) simplicial |= bit(i);
        if (is_stable(g, anti_row(g, i))) anti_simplicial |= bit(i);
    }
    std::optional<H6Hit> out;
    for_each_induced(g, PatternKind::H6, [&](const std::array<std::size_t, 6>& e) {
        if (!(simplicial & bit(e[0])) || !(simplicial & bit(e[3]))) return false;
        bool a2 = anti_simplicial & bit(e[1]), a3 = anti_simplicial & bit(e[2]);
        if (!a2 && !a3) return false;
        std::array<Vertex, 6> emb;
        if (a2)
            emb = {g.id(e[0]), g.id(e[1]), g.id(e[2]), g.id(e[3]), g.id(e[4]), g.id(e[5])};
        else
            emb = {g.id(e[3]), g.id(e[2]), g.id(e[1]), g.id(e[0]), g.id(e[5]), g.id(e[4])};
        out = decorate_h6(g, emb);
        return true;
    });
    return out;
}

inline std::string describe(const PatternHit& hit) {
    std::string s = to_string(hit.kind);
    s += " at";
    for (Vertex v : hit.embedding) s += " " + std::to_string(v);
    return s;
}

} // namespace p5g
