#pragma once

// Immutable finite simple graphs over opaque vertex ids.
//
// Vertices are kept sorted by id and adjacency is stored as one 64-bit row
// per vertex, indexed by the vertex's position in that order. Every derived
// ordering (components, witnesses, certificates) is therefore by ascending
// id, which keeps decompositions reproducible.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p5g/errors.hpp"

namespace p5g {

using Vertex = std::uint32_t;
using Mask = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

inline constexpr std::size_t kMaxVertices = 64;

inline VertexSet make_set(VertexSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline VertexSet make_set(std::initializer_list<Vertex> v) { return make_set(VertexSet(v)); }

inline VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

inline bool disjoint(const VertexSet& a, const VertexSet& b) { return intersect(a, b).empty(); }

inline Mask bit(std::size_t i) { return Mask{1} << i; }

inline std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

inline std::size_t count(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

template <class F>
void for_each_bit(Mask m, F&& f) {
    for (; m != 0; m &= m - 1) f(lowest(m));
}

class Graph {
public:
    Graph() = default;

    /// Builds a graph on `vertices`; every edge endpoint must be listed.
    /// Duplicate edges collapse, self-loops are rejected.
    static Graph from_edges(VertexSet vertices, const std::vector<Edge>& edges) {
        Graph g;
        g.ids_ = make_set(std::move(vertices));
        if (g.ids_.size() > kMaxVertices)
            throw PreconditionError("graph has more than 64 vertices");
        g.adj_.assign(g.ids_.size(), 0);
        for (auto [u, v] : edges) {
            if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
            std::size_t i = g.index_of(u), j = g.index_of(v);
            g.adj_[i] |= bit(j);
            g.adj_[j] |= bit(i);
        }
        return g;
    }

    /// Graph on vertices 0..n-1.
    static Graph on_range(std::size_t n, const std::vector<Edge>& edges) {
        VertexSet ids(n);
        for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<Vertex>(i);
        return from_edges(std::move(ids), edges);
    }

    /// Low-level constructor from index-space rows; rows must be symmetric
    /// and irreflexive over the sorted id list.
    static Graph from_rows(VertexSet ids, std::vector<Mask> rows) {
        Graph g;
        g.ids_ = std::move(ids);
        g.adj_ = std::move(rows);
        if (g.ids_.size() > kMaxVertices) throw PreconditionError("graph has more than 64 vertices");
        if (g.adj_.size() != g.ids_.size() || !std::is_sorted(g.ids_.begin(), g.ids_.end()) ||
            std::adjacent_find(g.ids_.begin(), g.ids_.end()) != g.ids_.end())
            throw PreconditionError("from_rows: ids must be strictly increasing and match rows");
        const Mask all = g.all();
        for (std::size_t i = 0; i < g.adj_.size(); ++i) {
            if ((g.adj_[i] & bit(i)) || (g.adj_[i] & ~all))
                throw PreconditionError("from_rows: row out of range or reflexive");
            for_each_bit(g.adj_[i], [&](std::size_t j) {
                if (!(g.adj_[j] & bit(i))) throw PreconditionError("from_rows: asymmetric rows");
            });
        }
        return g;
    }

    std::size_t order() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    const VertexSet& vertices() const noexcept { return ids_; }
    Vertex id(std::size_t i) const { return ids_[i]; }
    Mask row(std::size_t i) const { return adj_[i]; }
    Mask all() const noexcept { return ids_.size() == 64 ? ~Mask{0} : bit(ids_.size()) - 1; }

    bool has(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

    std::size_t index_of(Vertex v) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
        return static_cast<std::size_t>(it - ids_.begin());
    }

    bool adjacent(Vertex u, Vertex v) const { return (adj_[index_of(u)] & bit(index_of(v))) != 0; }

    std::size_t degree(Vertex v) const { return count(adj_[index_of(v)]); }

    Mask mask_of(const VertexSet& s) const {
        Mask m = 0;
        for (Vertex v : s) m |= bit(index_of(v));
        return m;
    }

    VertexSet set_of(Mask m) const {
        VertexSet out;
        out.reserve(count(m));
        for_each_bit(m, [&](std::size_t i) { out.push_back(ids_[i]); });
        return out;
    }

    VertexSet neighbors(Vertex v) const { return set_of(adj_[index_of(v)]); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < adj_.size(); ++i) {
            const Mask above = i + 1 >= 64 ? 0 : ~(bit(i + 1) - 1);
            for_each_bit(adj_[i] & above, [&](std::size_t j) { out.emplace_back(ids_[i], ids_[j]); });
        }
        return out;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (Mask r : adj_) twice += count(r);
        return twice / 2;
    }

    Vertex max_id() const { return ids_.empty() ? 0 : ids_.back(); }

    bool operator==(const Graph&) const = default;

private:
    VertexSet ids_;
    std::vector<Mask> adj_;
};

// ---------------------------------------------------------------------------
// Index-space helpers. A Mask is always relative to a specific host graph.

inline Mask anti_row(const Graph& g, std::size_t i) { return ~g.row(i) & g.all() & ~bit(i); }

inline bool is_clique(const Graph& g, Mask m) {
    bool ok = true;
    for_each_bit(m, [&](std::size_t i) { ok = ok && (m & ~bit(i) & ~g.row(i)) == 0; });
    return ok;
}

inline bool is_stable(const Graph& g, Mask m) {
    bool ok = true;
    for_each_bit(m, [&](std::size_t i) { ok = ok && (m & g.row(i)) == 0; });
    return ok;
}

/// Every vertex of `a` adjacent to every vertex of `b` (disjoint masks).
inline bool complete_to(const Graph& g, Mask a, Mask b) {
    bool ok = true;
    for_each_bit(a, [&](std::size_t i) { ok = ok && (b & ~g.row(i)) == 0; });
    return ok;
}

inline bool anticomplete_to(const Graph& g, Mask a, Mask b) {
    bool ok = true;
    for_each_bit(a, [&](std::size_t i) { ok = ok && (b & g.row(i)) == 0; });
    return ok;
}

inline bool mixed_on(const Graph& g, std::size_t v, Mask x) {
    Mask hit = g.row(v) & x;
    return hit != 0 && hit != x;
}

/// Vertex-sets of the components of G[within], ordered by least member.
inline std::vector<Mask> component_masks(const Graph& g, Mask within) {
    std::vector<Mask> out;
    Mask left = within;
    while (left) {
        Mask comp = bit(lowest(left)), frontier = comp;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](std::size_t i) { next |= g.row(i); });
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline std::vector<Mask> anti_component_masks(const Graph& g, Mask within) {
    std::vector<Mask> out;
    Mask left = within;
    while (left) {
        Mask comp = bit(lowest(left)), frontier = comp;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](std::size_t i) { next |= anti_row(g, i); });
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline bool is_connected(const Graph& g, Mask within) { return component_masks(g, within).size() <= 1; }

inline bool is_anti_connected(const Graph& g, Mask within) { return anti_component_masks(g, within).size() <= 1; }

// ---------------------------------------------------------------------------
// Whole-graph operations.

inline Graph complement(const Graph& g) {
    std::vector<Mask> rows(g.order());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = anti_row(g, i);
    return Graph::from_rows(g.vertices(), std::move(rows));
}

/// G[m] for an index-space mask; ids are preserved.
inline Graph induced(const Graph& g, Mask m) {
    VertexSet ids;
    std::vector<std::size_t> pos;
    for_each_bit(m, [&](std::size_t i) {
        ids.push_back(g.id(i));
        pos.push_back(i);
    });
    std::vector<Mask> rows(ids.size(), 0);
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = 0; b < pos.size(); ++b)
            if (g.row(pos[a]) & bit(pos[b])) rows[a] |= bit(b);
    return Graph::from_rows(std::move(ids), std::move(rows));
}

inline Graph induced(const Graph& g, const VertexSet& s) { return induced(g, g.mask_of(s)); }

inline Graph remove(const Graph& g, const VertexSet& s) { return induced(g, g.all() & ~g.mask_of(s)); }

inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    for (Mask m : component_masks(g, g.all())) out.push_back(g.set_of(m));
    return out;
}

inline std::vector<VertexSet> anti_components(const Graph& g) {
    std::vector<VertexSet> out;
    for (Mask m : anti_component_masks(g, g.all())) out.push_back(g.set_of(m));
    return out;
}

enum class Attachment { Complete, AntiComplete, Mixed };

inline Attachment mixed_status(const Graph& g, Vertex v, const VertexSet& x) {
    if (x.empty()) throw PreconditionError("mixed_status: empty set");
    if (contains(x, v)) throw PreconditionError("mixed_status: vertex belongs to the set");
    Mask xm = g.mask_of(x);
    Mask hit = g.row(g.index_of(v)) & xm;
    if (hit == xm) return Attachment::Complete;
    if (hit == 0) return Attachment::AntiComplete;
    return Attachment::Mixed;
}

enum class WitnessMode { ConnectedEdge, AntiConnectedNonEdge };

/// For v mixed on x, returns (x1, x2) with x1 ~ v, x2 !~ v, and x1x2 an edge
/// (ConnectedEdge) or a non-edge (AntiConnectedNonEdge). Lexicographically
/// least such pair.
inline std::pair<Vertex, Vertex> find_mixed_witness(const Graph& g, Vertex v, const VertexSet& x, WitnessMode mode) {
    if (x.empty() || contains(x, v)) throw PreconditionError("find_mixed_witness: bad vertex set");
    const Mask xm = g.mask_of(x);
    const std::size_t vi = g.index_of(v);
    if (!mixed_on(g, vi, xm)) throw PreconditionError("find_mixed_witness: vertex is not mixed on the set");
    if (mode == WitnessMode::ConnectedEdge ? !is_connected(g, xm) : !is_anti_connected(g, xm))
        throw PreconditionError("find_mixed_witness: set is not (anti-)connected");
    const Mask on = g.row(vi) & xm, off = xm & ~g.row(vi);
    for (Mask m = on; m; m &= m - 1) {
        std::size_t i = lowest(m);
        Mask partners = off & (mode == WitnessMode::ConnectedEdge ? g.row(i) : ~g.row(i));
        if (partners) return {g.id(i), g.id(lowest(partners))};
    }
    throw PreconditionError("find_mixed_witness: no witness (graph inconsistent)");
}

inline bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.row(g.index_of(v))); }

inline bool is_anti_simplicial(const Graph& g, Vertex v) {
    std::size_t i = g.index_of(v);
    return is_stable(g, anti_row(g, i));
}

struct SplitCert {
    VertexSet clique;
    VertexSet stable;
    bool operator==(const SplitCert&) const = default;
};

inline bool valid_split_cert(const Graph& g, const SplitCert& c) {
    if (!disjoint(c.clique, c.stable) || unite(c.clique, c.stable) != g.vertices()) return false;
    return is_clique(g, g.mask_of(c.clique)) && is_stable(g, g.mask_of(c.stable));
}

/// Degree-sequence splittance test. With degrees d1 >= ... >= dn and
/// m = max{i : d_i >= i-1}, G is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i,
/// and then the m highest-degree vertices form the clique side.
inline std::optional<SplitCert> split_certificate(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return count(g.row(a)) > count(g.row(b)); });
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (count(g.row(idx[i])) >= i) m = i + 1;
    std::size_t head = 0, tail = 0;
    for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += count(g.row(idx[i]));
    if (head != m * (m == 0 ? 0 : m - 1) + tail) return std::nullopt;
    Mask clique = 0;
    for (std::size_t i = 0; i < m; ++i) clique |= bit(idx[i]);
    SplitCert cert{g.set_of(clique), g.set_of(g.all() & ~clique)};
    if (!valid_split_cert(g, cert)) throw InternalStructureError("splittance identity held without a split partition");
    return cert;
}

inline bool is_split(const Graph& g) { return split_certificate(g).has_value(); }

/// 5 vertices, connected, every degree 2.
inline bool is_pentagon(const Graph& g) {
    if (g.order() != 5 || !is_connected(g, g.all())) return false;
    for (std::size_t i = 0; i < 5; ++i)
        if (count(g.row(i)) != 2) return false;
    return true;
}

/// Cyclic order of a pentagon, starting at its least id and continuing
/// toward the smaller of the two neighbours.
inline std::vector<Vertex> pentagon_order(const Graph& g) {
    if (!is_pentagon(g)) throw PreconditionError("pentagon_order: not a 5-cycle");
    std::vector<std::size_t> order{0};
    std::size_t prev = 0, cur = lowest(g.row(0));
    while (cur != 0) {
        order.push_back(cur);
        std::size_t next = lowest(g.row(cur) & ~bit(prev));
        prev = cur;
        cur = next;
    }
    std::vector<Vertex> out;
    for (std::size_t i : order) out.push_back(g.id(i));
    return out;
}

} // namespace p5g
