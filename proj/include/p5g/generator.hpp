#pragma once

// Seeded synthesis of class members by running the decomposition grammar
// forwards. Every output comes with the tree that builds it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "p5g/decompose.hpp"
#include "p5g/divide.hpp"
#include "p5g/graph.hpp"
#include "p5g/modular.hpp"

namespace p5g {

using Rng = std::mt19937_64;

struct GenConfig {
    std::uint64_t seed = 1;
    int max_depth = 3;
    std::size_t leaf_min = 1;
    std::size_t leaf_max = 5;
    // split leaf, pentagon leaf, substitution, unification, co-unification
    std::array<double, 5> weights{3, 1, 2, 2, 2};
    std::size_t max_vertices = 40;
    std::size_t min_vertices = 0;
};

struct Generated {
    Graph graph;
    DecompTree tree;
};

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }

/// Split graph whose first k ids form the clique and the rest the stable
/// side; each clique-stable edge is present with probability 1/2.
inline std::pair<Graph, SplitCert> random_split_graph(Rng& rng, const VertexSet& ids, std::size_t k) {
    if (k > ids.size()) throw PreconditionError("random_split_graph: clique larger than the vertex set");
    VertexSet clique(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k));
    VertexSet stable(ids.begin() + static_cast<std::ptrdiff_t>(k), ids.end());
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
    for (Vertex u : clique)
        for (Vertex v : stable)
            if (coin(rng)) edges.emplace_back(u, v);
    return {Graph::from_edges(ids, edges), SplitCert{make_set(clique), make_set(stable)}};
}

/// Same with the clique size drawn uniformly from 0..|ids|.
inline std::pair<Graph, SplitCert> random_split_graph(Rng& rng, const VertexSet& ids) {
    return random_split_graph(rng, ids, uniform(rng, 0, ids.size()));
}

/// Split graph on vertices 0..n-1 with n drawn from [lo, hi].
inline std::pair<Graph, SplitCert> random_split_graph(Rng& rng, std::size_t lo, std::size_t hi) {
    VertexSet ids(uniform(rng, lo, hi));
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Vertex>(i);
    return random_split_graph(rng, ids);
}

/// A composable pair straight from the definition, with arbitrary random
/// graphs on A, B, C and part sizes in [1, max_part] (L, T, B may be empty).
inline ComposablePair random_composable_pair(Rng& rng, std::size_t max_part) {
    Vertex next = 0;
    auto fresh = [&](std::size_t n) {
        VertexSet s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(next++);
        return s;
    };
    PairRoles r;
    r.a = fresh(uniform(rng, 1, max_part));
    r.b = fresh(uniform(rng, 0, max_part));
    r.c = fresh(uniform(rng, 1, max_part));
    r.l = fresh(uniform(rng, 0, max_part));
    r.t = fresh(uniform(rng, 0, max_part));
    r.marker_a = next++;
    r.marker_c = next++;

    auto random_inside = [&](const VertexSet& s, std::vector<Edge>& e) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (coin(rng)) e.emplace_back(s[i], s[j]);
    };
    auto random_between = [&](const VertexSet& s, const VertexSet& t, std::vector<Edge>& e) {
        for (Vertex u : s)
            for (Vertex v : t)
                if (coin(rng)) e.emplace_back(u, v);
    };
    auto all_between = [](const VertexSet& s, const VertexSet& t, std::vector<Edge>& e) {
        for (Vertex u : s)
            for (Vertex v : t) e.emplace_back(u, v);
    };

    std::vector<Edge> shared; // G[L + T]
    for (std::size_t i = 0; i < r.l.size(); ++i)
        for (std::size_t j = i + 1; j < r.l.size(); ++j) shared.emplace_back(r.l[i], r.l[j]);
    random_between(r.l, r.t, shared);

    std::vector<Edge> e1 = shared;
    random_inside(r.a, e1);
    random_between(r.a, r.l, e1);
    all_between({r.marker_c}, r.l, e1);

    std::vector<Edge> e2 = shared;
    random_inside(r.b, e2);
    random_inside(r.c, e2);
    random_between(r.b, r.c, e2);
    random_between(r.b, r.t, e2);
    all_between(r.l, unite(r.b, r.c), e2);
    all_between({r.marker_a}, r.b, e2);

    ComposablePair p;
    p.g1 = Graph::from_edges(unite(unite(r.a, r.l), unite(r.t, {r.marker_c})), e1);
    p.g2 = Graph::from_edges(unite(unite(unite(r.b, r.c), unite(r.l, r.t)), {r.marker_a}), e2);
    p.roles = std::move(r);
    return p;
}

namespace detail {

class TreeGenerator {
public:
    explicit TreeGenerator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

    Generated run() {
        for (int attempt = 0; attempt < 64; ++attempt) {
            next_ = 0;
            Generated out = node(0, 1, cfg_.max_vertices);
            if (out.graph.order() < cfg_.min_vertices) continue;
            const auto f = canonical_labels(out.tree, out.graph);
            return {relabel(out.graph, f), relabel_tree(out.tree, f)};
        }
        throw GenerationExhausted("no tree reached the requested minimum order");
    }

private:
    enum Kind { SplitK, PentagonK, SubstK, SguK, CoSguK };

    VertexSet fresh(std::size_t n) {
        VertexSet s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(next_++);
        return s;
    }

    Generated split_leaf(std::size_t lo, std::size_t budget) {
        const std::size_t hi = std::max(lo, std::min(cfg_.leaf_max, budget));
        const std::size_t n = uniform(rng_, std::min(hi, std::max(lo, cfg_.leaf_min)), hi);
        auto [g, cert] = random_split_graph(rng_, fresh(n));
        DecompTree t;
        t.kind = NodeKind::SplitLeaf;
        t.graph = g;
        t.cert = cert;
        return {g, t};
    }

    Generated pentagon_leaf() {
        VertexSet ids = fresh(5);
        std::shuffle(ids.begin(), ids.end(), rng_);
        std::vector<Edge> e;
        for (std::size_t i = 0; i < 5; ++i) e.emplace_back(ids[i], ids[(i + 1) % 5]);
        DecompTree t;
        t.kind = NodeKind::PentagonLeaf;
        t.graph = Graph::from_edges(ids, e);
        t.cycle = pentagon_order(t.graph);
        return {t.graph, t};
    }

    // Order in [lo, budget]; lo is 1 or 2 and budget >= lo.
    Generated node(int depth, std::size_t lo, std::size_t budget) {
        std::array<double, 5> w = cfg_.weights;
        const bool inner = depth < cfg_.max_depth;
        if (budget < 5) w[PentagonK] = 0;
        if (!inner || budget < 3) w[SubstK] = 0;
        if (!inner || budget < 5) w[SguK] = w[CoSguK] = 0;
        double total = 0;
        for (double x : w) total += x;
        if (total <= 0) return split_leaf(lo, budget);
        switch (std::discrete_distribution<int>(w.begin(), w.end())(rng_)) {
        case PentagonK: return pentagon_leaf();
        case SubstK: return subst(depth, budget);
        case SguK: return unification(depth, budget, false);
        case CoSguK: return unification(depth, budget, true);
        default: return split_leaf(lo, budget);
        }
    }

    Generated subst(int depth, std::size_t budget) {
        Generated q = node(depth + 1, 2, budget - 1);
        const Vertex u = q.graph.vertices()[uniform(rng_, 0, q.graph.order() - 1)];
        Generated c = node(depth + 1, 2, budget - q.graph.order() + 1);
        DecompTree t;
        t.kind = NodeKind::Subst;
        t.marker = u;
        Graph g = substitute(c.graph, q.graph, u);
        t.children = {std::move(q.tree), std::move(c.tree)};
        return {std::move(g), std::move(t)};
    }

    // Substitutes a generated subtree for `slot` when the slot is used.
    void fill(Graph& g, DecompTree& t, Vertex slot, Generated& child) {
        DecompTree s;
        s.kind = NodeKind::Subst;
        s.marker = slot;
        g = substitute(child.graph, g, slot);
        s.children = {std::move(t), std::move(child.tree)};
        t = std::move(s);
    }

    Generated unification(int depth, std::size_t budget, bool co) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            const Vertex mark = next_;
            if (auto out = try_unification(depth, budget, co)) return std::move(*out);
            next_ = mark;
        }
        throw GenerationExhausted("split graph unification retries exhausted");
    }

    std::optional<Generated> try_unification(int depth, std::size_t budget, bool co) {
        // Part sizes: L, T, A_K, A_S, B_K, C_K, C_S, then the A, B, C slots
        // (0 or 1; a used slot becomes at least two vertices).
        std::array<std::size_t, 10> z{};
        z[0] = uniform(rng_, 1, 3);
        for (std::size_t i = 1; i < 7; ++i) z[i] = uniform(rng_, 0, 2);
        for (std::size_t i = 7; i < 10; ++i) z[i] = coin(rng_);
        auto cost = [](const std::array<std::size_t, 10>& s) {
            return s[0] + s[1] + s[2] + s[3] + s[4] + s[5] + s[6] + 2 * (s[7] + s[8] + s[9]);
        };
        auto valid = [](const std::array<std::size_t, 10>& s) {
            return s[0] >= 1 && s[2] + s[3] + 2 * s[7] >= 2 && s[5] + s[6] + 2 * s[9] >= 1 &&
                   s[4] + s[5] + s[6] + 2 * (s[8] + s[9]) >= 2;
        };
        if (!valid(z)) return std::nullopt;
        // Shrink random parts until the budget is met.
        while (cost(z) > budget) {
            std::vector<std::size_t> can;
            for (std::size_t i = 0; i < z.size(); ++i) {
                if (z[i] == 0) continue;
                auto w = z;
                --w[i];
                if (valid(w)) can.push_back(i);
            }
            if (can.empty()) return std::nullopt;
            --z[can[uniform(rng_, 0, can.size() - 1)]];
        }
        const std::size_t nl = z[0], nt = z[1], ak = z[2], as = z[3], bk = z[4], ck = z[5], cs = z[6];
        const bool slot_a = z[7], slot_b = z[8], slot_c = z[9];
        const std::size_t fixed = nl + nt + ak + as + bk + ck + cs;
        const std::size_t slots = slot_a + slot_b + slot_c;

        const VertexSet l = fresh(nl), t = fresh(nt), a_k = fresh(ak), a_s = fresh(as), b_k = fresh(bk),
                        c_k = fresh(ck), c_s = fresh(cs);
        const Vertex sa = next_++, sb = next_++, sc = next_++, ma = next_++, mc = next_++;
        VertexSet a_stable = a_s, b_clique = b_k, c_stable = c_s;
        if (slot_a) a_stable = unite(a_stable, {sa});
        if (slot_b) b_clique = unite(b_clique, {sb});
        if (slot_c) c_stable = unite(c_stable, {sc});

        auto clique_on = [](const VertexSet& s, std::vector<Edge>& e) {
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) e.emplace_back(s[i], s[j]);
        };
        auto random_between = [&](const VertexSet& s, const VertexSet& u, std::vector<Edge>& e) {
            for (Vertex x : s)
                for (Vertex y : u)
                    if (coin(rng_)) e.emplace_back(x, y);
        };
        auto all_between = [](const VertexSet& s, const VertexSet& u, std::vector<Edge>& e) {
            for (Vertex x : s)
                for (Vertex y : u) e.emplace_back(x, y);
        };

        std::vector<Edge> shared;
        clique_on(l, shared);
        random_between(l, t, shared);

        // First quotient: clique L + A_K, stable T + c + A_S.
        std::vector<Edge> e1 = shared;
        clique_on(unite(l, a_k), e1);
        all_between({mc}, l, e1);
        random_between(a_stable, unite(l, a_k), e1);
        const VertexSet clique1 = unite(l, a_k);
        const VertexSet stable1 = unite(unite(t, {mc}), a_stable);

        // Second quotient: clique L + B_K + C_K, stable T + a + C_S.
        std::vector<Edge> e2 = shared;
        clique_on(unite(unite(l, b_clique), c_k), e2);
        all_between({ma}, b_clique, e2);
        all_between(c_stable, l, e2);
        random_between(c_stable, unite(b_clique, c_k), e2);
        random_between(t, b_clique, e2);
        const VertexSet clique2 = unite(unite(l, b_clique), c_k);
        const VertexSet stable2 = unite(unite(t, {ma}), c_stable);

        std::size_t left = budget - fixed;
        std::vector<Generated> kids;
        for (std::size_t i = 0; i < slots; ++i) {
            const std::size_t reserve = 2 * (slots - i - 1);
            kids.push_back(node(depth + 1, 2, uniform(rng_, 2, left - reserve)));
            left -= kids.back().graph.order();
        }

        DecompTree t1, t2;
        t1.kind = t2.kind = NodeKind::SplitLeaf;
        t1.graph = Graph::from_edges(unite(clique1, stable1), e1);
        t1.cert = {clique1, stable1};
        t2.graph = Graph::from_edges(unite(clique2, stable2), e2);
        t2.cert = {clique2, stable2};
        Graph g1 = t1.graph, g2 = t2.graph;

        std::size_t k = 0;
        VertexSet a_set = unite(a_k, a_s), b_set = b_k, c_set = unite(c_k, c_s);
        if (slot_a) {
            a_set = unite(a_set, kids[k].graph.vertices());
            fill(g1, t1, sa, kids[k++]);
        }
        if (slot_b) {
            b_set = unite(b_set, kids[k].graph.vertices());
            fill(g2, t2, sb, kids[k++]);
        }
        if (slot_c) {
            c_set = unite(c_set, kids[k].graph.vertices());
            fill(g2, t2, sc, kids[k++]);
        }

        ComposablePair p{g1, g2, PairRoles{a_set, b_set, c_set, l, t, ma, mc}};
        if (pair_violation(p) || a_set.size() < 2 || b_set.size() + c_set.size() < 2) return std::nullopt;
        Graph g = unify(p);
        DecompTree node;
        node.kind = co ? NodeKind::CoSgu : NodeKind::Sgu;
        node.roles = p.roles;
        node.children = {std::move(t1), std::move(t2)};
        if (co) g = complement(g);
        return Generated{std::move(g), std::move(node)};
    }

    GenConfig cfg_;
    Rng rng_;
    Vertex next_ = 0;
};

} // namespace detail

/// Deterministic in cfg. Vertices of the result are 0..n-1; markers and
/// substituted-away slot ids are renumbered after them.
inline Generated generate(const GenConfig& cfg) {
    double total = 0;
    for (double w : cfg.weights) {
        if (w < 0) throw PreconditionError("generate: negative weight");
        total += w;
    }
    if (total <= 0) throw PreconditionError("generate: weights sum to zero");
    if (cfg.leaf_min < 1 || cfg.leaf_min > cfg.leaf_max) throw PreconditionError("generate: bad leaf size range");
    if (cfg.max_vertices < 1 || cfg.max_vertices > kMaxVertices || cfg.max_depth < 0)
        throw PreconditionError("generate: bad size or depth bound");
    return detail::TreeGenerator(cfg).run();
}

} // namespace p5g
