#pragma once

// Decomposition trees: split and pentagon leaves combined by substitution,
// split graph unification (Sgu) and unification in the complement (CoSgu).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p5g/divide.hpp"
#include "p5g/graph.hpp"
#include "p5g/modular.hpp"
#include "p5g/oracle.hpp"
#include "p5g/skew.hpp"

namespace p5g {

/// Pair: {P5, house}-free graphs. Triple: {P5, house, C5}-free graphs.
enum class Mode { Pair, Triple };

inline bool triple(Mode m) { return m == Mode::Triple; }

class NotClassMember : public Error {
public:
    explicit NotClassMember(PatternHit w) : Error("not a class member: contains " + describe(w)), witness_(std::move(w)) {}
    const PatternHit& witness() const noexcept { return witness_; }

private:
    PatternHit witness_;
};

/// One pass of the skew pipeline: `host` is g or its complement, whichever
/// carries a partition with two non-trivial components on the X side.
struct SkewTrace {
    Graph host;
    SkewPartition initial;
    SkewPartition maximal;
    UsableCase usable;
};

struct DecomposeOptions {
    Mode mode = Mode::Pair;
    bool check_factors = true; // re-run the oracle on every unification factor
    std::function<void(const SkewTrace&)> on_skew;
};

enum class NodeKind { SplitLeaf, PentagonLeaf, Subst, Sgu, CoSgu };

inline const char* to_string(NodeKind k) {
    switch (k) {
    case NodeKind::SplitLeaf: return "split";
    case NodeKind::PentagonLeaf: return "pentagon";
    case NodeKind::Subst: return "subst";
    case NodeKind::Sgu: return "sgu";
    case NodeKind::CoSgu: return "cosgu";
    }
    return "?";
}

/// Subst children are {quotient, child}; Sgu and CoSgu children are the two
/// factor graphs {g1, g2}. For CoSgu the factors and roles belong to the
/// complement of the node's graph.
struct DecompTree {
    NodeKind kind = NodeKind::SplitLeaf;
    Graph graph;               // leaves
    SplitCert cert;            // SplitLeaf
    std::vector<Vertex> cycle; // PentagonLeaf
    Vertex marker = 0;         // Subst
    PairRoles roles;           // Sgu, CoSgu
    std::vector<DecompTree> children;
    bool operator==(const DecompTree&) const = default;
};

namespace detail {

struct Unification {
    NodeKind kind;
    ComposablePair pair;
};

inline std::optional<Unification> unify_on_host(const Graph& g, const Graph& host, const SkewPartition& sp,
                                                const DecomposeOptions& opt) {
    try {
        const SkewPartition maximal = maximize_skew(host, sp);
        UsableCase uc = classify_usable(host, decompose_skew(host, maximal));
        if (opt.on_skew) opt.on_skew(SkewTrace{host, sp, maximal, uc});
        Graph divided = host;
        if (uc.tag == UsableTag::Case4) {
            divided = complement(host);
            uc = classify_usable(divided, decompose_skew(divided, {maximal.y, maximal.x}));
            if (uc.tag != UsableTag::Case3) throw NeitherCaseHolds("complemented partition is not component-side");
        }
        const SplitGraphDivide d = build_divide(divided, uc);
        const NodeKind kind = divided == g ? NodeKind::Sgu : NodeKind::CoSgu;
        return Unification{kind, factor(divided, d)};
    } catch (const ConstructionFailed&) {
    } catch (const NeitherCaseHolds&) {
    } catch (const DivideInvalid&) {
    }
    return std::nullopt;
}

// g is prime, not split, not a pentagon.
inline Unification unify_split(const Graph& g, const DecomposeOptions& opt) {
    const Graph co = complement(g);
    if (auto hit = find_special_h6(g)) {
        try {
            const SkewPartition sp = skew_from_special_h6(g, *hit, HitLocation::InGraph);
            if (auto u = unify_on_host(g, co, {sp.y, sp.x}, opt)) return *u;
        } catch (const ConstructionFailed&) {
        }
    }
    if (auto hit = find_special_h6(co)) {
        try {
            const SkewPartition sp = skew_from_special_h6(g, *hit, HitLocation::InComplement);
            if (auto u = unify_on_host(g, g, sp, opt)) return *u;
        } catch (const ConstructionFailed&) {
        }
    }
    throw InternalStructureError("prime non-split member admits no split graph divide on either side (" +
                                 std::to_string(g.order()) + " vertices)");
}

} // namespace detail

/// Decomposes a class member. Branches are tried in the order split leaf,
/// pentagon leaf, substitution, unification.
inline DecompTree decompose(const Graph& g, const DecomposeOptions& opt = {}) {
    if (auto w = class_witness(g, triple(opt.mode))) throw NotClassMember(*w);
    DecompTree root;
    std::vector<std::pair<Graph, DecompTree*>> work{{g, &root}};
    while (!work.empty()) {
        auto [h, node] = std::move(work.back());
        work.pop_back();
        if (auto cert = split_certificate(h)) {
            node->kind = NodeKind::SplitLeaf;
            node->graph = h;
            node->cert = *cert;
            continue;
        }
        if (is_pentagon(h)) {
            node->kind = NodeKind::PentagonLeaf;
            node->graph = h;
            node->cycle = pentagon_order(h);
            continue;
        }
        Graph left, right;
        if (auto module = find_proper_homogeneous_set(h)) {
            QuotientFactor qf = quotient_factor(h, *module);
            node->kind = NodeKind::Subst;
            node->marker = qf.marker;
            left = std::move(qf.quotient);
            right = std::move(qf.child);
        } else {
            detail::Unification u = detail::unify_split(h, opt);
            node->kind = u.kind;
            node->roles = u.pair.roles;
            left = std::move(u.pair.g1);
            right = std::move(u.pair.g2);
            if (opt.check_factors)
                for (const Graph* f : {&left, &right})
                    if (auto w = class_witness(*f, triple(opt.mode)))
                        throw InternalStructureError("unification factor contains " + describe(*w));
        }
        if (left.order() >= h.order() || right.order() >= h.order())
            throw InternalStructureError("decomposition step did not shrink the graph");
        node->children.resize(2);
        work.emplace_back(std::move(right), &node->children[1]);
        work.emplace_back(std::move(left), &node->children[0]);
    }
    return root;
}

// ---------------------------------------------------------------------------
// Recomposition and verification.

namespace detail {

struct TreeFault {
    std::string obligation;
    std::string path;
    std::string detail;
};

inline Graph rebuild(const DecompTree& t, const std::string& path, bool verify) {
    auto fail = [&](const std::string& obligation, const std::string& what) -> TreeFault {
        return TreeFault{obligation, path, what};
    };
    const std::size_t arity = t.kind == NodeKind::SplitLeaf || t.kind == NodeKind::PentagonLeaf ? 0 : 2;
    if (t.children.size() != arity) throw fail("structure", "wrong number of children");
    switch (t.kind) {
    case NodeKind::SplitLeaf:
        if (verify && !valid_split_cert(t.graph, t.cert)) throw fail("leaf-certificate", "split certificate invalid");
        return t.graph;
    case NodeKind::PentagonLeaf:
        if (verify && (!is_pentagon(t.graph) || t.cycle != pentagon_order(t.graph)))
            throw fail("leaf-certificate", "not a pentagon with the recorded cyclic order");
        return t.graph;
    default: break;
    }
    const Graph a = rebuild(t.children[0], path + "/0", verify);
    const Graph b = rebuild(t.children[1], path + "/1", verify);
    Graph out;
    if (t.kind == NodeKind::Subst) {
        try {
            out = substitute(b, a, t.marker);
        } catch (const PreconditionError& e) {
            throw fail("substitution", e.what());
        }
        if (verify && (b.order() < 2 || a.order() < 2 || !is_proper_homogeneous(out, b.vertices())))
            throw fail("homogeneous-set", "substituted graph is not a proper homogeneous set");
    } else {
        const ComposablePair p{a, b, t.roles};
        if (auto why = pair_violation(p)) throw fail("composable-pair", *why);
        out = unify(p);
        if (t.kind == NodeKind::CoSgu) out = complement(out);
    }
    if (verify && (a.order() >= out.order() || b.order() >= out.order()))
        throw fail("size-decrease", "a child is not smaller than its parent");
    return out;
}

} // namespace detail

/// Bottom-up rebuild: substitute, unify, or complement-unify-complement.
inline Graph recompose(const DecompTree& t) {
    try {
        return detail::rebuild(t, "root", false);
    } catch (const detail::TreeFault& f) {
        throw MalformedTree(f.path, f.obligation + ": " + f.detail);
    }
}

struct VerifyReport {
    bool ok = true;
    std::string obligation; // first failed obligation, empty when ok
    std::string path;
    std::string detail;
};

/// Checks leaf certificates, node invariants and label-exact recomposition.
inline VerifyReport verify_tree(const DecompTree& t, const Graph& g) {
    try {
        Graph r = detail::rebuild(t, "root", true);
        if (r != g) return {false, "recomposition", "root", "recomposed graph differs from the input"};
        return {};
    } catch (const detail::TreeFault& f) {
        return {false, f.obligation, f.path, f.detail};
    }
}

// ---------------------------------------------------------------------------
// Tree utilities.

inline Graph relabel(const Graph& g, const std::map<Vertex, Vertex>& f) {
    VertexSet ids;
    for (Vertex v : g.vertices()) ids.push_back(f.at(v));
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(f.at(u), f.at(v));
    return Graph::from_edges(std::move(ids), edges);
}

inline VertexSet relabel(const VertexSet& s, const std::map<Vertex, Vertex>& f) {
    VertexSet out;
    for (Vertex v : s) out.push_back(f.at(v));
    return make_set(std::move(out));
}

/// Applies an injective id map to every id in the tree.
inline DecompTree relabel_tree(const DecompTree& t, const std::map<Vertex, Vertex>& f) {
    DecompTree out;
    out.kind = t.kind;
    switch (t.kind) {
    case NodeKind::SplitLeaf:
        out.graph = relabel(t.graph, f);
        out.cert = {relabel(t.cert.clique, f), relabel(t.cert.stable, f)};
        break;
    case NodeKind::PentagonLeaf:
        out.graph = relabel(t.graph, f);
        out.cycle = pentagon_order(out.graph);
        break;
    case NodeKind::Subst: out.marker = f.at(t.marker); break;
    case NodeKind::Sgu:
    case NodeKind::CoSgu:
        out.roles = {relabel(t.roles.a, f), relabel(t.roles.b, f), relabel(t.roles.c, f),
                     relabel(t.roles.l, f), relabel(t.roles.t, f), f.at(t.roles.marker_a), f.at(t.roles.marker_c)};
        break;
    }
    for (const auto& c : t.children) out.children.push_back(relabel_tree(c, f));
    return out;
}

/// Every vertex id mentioned anywhere in the tree.
inline VertexSet tree_ids(const DecompTree& t) {
    VertexSet out;
    if (t.kind == NodeKind::SplitLeaf || t.kind == NodeKind::PentagonLeaf) out = t.graph.vertices();
    if (t.kind == NodeKind::Subst) out = {t.marker};
    if (t.kind == NodeKind::Sgu || t.kind == NodeKind::CoSgu)
        out = unite(unite(unite(t.roles.a, t.roles.b), unite(t.roles.c, t.roles.l)),
                    unite(t.roles.t, make_set({t.roles.marker_a, t.roles.marker_c})));
    for (const auto& c : t.children) out = unite(out, tree_ids(c));
    return out;
}

/// Map sending the vertices of g to 0..n-1 and every other id in the tree to
/// n, n+1, ..., both in ascending order.
inline std::map<Vertex, Vertex> canonical_labels(const DecompTree& t, const Graph& g) {
    std::map<Vertex, Vertex> f;
    Vertex next = 0;
    for (Vertex v : g.vertices()) f[v] = next++;
    for (Vertex v : tree_ids(t))
        if (!f.count(v)) f[v] = next++;
    return f;
}

struct TreeStats {
    std::size_t depth = 0; // a single leaf has depth 0
    std::size_t nodes = 0;
    std::map<NodeKind, std::size_t> by_kind;
};

inline TreeStats tree_stats(const DecompTree& t) {
    TreeStats s;
    s.nodes = 1;
    ++s.by_kind[t.kind];
    for (const auto& c : t.children) {
        TreeStats cs = tree_stats(c);
        s.depth = std::max(s.depth, cs.depth + 1);
        s.nodes += cs.nodes;
        for (auto [k, n] : cs.by_kind) s.by_kind[k] += n;
    }
    return s;
}

} // namespace p5g
