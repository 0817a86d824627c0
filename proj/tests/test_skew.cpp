#include <gtest/gtest.h>

#include "brute.hpp"
#include "p5g/generator.hpp"
#include "p5g/skew.hpp"

using namespace p5g;

namespace {

Graph h6() { return Graph::from_edges({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 6}, {5, 6}}); }

struct Hosted {
    Graph host;
    SkewPartition sp;
};

// The host in which (X, Y) has two non-trivial components on the X side.
std::optional<Hosted> hosted_partition(const Graph& g) {
    if (auto hit = find_special_h6(g)) {
        SkewPartition sp = skew_from_special_h6(g, *hit, HitLocation::InGraph);
        return Hosted{complement(g), {sp.y, sp.x}};
    }
    Graph co = complement(g);
    if (auto hit = find_special_h6(co)) return Hosted{g, skew_from_special_h6(g, *hit, HitLocation::InComplement)};
    return std::nullopt;
}

template <class F>
void for_each_prime_nonsplit_member(std::size_t max_n, F&& f) {
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::uint64_t code = 0; code < brute::graphs_on(n); ++code) {
            Graph g = brute::labeled(n, code);
            if (is_class_member(g, true) && !is_split(g) && is_prime(g)) f(g);
        }
}

} // namespace

TEST(Attachment, BarePathHasEmptyClasses) {
    Graph p4 = Graph::from_edges({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
    EXPECT_EQ(attachment_classes(p4, {1, 2, 3, 4}), AttachmentClasses{});
}

TEST(Attachment, UniversalVertexGoesToC) {
    Graph g = Graph::from_edges({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
    auto cls = attachment_classes(g, {1, 2, 3, 4});
    EXPECT_EQ(cls.c_set, (VertexSet{5}));
    EXPECT_TRUE(cls.a_set.empty() && cls.b_set.empty() && cls.clone_a.empty());
}

TEST(Attachment, CloneSignatures) {
    // 5 copies b, 6 copies c, 7 sees nothing, 8 sees b and c only.
    Graph g = Graph::from_edges({1, 2, 3, 4, 5, 6, 7, 8},
                                {{1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 3}, {6, 2}, {6, 4}, {8, 2}, {8, 3}});
    auto cls = attachment_classes(g, {1, 2, 3, 4});
    EXPECT_EQ(cls.clone_b, (VertexSet{5}));
    EXPECT_EQ(cls.clone_c, (VertexSet{6}));
    EXPECT_EQ(cls.a_set, (VertexSet{7}));
    EXPECT_EQ(cls.b_set, (VertexSet{8}));
}

TEST(Attachment, HexagonIsRejected) {
    Graph c6 = Graph::from_edges({1, 2, 3, 4, 5, 6}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
    EXPECT_TRUE(find_induced(c6, PatternKind::P5));
    try {
        attachment_classes(c6, {2, 3, 4, 5});
        FAIL() << "expected UnclassifiableVertex";
    } catch (const UnclassifiableVertex& e) {
        EXPECT_EQ(e.vertex(), 1u);
    }
}

TEST(Attachment, RejectsNonPath) {
    Graph c4 = Graph::from_edges({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    EXPECT_THROW(attachment_classes(c4, {1, 2, 3, 4}), PreconditionError);
}

TEST(SkewFromH6, H6ItselfInGraph) {
    Graph g = h6();
    auto hit = find_special_h6(g);
    ASSERT_TRUE(hit);
    SkewPartition sp = skew_from_special_h6(g, *hit, HitLocation::InGraph);
    EXPECT_TRUE(is_skew_partition(g, sp));
    EXPECT_GE(nontrivial_anti_components(g, g.mask_of(sp.y)), 2u);
}

TEST(SkewFromH6, SplitGraphRejected) {
    Graph k3 = Graph::from_edges({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
    H6Hit dummy{};
    EXPECT_THROW(skew_from_special_h6(k3, dummy, HitLocation::InGraph), PreconditionError);
}

TEST(SkewFromH6, ValidOnEveryPrimeNonSplitMember) {
    std::size_t seen = 0;
    for_each_prime_nonsplit_member(6, [&](const Graph& g) {
        auto h = hosted_partition(g);
        ASSERT_TRUE(h);
        ASSERT_TRUE(has_two_nontrivial_x(h->host, h->sp));
        ++seen;
    });
    EXPECT_GT(seen, 0u);
}

TEST(MaximizeSkew, FixedPointAndMaximal) {
    auto check = [](const Graph& g) {
        auto h = hosted_partition(g);
        if (!h) return;
        SkewPartition m = maximize_skew(h->host, h->sp);
        ASSERT_TRUE(has_two_nontrivial_x(h->host, m));
        ASSERT_EQ(maximize_skew(h->host, m), m);
        for (Vertex v : h->sp.x) ASSERT_TRUE(contains(m.x, v));
        for (Vertex v : m.y) ASSERT_FALSE(has_two_nontrivial_x(h->host, {unite(m.x, {v}), minus(m.y, {v})}));
    };
    for_each_prime_nonsplit_member(6, check);
    GenConfig cfg;
    cfg.weights = {2, 0, 0, 3, 3};
    cfg.max_vertices = 14;
    for (std::uint64_t s = 0; s < 200; ++s) {
        cfg.seed = s;
        Graph g = generate(cfg).graph;
        if (!is_split(g) && is_prime(g)) check(g);
    }
}

TEST(MaximizeSkew, RejectsWeakInput) {
    Graph g = h6();
    EXPECT_THROW(maximize_skew(g, {{1, 2, 3, 4, 5, 6}, {}}), PreconditionError);
}

// Edges 01 23 45 40 42 43 52 with X = {0,1,2,3}, Y = {4,5}.
Graph case3_graph() {
    return Graph::on_range(6, {{0, 1}, {2, 3}, {4, 5}, {4, 0}, {4, 2}, {4, 3}, {5, 2}});
}

TEST(DecomposeSkew, HandInstance) {
    Graph g = case3_graph();
    SkewDecomposition d = decompose_skew(g, {{0, 1, 2, 3}, {4, 5}});
    EXPECT_EQ(d.x_parts, (std::vector<VertexSet>{{0, 1}, {2, 3}}));
    EXPECT_TRUE(d.y_parts.empty());
    EXPECT_TRUE(d.s.empty());
    EXPECT_EQ(d.k, (VertexSet{4, 5}));
    EXPECT_EQ(d.k_mixed, (std::vector<VertexSet>{{4}, {5}}));
    EXPECT_TRUE(d.s_mixed.empty());
    EXPECT_EQ(x_side(d), (VertexSet{0, 1, 2, 3}));
    EXPECT_EQ(y_side(d), (VertexSet{4, 5}));
    EXPECT_THROW(decompose_skew(g, {{0, 1}, {2, 3, 4, 5}}), PreconditionError);
}

TEST(Classify, HandInstanceIsCase3) {
    Graph g = case3_graph();
    UsableCase uc = classify_usable(g, decompose_skew(g, {{0, 1, 2, 3}, {4, 5}}));
    EXPECT_EQ(uc.tag, UsableTag::Case3);
    EXPECT_EQ(uc.special_index, 0u);
}

TEST(Classify, ComplementOfCase3IsCase4) {
    Graph g = complement(case3_graph());
    SkewDecomposition d = decompose_skew(g, {{4, 5}, {0, 1, 2, 3}});
    EXPECT_FALSE(case3_index(g, d));
    UsableCase uc = classify_usable(g, d);
    EXPECT_EQ(uc.tag, UsableTag::Case4);
    EXPECT_EQ(uc.special_index, 0u);
}

TEST(Classify, EmptyDecompositionHoldsNeither) {
    EXPECT_THROW(classify_usable(Graph{}, SkewDecomposition{}), NeitherCaseHolds);
}

// Every maximal partition the pipeline reaches is usable and classifiable.
TEST(Classify, MaximalPartitionsClassify) {
    for_each_prime_nonsplit_member(6, [&](const Graph& g) {
        auto h = hosted_partition(g);
        ASSERT_TRUE(h);
        SkewDecomposition d = decompose_skew(h->host, maximize_skew(h->host, h->sp));
        EXPECT_TRUE(usable_a(h->host, d));
        EXPECT_NO_THROW(classify_usable(h->host, d));
    });
}
