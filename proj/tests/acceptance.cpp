// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "brute.hpp"
#include "p5g/census.hpp"
#include "p5g/generator.hpp"
#include "p5g/graph6.hpp"
#include "p5g/tree_io.hpp"

using namespace p5g;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

const PatternKind kPatterns[] = {PatternKind::P5, PatternKind::House, PatternKind::C5};

bool has(const Graph& g, PatternKind k) { return find_induced(g, k).has_value(); }

std::string samples(const CensusRow& r) {
    std::string s;
    for (const auto& x : r.samples) s += " [" + x + "]";
    return s;
}

// Lemma tallies shared by criteria 1-3 and reported by 7.
std::uint64_t g_lemma_checks = 0, g_lemma_violations = 0, g_skew_runs = 0;

Outcome sweep(Mode mode) {
    const std::uint64_t frozen_pair[] = {1, 1, 2, 8, 64, 904, 19328};
    const std::uint64_t frozen_triple[] = {1, 1, 2, 8, 64, 892, 18824};
    CensusOptions opt;
    opt.mode = mode;
    opt.threads = worker_count();
    opt.check_lemmas = true;
    std::uint64_t graphs = 0, members = 0, mismatches = 0, pentagons = 0;
    std::string notes;
    for (const CensusRow& r : run_census(6, opt)) {
        graphs += r.graphs;
        members += r.members;
        mismatches += r.mismatches;
        pentagons += r.pentagon_leaves;
        g_lemma_checks += r.lemma_checks;
        g_lemma_violations += r.lemma_violations;
        g_skew_runs += r.skew_runs;
        const std::uint64_t want = triple(mode) ? frozen_triple[r.n] : frozen_pair[r.n];
        if (r.members != want) notes += " n=" + std::to_string(r.n) + " members " + std::to_string(r.members);
        if (r.mismatches) notes += samples(r);
    }
    Outcome o;
    std::uint64_t expected = 0;
    for (std::size_t n = 0; n <= 6; ++n) expected += brute::graphs_on(n);
    o.pass = graphs == expected && mismatches == 0 && notes.empty() && (!triple(mode) || pentagons == 0);
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(members) + " members, " +
               std::to_string(mismatches) + " mismatches" +
               (triple(mode) ? ", " + std::to_string(pentagons) + " pentagon leaves" : "") + notes;
    return o;
}

Outcome prime_c5() {
    constexpr std::size_t kMaxN = 7;
    std::uint64_t primes_with_c5 = 0, exceptions = 0;
    for (std::size_t n = 0; n <= kMaxN; ++n) {
        const std::uint64_t total = labeled_graph_count(n);
        const unsigned workers = std::min<std::uint64_t>(worker_count(), total);
        std::vector<std::uint64_t> hits(workers, 0), bad(workers, 0), checks(workers, 0), viol(workers, 0),
            runs(workers, 0);
        auto work = [&](unsigned w) {
            DecomposeOptions d;
            d.on_skew = [&](const SkewTrace& t) {
                ++runs[w];
                LemmaReport r = check_skew_trace(t.host, t.initial, t.maximal);
                checks[w] += r.checks;
                viol[w] += r.violations.size();
            };
            for (std::uint64_t c = total * w / workers; c < total * (w + 1) / workers; ++c) {
                Graph g = labeled_graph(n, c);
                if (!is_class_member(g, false) || !is_prime(g)) continue;
                if (n == kMaxN) decompose(g, d); // n <= 6 already ran under criteria 1-2
                if (!has(g, PatternKind::C5)) continue;
                ++hits[w];
                if (!is_pentagon(g)) ++bad[w];
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
        for (unsigned w = 0; w < workers; ++w) {
            primes_with_c5 += hits[w];
            exceptions += bad[w];
            g_lemma_checks += checks[w];
            g_lemma_violations += viol[w];
            g_skew_runs += runs[w];
        }
    }
    return {exceptions == 0 && primes_with_c5 > 0,
            std::to_string(primes_with_c5) + " prime members containing C5, " + std::to_string(exceptions) +
                " that are not the 5-cycle"};
}

Outcome composition_closure() {
    Rng rng(20240401);
    std::uint64_t checked[3] = {0, 0, 0}, failures = 0, drawn = 0;
    for (std::size_t h = 0; h < 3; ++h) {
        while (checked[h] < 1000 && drawn < 200000) {
            ++drawn;
            ComposablePair p = random_composable_pair(rng, 3);
            if (has(p.g1, kPatterns[h]) || has(p.g2, kPatterns[h])) continue;
            ++checked[h];
            if (has(unify(p), kPatterns[h])) ++failures;
        }
    }
    bool enough = checked[0] == 1000 && checked[1] == 1000 && checked[2] == 1000;
    return {enough && failures == 0, "pairs with H-free parts: P5 " + std::to_string(checked[0]) + ", house " +
                                         std::to_string(checked[1]) + ", C5 " + std::to_string(checked[2]) + "; " +
                                         std::to_string(failures) + " failures"};
}

// Visits every unification node with its factors and the graph they unify to.
void for_each_factorization(const DecompTree& t, const std::function<void(const Graph&, const ComposablePair&)>& f) {
    if (t.kind == NodeKind::Sgu || t.kind == NodeKind::CoSgu) {
        ComposablePair p{recompose(t.children[0]), recompose(t.children[1]), t.roles};
        f(unify(p), p);
    }
    for (const auto& c : t.children) for_each_factorization(c, f);
}

Outcome converse() {
    std::uint64_t seen = 0, failures = 0, proviso = 0;
    auto check = [&](const Graph& divided, const ComposablePair& p) {
        ++seen;
        const PairRoles& r = p.roles;
        if (!validate_divide(divided, {r.a, r.b, r.c, r.l, r.t})) ++proviso;
        for (PatternKind k : kPatterns)
            if (!has(divided, k) && (has(p.g1, k) || has(p.g2, k))) ++failures;
    };
    for_each_labeled_graph(6, [&](const Graph& g) {
        if (is_class_member(g, false) && !is_split(g) && is_prime(g)) for_each_factorization(decompose(g), check);
    });
    GenConfig cfg;
    cfg.weights = {3, 1, 1, 3, 3};
    cfg.max_depth = 4;
    for (std::uint64_t s = 0; seen < 1000 && s < 100000; ++s) {
        cfg.seed = 700000 + s;
        for_each_factorization(decompose(generate(cfg).graph), check);
    }
    return {seen >= 1000 && failures == 0 && proviso == 0,
            std::to_string(seen) + " factorizations, " + std::to_string(failures) + " H-free violations, " +
                std::to_string(proviso) + " divides with an L-vertex not mixed on A"};
}

Outcome house_factor_fixture() {
    // b1=1 b2=2 c1=3 a=4 l=5 a1=6 c=7
    ComposablePair p;
    p.roles = {{6}, {1, 2}, {3}, {5}, {}, 4, 7};
    p.g1 = Graph::from_edges({5, 6, 7}, {{6, 5}, {5, 7}});
    p.g2 = Graph::from_edges({1, 2, 3, 4, 5}, {{1, 3}, {1, 5}, {2, 5}, {3, 5}, {4, 1}, {4, 2}});
    const Graph want = Graph::from_edges({1, 2, 3, 5, 6}, {{6, 5}, {6, 1}, {6, 2}, {1, 3}, {1, 5}, {2, 5}, {3, 5}});
    const Graph got = unify(p);
    const bool exact = got == want;
    const bool free = !has(got, PatternKind::House) && !brute::has_house(brute::matrix(got));
    const bool g2_house = has(p.g2, PatternKind::House) && brute::has_house(brute::matrix(p.g2));
    return {exact && free && g2_house, std::string("edge set ") + (exact ? "matches" : "differs") +
                                           ", unification house-free: " + (free ? "yes" : "no") +
                                           ", g2 contains a house: " + (g2_house ? "yes" : "no")};
}

Outcome lemmas() {
    return {g_lemma_violations == 0 && g_lemma_checks > 0,
            std::to_string(g_skew_runs) + " skew decompositions, " + std::to_string(g_lemma_checks) +
                " lemma assertions, " + std::to_string(g_lemma_violations) + " violations"};
}

Outcome generator_soundness() {
    std::uint64_t ok = 0, bad = 0, drift = 0;
    GenConfig cfg;
    for (int depth = 1; depth <= 4; ++depth)
        for (std::uint64_t s = 0; s < 125; ++s) {
            cfg.seed = 10000 * depth + s;
            cfg.max_depth = depth;
            Generated a = generate(cfg);
            if (is_class_member(a.graph, false) && verify_tree(a.tree, a.graph).ok) ++ok;
            else ++bad;
            Generated b = generate(cfg);
            if (emit_graph6(a.graph) != emit_graph6(b.graph) ||
                write_tree_document({a.graph, a.tree}) != write_tree_document({b.graph, b.tree}))
                ++drift;
        }
    return {ok == 500 && bad == 0 && drift == 0, std::to_string(ok) + "/500 members verified, " +
                                                     std::to_string(drift) + " non-identical regenerations"};
}

Outcome large_members() {
    GenConfig cfg;
    cfg.max_depth = 5;
    cfg.min_vertices = 15;
    cfg.max_vertices = 40;
    std::uint64_t ok = 0, bad = 0, spot = 0, spot_bad = 0;
    std::size_t lo = 64, hi = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        cfg.seed = 90000 + s;
        Graph g = generate(cfg).graph;
        lo = std::min(lo, g.order());
        hi = std::max(hi, g.order());
        bool good = g.order() >= 15 && g.order() <= 40;
        try {
            DecompTree t = decompose(g);
            good = good && verify_tree(t, g).ok && recompose(t) == g;
        } catch (const std::exception&) {
            good = false;
        }
        good ? ++ok : ++bad;
        if (s % 10 == 0) {
            ++spot;
            if (!brute::member(brute::matrix(g), false)) ++spot_bad;
        }
    }
    return {ok == 200 && spot == 20 && spot_bad == 0,
            std::to_string(ok) + "/200 decomposed, verified and recomposed (n in [" + std::to_string(lo) + ", " +
                std::to_string(hi) + "]), " + std::to_string(spot - spot_bad) + "/" + std::to_string(spot) +
                " pass the full pattern scan"};
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"exhaustive grammar equivalence, pair mode, n <= 6", [] { return sweep(Mode::Pair); }},
        {"exhaustive grammar equivalence, triple mode, n <= 6", [] { return sweep(Mode::Triple); }},
        {"prime members containing C5 are the 5-cycle, n <= 7", prime_c5},
        {"composition closure on random composable pairs", composition_closure},
        {"factors of unification nodes inherit H-freeness", converse},
        {"house-free unification of a pair whose g2 has a house", house_factor_fixture},
        {"skew-partition lemma assertions during criteria 1-3", lemmas},
        {"generator soundness and determinism", generator_soundness},
        {"random large members round-trip", large_members},
    };
    int failed = 0, index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d: %s -- %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d/9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
}
