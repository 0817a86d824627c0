#pragma once

// Exhaustive sweeps over all labeled graphs on 0..n-1.

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "p5g/decompose.hpp"
#include "p5g/skew_lemmas.hpp"

namespace p5g {

/// Number of labeled graphs on n vertices, 2^(n choose 2); n <= 11.
inline std::uint64_t labeled_graph_count(std::size_t n) {
    if (n > 11) throw PreconditionError("labeled_graph_count: n too large");
    return std::uint64_t{1} << (n * (n - (n > 0)) / 2);
}

/// Graph number `code` on 0..n-1: bit k of code is the k-th pair (i, j),
/// i < j, in row-major order.
inline Graph labeled_graph(std::size_t n, std::uint64_t code) {
    std::vector<Mask> rows(n, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++k)
            if ((code >> k) & 1u) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
    VertexSet ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<Vertex>(i);
    return Graph::from_rows(std::move(ids), std::move(rows));
}

template <class F>
void for_each_labeled_graph(std::size_t n, F&& f) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t c = 0; c < total; ++c) f(labeled_graph(n, c));
}

struct CensusRow {
    std::size_t n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t members = 0;
    std::uint64_t split_members = 0;
    std::uint64_t prime_members = 0; // prime members with at least 3 vertices
    std::uint64_t pentagon_leaves = 0;
    std::uint64_t skew_runs = 0;
    std::uint64_t lemma_checks = 0;
    std::uint64_t lemma_violations = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::string> samples; // first few mismatch / violation descriptions

    void merge(const CensusRow& o) {
        graphs += o.graphs;
        members += o.members;
        split_members += o.split_members;
        prime_members += o.prime_members;
        pentagon_leaves += o.pentagon_leaves;
        skew_runs += o.skew_runs;
        lemma_checks += o.lemma_checks;
        lemma_violations += o.lemma_violations;
        mismatches += o.mismatches;
        for (const auto& s : o.samples)
            if (samples.size() < 8) samples.push_back(s);
    }
};

struct CensusOptions {
    Mode mode = Mode::Pair;
    unsigned threads = 1;
    bool check_lemmas = false;
};

namespace detail {

inline void census_one(const Graph& g, std::uint64_t code, const CensusOptions& opt, CensusRow& row) {
    auto note = [&](const std::string& s) {
        if (row.samples.size() < 8) row.samples.push_back("n=" + std::to_string(g.order()) + " #" + std::to_string(code) + ": " + s);
    };
    ++row.graphs;
    const bool member = is_class_member(g, triple(opt.mode));
    DecomposeOptions d;
    d.mode = opt.mode;
    d.on_skew = [&](const SkewTrace& t) {
        ++row.skew_runs;
        if (!opt.check_lemmas) return;
        LemmaReport r = check_skew_trace(t.host, t.initial, t.maximal);
        row.lemma_checks += r.checks;
        row.lemma_violations += r.violations.size();
        if (!r.ok()) note(r.violations.front());
    };
    try {
        DecompTree t = decompose(g, d);
        if (!member) {
            ++row.mismatches;
            note("decomposed a non-member");
            return;
        }
        ++row.members;
        if (is_split(g)) ++row.split_members;
        if (g.order() >= 3 && is_prime(g)) ++row.prime_members;
        const TreeStats st = tree_stats(t);
        if (auto it = st.by_kind.find(NodeKind::PentagonLeaf); it != st.by_kind.end()) row.pentagon_leaves += it->second;
        const VerifyReport v = verify_tree(t, g);
        if (!v.ok) {
            ++row.mismatches;
            note("verify failed: " + v.obligation + " at " + v.path);
        } else if (recompose(t) != g) {
            ++row.mismatches;
            note("recomposition differs");
        }
    } catch (const NotClassMember&) {
        if (member) {
            ++row.mismatches;
            note("member rejected");
        }
    } catch (const std::exception& e) {
        ++row.mismatches;
        note(e.what());
    }
}

} // namespace detail

/// Decomposes every labeled graph on n vertices and compares against the
/// oracle. The row is identical for every thread count.
inline CensusRow census_row(std::size_t n, const CensusOptions& opt) {
    const std::uint64_t total = labeled_graph_count(n);
    const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
    std::vector<CensusRow> parts(threads);
    auto work = [&](unsigned w) {
        const std::uint64_t lo = total * w / threads, hi = total * (w + 1) / threads;
        for (std::uint64_t c = lo; c < hi; ++c) detail::census_one(labeled_graph(n, c), c, opt, parts[w]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    CensusRow row;
    row.n = n;
    for (const auto& p : parts) row.merge(p);
    return row;
}

inline std::vector<CensusRow> run_census(std::size_t max_n, const CensusOptions& opt) {
    std::vector<CensusRow> rows;
    for (std::size_t n = 0; n <= max_n; ++n) rows.push_back(census_row(n, opt));
    return rows;
}

} // namespace p5g
