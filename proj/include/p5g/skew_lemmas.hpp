#pragma once

// Executable versions of the structural lemmas about skew-partitions of
// {P5, house, C5}-free graphs. Every check returns violations instead of
// throwing so sweeps can report all failures at once.

#include <string>
#include <vector>

#include "p5g/graph.hpp"
#include "p5g/skew.hpp"

namespace p5g {

struct LemmaReport {
    std::vector<std::string> violations;
    std::size_t checks = 0;
    bool ok() const { return violations.empty(); }
    void merge(const LemmaReport& o) {
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
        checks += o.checks;
    }
};

namespace detail {

inline std::string vtx(const Graph& g, std::size_t i) { return std::to_string(g.id(i)); }

inline void expect(LemmaReport& r, bool cond, const char* lemma, const std::string& what) {
    ++r.checks;
    if (!cond) r.violations.push_back(std::string(lemma) + ": " + what);
}

// Mixed-vertex witness on a connected or anti-connected part.
inline void check_witnesses(const Graph& g, Mask part, Mask outside, WitnessMode mode, LemmaReport& r) {
    for_each_bit(outside, [&](std::size_t v) {
        if (!mixed_on(g, v, part)) return;
        auto [x1, x2] = find_mixed_witness(g, g.id(v), g.set_of(part), mode);
        const bool edge = g.adjacent(x1, x2);
        const bool ok = g.adjacent(g.id(v), x1) && !g.adjacent(g.id(v), x2) &&
                        (mode == WitnessMode::ConnectedEdge ? edge : !edge);
        expect(r, ok, "mixed-witness", "bad witness for vertex " + vtx(g, v));
    });
}

// Both dichotomy lemmas for one triple: xi connected, yj anti-connected, v
// complete to yj and anti-complete to xi.
inline void check_triple(const Graph& g, Mask xi, Mask yj, std::size_t v, LemmaReport& r) {
    const std::string at = " (v=" + vtx(g, v) + ")";
    // Non-adjacent y, y' in yj split by some vertex of xi.
    for_each_bit(yj, [&](std::size_t y) {
        for_each_bit(yj & ~g.row(y) & ~bit(y), [&](std::size_t y2) {
            if ((xi & g.row(y) & ~g.row(y2)) == 0) return;
            expect(r, (xi & ~g.row(y)) == 0 && (xi & g.row(y2)) == 0, "not-mixed-on-edge",
                   "pair " + vtx(g, y) + "," + vtx(g, y2) + at);
        });
    });
    // Adjacent x, x' in xi split by some vertex of yj.
    for_each_bit(xi, [&](std::size_t x) {
        for_each_bit(xi & g.row(x), [&](std::size_t x2) {
            if ((yj & g.row(x) & ~g.row(x2)) == 0) return;
            expect(r, (yj & ~g.row(x)) == 0 && (yj & g.row(x2)) == 0, "not-mixed-on-edge",
                   "pair " + vtx(g, x) + "," + vtx(g, x2) + at);
        });
    });
    for_each_bit(xi, [&](std::size_t x0) {
        if (!mixed_on(g, x0, yj)) return;
        const Mask up = yj & g.row(x0), down = yj & ~g.row(x0);
        expect(r, complete_to(g, xi, up) && anticomplete_to(g, xi, down), "mixed-one-way",
               "x0=" + vtx(g, x0) + at);
    });
    for_each_bit(yj, [&](std::size_t y0) {
        if (!mixed_on(g, y0, xi)) return;
        const Mask up = xi & g.row(y0), down = xi & ~g.row(y0);
        expect(r, complete_to(g, yj, up) && anticomplete_to(g, yj, down), "mixed-one-way",
               "y0=" + vtx(g, y0) + at);
    });
}

} // namespace detail

/// Checks every lemma applicable to the skew-partition sp of the class member
/// g. The usable-partition lemmas are applied whenever usability condition
/// (a) or (b) holds. The analysis lemma is only claimed for prime hosts, which
/// the caller asserts through `prime`.
inline LemmaReport check_skew_lemmas(const Graph& g, const SkewPartition& sp, bool prime) {
    LemmaReport r;
    detail::expect(r, is_skew_partition(g, sp), "skew-partition", "(X, Y) is not a skew-partition");
    if (!r.ok()) return r;
    const Mask x = g.mask_of(sp.x), y = g.mask_of(sp.y);
    const std::vector<Mask> xc = component_masks(g, x), ya = anti_component_masks(g, y);

    for (Mask c : xc) detail::check_witnesses(g, c, y, WitnessMode::ConnectedEdge, r);
    for (Mask c : ya) detail::check_witnesses(g, c, x, WitnessMode::AntiConnectedNonEdge, r);

    for_each_bit(y, [&](std::size_t v) {
        std::size_t k = 0;
        for (Mask c : xc) k += mixed_on(g, v, c);
        detail::expect(r, k <= 1, "not-mixed-on-two", "vertex " + detail::vtx(g, v) + " of Y");
    });
    for_each_bit(x, [&](std::size_t v) {
        std::size_t k = 0;
        for (Mask c : ya) k += mixed_on(g, v, c);
        detail::expect(r, k <= 1, "not-mixed-on-two", "vertex " + detail::vtx(g, v) + " of X");
    });

    for (Mask xi : xc)
        for (Mask yj : ya)
            for_each_bit(g.all() & ~(xi | yj), [&](std::size_t v) {
                if ((yj & ~g.row(v)) == 0 && (xi & g.row(v)) == 0) detail::check_triple(g, xi, yj, v, r);
            });

    const SkewDecomposition d = decompose_skew(g, sp);
    const bool ua = usable_a(g, d), ub = usable_b(g, d);
    Mask xs = 0, ys = 0;
    for (const auto& p : d.x_parts) xs |= g.mask_of(p);
    for (const auto& p : d.y_parts) ys |= g.mask_of(p);
    if (ua) {
        for (const auto& p : d.y_parts) {
            const Mask yj = g.mask_of(p);
            bool ok = true;
            for_each_bit(xs, [&](std::size_t v) { ok = ok && !mixed_on(g, v, yj); });
            detail::expect(r, ok, "not-mixed-on-other-half", "a vertex of the X-parts is mixed on a Y-part");
        }
    }
    if (ub) {
        for (const auto& p : d.x_parts) {
            const Mask xi = g.mask_of(p);
            bool ok = true;
            for_each_bit(ys, [&](std::size_t v) { ok = ok && !mixed_on(g, v, xi); });
            detail::expect(r, ok, "not-mixed-on-other-half", "a vertex of the Y-parts is mixed on an X-part");
        }
    }
    if (prime && ua && !d.y_parts.empty()) {
        bool nonempty = true, some = false;
        const Mask k = g.mask_of(d.k);
        for (std::size_t j = 0; j < d.y_parts.size(); ++j) {
            nonempty = nonempty && !d.s_mixed[j].empty();
            some = some || anticomplete_to(g, g.mask_of(d.s_mixed[j]), y & ~(g.mask_of(d.y_parts[j]) | k));
        }
        detail::expect(r, nonempty, "skew-partition-analysis", "some S_j is empty");
        detail::expect(r, some, "skew-partition-analysis", "no S_j is anti-complete to the rest of Y");
    }
    if (prime && ub && !d.x_parts.empty()) {
        bool nonempty = true, some = false;
        const Mask s = g.mask_of(d.s);
        for (std::size_t i = 0; i < d.x_parts.size(); ++i) {
            nonempty = nonempty && !d.k_mixed[i].empty();
            some = some || complete_to(g, g.mask_of(d.k_mixed[i]), x & ~(g.mask_of(d.x_parts[i]) | s));
        }
        detail::expect(r, nonempty, "skew-partition-analysis", "some K_i is empty");
        detail::expect(r, some, "skew-partition-analysis", "no K_i is complete to the rest of X");
    }
    return r;
}

/// Lemmas for one run of the skew pipeline on a prime host: the initial
/// partition, the maximized one, and usability (a) of the maximized one.
inline LemmaReport check_skew_trace(const Graph& host, const SkewPartition& initial, const SkewPartition& maximal) {
    LemmaReport r = check_skew_lemmas(host, initial, true);
    r.merge(check_skew_lemmas(host, maximal, true));
    bool usable = is_skew_partition(host, maximal) && usable_a(host, decompose_skew(host, maximal));
    detail::expect(r, usable, "maximal-partition-usable", "maximized partition fails usability (a)");
    return r;
}

} // namespace p5g
