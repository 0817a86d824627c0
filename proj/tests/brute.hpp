#pragma once

// Definition-level reference checks for the tests. Nothing here calls the
// library's search code: patterns are matched over injective tuples,
// splits and modules over all vertex subsets.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "p5g/graph.hpp"

namespace brute {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const p5g::Graph& g) {
    const std::size_t n = g.order();
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = g.adjacent(g.id(i), g.id(j));
    return m;
}

inline Matrix complement(const Matrix& m) {
    Matrix c = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) c[i][j] = i != j && !m[i][j];
    return c;
}

using PatternEdges = std::vector<std::pair<int, int>>;

inline const PatternEdges kP5{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
inline const PatternEdges kC5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
inline const PatternEdges kP4{{0, 1}, {1, 2}, {2, 3}};
inline const PatternEdges kH6{{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {4, 5}};

inline bool tuple_matches(const Matrix& m, const std::vector<std::size_t>& t, const PatternEdges& pe) {
    const std::size_t k = t.size();
    std::vector<std::vector<bool>> want(k, std::vector<bool>(k, false));
    for (auto [a, b] : pe) want[a][b] = want[b][a] = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (m[t[i]][t[j]] != want[i][j]) return false;
    return true;
}

// Injective tuples, extended one position at a time; a prefix is dropped as
// soon as it disagrees with the pattern.
inline bool contains_pattern(const Matrix& m, const PatternEdges& pe, std::size_t k) {
    const std::size_t n = m.size();
    if (n < k) return false;
    std::vector<std::vector<bool>> want(k, std::vector<bool>(k, false));
    for (auto [a, b] : pe) want[a][b] = want[b][a] = true;
    std::vector<std::size_t> t;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> bool {
        if (t.size() == k) return tuple_matches(m, t, pe);
        const std::size_t pos = t.size();
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool fits = true;
            for (std::size_t i = 0; fits && i < pos; ++i) fits = m[t[i]][v] == want[i][pos];
            if (!fits) continue;
            used[v] = true;
            t.push_back(v);
            bool hit = self(self);
            t.pop_back();
            used[v] = false;
            if (hit) return true;
        }
        return false;
    };
    return rec(rec);
}

inline bool has_p5(const Matrix& m) { return contains_pattern(m, kP5, 5); }
inline bool has_house(const Matrix& m) { return contains_pattern(complement(m), kP5, 5); }
inline bool has_c5(const Matrix& m) { return contains_pattern(m, kC5, 5); }

inline bool member(const Matrix& m, bool triple) { return !has_p5(m) && !has_house(m) && !(triple && has_c5(m)); }

inline bool is_split(const Matrix& m) {
    const std::size_t n = m.size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i)
            for (std::size_t j = i + 1; ok && j < n; ++j) {
                const bool ci = (s >> i) & 1u, cj = (s >> j) & 1u;
                if (ci && cj && !m[i][j]) ok = false;
                if (!ci && !cj && m[i][j]) ok = false;
            }
        if (ok) return true;
    }
    return false;
}

inline bool homogeneous(const Matrix& m, std::uint64_t s) {
    for (std::size_t v = 0; v < m.size(); ++v) {
        if ((s >> v) & 1u) continue;
        int seen = -1;
        for (std::size_t x = 0; x < m.size(); ++x) {
            if (!((s >> x) & 1u)) continue;
            const int a = m[v][x];
            if (seen >= 0 && seen != a) return false;
            seen = a;
        }
    }
    return true;
}

inline bool is_prime(const Matrix& m) {
    const std::size_t n = m.size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const auto k = static_cast<std::size_t>(__builtin_popcountll(s));
        if (k >= 2 && k + 1 <= n && homogeneous(m, s)) return false;
    }
    return true;
}

inline bool connected(const Matrix& m, const std::vector<std::size_t>& part) {
    if (part.empty()) return true;
    std::vector<bool> in(m.size(), false), seen(m.size(), false);
    for (auto v : part) in[v] = true;
    std::vector<std::size_t> stack{part[0]};
    seen[part[0]] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t w = 0; w < m.size(); ++w)
            if (in[w] && !seen[w] && m[v][w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return reached == part.size();
}

/// Graph number `code` on 0..n-1 with pair bits in row-major (i < j) order.
inline p5g::Graph labeled(std::size_t n, std::uint64_t code) {
    std::vector<p5g::Edge> e;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++k)
            if ((code >> k) & 1u) e.emplace_back(static_cast<p5g::Vertex>(i), static_cast<p5g::Vertex>(j));
    return p5g::Graph::on_range(n, e);
}

inline std::uint64_t graphs_on(std::size_t n) { return std::uint64_t{1} << (n * (n - (n > 0)) / 2); }

inline p5g::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<p5g::Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(static_cast<p5g::Vertex>(i), static_cast<p5g::Vertex>(j));
    return p5g::Graph::on_range(n, e);
}

} // namespace brute
