#pragma once

// graph6 (short form, n <= 62) and plain edge-list text formats.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "p5g/graph.hpp"

namespace p5g {

inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Graph on 0..n-1. Rejects the long form, out-of-range bytes, wrong length
/// and non-zero padding, reporting the 0-based byte offset.
inline Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw FormatError(0, "graph6: empty input");
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] < 63 || text[i] > 126) throw FormatError(i, "graph6: byte out of range");
    const std::size_t n = static_cast<std::size_t>(text[0] - 63);
    if (n > kGraph6MaxOrder) throw FormatError(0, "graph6: only orders up to 62 are supported");
    const std::size_t bits = n * (n - (n > 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != 1 + bytes)
        throw FormatError(std::min(text.size(), 1 + bytes), "graph6: expected " + std::to_string(1 + bytes) +
                                                                " bytes, got " + std::to_string(text.size()));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const unsigned byte = static_cast<unsigned>(text[1 + k / 6] - 63);
            if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    if (bits % 6 != 0) {
        const unsigned last = static_cast<unsigned>(text.back() - 63);
        if (last & ((1u << (6 - bits % 6)) - 1)) throw FormatError(text.size() - 1, "graph6: non-zero padding");
    }
    return Graph::on_range(n, edges);
}

/// Requires vertex ids 0..n-1.
inline std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) throw PreconditionError("emit_graph6: order above 62");
    for (std::size_t i = 0; i < n; ++i)
        if (g.id(i) != i) throw PreconditionError("emit_graph6: vertex ids must be 0..n-1");
    std::string out(1, static_cast<char>(63 + n));
    unsigned acc = 0;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            acc = (acc << 1) | ((g.row(j) >> i) & 1u);
            if (k % 6 == 5) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
            }
        }
    if (k % 6 != 0) out.push_back(static_cast<char>(63 + (acc << (6 - k % 6))));
    return out;
}

/// One "u v" pair per line, 0-based; blank lines ignored. The vertex set is
/// 0..max id, so an empty list is the null graph. Offsets are 1-based lines.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<Edge> edges;
    std::size_t n = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long u = -1, v = -1;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0)
            throw FormatError(lineno, "edge list: expected two non-negative integers");
        if (u == v) throw FormatError(lineno, "edge list: self-loop");
        if (static_cast<std::size_t>(std::max(u, v)) >= kMaxVertices)
            throw FormatError(lineno, "edge list: vertex id above 63");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        n = std::max(n, static_cast<std::size_t>(std::max(u, v)) + 1);
    }
    return Graph::on_range(n, edges);
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Auto picks the edge-list reader when the first non-blank line contains
/// whitespace between tokens, graph6 otherwise.
inline Graph parse_graph(std::string_view text, GraphFormat fmt = GraphFormat::Auto) {
    if (fmt == GraphFormat::Auto) {
        std::istringstream in{std::string(text)};
        std::string line;
        fmt = GraphFormat::Graph6;
        bool seen = false;
        while (!seen && std::getline(in, line)) {
            const auto b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            seen = true;
            const auto e = line.find_last_not_of(" \t\r");
            if (line.substr(b, e - b + 1).find_first_of(" \t") != std::string::npos) fmt = GraphFormat::EdgeList;
        }
        if (!seen) fmt = GraphFormat::EdgeList;
    }
    if (fmt == GraphFormat::EdgeList) return parse_edge_list(text);
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return parse_graph6(t);
}

} // namespace p5g
