#pragma once

// JSON tree documents: {"version": 1, "rootGraph": <graph6>, "node": {...}}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "p5g/decompose.hpp"
#include "p5g/graph6.hpp"

namespace p5g {

inline constexpr int kTreeDocumentVersion = 1;

struct TreeDocument {
    Graph root_graph;
    DecompTree tree;
};

namespace detail {

using Json = nlohmann::json;

inline Json edges_json(const Graph& g) {
    Json e = Json::array();
    for (auto [u, v] : g.edges()) e.push_back({u, v});
    return e;
}

inline Json node_json(const DecompTree& t) {
    Json j;
    j["kind"] = to_string(t.kind);
    switch (t.kind) {
    case NodeKind::SplitLeaf:
        j["vertices"] = t.graph.vertices();
        j["edges"] = edges_json(t.graph);
        j["cert"] = {{"clique", t.cert.clique}, {"stable", t.cert.stable}};
        break;
    case NodeKind::PentagonLeaf:
        j["vertices"] = t.graph.vertices();
        j["edges"] = edges_json(t.graph);
        j["roles"] = {{"cycle", t.cycle}};
        break;
    case NodeKind::Subst: j["roles"] = {{"marker", t.marker}}; break;
    case NodeKind::Sgu:
    case NodeKind::CoSgu:
        j["roles"] = {{"A", t.roles.a}, {"B", t.roles.b}, {"C", t.roles.c}, {"L", t.roles.l},
                      {"T", t.roles.t}, {"a", t.roles.marker_a}, {"c", t.roles.marker_c}};
        break;
    }
    if (!t.children.empty()) {
        j["children"] = Json::array();
        for (const auto& c : t.children) j["children"].push_back(node_json(c));
    }
    return j;
}

inline const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) throw MalformedTree(path, std::string("missing field '") + key + "'");
    return j.at(key);
}

inline Vertex id_of(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) throw MalformedTree(path, "vertex id is not a non-negative integer");
    return j.get<Vertex>();
}

inline VertexSet set_of(const Json& j, const std::string& path) {
    if (!j.is_array()) throw MalformedTree(path, "expected an array of vertex ids");
    VertexSet s;
    for (const auto& v : j) s.push_back(id_of(v, path));
    VertexSet sorted = make_set(s);
    if (sorted.size() != s.size()) throw MalformedTree(path, "repeated vertex id");
    return sorted;
}

inline Graph graph_of(const Json& j, const std::string& path) {
    VertexSet vs = set_of(field(j, "vertices", path), path + ".vertices");
    std::vector<Edge> edges;
    const Json& e = field(j, "edges", path);
    if (!e.is_array()) throw MalformedTree(path + ".edges", "expected an array");
    for (const auto& p : e) {
        if (!p.is_array() || p.size() != 2) throw MalformedTree(path + ".edges", "edge is not a pair");
        edges.emplace_back(id_of(p[0], path + ".edges"), id_of(p[1], path + ".edges"));
    }
    try {
        return Graph::from_edges(std::move(vs), edges);
    } catch (const PreconditionError& ex) {
        throw MalformedTree(path, ex.what());
    }
}

inline DecompTree node_of(const Json& j, const std::string& path) {
    DecompTree t;
    const Json& kind = field(j, "kind", path);
    const std::string k = kind.is_string() ? kind.get<std::string>() : "";
    if (k == "split") t.kind = NodeKind::SplitLeaf;
    else if (k == "pentagon") t.kind = NodeKind::PentagonLeaf;
    else if (k == "subst") t.kind = NodeKind::Subst;
    else if (k == "sgu") t.kind = NodeKind::Sgu;
    else if (k == "cosgu") t.kind = NodeKind::CoSgu;
    else throw MalformedTree(path, "unknown node kind");

    if (t.kind == NodeKind::SplitLeaf) {
        t.graph = graph_of(j, path);
        const Json& cert = field(j, "cert", path);
        t.cert = {set_of(field(cert, "clique", path + ".cert"), path + ".cert.clique"),
                  set_of(field(cert, "stable", path + ".cert"), path + ".cert.stable")};
    } else if (t.kind == NodeKind::PentagonLeaf) {
        t.graph = graph_of(j, path);
        const Json& cyc = field(field(j, "roles", path), "cycle", path + ".roles");
        if (!cyc.is_array()) throw MalformedTree(path + ".roles.cycle", "expected an array");
        for (const auto& v : cyc) t.cycle.push_back(id_of(v, path + ".roles.cycle"));
    } else if (t.kind == NodeKind::Subst) {
        t.marker = id_of(field(field(j, "roles", path), "marker", path + ".roles"), path + ".roles.marker");
    } else {
        const Json& r = field(j, "roles", path);
        const std::string rp = path + ".roles";
        t.roles = {set_of(field(r, "A", rp), rp + ".A"), set_of(field(r, "B", rp), rp + ".B"),
                   set_of(field(r, "C", rp), rp + ".C"), set_of(field(r, "L", rp), rp + ".L"),
                   set_of(field(r, "T", rp), rp + ".T"), id_of(field(r, "a", rp), rp + ".a"),
                   id_of(field(r, "c", rp), rp + ".c")};
    }
    const bool leaf = t.kind == NodeKind::SplitLeaf || t.kind == NodeKind::PentagonLeaf;
    if (j.contains("children")) {
        const Json& ch = j.at("children");
        if (!ch.is_array()) throw MalformedTree(path + ".children", "expected an array");
        for (std::size_t i = 0; i < ch.size(); ++i)
            t.children.push_back(node_of(ch[i], path + ".children[" + std::to_string(i) + "]"));
    }
    if (t.children.size() != (leaf ? 0u : 2u)) throw MalformedTree(path, "wrong number of children");
    return t;
}

} // namespace detail

inline std::string write_tree_document(const TreeDocument& doc) {
    detail::Json j;
    j["version"] = kTreeDocumentVersion;
    j["rootGraph"] = emit_graph6(doc.root_graph);
    j["node"] = detail::node_json(doc.tree);
    return j.dump(2) + "\n";
}

inline TreeDocument read_tree_document(std::string_view text) {
    detail::Json j;
    try {
        j = detail::Json::parse(text);
    } catch (const detail::Json::parse_error& e) {
        throw FormatError(e.byte, std::string("tree document: ") + e.what());
    }
    const detail::Json& ver = detail::field(j, "version", "document");
    if (!ver.is_number_integer() || ver.get<long long>() != kTreeDocumentVersion)
        throw MalformedTree("document.version", "unsupported tree document version " + ver.dump());
    const detail::Json& root = detail::field(j, "rootGraph", "document");
    if (!root.is_string()) throw MalformedTree("document.rootGraph", "expected a graph6 string");
    TreeDocument doc;
    doc.root_graph = parse_graph6(root.get<std::string>());
    doc.tree = detail::node_of(detail::field(j, "node", "document"), "node");
    return doc;
}

} // namespace p5g
