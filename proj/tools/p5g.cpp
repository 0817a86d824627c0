// p5g: recognize, decompose, recompose, verify, generate and census for
// {P5, house}-free graphs.
//
// Exit codes: 0 ok, 1 semantic failure, 2 I/O or parse error, 3 internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "p5g/census.hpp"
#include "p5g/decompose.hpp"
#include "p5g/generator.hpp"
#include "p5g/graph6.hpp"
#include "p5g/tree_io.hpp"

namespace {

using namespace p5g;

enum Exit { Ok = 0, Semantic = 1, Io = 2, Internal = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write " + path);
}

GraphFormat format_of(const std::string& s) {
    if (s == "graph6") return GraphFormat::Graph6;
    if (s == "edges") return GraphFormat::EdgeList;
    return GraphFormat::Auto;
}

std::string graph_text(const Graph& g) {
    bool canonical = g.order() <= kGraph6MaxOrder;
    for (std::size_t i = 0; canonical && i < g.order(); ++i) canonical = g.id(i) == i;
    return canonical ? emit_graph6(g) + "\n" : emit_edge_list(g);
}

std::string stats_text(const DecompTree& t) {
    const TreeStats s = tree_stats(t);
    std::ostringstream o;
    o << "depth " << s.depth << ", nodes " << s.nodes;
    for (NodeKind k : {NodeKind::SplitLeaf, NodeKind::PentagonLeaf, NodeKind::Subst, NodeKind::Sgu, NodeKind::CoSgu}) {
        auto it = s.by_kind.find(k);
        o << ", " << to_string(k) << " " << (it == s.by_kind.end() ? 0 : it->second);
    }
    return o.str();
}

int run_recognize(const std::string& input, const std::string& fmt, bool triple_mode) {
    const Graph g = parse_graph(slurp(input), format_of(fmt));
    if (auto w = class_witness(g, triple_mode)) {
        std::cout << "non-member: " << describe(*w) << "\n";
        return Semantic;
    }
    std::cout << "member\n";
    return Ok;
}

int run_decompose(const std::string& input, const std::string& fmt, const std::string& out, bool triple_mode) {
    const Graph g = parse_graph(slurp(input), format_of(fmt));
    if (g.order() > kGraph6MaxOrder) throw IoError("graphs above 62 vertices cannot be stored in a tree document");
    DecomposeOptions opt;
    opt.mode = triple_mode ? Mode::Triple : Mode::Pair;
    DecompTree t;
    try {
        t = decompose(g, opt);
    } catch (const NotClassMember& e) {
        std::cout << "non-member: " << describe(e.witness()) << "\n";
        return Semantic;
    }
    const VerifyReport v = verify_tree(t, g);
    if (!v.ok) {
        std::cerr << "internal: tree failed verification (" << v.obligation << " at " << v.path << ")\n";
        return Internal;
    }
    const std::string doc = write_tree_document({g, t});
    if (out.empty() || out == "-") {
        std::cout << doc;
        std::cerr << stats_text(t) << "\n";
    } else {
        spill(out, doc);
        std::cout << stats_text(t) << "\n";
    }
    return Ok;
}

TreeDocument load_document(const std::string& path) {
    try {
        return read_tree_document(slurp(path));
    } catch (const MalformedTree& e) {
        throw IoError(std::string("tree document: ") + e.what());
    }
}

int run_recompose(const std::string& path, const std::string& out) {
    const TreeDocument doc = load_document(path);
    const Graph g = recompose(doc.tree);
    spill(out, graph_text(g));
    if (g != doc.root_graph) {
        std::cerr << "recomposed graph differs from rootGraph\n";
        return Semantic;
    }
    return Ok;
}

int run_verify(const std::string& path, const std::string& graph_input, const std::string& fmt) {
    const TreeDocument doc = load_document(path);
    const Graph g = graph_input.empty() ? doc.root_graph : parse_graph(slurp(graph_input), format_of(fmt));
    const VerifyReport v = verify_tree(doc.tree, g);
    if (!v.ok) {
        std::cout << "FAIL " << v.obligation << " at " << v.path << ": " << v.detail << "\n";
        return Semantic;
    }
    std::cout << "ok\n";
    return Ok;
}

std::array<double, 5> parse_weights(const std::string& s) {
    std::array<double, 5> w{};
    std::istringstream in(s);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(in, tok, ',')) {
        if (i == 5) throw CLI::ValidationError("--weights", "expected five comma-separated numbers");
        try {
            w[i++] = std::stod(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weights", "not a number: " + tok);
        }
    }
    if (i != 5) throw CLI::ValidationError("--weights", "expected five comma-separated numbers");
    return w;
}

int run_generate(GenConfig cfg, std::size_t count, const std::string& out_dir) {
    if (!out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) throw IoError("cannot create " + out_dir);
    }
    const std::uint64_t base = cfg.seed;
    for (std::size_t i = 0; i < count; ++i) {
        cfg.seed = base + i;
        const Generated gen = generate(cfg);
        const std::string g6 = emit_graph6(gen.graph);
        std::cout << g6 << "\n";
        if (!out_dir.empty()) {
            const std::string stem = out_dir + "/gen_" + std::to_string(cfg.seed);
            spill(stem + ".g6", g6 + "\n");
            spill(stem + ".json", write_tree_document({gen.graph, gen.tree}));
        }
    }
    return Ok;
}

int run_census_cmd(std::size_t max_n, bool triple_mode, unsigned threads, bool lemmas) {
    if (max_n > 8) throw CLI::ValidationError("--max-n", "at most 8");
    CensusOptions opt;
    opt.mode = triple_mode ? Mode::Triple : Mode::Pair;
    opt.threads = threads;
    opt.check_lemmas = lemmas;
    std::uint64_t mismatches = 0, violations = 0;
    std::printf("%3s %12s %10s %10s %10s %10s %10s\n", "n", "graphs", "members", "split", "prime", "pentagons",
                "mismatch");
    for (std::size_t n = 0; n <= max_n; ++n) {
        const CensusRow r = census_row(n, opt);
        std::printf("%3zu %12llu %10llu %10llu %10llu %10llu %10llu\n", n, static_cast<unsigned long long>(r.graphs),
                    static_cast<unsigned long long>(r.members), static_cast<unsigned long long>(r.split_members),
                    static_cast<unsigned long long>(r.prime_members),
                    static_cast<unsigned long long>(r.pentagon_leaves), static_cast<unsigned long long>(r.mismatches));
        for (const auto& s : r.samples) std::printf("    %s\n", s.c_str());
        mismatches += r.mismatches;
        violations += r.lemma_violations;
        if (lemmas)
            std::printf("    lemma checks %llu, violations %llu\n", static_cast<unsigned long long>(r.lemma_checks),
                        static_cast<unsigned long long>(r.lemma_violations));
    }
    std::printf("total mismatches: %llu\n", static_cast<unsigned long long>(mismatches));
    return mismatches == 0 && violations == 0 ? Ok : Semantic;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decomposition of {P5, house}-free graphs"};
    app.require_subcommand(1);
    int code = Ok;
    std::string fmt = "auto";
    const auto add_format = [&](CLI::App* c) {
        c->add_option("--format", fmt, "input graph format")->check(CLI::IsMember({"auto", "graph6", "edges"}));
    };

    std::string input = "-";
    bool triple_mode = false;
    auto* rec = app.add_subcommand("recognize", "test class membership");
    rec->add_option("input", input, "graph file (graph6 or edge list), - for stdin");
    rec->add_flag("--triple", triple_mode, "also forbid C5");
    add_format(rec);

    std::string out;
    auto* dec = app.add_subcommand("decompose", "write a verified decomposition tree");
    dec->add_option("input", input, "graph file, - for stdin");
    dec->add_option("--out", out, "tree document path (default stdout)");
    dec->add_flag("--triple", triple_mode, "also forbid C5");
    add_format(dec);

    std::string tree_path;
    auto* rcm = app.add_subcommand("recompose", "rebuild the graph of a tree document");
    rcm->add_option("tree", tree_path, "tree document")->required();
    rcm->add_option("--out", out, "output path (default stdout)");

    std::string graph_input;
    auto* ver = app.add_subcommand("verify", "check a tree document");
    ver->add_option("tree", tree_path, "tree document")->required();
    ver->add_option("graph", graph_input, "graph to compare against (default: the document's rootGraph)");
    add_format(ver);

    GenConfig cfg;
    std::size_t count = 1;
    std::string weights;
    auto* gen = app.add_subcommand("generate", "synthesize class members from the grammar");
    gen->add_option("--seed", cfg.seed, "base seed; sample i uses seed + i");
    gen->add_option("--depth", cfg.max_depth, "maximum tree depth")->check(CLI::Range(0, 16));
    gen->add_option("--weights", weights, "split,pentagon,subst,sgu,cosgu");
    gen->add_option("--count", count, "number of samples");
    gen->add_option("--max-vertices", cfg.max_vertices, "vertex budget")->check(CLI::Range(1, 62));
    gen->add_option("--out", out, "directory for .g6 and .json files");

    std::size_t max_n = 5;
    unsigned threads = 1;
    bool lemmas = false;
    auto* cen = app.add_subcommand("census", "decompose every labeled graph up to --max-n");
    cen->add_option("--max-n", max_n, "largest order");
    cen->add_flag("--triple", triple_mode, "also forbid C5");
    cen->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
    cen->add_flag("--lemmas", lemmas, "check the skew-partition lemmas on every run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : Io;
    }

    try {
        if (*rec) code = run_recognize(input, fmt, triple_mode);
        else if (*dec) code = run_decompose(input, fmt, out, triple_mode);
        else if (*rcm) code = run_recompose(tree_path, out);
        else if (*ver) code = run_verify(tree_path, graph_input, fmt);
        else if (*gen) {
            if (!weights.empty()) cfg.weights = parse_weights(weights);
            code = run_generate(cfg, count, out);
        } else if (*cen) code = run_census_cmd(max_n, triple_mode, threads, lemmas);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Io;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Io;
    } catch (const FormatError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Io;
    } catch (const MalformedTree& e) {
        std::cerr << "malformed tree: " << e.what() << "\n";
        return Semantic;
    } catch (const InternalStructureError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return Internal;
    } catch (const GenerationExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Semantic;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Semantic;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return Internal;
    }
    return code;
}
