// Command line front end.  Reports are KEY-value lines; commands whose
// product is a graph, representation or picture write that product to stdout
// (or --emit) and push their report lines to stderr so pipes stay clean.
// Exit codes: 0 affirmative, 10 certified negative, 11 inconclusive or
// exhausted-at-bound, 2 usage, 3 parse error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "epglab/b1_search.hpp"
#include "epglab/catalog.hpp"
#include "epglab/certificates.hpp"
#include "epglab/classify.hpp"
#include "epglab/construct.hpp"
#include "epglab/epg_analysis.hpp"
#include "epglab/families.hpp"
#include "epglab/graph_algos.hpp"
#include "epglab/hellify.hpp"
#include "epglab/render.hpp"
#include "epglab/rep.hpp"
#include "epglab/tree_model.hpp"

namespace {

using namespace epglab;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 10;
constexpr int kExitInconclusive = 11;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph graph_arg(const std::string& path) {
    if (path == "-") return parse_graph(read_all(std::cin));
    return load_graph(path);
}

Rep rep_arg(const std::string& path) {
    if (path == "-") return parse_rep(read_all(std::cin));
    return load_rep(path);
}

void emit(const std::string& text, const std::string& emit_path) {
    if (emit_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(emit_path);
    if (!out) throw ParseError("cannot write " + emit_path);
    out << text;
}

bool parse_grid(const std::string& spec, int& w, int& h) {
    size_t x = spec.find('x');
    if (x == std::string::npos) return false;
    try {
        size_t used = 0;
        w = std::stoi(spec.substr(0, x), &used);
        if (used != x) return false;
        std::string rest = spec.substr(x + 1);
        h = std::stoi(rest, &used);
        if (used != rest.size()) return false;
    } catch (const std::logic_error&) {
        return false;
    }
    return w >= 1 && h >= 1;
}

// the environment cap overrides every search budget when present
uint64_t effective_max_nodes(uint64_t flag_value) {
    if (const char* env = std::getenv("EPGLAB_MAX_NODES")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            throw RangeError("EPGLAB_MAX_NODES is not a number");
        }
    }
    return flag_value;
}

const char* tri_word(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "unknown";
    }
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string id_list(const std::vector<int>& ids) {
    std::string s;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(ids[i]);
    }
    return s;
}

// A model exhausted on a grid this large is conclusive: any model can be
// compressed onto the distinct coordinate lines its endpoints and corners
// use, at most 2 per path per axis, so 3n x 3n always suffices.
bool conclusive_grid(const Graph& g, int width, int height) {
    return width >= 3 * g.n() && height >= 3 * g.n();
}

struct SearchFlags {
    std::string grid;
    uint64_t max_nodes = 0;
    bool defaulted_cap = false;
};

void apply_search_flags(const Graph& g, const SearchFlags& f, SearchOptions& opt) {
    if (!f.grid.empty()) {
        if (!parse_grid(f.grid, opt.width, opt.height))
            throw RangeError("bad --grid, expected WxH");
    }
    opt.max_nodes = effective_max_nodes(f.max_nodes);
    opt.parallel = true;
    (void)g;
}

int cmd_corpus(const std::string& family, const std::vector<std::string>& params) {
    std::string spec = family;
    for (size_t i = 0; i < params.size(); ++i)
        spec += (i == 0 ? ":" : ",") + params[i];
    std::cout << format_graph(make_family(spec));
    return kExitOk;
}

int cmd_classify(const std::string& path) {
    Graph g = graph_arg(path);
    ClassFlags f = classify_graph(g);
    std::cout << "VERTICES " << g.n() << "\n";
    std::cout << "EDGES " << edge_list(g).size() << "\n";
    std::cout << "BIPARTITE " << yn(f.bipartite) << "\n";
    std::cout << "BLOCK_GRAPH " << yn(f.block_graph) << "\n";
    std::cout << "CACTUS " << yn(f.cactus) << "\n";
    std::cout << "LINE_OF_BIPARTITE " << yn(f.line_of_bipartite) << "\n";
    return kExitOk;
}

int cmd_venn(const std::string& path, const SearchFlags& sf) {
    Graph g = graph_arg(path);
    ClassFlags f = classify_graph(g);
    VennEvidence ev = upgrade_evidence(f, {});

    SearchOptions opt;
    apply_search_flags(g, sf, opt);
    if (opt.max_nodes == 0 && sf.max_nodes == 0)
        opt.max_nodes = effective_max_nodes(20'000'000);

    auto settle = [&](bool helly) {
        SearchOptions o = opt;
        o.require_helly = helly;
        SearchResult r = search_b1(g, o);
        if (r.status == SearchStatus::found) return Tri::yes;
        int w = o.width ? o.width : 3 * std::max(g.n(), 1);
        int h = o.height ? o.height : 3 * std::max(g.n(), 1);
        if (r.status == SearchStatus::exhausted && conclusive_grid(g, w, h))
            return Tri::no;
        return Tri::unknown;
    };
    if (ev.b1 == Tri::unknown) {
        ev.b1 = settle(false);
        ev = upgrade_evidence(f, ev);
    }
    if (ev.b1 == Tri::no) ev.helly_b1 = Tri::no;
    if (ev.helly_b1 == Tri::unknown) {
        ev.helly_b1 = settle(true);
        ev = upgrade_evidence(f, ev);
    }

    VennResult res = venn_region(f, ev);
    std::cout << "BIPARTITE " << yn(f.bipartite) << "\n";
    std::cout << "BLOCK_GRAPH " << yn(f.block_graph) << "\n";
    std::cout << "CACTUS " << yn(f.cactus) << "\n";
    std::cout << "LINE_OF_BIPARTITE " << yn(f.line_of_bipartite) << "\n";
    std::cout << "B1 " << tri_word(ev.b1) << "\n";
    std::cout << "HELLY_B1 " << tri_word(ev.helly_b1) << "\n";
    for (int r : res.regions)
        std::cout << "REGION " << r << " " << venn_region_name(r) << "\n";
    return res.decided() ? kExitOk : kExitInconclusive;
}

int cmd_check_rep(const std::string& path) {
    Rep rep = rep_arg(path);  // parse validates
    Graph g = intersection_graph(rep);
    std::cout << "VALID yes\n";
    std::cout << "VERTICES " << rep.n() << "\n";
    std::cout << "GRID " << rep.width << "x" << rep.height << "\n";
    std::cout << "EDGES " << edge_list(g).size() << "\n";
    int edge_cliques = 0, claw_cliques = 0;
    for (const VertexSet& k : maximal_cliques(g)) {
        CliqueClass cc = classify_clique(rep, k);
        const char* kind = "neither";
        if (cc.kind == CliqueKind::edge_clique) {
            kind = "edge";
            ++edge_cliques;
        } else if (cc.kind == CliqueKind::claw_clique) {
            kind = "claw";
            ++claw_cliques;
        }
        std::cout << "CLIQUE " << id_list(k) << " : " << kind << "\n";
    }
    int true_pies = 0, false_pies = 0;
    for (const Pie& pie : find_pies(rep)) {
        ++(pie.proper ? true_pies : false_pies);
        std::cout << "PIE " << (pie.proper ? "true" : "false") << " center ("
                  << pie.center.x << "," << pie.center.y << ") members "
                  << pie.members[0] << " " << pie.members[1] << " "
                  << pie.members[2] << " " << pie.members[3] << "\n";
    }
    std::cout << "EDGE_CLIQUES " << edge_cliques << "\n";
    std::cout << "CLAW_CLIQUES " << claw_cliques << "\n";
    std::cout << "TRUE_PIES " << true_pies << "\n";
    std::cout << "FALSE_PIES " << false_pies << "\n";
    std::cout << "HELLY " << yn(is_helly(rep)) << "\n";
    return kExitOk;
}

int cmd_render(const std::string& path, const std::string& format,
               const std::string& emit_path) {
    Rep rep = rep_arg(path);
    if (format == "ascii") {
        emit(render_rep(rep), emit_path);
    } else if (format == "svg") {
        emit(render_svg(rep), emit_path);
    } else {
        throw RangeError("unknown render format: " + format);
    }
    return kExitOk;
}

int cmd_search_b1(const std::string& path, const SearchFlags& sf, bool helly,
                  const std::string& emit_path) {
    Graph g = graph_arg(path);
    SearchOptions opt;
    apply_search_flags(g, sf, opt);
    opt.require_helly = helly;
    SearchResult r = search_b1(g, opt);
    int w = opt.width ? opt.width : 3 * std::max(g.n(), 1);
    int h = opt.height ? opt.height : 3 * std::max(g.n(), 1);
    std::cerr << "GRID " << w << "x" << h << "\n";
    std::cerr << "NODES " << r.nodes << "\n";
    switch (r.status) {
        case SearchStatus::found:
            std::cerr << "STATUS found\n";
            emit(format_rep(compress_rep(r.rep)), emit_path);
            return kExitOk;
        case SearchStatus::exhausted:
            if (conclusive_grid(g, w, h)) {
                std::cerr << "STATUS non-member (bounded-complete)\n";
                return kExitNegative;
            }
            std::cerr << "STATUS exhausted (evidence only at this grid)\n";
            return kExitInconclusive;
        default:
            std::cerr << "STATUS budget\n";
            return kExitInconclusive;
    }
}

int cmd_hellify(const std::string& path, const std::string& emit_path) {
    Rep rep = rep_arg(path);
    HellifyResult r = hellify(rep);
    std::cerr << "ROUNDS " << r.rounds << "\n";
    if (!r.success) {
        const auto& d = *r.diamond;
        std::cerr << "STATUS blocked\n";
        std::cerr << "DIAMOND " << d[0] << " " << d[1] << " " << d[2] << " "
                  << d[3] << "\n";
        return kExitNegative;
    }
    std::cerr << "STATUS helly\n";
    emit(format_rep(r.rep), emit_path);
    return kExitOk;
}

int cmd_construct(const std::string& kind, const std::string& path,
                  const std::string& emit_path) {
    Graph g = graph_arg(path);
    Rep rep;
    try {
        if (kind == "block") {
            rep = construct_block_rep(g);
        } else if (kind == "cactus") {
            rep = construct_cactus_rep(g);
        } else {
            throw RangeError("construct kind must be block or cactus");
        }
    } catch (const WrongClass& e) {
        std::cerr << "STATUS rejected\n";
        std::cerr << "REASON " << e.what() << "\n";
        return kExitNegative;
    }
    std::cerr << "STATUS constructed\n";
    std::cerr << "GRID " << rep.width << "x" << rep.height << "\n";
    std::cerr << "HELLY " << yn(is_helly(rep)) << "\n";
    emit(format_rep(rep), emit_path);
    return kExitOk;
}

int cmd_certify(const std::string& path, const std::string& catalog_path) {
    Graph g = graph_arg(path);
    bool refuted = false;

    for (const NeighborhoodAtCert& c : check_neighborhood_at(g)) {
        refuted = true;
        std::cout << "CERT neighborhood-at vertex " << c.vertex << " triple "
                  << c.triple[0] << " " << c.triple[1] << " " << c.triple[2]
                  << "\n";
    }
    for (const BranchCert& c : check_branch_conditions(g)) {
        refuted = true;
        switch (c.kind) {
            case BranchCert::Kind::cycle:
                std::cout << "CERT branch-cycle clique " << id_list(c.clique)
                          << " witness " << id_list(c.witness) << "\n";
                break;
            case BranchCert::Kind::long_path:
                std::cout << "CERT branch-path clique " << id_list(c.clique)
                          << " witness " << id_list(c.witness) << "\n";
                break;
            default:
                std::cout << "CERT branch-chromatic clique " << id_list(c.clique)
                          << " chi " << c.chromatic << " on "
                          << id_list(c.witness) << "\n";
        }
    }
    std::vector<CatalogEntry> entries;
    if (!catalog_path.empty()) {
        entries = load_catalog_file(catalog_path);
    } else {
        entries = forbidden_vpt_up_to(g.n());
    }
    for (const ForbiddenCert& c : scan_forbidden(g, entries)) {
        refuted = true;
        std::cout << "CERT forbidden " << c.name << " embedding "
                  << id_list(c.embedding) << "\n";
    }
    for (const ForbiddenCert& c : scan_forbidden(g, helly_obstructions()))
        std::cout << "NOTE helly-obstruction " << c.name << " embedding "
                  << id_list(c.embedding) << "\n";

    std::cout << "CERTIFICATES " << (refuted ? "refuted" : "none") << "\n";
    return refuted ? kExitNegative : kExitInconclusive;
}

int cmd_tree_search(const std::string& path, const std::string& mode, int host,
                    const std::string& emit_path) {
    Graph g = graph_arg(path);
    if (mode != "vpt" && mode != "ept")
        throw RangeError("--mode must be vpt or ept");
    if (mode == "vpt" && check_chordal(g).chordal) {
        auto rep = vpt_rep_chordal(g);  // exact for chordal graphs
        if (!rep) {
            std::cerr << "STATUS non-member (chordal-exact)\n";
            return kExitNegative;
        }
        std::cerr << "STATUS found\n";
        std::cerr << "HOST " << rep->host.n() << "\n";
        emit(format_tree_rep(*rep), emit_path);
        return kExitOk;
    }
    int bound = host > 0 ? host : g.n() + 3;
    TreeSearch r = search_tree_rep(g, mode == "ept", bound);
    if (r.verdict == TreeVerdict::found) {
        std::cerr << "STATUS found\n";
        std::cerr << "HOST " << r.rep.host.n() << "\n";
        emit(format_tree_rep(r.rep), emit_path);
        return kExitOk;
    }
    std::cerr << "STATUS exhausted (hosts up to " << bound << " nodes)\n";
    return kExitInconclusive;
}

int run(int argc, char** argv) {
    CLI::App app{
        "Single-bend grid path representations: search, verification, "
        "transformation, constructions, certificates and host-tree models"};
    app.require_subcommand(1);
    int seed = 0;
    app.add_option("--seed", seed, "reserved; no semantic effect");

    std::string in_path, emit_path, grid, format = "ascii", mode = "vpt";
    std::string kind, catalog_path, family;
    std::vector<std::string> params;
    SearchFlags sf;
    bool helly = false;
    int host = 0;

    CLI::App* corpus = app.add_subcommand("corpus", "emit a named family graph");
    corpus->add_option("family", family, "family name, try `corpus help`")->required();
    corpus->add_option("params", params, "family parameters");

    CLI::App* classify = app.add_subcommand("classify", "class membership report");
    classify->add_option("graph", in_path, "graph file or -")->required();

    CLI::App* venn = app.add_subcommand("venn", "class-map region report");
    venn->add_option("graph", in_path, "graph file or -")->required();
    venn->add_option("--grid", sf.grid, "search grid WxH");
    venn->add_option("--max-nodes", sf.max_nodes, "search node budget");

    CLI::App* check = app.add_subcommand("check-rep", "validate and analyze a representation");
    check->add_option("rep", in_path, "representation file or -")->required();

    CLI::App* render = app.add_subcommand("render", "draw a representation");
    render->add_option("rep", in_path, "representation file or -")->required();
    render->add_option("--format", format, "ascii or svg");
    render->add_option("--emit", emit_path, "write to file instead of stdout");

    CLI::App* search = app.add_subcommand("search-b1", "search for a single-bend model");
    search->add_option("graph", in_path, "graph file or -")->required();
    search->add_flag("--helly", helly, "only accept models with the helly property");
    search->add_option("--grid", sf.grid, "grid WxH (default 3n x 3n)");
    search->add_option("--max-nodes", sf.max_nodes, "node budget, 0 = unlimited");
    search->add_option("--emit", emit_path, "write the model to a file");

    CLI::App* hellify_cmd = app.add_subcommand("hellify", "straighten a model into a helly one");
    hellify_cmd->add_option("rep", in_path, "representation file or -")->required();
    hellify_cmd->add_option("--emit", emit_path, "write the result to a file");

    CLI::App* construct = app.add_subcommand("construct", "direct model constructions");
    construct->add_option("kind", kind, "block or cactus")->required();
    construct->add_option("graph", in_path, "graph file or -")->required();
    construct->add_option("--emit", emit_path, "write the model to a file");

    CLI::App* certify = app.add_subcommand("certify", "non-membership certificates");
    certify->add_option("graph", in_path, "graph file or -")->required();
    certify->add_option("--catalog", catalog_path, "catalog file of forbidden graphs");

    CLI::App* tree = app.add_subcommand("tree-search", "path-in-tree host search");
    tree->add_option("graph", in_path, "graph file or -")->required();
    tree->add_option("--mode", mode, "vpt (share a node) or ept (share an edge)");
    tree->add_option("--host", host, "host node bound (default n + 3)");
    tree->add_option("--emit", emit_path, "write the model to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (corpus->parsed()) {
        if (family == "help") {
            std::cout << family_help();
            return kExitOk;
        }
        return cmd_corpus(family, params);
    }
    if (classify->parsed()) return cmd_classify(in_path);
    if (venn->parsed()) return cmd_venn(in_path, sf);
    if (check->parsed()) return cmd_check_rep(in_path);
    if (render->parsed()) return cmd_render(in_path, format, emit_path);
    if (search->parsed()) return cmd_search_b1(in_path, sf, helly, emit_path);
    if (hellify_cmd->parsed()) return cmd_hellify(in_path, emit_path);
    if (construct->parsed()) return cmd_construct(kind, in_path, emit_path);
    if (certify->parsed()) return cmd_certify(in_path, catalog_path);
    if (tree->parsed()) return cmd_tree_search(in_path, mode, host, emit_path);
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GraphTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
