#include "epglab/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

#include "epglab/certificates.hpp"
#include "epglab/families.hpp"
#include "epglab/graph_algos.hpp"

namespace epglab {

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace

// --- helly obstructions ---

Graph helly_obstruction(const std::string& name) {
    // shared core: triangle {0,1,2}; 3 sees {0,1}; 4 sees 0; 5 sees 1
    Graph g = from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 0}, {5, 1}});
    if (name == "S3") {
        g.add_edge(2, 4);
        g.add_edge(2, 5);
        return g;
    }
    if (name == "S3p") {
        g.add_edge(2, 4);
        return g;
    }
    if (name == "S3pp") return g;
    if (name == "C4") return cycle_graph(4);
    throw RangeError("unknown helly obstruction: " + name);
}

std::vector<CatalogEntry> helly_obstructions() {
    return {
        {"S3", helly_obstruction("S3"),
         "three-sun: triangle plus one private triangle per edge"},
        {"S3p", helly_obstruction("S3p"),
         "three-sun variant with one outer vertex reduced to a pendant"},
        {"S3pp", helly_obstruction("S3pp"),
         "three-sun variant with two outer vertices reduced to pendants"},
        {"C4", helly_obstruction("C4"), "the four-cycle"},
    };
}

// --- worked examples for the class map regions ---

std::vector<CatalogEntry> venn_examples() {
    std::vector<CatalogEntry> out;
    auto add = [&](const char* name, Graph g, const char* note) {
        out.push_back({name, std::move(g), note});
    };

    add("E1", helly_obstruction("S3"),
        "single-bend representable, yet every bounded-grid search for an "
        "intersection-closed (helly) model exhausts; outside all four "
        "classes");
    {
        Graph prism = from_edges(
            6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
        add("E2", prism,
            "triangular prism: line graph of a bipartite graph, "
            "neither bipartite nor a cactus nor a block graph");
    }
    add("E3", gem_graph(),
        "gem: interval graph, representable with the helly property, "
        "but outside all four classes");
    {
        Graph g = from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                 {3, 4}, {3, 5}, {4, 5}});
        add("E4", g,
            "K4 and a triangle sharing one vertex: a block graph that is a "
            "line graph of a bipartite graph, not a cactus");
    }
    add("E5", complete_graph(3),
        "triangle: cactus, block graph and line graph of a bipartite graph");
    add("E7", from_edges(4, {{0, 1}, {2, 3}}),
        "two disjoint edges: bipartite line graph of a bipartite graph; "
        "not a cactus (cacti are connected here)");
    add("E8", cycle_graph(4),
        "four-cycle: bipartite cactus and line graph of a bipartite graph, "
        "not a block graph");
    add("E9", path_graph(3),
        "path on three vertices: in all four classes");
    add("E10", complete_bipartite(1, 3),
        "claw: bipartite cactus and block graph, not a line graph of a "
        "bipartite graph");
    {
        Graph g = cycle_graph(4);
        Graph h(5);
        for (auto [u, v] : edge_list(g)) h.add_edge(u, v);
        h.add_edge(0, 4);
        add("E11", h,
            "four-cycle with a pendant edge: bipartite cactus, neither a "
            "block graph nor claw-free");
    }
    add("E12", complete_bipartite(2, 3),
        "K2,3: bipartite and single-bend representable, outside the three "
        "structural classes");
    add("E13", complete_bipartite(3, 3),
        "K3,3: bipartite with no single-bend representation");
    {
        Graph g = complete_graph(4);
        Graph h(6);
        for (auto [u, v] : edge_list(g)) h.add_edge(u, v);
        h.add_edge(0, 4);
        h.add_edge(0, 5);
        add("E14", h,
            "K4 with two pendant edges at one vertex: block graph only");
    }
    add("E15", from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}}),
        "two triangles and a pendant edge at a shared vertex: cactus and "
        "block graph, not claw-free");
    add("E16", cycle_graph(5),
        "five-cycle: cactus only");
    {
        Graph g = complete_bipartite(3, 3);
        Graph h(7);
        for (auto [u, v] : edge_list(g)) h.add_edge(u, v);
        h.add_edge(6, 0);
        h.add_edge(6, 3);
        add("E17", h,
            "K3,3 plus a vertex completing a triangle: not bipartite and "
            "no single-bend representation");
    }
    return out;
}

// --- chordal graphs with no path-in-tree model ---

namespace {

// Fixed members, frozen from an exhaustive search for minimal chordal
// graphs admitting no path-in-tree model (canonical labelings).

Graph fixed_f1() {  // universal vertex over a spider with three two-edge legs
    return from_edges(8, {{0, 3}, {0, 7}, {1, 4}, {1, 7}, {2, 5}, {2, 7}, {3, 6},
                          {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
}

Graph fixed_f2() {  // universal vertex over a three-sun
    return from_edges(7, {{0, 3}, {0, 4}, {0, 6}, {1, 3}, {1, 5}, {1, 6}, {2, 4},
                          {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6},
                          {5, 6}});
}

Graph fixed_f3() {  // universal vertex over two edge-sharing triangles with tips
    return from_edges(8, {{0, 5}, {0, 7}, {1, 3}, {1, 6}, {1, 7}, {2, 4}, {2, 6},
                          {2, 7}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7},
                          {5, 6}, {5, 7}, {6, 7}});
}

Graph fixed_f4() {  // universal vertex over a four-clique with three corners
    return from_edges(8, {{0, 3}, {0, 5}, {0, 7}, {1, 4}, {1, 6}, {1, 7}, {2, 5},
                          {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 5},
                          {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
}

Graph fixed_f6() {  // spider core with per-leg anchor vertices
    return from_edges(8, {{0, 3}, {0, 6}, {1, 4}, {1, 7}, {2, 5}, {2, 7}, {3, 6},
                          {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
}

Graph fixed_f7() {  // anchored core with one two-clique cover vertex
    return from_edges(8, {{0, 3}, {0, 6}, {1, 6}, {1, 7}, {2, 4}, {2, 5}, {2, 7},
                          {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6},
                          {5, 7}, {6, 7}});
}

Graph fixed_f8() {  // anchored core, cover vertex, split anchors
    return from_edges(8, {{0, 3}, {0, 6}, {1, 4}, {1, 7}, {2, 6}, {2, 7}, {3, 5},
                          {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7},
                          {6, 7}});
}

Graph fixed_f9() {  // anchored core, cover vertex adjacent to both anchors
    return from_edges(8, {{0, 5}, {0, 6}, {1, 3}, {1, 5}, {1, 7}, {2, 4}, {2, 6},
                          {2, 7}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7},
                          {5, 6}, {5, 7}, {6, 7}});
}

// F5(n): universal vertex over a triangle carrying one pendant path of
// n - 6 edges and two pendant edges.
Graph f5_member(int n) {
    Graph g(n);
    int apex = n - 1;
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    int prev = 0;
    for (int x = 5; x < apex; ++x) {
        g.add_edge(prev, x);
        prev = x;
    }
    for (int v = 0; v < apex; ++v) g.add_edge(apex, v);
    return g;
}

// F10(n): adjacent hub pair covering a path, a tip on both hubs, and one
// anchor from each path end to the first hub.  Hub 1 is universal.
Graph f10_member(int n) {
    Graph g(n);
    g.add_edge(1, 2);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    std::vector<int> path{5};
    for (int v = 7; v < n; ++v) path.push_back(v);
    path.push_back(6);
    for (size_t i = 0; i + 1 < path.size(); ++i) g.add_edge(path[i], path[i + 1]);
    for (int v : path) {
        g.add_edge(v, 1);
        g.add_edge(v, 2);
    }
    g.add_edge(3, 1);
    g.add_edge(3, 5);
    g.add_edge(4, 1);
    g.add_edge(4, 6);
    return g;
}

// The F11..F16 members are hub cliques h_0..h_{m-1} (vertices m..2m-1)
// dressed with outer vertices: a corner on arc (h_i, h_{i+1}) sees exactly
// those two hubs; a "triple" vertex sees three cyclically consecutive hubs.

void add_hub_clique(Graph& g, int m) {
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge(m + i, m + j);
}

// F11(2m): corner fan through the last hub plus a vertex over the others.
Graph fan_w_member(int m) {
    Graph g(2 * m);
    add_hub_clique(g, m);
    for (int i = 0; i + 1 < m; ++i) {
        g.add_edge(i, m + i);
        g.add_edge(i, 2 * m - 1);
        g.add_edge(m - 1, m + i);
    }
    return g;
}

// F12(2m): one triple vertex per consecutive hub triple.
Graph triple_sun_member(int m) {
    Graph g(2 * m);
    add_hub_clique(g, m);
    for (int i = 0; i < m; ++i)
        for (int d = 0; d < 3; ++d) g.add_edge(i, m + (i + d) % m);
    return g;
}

// F13(2m+1), F16(2m+1): full corner cycle plus one triple vertex.
Graph sun_plus_w_member(int m) {
    Graph g(2 * m + 1);
    add_hub_clique(g, m);
    for (int i = 0; i < m; ++i) {
        g.add_edge(i, m + i);
        g.add_edge((i + 1) % m, m + i);
    }
    for (int d = 0; d < 3; ++d) g.add_edge(2 * m, m + d);
    return g;
}

// F14(2m+1): one corner arc left empty, two overlapping triple vertices.
Graph sun_gap_2w_member(int m) {
    Graph g(2 * m + 1);
    add_hub_clique(g, m);
    for (int i = 0; i + 1 < m; ++i) {
        g.add_edge(i, m + i);
        g.add_edge(i, m + i + 1);
    }
    for (int d = 0; d < 3; ++d) {
        g.add_edge(m - 1, m + d);
        g.add_edge(2 * m, m + d + 1);
    }
    return g;
}

// F15(2m): one corner arc left empty, one centered triple vertex.
Graph sun_gap_w_member(int m) {
    Graph g(2 * m);
    add_hub_clique(g, m);
    for (int i = 0; i + 1 < m; ++i) {
        g.add_edge(i, m + i);
        g.add_edge(i, m + i + 1);
    }
    for (int d = 1; d < 4; ++d) g.add_edge(m - 1, m + d);
    return g;
}

int family_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'F') return -1;
    int idx = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return -1;
        idx = idx * 10 + (name[i] - '0');
    }
    return (idx >= 1 && idx <= 16) ? idx : -1;
}

}  // namespace

Graph forbidden_vpt(const std::string& name, int param) {
    int idx = family_index(name);
    if (idx < 0) throw RangeError("unknown forbidden family: " + name);

    auto fixed = [&](Graph g) {
        if (param != -1)
            throw RangeError(name + " takes no parameter");
        return g;
    };
    auto sized = [&](int smallest, int step) {
        int n = (param == -1) ? smallest : param;
        if (n < smallest || (n - smallest) % step != 0)
            throw RangeError(name + " needs " +
                             (step == 1 ? "n >= " + std::to_string(smallest)
                                        : "n = " + std::to_string(smallest) +
                                              ", " + std::to_string(smallest + step) +
                                              ", ..."));
        return n;
    };

    switch (idx) {
        case 1: return fixed(fixed_f1());
        case 2: return fixed(fixed_f2());
        case 3: return fixed(fixed_f3());
        case 4: return fixed(fixed_f4());
        case 6: return fixed(fixed_f6());
        case 7: return fixed(fixed_f7());
        case 8: return fixed(fixed_f8());
        case 9: return fixed(fixed_f9());
        case 5:  return f5_member(sized(7, 1));
        case 10: return f10_member(sized(8, 1));
        case 11: return fan_w_member(sized(8, 4) / 2);
        case 12: return triple_sun_member(sized(8, 4) / 2);
        case 13: return sun_plus_w_member((sized(9, 4) - 1) / 2);
        case 14: return sun_gap_2w_member((sized(9, 4) - 1) / 2);
        case 15: return sun_gap_w_member(sized(10, 4) / 2);
        case 16: return sun_plus_w_member((sized(11, 4) - 1) / 2);
        default: throw RangeError("unknown forbidden family: " + name);
    }
}

std::vector<CatalogEntry> forbidden_vpt_minimal() {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string& base, int param, const char* note,
                   const char* rule = "") {
        std::string display =
            param < 0 ? base : base + "(" + std::to_string(param) + ")";
        out.push_back({display, forbidden_vpt(base, param), note, rule});
    };
    add("F1", -1, "universal vertex over a spider with three two-edge legs");
    add("F2", -1, "universal vertex over a three-sun");
    add("F3", -1, "universal vertex over two edge-sharing triangles with "
                  "three attached tips");
    add("F4", -1, "universal vertex over a four-clique with three corners");
    add("F5", 7, "universal vertex over a triangle with one growing and two "
                 "unit pendant paths", "n >= 7");
    add("F6", -1, "spider core with per-leg anchor vertices; excluded from "
                  "single-bend models by exhaustion");
    add("F7", -1, "anchored core with one two-clique cover vertex; excluded "
                  "by exhaustion");
    add("F8", -1, "anchored core with cover vertex and split anchors; "
                  "excluded by exhaustion");
    add("F9", -1, "anchored core with cover vertex on both anchors; "
                  "excluded by exhaustion");
    add("F10", 8, "hub pair covering a growing path; the hub neighborhood "
                  "holds an asteroidal triple", "n >= 8");
    add("F11", 8, "hub clique with a corner fan; its attachment structure "
                  "needs more than three colors", "n = 4k, k >= 2");
    add("F12", 8, "hub clique with consecutive-triple vertices; attachment "
                  "structure has a clique or long cycle", "n = 4k, k >= 2");
    add("F13", 9, "sun plus a hub-triple vertex; attachment structure keeps "
                  "the full corner cycle", "n = 4k+1, k >= 2");
    add("F14", 9, "sun with an emptied arc and two overlapping hub-triple "
                  "vertices; attachment structure has a five-cycle",
        "n = 4k+1, k >= 2");
    add("F15", 10, "odd sun with an emptied arc and a centered hub-triple "
                   "vertex; attachment structure has a five-cycle",
        "n = 4k+2, k >= 2");
    add("F16", 11, "odd sun plus a hub-triple vertex; attachment structure "
                   "keeps the full corner cycle", "n = 4k+3, k >= 2");
    return out;
}

std::vector<CatalogEntry> forbidden_vpt_extras() {
    std::vector<CatalogEntry> out;
    auto add = [&](const char* name, Graph g, const char* note) {
        out.push_back({name, std::move(g), note});
    };
    add("X8a",
        from_edges(8, {{0, 5}, {0, 6}, {1, 5}, {1, 7}, {2, 6}, {2, 7}, {3, 5},
                       {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7},
                       {6, 7}}),
        "triangle hub with all three corners and two covering vertices");
    add("X8b",
        from_edges(8, {{0, 5}, {0, 6}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {2, 7},
                       {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6},
                       {5, 7}, {6, 7}}),
        "triangle hub, three corners, two covering vertices, one "
        "corner-cover edge");
    add("X9a",
        from_edges(9, {{0, 3}, {0, 7}, {1, 4}, {1, 8}, {2, 7}, {2, 8}, {3, 5},
                       {3, 7}, {3, 8}, {4, 6}, {4, 7}, {4, 8}, {5, 6}, {5, 7},
                       {5, 8}, {6, 7}, {6, 8}, {7, 8}}),
        "hub pair over a path with anchors split across the hubs");
    add("X9b",
        from_edges(9, {{0, 3}, {0, 6}, {1, 4}, {1, 7}, {2, 5}, {2, 8}, {3, 6},
                       {3, 7}, {3, 8}, {4, 6}, {4, 7}, {4, 8}, {5, 6}, {5, 7},
                       {5, 8}, {6, 7}, {6, 8}, {7, 8}}),
        "hub triple with three pendant-anchored cover vertices");
    add("X10a",
        from_edges(10, {{0, 3}, {0, 8}, {1, 4}, {1, 9}, {2, 8}, {2, 9}, {3, 5},
                        {3, 8}, {3, 9}, {4, 6}, {4, 8}, {4, 9}, {5, 7}, {5, 8},
                        {5, 9}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}}),
        "hub pair over a longer path with anchors split across the hubs");
    add("X11a",
        from_edges(11, {{0, 3},  {0, 9},  {1, 4},  {1, 10}, {2, 9},  {2, 10},
                        {3, 5},  {3, 9},  {3, 10}, {4, 6},  {4, 9},  {4, 10},
                        {5, 7},  {5, 9},  {5, 10}, {6, 8},  {6, 9},  {6, 10},
                        {7, 8},  {7, 9},  {7, 10}, {8, 9},  {8, 10}, {9, 10}}),
        "hub pair over a longer path with anchors split across the hubs");
    add("X11b",
        from_edges(11, {{0, 5},  {0, 7},  {1, 6},  {1, 8},  {2, 7},  {2, 9},
                        {3, 8},  {3, 10}, {4, 9},  {4, 10}, {5, 7},  {5, 8},
                        {5, 9},  {5, 10}, {6, 7},  {6, 8},  {6, 9},  {6, 10},
                        {7, 8},  {7, 9},  {7, 10}, {8, 9},  {8, 10}, {9, 10}}),
        "four-clique hub with two covering vertices and five leaf pins");
    return out;
}

std::vector<CatalogEntry> forbidden_vpt_up_to(int n) {
    std::vector<CatalogEntry> out;
    for (const CatalogEntry& e : forbidden_vpt_minimal()) {
        if (e.graph.n() > n) continue;
        out.push_back(e);
        size_t paren = e.name.find('(');
        if (paren == std::string::npos) continue;
        std::string base = e.name.substr(0, paren);
        int idx = family_index(base);
        int step = (idx == 5 || idx == 10) ? 1 : 4;
        for (int size = e.graph.n() + step; size <= n; size += step)
            out.push_back({base + "(" + std::to_string(size) + ")",
                           forbidden_vpt(base, size), e.note});
    }
    return out;
}

void validate_forbidden_vpt_entry(const std::string& display, const Graph& g) {
    std::string base = display.substr(0, display.find('('));
    int idx = family_index(base);
    if (idx < 0) return;  // not one of the sixteen; no designated check
    if (!check_chordal(g).chordal)
        throw std::runtime_error(display + ": catalog member must be chordal");
    bool has_at = !check_neighborhood_at(g).empty();
    bool has_branch = !check_branch_conditions(g).empty();
    if (idx <= 5 && !has_at)
        throw std::runtime_error(display +
                                 ": expected an asteroidal triple in some "
                                 "vertex neighborhood");
    if (idx >= 11 && !has_branch)
        throw std::runtime_error(display + ": expected a branch graph violation");
    if (idx >= 6 && idx <= 9 && (has_at || has_branch))
        throw std::runtime_error(display +
                                 ": expected no certificate; exclusion "
                                 "is by exhaustion");
}

void validate_forbidden_vpt() {
    for (const CatalogEntry& e : forbidden_vpt_minimal())
        validate_forbidden_vpt_entry(e.name, e.graph);
    // second members of each family, so the generators are gated too
    for (const char* name :
         {"F5(8)", "F10(9)", "F11(12)", "F12(12)", "F13(13)", "F14(13)",
          "F15(14)", "F16(15)"})
        validate_forbidden_vpt_entry(name, catalog_graph(name));
}

// --- name lookup and catalog files ---

Graph catalog_graph(const std::string& name) {
    std::string base = name;
    int param = -1;
    size_t paren = name.find('(');
    if (paren != std::string::npos) {
        if (name.back() != ')')
            throw RangeError("bad catalog name: " + name);
        base = name.substr(0, paren);
        std::string arg = name.substr(paren + 1, name.size() - paren - 2);
        try {
            size_t used = 0;
            param = std::stoi(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
        } catch (const std::logic_error&) {
            throw RangeError("bad catalog parameter: " + name);
        }
    }
    if (family_index(base) > 0) return forbidden_vpt(base, param);
    if (param != -1) throw RangeError("unknown catalog name: " + name);
    if (base == "S3" || base == "S3p" || base == "S3pp" || base == "C4")
        return helly_obstruction(base);
    if (base.size() >= 2 && base[0] == 'E') {
        for (const CatalogEntry& e : venn_examples())
            if (e.name == base) return e.graph;
    }
    throw RangeError("unknown catalog name: " + name);
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<CatalogEntry> out;
    std::string line;
    std::string body;
    CatalogEntry cur;
    bool open = false;
    int line_no = 0, entry_line = 0;
    auto where = [&](int at) { return path + ":" + std::to_string(at); };
    auto flush = [&]() {
        if (!open) return;
        if (body.empty() && cur.rule.empty())
            throw ParseError(where(entry_line) + ": entry " + cur.name +
                             " has no graph and no param rule");
        // a rule makes the name resolvable through the family generators;
        // range errors (say F10(7)) surface here
        if (body.empty()) {
            cur.graph = catalog_graph(cur.name);
        } else {
            try {
                cur.graph = parse_graph(body);
            } catch (const ParseError& e) {
                throw ParseError(where(entry_line) + ": " + e.what());
            }
            if (!cur.rule.empty() &&
                !is_isomorphic(cur.graph, catalog_graph(cur.name)))
                throw ParseError(where(entry_line) + ": entry " + cur.name +
                                 " does not match its family member");
        }
        validate_forbidden_vpt_entry(cur.name, cur.graph);
        out.push_back(std::move(cur));
        cur = {};
        body.clear();
    };
    auto trimmed = [](const std::string& s, size_t from) {
        size_t b = s.find_first_not_of(" \t", from);
        if (b == std::string::npos) return std::string();
        size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("# name:", 0) == 0) {
            flush();
            open = true;
            entry_line = line_no;
            cur.name = trimmed(line, 7);
            if (cur.name.empty())
                throw ParseError(where(line_no) + ": entry with empty name");
            continue;
        }
        if (line.rfind("# note:", 0) == 0) {
            if (!open) throw ParseError(where(line_no) + ": note before any entry");
            if (!cur.note.empty()) cur.note += " ";
            cur.note += trimmed(line, 7);
            continue;
        }
        if (line.rfind("# param:", 0) == 0) {
            if (!open)
                throw ParseError(where(line_no) + ": param before any entry");
            cur.rule = trimmed(line, 8);
            continue;
        }
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!open)
            throw ParseError(where(line_no) + ": graph data before any entry");
        body += line;
        body += "\n";
    }
    flush();
    return out;
}

namespace {

void write_catalog(const std::string& path, const std::vector<CatalogEntry>& entries) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    for (const CatalogEntry& e : entries) {
        out << "# name: " << e.name << "\n";
        if (!e.note.empty()) out << "# note: " << e.note << "\n";
        if (!e.rule.empty()) out << "# param: " << e.rule << "\n";
        out << format_graph(e.graph);
    }
}

}  // namespace

void write_catalog_files(const std::string& dir) {
    std::filesystem::create_directories(dir);
    write_catalog(dir + "/forbidden_vpt.txt", forbidden_vpt_minimal());
    write_catalog(dir + "/forbidden_vpt_extras.txt", forbidden_vpt_extras());
    write_catalog(dir + "/helly_obstructions.txt", helly_obstructions());
    write_catalog(dir + "/venn_examples.txt", venn_examples());
}

}  // namespace epglab
