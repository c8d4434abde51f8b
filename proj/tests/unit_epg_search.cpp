// Bounded-grid search for single-bend models: soundness of found models,
// exhaustion verdicts on known non-members, symmetry-orbit enumeration
// against a brute-force orbit count, and budget handling.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "epglab/b1_search.hpp"
#include "epglab/catalog.hpp"
#include "epglab/epg_analysis.hpp"
#include "epglab/families.hpp"
#include "epglab/gen_graphs.hpp"
#include "epglab/graph_algos.hpp"
#include "epglab/rep.hpp"
#include "oracles.hpp"

using namespace epglab;

namespace {

SearchOptions grid(int w, int h) {
    SearchOptions o;
    o.width = w;
    o.height = h;
    return o;
}

// all valid paths on a small grid, for the independent orbit oracle
std::vector<PathB1> all_paths(int w, int h) {
    std::vector<PathB1> ps;
    for (int y = 0; y < h; ++y)
        for (int x1 = 0; x1 < w; ++x1)
            for (int x2 = x1 + 1; x2 < w; ++x2) ps.push_back(straight_path({x1, y}, {x2, y}));
    for (int x = 0; x < w; ++x)
        for (int y1 = 0; y1 < h; ++y1)
            for (int y2 = y1 + 1; y2 < h; ++y2) ps.push_back(straight_path({x, y1}, {x, y2}));
    for (int cx = 0; cx < w; ++cx)
        for (int cy = 0; cy < h; ++cy)
            for (int xe = 0; xe < w; ++xe) {
                if (xe == cx) continue;
                for (int ye = 0; ye < h; ++ye) {
                    if (ye == cy) continue;
                    ps.push_back(bent_path({xe, cy}, {cx, cy}, {cx, ye}));
                }
            }
    return ps;
}

// count models of g on the grid, one per orbit under the grid isometries,
// by enumerating every path tuple and keying on the least symmetric image
long orbit_count(const Graph& g, int w, int h) {
    std::vector<PathB1> ps = all_paths(w, h);
    std::vector<std::function<Pt(Pt)>> xf;
    int w1 = w - 1, h1 = h - 1;
    xf.push_back([](Pt p) { return p; });
    xf.push_back([w1](Pt p) { return Pt{w1 - p.x, p.y}; });
    xf.push_back([h1](Pt p) { return Pt{p.x, h1 - p.y}; });
    xf.push_back([w1, h1](Pt p) { return Pt{w1 - p.x, h1 - p.y}; });
    if (w == h) {
        xf.push_back([](Pt p) { return Pt{p.y, p.x}; });
        xf.push_back([w1](Pt p) { return Pt{p.y, w1 - p.x}; });
        xf.push_back([h1](Pt p) { return Pt{h1 - p.y, p.x}; });
        xf.push_back([w1, h1](Pt p) { return Pt{h1 - p.y, w1 - p.x}; });
    }
    int n = g.n();
    std::set<std::string> keys;
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    for (;;) {
        Rep rep;
        rep.width = w;
        rep.height = h;
        for (int i = 0; i < n; ++i) rep.paths.push_back(ps[idx[static_cast<size_t>(i)]]);
        if (intersection_graph(rep) == g) {
            std::string best;
            for (const auto& f : xf) {
                Rep img = rep;
                for (PathB1& p : img.paths)
                    p = p.bent ? bent_path(f(p.a), f(p.corner), f(p.b))
                               : straight_path(f(p.a), f(p.b));
                std::string k = format_rep(img);
                if (best.empty() || k < best) best = k;
            }
            keys.insert(best);
        }
        int i = n - 1;
        while (i >= 0 && ++idx[static_cast<size_t>(i)] == ps.size()) {
            idx[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return static_cast<long>(keys.size());
}

void require_sound(const Graph& g, const SearchResult& r, const SearchOptions& opt) {
    REQUIRE(r.status == SearchStatus::found);
    REQUIRE_EQ(r.rep.width, opt.width);
    REQUIRE_EQ(r.rep.height, opt.height);
    validate_rep(r.rep);
    REQUIRE(intersection_graph(r.rep) == g);  // exact vertex-id match
    if (opt.require_helly) REQUIRE(is_helly(r.rep));
}

void test_small_found() {
    for (const Graph& g : {cycle_graph(4), path_graph(4), complete_graph(2)}) {
        SearchResult r = search_b1(g, grid(2, 2));
        require_sound(g, r, grid(2, 2));
    }

    // the complete graph always fits: all paths may coincide on one edge
    require_sound(complete_graph(4), search_b1(complete_graph(4), grid(2, 2)), grid(2, 2));

    // a claw center path covers at most two edges of a 2x2 grid, so two of
    // the three pairwise non-adjacent leaves would have to share one of them
    REQUIRE(search_b1(claw_graph(), grid(2, 2)).status == SearchStatus::exhausted);
    require_sound(claw_graph(), search_b1(claw_graph(), grid(3, 2)), grid(3, 2));

    // searching twice is deterministic
    SearchResult a = search_b1(cycle_graph(5), grid(5, 5));
    SearchResult b = search_b1(cycle_graph(5), grid(5, 5));
    REQUIRE(a.status == SearchStatus::found && a.rep == b.rep);
}

void test_all_small_graphs_found() {
    // every connected graph on up to five vertices has a model in a 5x5 grid
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n)) {
            SearchResult r = search_b1(g, grid(5, 5));
            require_sound(g, r, grid(5, 5));
        }

    // leaving the grid unset searches the 3n x 3n default
    for (const Graph& g : {complete_graph(2), path_graph(3), complete_graph(3)}) {
        SearchOptions def;
        SearchResult rd = search_b1(g, def);
        REQUIRE(rd.status == SearchStatus::found);
        REQUIRE_EQ(rd.rep.width, 3 * g.n());
        REQUIRE_EQ(rd.rep.height, 3 * g.n());
        REQUIRE(intersection_graph(rd.rep) == g);
    }
}

void test_known_non_members() {
    // the complete bipartite graph on 3+3 vertices has no single-bend model;
    // the 5x5 exhaustion is the cheap bounded certificate of that
    SearchResult r = search_b1(complete_bipartite(3, 3), grid(5, 5));
    REQUIRE(r.status == SearchStatus::exhausted);
    REQUIRE(r.nodes > 0);
}

void test_helly_variants() {
    // the three-sun admits a single-bend model but no helly one in a 6x6
    // grid; dropping outer triangle vertices to pendants restores helly
    Graph s3 = helly_obstruction("S3");
    SearchResult plain = search_b1(s3, grid(6, 6));
    require_sound(s3, plain, grid(6, 6));
    REQUIRE(!is_helly(plain.rep));

    SearchOptions hopt = grid(6, 6);
    hopt.require_helly = true;
    REQUIRE(search_b1(s3, hopt).status == SearchStatus::exhausted);

    for (const char* name : {"S3p", "S3pp", "C4"}) {
        Graph g = helly_obstruction(name);
        SearchResult hr = search_b1(g, hopt);
        require_sound(g, hr, hopt);
    }

    // a helly-accepted model never hides a claw clique
    SearchOptions small = grid(4, 4);
    small.require_helly = true;
    for (const Graph& g : connected_graphs(4)) {
        SearchResult hr = search_b1(g, small);
        REQUIRE(hr.status == SearchStatus::found);
        REQUIRE(is_helly(hr.rep));
        REQUIRE(non_edge_cliques(hr.rep).empty());
    }
}

void test_budget() {
    SearchOptions opt = grid(5, 5);
    opt.max_nodes = 1;
    SearchResult r = search_b1(complete_bipartite(3, 3), opt);
    REQUIRE(r.status == SearchStatus::budget);
    REQUIRE(r.nodes >= 1);

    // a found verdict within the cap is unaffected by it
    opt.max_nodes = 1000000;
    require_sound(cycle_graph(4), search_b1(cycle_graph(4), opt), opt);
}

void test_enumeration_counts() {
    struct Case {
        const char* label;
        Graph g;
        int w, h;
        long expect;
    };
    Graph k1(1);
    Graph k2(2);
    k2.add_edge(0, 1);
    Graph e2(2);
    std::vector<Case> cases = {
        {"K1 on 2x2", k1, 2, 2, 2},   {"K2 on 2x2", k2, 2, 2, 5},
        {"2K1 on 2x2", e2, 2, 2, 5},  {"P3 on 2x2", path_graph(3), 2, 2, 4},
        {"K2 on 3x2", k2, 3, 2, 47},
    };
    for (const Case& c : cases) {
        long count = 0;
        SearchResult r = enumerate_reps(c.g, grid(c.w, c.h), [&](const Rep& rep) {
            validate_rep(rep);
            REQUIRE(intersection_graph(rep) == c.g);
            ++count;
            return true;
        });
        REQUIRE(r.status == SearchStatus::exhausted);
        REQUIRE_EQ(count, c.expect);
        REQUIRE_EQ(orbit_count(c.g, c.w, c.h), c.expect);
    }

    // models are pairwise distinct as visited
    std::set<std::string> seen;
    enumerate_reps(k2, grid(2, 2), [&](const Rep& rep) {
        REQUIRE(seen.insert(format_rep(rep)).second);
        return true;
    });

    // an early stop reports found
    long first = 0;
    SearchResult stop = enumerate_reps(k2, grid(2, 2), [&](const Rep&) {
        ++first;
        return false;
    });
    REQUIRE(stop.status == SearchStatus::found);
    REQUIRE_EQ(first, 1);
}

void test_clique_dichotomy() {
    // every maximal clique of every enumerated model classifies as an edge
    // clique or a claw clique; nothing else can appear
    SearchOptions opt = grid(3, 3);
    opt.max_nodes = 400000;
    for (int n = 1; n <= 3; ++n)
        for (const Graph& g : connected_graphs(n)) {
            SearchResult r = enumerate_reps(g, opt, [&](const Rep& rep) {
                for (const VertexSet& K : maximal_cliques(g)) {
                    CliqueKind k = classify_clique(rep, K).kind;
                    REQUIRE(k == CliqueKind::edge_clique || k == CliqueKind::claw_clique);
                }
                return true;
            });
            REQUIRE(r.status != SearchStatus::found);
        }
}

void test_two_claws_make_a_pie() {
    // hub path bending left-up, plus four rim paths around the same point:
    // two different claw triangles form at (1,1), and the remaining four
    // paths then close a false pie there
    Rep rep;
    rep.width = rep.height = 3;
    rep.paths = {
        bent_path({0, 1}, {1, 1}, {1, 2}),      // hub: left and up arms
        bent_path({1, 2}, {1, 1}, {2, 1}),      // up and right
        straight_path({0, 1}, {2, 1}),          // straight through, horizontal
        bent_path({0, 1}, {1, 1}, {1, 0}),      // left and down
        straight_path({1, 0}, {1, 2}),          // straight through, vertical
    };
    Graph g = intersection_graph(rep);
    REQUIRE(is_isomorphic(g, wheel_graph(5)));

    std::vector<CliqueClass> claws;
    for (const VertexSet& K : maximal_cliques(g)) {
        CliqueClass cc = classify_clique(rep, K);
        if (cc.kind == CliqueKind::claw_clique) claws.push_back(cc);
    }
    REQUIRE_EQ(claws.size(), 2u);
    REQUIRE(claws[0].center == Pt({1, 1}) && claws[1].center == Pt({1, 1}));
    REQUIRE(!(claws[0].claw == claws[1].claw));

    std::vector<Pie> pies = find_pies(rep);
    REQUIRE_EQ(pies.size(), 1u);
    REQUIRE(pies[0].center == Pt({1, 1}));
    REQUIRE(!pies[0].proper);
    std::set<int> members(pies[0].members.begin(), pies[0].members.end());
    REQUIRE(members == std::set<int>({1, 2, 3, 4}));
    REQUIRE(!is_helly(rep));
}

void test_reference_engine() {
    // verdict agreement on a spread of verdict kinds
    for (const Graph& g : {cycle_graph(4), complete_graph(4), path_graph(5)}) {
        SearchResult fast = search_b1(g, grid(3, 3));
        SearchResult ref = search_b1_reference(g, grid(3, 3));
        REQUIRE(fast.status == ref.status);
        if (fast.status == SearchStatus::found) REQUIRE(fast.rep == ref.rep);
    }
    REQUIRE(search_b1_reference(claw_graph(), grid(2, 2)).status ==
            SearchStatus::exhausted);
}

}  // namespace

int main() {
    test_small_found();
    test_all_small_graphs_found();
    test_known_non_members();
    test_helly_variants();
    test_budget();
    test_enumeration_counts();
    test_clique_dichotomy();
    test_two_claws_make_a_pie();
    test_reference_engine();
    done("unit_epg_search");
    return 0;
}
