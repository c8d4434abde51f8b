// Core graph structure and algorithms, cross-checked against the
// subset-enumeration oracles in oracles.hpp.

#include <algorithm>
#include <bit>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "epglab/families.hpp"
#include "epglab/gen_graphs.hpp"
#include "epglab/graph.hpp"
#include "epglab/graph_algos.hpp"
#include "oracles.hpp"

using namespace epglab;

namespace {

Graph random_graph(TestRng& rng, int n, int percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < percent) g.add_edge(u, v);
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n());
    for (auto [u, v] : edge_list(g))
        h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return h;
}

// independent asteroidal-triple verification: pairwise nonadjacent, and each
// pair connected by a path avoiding the closed neighborhood of the third
bool verify_at(const Graph& g, int a, int b, int c) {
    int t[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g.has_edge(t[i], t[j])) return false;
    for (int k = 0; k < 3; ++k) {
        int x = t[(k + 1) % 3], y = t[(k + 2) % 3];
        uint64_t allowed = g.all_mask() & ~g.closed_row(t[k]);
        if (!connected_within(g, allowed, x, y)) return false;
    }
    return true;
}

bool verify_peo(const Graph& g, const std::vector<int>& peo) {
    if (static_cast<int>(peo.size()) != g.n()) return false;
    std::vector<int> pos(static_cast<size_t>(g.n()), -1);
    for (int i = 0; i < g.n(); ++i) pos[static_cast<size_t>(peo[static_cast<size_t>(i)])] = i;
    for (int v : pos)
        if (v < 0) return false;
    for (int i = 0; i < g.n(); ++i) {
        int v = peo[static_cast<size_t>(i)];
        VertexSet later;
        for (int u : g.neighbors(v))
            if (pos[static_cast<size_t>(u)] > i) later.push_back(u);
        for (size_t x = 0; x < later.size(); ++x)
            for (size_t y = x + 1; y < later.size(); ++y)
                if (!g.has_edge(later[x], later[y])) return false;
    }
    return true;
}

bool is_induced_embedding(const Graph& host, const Graph& pat,
                          const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != pat.n()) return false;
    std::set<int> used(map.begin(), map.end());
    if (static_cast<int>(used.size()) != pat.n()) return false;
    for (int u = 0; u < pat.n(); ++u)
        for (int v = u + 1; v < pat.n(); ++v)
            if (pat.has_edge(u, v) !=
                host.has_edge(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]))
                return false;
    return true;
}

void check_against_oracles(const Graph& g) {
    REQUIRE_EQ(clique_number(g), oracle_clique_number(g));
    REQUIRE_EQ(static_cast<int>(maximum_clique(g).size()), oracle_clique_number(g));
    REQUIRE(oracle_clique(g, set_to_mask(maximum_clique(g))));
    REQUIRE_EQ(chromatic_number(g), oracle_chromatic_number(g));

    auto cliques = maximal_cliques(g);
    REQUIRE_EQ(static_cast<long>(cliques.size()), oracle_maximal_clique_count(g));
    for (const VertexSet& K : cliques) {
        uint64_t m = set_to_mask(K);
        REQUIRE(oracle_clique(g, m));
        for (int v = 0; v < g.n(); ++v)
            if (!((m >> v) & 1)) REQUIRE(!oracle_clique(g, m | (uint64_t{1} << v)));
    }

    Chordality ch = check_chordal(g);
    REQUIRE_EQ(ch.chordal, oracle_is_chordal(g));
    if (ch.chordal) {
        REQUIRE(verify_peo(g, ch.peo));
    } else {
        REQUIRE(ch.hole.size() >= 4);
        REQUIRE(oracle_subset_is_cycle(g, set_to_mask(VertexSet(ch.hole.begin(), ch.hole.end()))));
    }
}

void test_basic_structure() {
    Graph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE_EQ(g.n(), 4);
    REQUIRE_EQ(g.m(), 3);
    REQUIRE(g.has_edge(0, 1) && g.has_edge(1, 0));
    REQUIRE(!g.has_edge(0, 2));
    REQUIRE_EQ(g.degree(1), 2);
    REQUIRE(g.neighbors(1) == VertexSet({0, 2}));
    g.remove_edge(1, 2);
    REQUIRE_EQ(g.m(), 2);
    REQUIRE(!g.has_edge(1, 2));

    REQUIRE(mask_to_set(0b1011) == VertexSet({0, 1, 3}));
    REQUIRE_EQ(set_to_mask({0, 1, 3}), 0b1011u);

    Graph c = complement(path_graph(3));
    REQUIRE_EQ(c.m(), 1);
    REQUIRE(c.has_edge(0, 2));

    Graph du = disjoint_union(complete_graph(3), path_graph(2));
    REQUIRE_EQ(du.n(), 5);
    REQUIRE_EQ(du.m(), 4);
    REQUIRE(du.has_edge(3, 4) && !du.has_edge(2, 3));

    Graph ind = induced_subgraph(complete_graph(5), {1, 3, 4});
    REQUIRE(ind == complete_graph(3));

    auto el = edge_list(from_edges(3, {{0, 2}, {0, 1}}));
    std::vector<std::pair<int, int>> want_el = {{0, 1}, {0, 2}};
    REQUIRE(el == want_el);
}

void test_parse_format() {
    Graph g = from_edges(4, {{0, 1}, {2, 3}});
    Graph back = parse_graph(format_graph(g));
    REQUIRE(back == g);

    Graph empty = parse_graph("0 0\n");
    REQUIRE_EQ(empty.n(), 0);

    REQUIRE_THROWS(parse_graph("4 1\n0 9\n"), ParseError);
    REQUIRE_THROWS(parse_graph("4 1\n0\n"), ParseError);
    REQUIRE_THROWS(parse_graph("4 1 7\n"), ParseError);
    REQUIRE_THROWS(parse_graph("banana\n"), ParseError);
    REQUIRE_THROWS(parse_graph("-3 0\n"), ParseError);
    REQUIRE_THROWS(parse_graph("4 -1\n"), ParseError);
    REQUIRE_THROWS(parse_graph("65 0\n"), GraphTooLarge);

    save_graph(g, "/tmp/epglab_test_graph.txt");
    REQUIRE(load_graph("/tmp/epglab_test_graph.txt") == g);
    REQUIRE_THROWS(load_graph("/tmp/epglab_no_such_file"), std::runtime_error);
}

void test_connectivity() {
    REQUIRE(is_connected(path_graph(5)));
    REQUIRE(!is_connected(from_edges(4, {{0, 1}, {2, 3}})));
    REQUIRE(is_connected(Graph(1)));

    auto comps = connected_components(from_edges(5, {{0, 1}, {2, 3}}));
    REQUIRE_EQ(comps.size(), 3u);

    // 0-1-2-3 with 1 removed from the allowed set disconnects 0 from 3
    Graph p = path_graph(4);
    REQUIRE(connected_within(p, p.all_mask(), 0, 3));
    REQUIRE(!connected_within(p, p.all_mask() & ~uint64_t{2}, 0, 3));

    REQUIRE(is_tree(path_graph(4)));
    REQUIRE(is_forest(from_edges(4, {{0, 1}, {2, 3}})));
    REQUIRE(!is_tree(from_edges(4, {{0, 1}, {2, 3}})));
    REQUIRE(!is_forest(cycle_graph(3)));

    REQUIRE(is_bipartite(cycle_graph(6)));
    REQUIRE(!is_bipartite(cycle_graph(5)));
    REQUIRE(is_bipartite(complete_bipartite(3, 3)));
}

void test_oracle_sweep() {
    for_each_connected_graph(6, [](const Graph& g) { check_against_oracles(g); });
    TestRng rng(0x5eed5);
    for (int i = 0; i < 40; ++i)
        check_against_oracles(random_graph(rng, 7, 30 + rng.below(50)));
    for (int i = 0; i < 25; ++i)
        check_against_oracles(random_graph(rng, 8, 30 + rng.below(50)));
}

void test_asteroidal_triples() {
    // random interval graphs never hold an asteroidal triple
    TestRng rng(0xa57e0);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + rng.below(7);
        std::vector<std::pair<int, int>> iv;
        for (int i = 0; i < n; ++i) {
            int l = rng.below(2 * n), r = l + 1 + rng.below(n);
            iv.push_back({l, r});
        }
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (iv[static_cast<size_t>(i)].first <= iv[static_cast<size_t>(j)].second &&
                    iv[static_cast<size_t>(j)].first <= iv[static_cast<size_t>(i)].second)
                    g.add_edge(i, j);
        REQUIRE(!find_asteroidal_triple(g).has_value());
        REQUIRE(check_chordal(g).chordal);
    }

    // the claw with every leg subdivided once is the smallest AT holder here
    Graph spider = from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    auto at = find_asteroidal_triple(spider);
    REQUIRE(at.has_value());
    REQUIRE(verify_at(spider, (*at)[0], (*at)[1], (*at)[2]));

    auto at6 = find_asteroidal_triple(cycle_graph(6));
    REQUIRE(at6.has_value());
    REQUIRE(verify_at(cycle_graph(6), (*at6)[0], (*at6)[1], (*at6)[2]));

    REQUIRE(!find_asteroidal_triple(cycle_graph(5)).has_value());
    REQUIRE(!find_asteroidal_triple(complete_graph(6)).has_value());
    REQUIRE(!find_asteroidal_triple(path_graph(7)).has_value());

    // every triple the finder reports must verify, over all small graphs
    for_each_connected_graph(6, [](const Graph& g) {
        auto t = find_asteroidal_triple(g);
        if (t) REQUIRE(verify_at(g, (*t)[0], (*t)[1], (*t)[2]));
    });
}

void test_blocks() {
    Blocks b = biconnected_blocks(bull_graph());
    REQUIRE_EQ(b.blocks.size(), 3u);
    REQUIRE(b.cut_vertices == VertexSet({0, 1}));

    Blocks single = biconnected_blocks(cycle_graph(5));
    REQUIRE_EQ(single.blocks.size(), 1u);
    REQUIRE(single.cut_vertices.empty());
    REQUIRE_EQ(single.blocks[0].size(), 5u);

    Blocks tree = biconnected_blocks(star_graph(4));
    REQUIRE_EQ(tree.blocks.size(), 4u);
    REQUIRE(tree.cut_vertices == VertexSet({0}));

    // blocks partition the edges; cut vertices are those shared by two blocks
    for_each_connected_graph(6, [](const Graph& g) {
        Blocks bl = biconnected_blocks(g);
        int edge_sum = 0;
        std::vector<int> seen_in(static_cast<size_t>(g.n()), 0);
        for (const VertexSet& blk : bl.blocks) {
            for (size_t i = 0; i < blk.size(); ++i) {
                ++seen_in[static_cast<size_t>(blk[i])];
                for (size_t j = i + 1; j < blk.size(); ++j)
                    if (g.has_edge(blk[i], blk[j])) ++edge_sum;
            }
        }
        REQUIRE_EQ(edge_sum, g.m());
        VertexSet cuts;
        for (int v = 0; v < g.n(); ++v)
            if (seen_in[static_cast<size_t>(v)] >= 2) cuts.push_back(v);
        REQUIRE(cuts == bl.cut_vertices);
    });
}

void test_induced_search() {
    Graph host = gem_graph();
    auto m = find_induced(host, path_graph(4));
    REQUIRE(m.has_value());
    REQUIRE(is_induced_embedding(host, path_graph(4), *m));
    REQUIRE(find_induced(host, path_graph(4)) == m);  // deterministic

    REQUIRE(contains_induced(host, host));
    REQUIRE(!contains_induced(path_graph(3), path_graph(4)));
    REQUIRE(!contains_induced(complete_graph(5), claw_graph()));
    REQUIRE(contains_induced(complete_bipartite(3, 3), claw_graph()));
    REQUIRE(!contains_induced(cycle_graph(6), diamond_graph()));

    // every reported embedding verifies, across small host/pattern pairs
    std::vector<Graph> pats = {claw_graph(), diamond_graph(), cycle_graph(4),
                               path_graph(4), complete_graph(3)};
    for_each_connected_graph(5, [&](const Graph& g) {
        for (const Graph& p : pats) {
            auto e = find_induced(g, p);
            if (e) REQUIRE(is_induced_embedding(g, p, *e));
            REQUIRE(e.has_value() == contains_induced(g, p));
        }
    });

    auto cyc = find_induced_cycle(cycle_graph(6), 4, false);
    REQUIRE(cyc.has_value() && cyc->size() == 6u);
    REQUIRE(!find_induced_cycle(cycle_graph(6), 4, true).has_value());
    auto odd = find_induced_cycle(cycle_graph(7), 5, true);
    REQUIRE(odd.has_value() && odd->size() == 7u);
    REQUIRE(!find_induced_cycle(complete_graph(5), 4, false).has_value());
    auto five = find_induced_cycle(cycle_graph(5), 4, true);
    REQUIRE(five.has_value());
    REQUIRE(oracle_subset_is_cycle(cycle_graph(5), set_to_mask(VertexSet(five->begin(), five->end()))));
}

void test_isomorphism() {
    TestRng rng(0x150);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + rng.below(8);
        Graph g = random_graph(rng, n, 20 + rng.below(60));
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.below(i + 1))]);
        Graph h = relabel(g, perm);
        REQUIRE(is_isomorphic(g, h));
        REQUIRE(invariant_key(g) == invariant_key(h));
        REQUIRE(canonical_form(g) == canonical_form(h));
        REQUIRE(is_isomorphic(g, canonical_form(g)));
    }

    REQUIRE(!is_isomorphic(path_graph(4), star_graph(3)));
    REQUIRE(!is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));

    // agreement between the pairwise test and canonical forms
    std::vector<Graph> gs = connected_graphs(5);
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i; j < gs.size(); ++j) {
            bool same = canonical_form(gs[i]) == canonical_form(gs[j]);
            REQUIRE_EQ(is_isomorphic(gs[i], gs[j]), same);
        }
}

}  // namespace

int main() {
    test_basic_structure();
    test_parse_format();
    test_connectivity();
    test_oracle_sweep();
    test_asteroidal_triples();
    test_blocks();
    test_induced_search();
    test_isomorphism();
    done("unit_graph_core");
    return 0;
}
