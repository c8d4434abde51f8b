// Exhaustive generation of small graphs up to isomorphism, checked against
// published counts and against each other.

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

// connected graphs on n unlabeled vertices: OEIS A001349
const long kConnected[] = {0, 1, 1, 2, 6, 21, 112, 853};
// connected chordal graphs on n unlabeled vertices: OEIS A048192
const long kChordal[] = {0, 1, 1, 2, 5, 15, 58, 272, 1614};

void test_connected_counts() {
    for (int n = 1; n <= 7; ++n) {
        std::vector<Graph> gs = connected_graphs(n);
        REQUIRE_EQ(static_cast<long>(gs.size()), kConnected[n]);
        std::set<std::string> canon;
        for (const Graph& g : gs) {
            REQUIRE_EQ(g.n(), n);
            REQUIRE(is_connected(g));
            canon.insert(format_graph(canonical_form(g)));
        }
        REQUIRE_EQ(static_cast<long>(canon.size()), kConnected[n]);
    }
    REQUIRE(connected_graphs(0).empty());
}

void test_chordal_counts() {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Graph> gs = connected_chordal_graphs(n);
        REQUIRE_EQ(static_cast<long>(gs.size()), kChordal[n]);
        std::set<std::string> canon;
        for (const Graph& g : gs) {
            REQUIRE_EQ(g.n(), n);
            REQUIRE(is_connected(g));
            REQUIRE(check_chordal(g).chordal);
            canon.insert(format_graph(canonical_form(g)));
        }
        REQUIRE_EQ(static_cast<long>(canon.size()), kChordal[n]);
    }

    // chordal generation agrees with filtering the full generator
    for (int n = 1; n <= 6; ++n) {
        long filtered = 0;
        for (const Graph& g : connected_graphs(n))
            if (oracle_is_chordal(g)) ++filtered;
        REQUIRE_EQ(static_cast<long>(connected_chordal_graphs(n).size()), filtered);
    }
}

void test_visitors() {
    for (int nmax = 1; nmax <= 6; ++nmax) {
        std::vector<long> per_n(static_cast<size_t>(nmax) + 1, 0);
        for_each_connected_graph(nmax, [&](const Graph& g) {
            REQUIRE(g.n() >= 1 && g.n() <= nmax);
            ++per_n[static_cast<size_t>(g.n())];
        });
        for (int n = 1; n <= nmax; ++n) REQUIRE_EQ(per_n[static_cast<size_t>(n)], kConnected[n]);
    }
    std::vector<long> per_n(9, 0);
    for_each_connected_chordal(8, [&](const Graph& g) { ++per_n[static_cast<size_t>(g.n())]; });
    for (int n = 1; n <= 8; ++n) REQUIRE_EQ(per_n[static_cast<size_t>(n)], kChordal[n]);
}

void test_clique_visitor() {
    // every nonempty clique exactly once
    for (const Graph& g : connected_graphs(5)) {
        long visits = 0;
        std::set<uint64_t> distinct;
        for_each_clique(g, [&](uint64_t m) {
            REQUIRE(m != 0);
            REQUIRE(oracle_clique(g, m));
            ++visits;
            distinct.insert(m);
        });
        long expect = 0;
        for (uint64_t m = 1; m < (uint64_t{1} << g.n()); ++m)
            if (oracle_clique(g, m)) ++expect;
        REQUIRE_EQ(visits, expect);
        REQUIRE_EQ(static_cast<long>(distinct.size()), visits);
    }
}

void test_iso_store() {
    IsoStore store;
    REQUIRE(store.insert(path_graph(4)));
    REQUIRE(!store.insert(path_graph(4)));
    Graph relabeled = from_edges(4, {{2, 3}, {3, 1}, {1, 0}});
    REQUIRE(!store.insert(relabeled));
    REQUIRE(store.insert(star_graph(3)));
    REQUIRE_EQ(store.graphs().size(), 2u);
}

}  // namespace

int main() {
    test_connected_counts();
    test_chordal_counts();
    test_visitors();
    test_clique_visitor();
    test_iso_store();
    done("unit_gen_graphs");
    return 0;
}
