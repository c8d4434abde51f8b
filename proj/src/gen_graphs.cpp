#include "epglab/gen_graphs.hpp"

#include "epglab/graph_algos.hpp"

namespace epglab {

namespace {

uint64_t fold_key(const std::vector<uint64_t>& key) {
    uint64_t h = 0x243f6a8885a308d3ull;
    for (uint64_t x : key) {
        h ^= x;
        h *= 0x100000001b3ull;
        h = (h << 31) | (h >> 33);
    }
    return h;
}

}  // namespace

bool IsoStore::insert(const Graph& g) {
    uint64_t h = fold_key(invariant_key(g));
    std::vector<int>& bucket = buckets_[h];
    for (int idx : bucket)
        if (is_isomorphic(graphs_[idx], g)) return false;
    bucket.push_back(static_cast<int>(graphs_.size()));
    graphs_.push_back(g);
    return true;
}

namespace {

void clique_rec(const Graph& g, uint64_t clique, uint64_t cand,
                const std::function<void(uint64_t)>& fn) {
    while (cand) {
        int v = std::countr_zero(cand);
        uint64_t vb = uint64_t{1} << v;
        cand &= ~vb;
        uint64_t next = clique | vb;
        fn(next);
        uint64_t higher = ~((vb << 1) - 1);  // bits strictly above v
        clique_rec(g, next, cand & g.row(v) & higher, fn);
    }
}

Graph with_new_vertex(const Graph& g, uint64_t attach) {
    Graph h(g.n() + 1);
    for (auto [u, v] : edge_list(g)) h.add_edge(u, v);
    for (uint64_t m = attach; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        h.add_edge(v, g.n());
    }
    return h;
}

std::vector<Graph> extend_connected(const std::vector<Graph>& level) {
    IsoStore store;
    for (const Graph& g : level) {
        uint64_t subsets = uint64_t{1} << g.n();
        for (uint64_t attach = 1; attach < subsets; ++attach)
            store.insert(with_new_vertex(g, attach));
    }
    return store.take();
}

std::vector<Graph> extend_chordal(const std::vector<Graph>& level) {
    IsoStore store;
    for (const Graph& g : level)
        for_each_clique(g, [&](uint64_t clique) {
            store.insert(with_new_vertex(g, clique));
        });
    return store.take();
}

std::vector<Graph> base_level() { return {Graph(1)}; }

}  // namespace

void for_each_clique(const Graph& g, const std::function<void(uint64_t)>& fn) {
    clique_rec(g, 0, g.all_mask(), fn);
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1) return {};
    std::vector<Graph> level = base_level();
    for (int size = 1; size < n; ++size) level = extend_connected(level);
    return level;
}

std::vector<Graph> connected_chordal_graphs(int n) {
    if (n < 1) return {};
    std::vector<Graph> level = base_level();
    for (int size = 1; size < n; ++size) level = extend_chordal(level);
    return level;
}

void for_each_connected_graph(int nmax, const std::function<void(const Graph&)>& fn) {
    std::vector<Graph> level = base_level();
    for (int size = 1; size <= nmax; ++size) {
        for (const Graph& g : level) fn(g);
        if (size < nmax) level = extend_connected(level);
    }
}

void for_each_connected_chordal(int nmax, const std::function<void(const Graph&)>& fn) {
    std::vector<Graph> level = base_level();
    for (int size = 1; size <= nmax; ++size) {
        for (const Graph& g : level) fn(g);
        if (size < nmax) level = extend_chordal(level);
    }
}

}  // namespace epglab
