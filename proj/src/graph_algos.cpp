#include "epglab/graph_algos.hpp"

#include <algorithm>
#include <numeric>

namespace epglab {

bool is_clique(const Graph& g, uint64_t mask) {
    for (uint64_t m = mask; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        uint64_t rest = mask & ~(uint64_t{1} << v);
        if ((g.row(v) & rest) != rest) return false;
    }
    return true;
}

namespace {

int pivot_vertex(const Graph& g, uint64_t P, uint64_t X) {
    int pivot = -1, best = -1;
    for (uint64_t m = P | X; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        int c = std::popcount(P & g.row(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    return pivot;
}

void bron_kerbosch(const Graph& g, uint64_t R, uint64_t P, uint64_t X,
                   std::vector<VertexSet>& out) {
    if (!P && !X) {
        out.push_back(mask_to_set(R));
        return;
    }
    int pivot = pivot_vertex(g, P, X);
    uint64_t cand = P & ~g.row(pivot);
    while (cand) {
        int v = std::countr_zero(cand);
        uint64_t vb = uint64_t{1} << v;
        cand &= cand - 1;
        bron_kerbosch(g, R | vb, P & g.row(v), X & g.row(v), out);
        P &= ~vb;
        X |= vb;
    }
}

void max_clique_rec(const Graph& g, uint64_t R, uint64_t P, uint64_t& best_mask,
                    int& best_size) {
    int r = std::popcount(R);
    if (r + std::popcount(P) <= best_size) return;
    if (!P) {
        best_size = r;
        best_mask = R;
        return;
    }
    int pivot = pivot_vertex(g, P, 0);
    uint64_t cand = P & ~g.row(pivot);
    while (cand) {
        int v = std::countr_zero(cand);
        uint64_t vb = uint64_t{1} << v;
        cand &= cand - 1;
        max_clique_rec(g, R | vb, P & g.row(v), best_mask, best_size);
        P &= ~vb;
        if (r + std::popcount(P) <= best_size) return;
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.n() == 0) return out;
    bron_kerbosch(g, 0, g.all_mask(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet maximum_clique(const Graph& g) {
    if (g.n() == 0) return {};
    uint64_t best_mask = uint64_t{1} << 0;
    int best_size = 0;  // any single vertex beats this
    max_clique_rec(g, 0, g.all_mask(), best_mask, best_size);
    return mask_to_set(best_mask);
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

namespace {

bool k_colorable(const Graph& g, int k, std::vector<int>& color, int colored,
                 int used) {
    if (colored == g.n()) return true;
    // most saturated uncolored vertex, ties by degree then id
    int v = -1, vsat = -1, vdeg = -1;
    for (int u = 0; u < g.n(); ++u) {
        if (color[u] >= 0) continue;
        uint64_t seen = 0;
        for (uint64_t m = g.row(u); m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (color[w] >= 0) seen |= uint64_t{1} << color[w];
        }
        int sat = std::popcount(seen);
        if (sat > vsat || (sat == vsat && g.degree(u) > vdeg)) {
            v = u;
            vsat = sat;
            vdeg = g.degree(u);
        }
    }
    uint64_t banned = 0;
    for (uint64_t m = g.row(v); m;) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (color[w] >= 0) banned |= uint64_t{1} << color[w];
    }
    int limit = std::min(k, used + 1);  // at most one brand-new color
    for (int c = 0; c < limit; ++c) {
        if ((banned >> c) & 1) continue;
        color[v] = c;
        if (k_colorable(g, k, color, colored + 1, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.n() == 0) return 0;
    int k = clique_number(g);
    for (;; ++k) {
        std::vector<int> color(static_cast<size_t>(g.n()), -1);
        if (k_colorable(g, k, color, 0, 0)) return k;
    }
}

namespace {

uint64_t reach_from(const Graph& g, uint64_t allowed, int s) {
    uint64_t seen = uint64_t{1} << s;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.row(v) & allowed & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return reach_from(g, g.all_mask(), 0) == g.all_mask();
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    uint64_t left = g.all_mask();
    while (left) {
        int s = std::countr_zero(left);
        uint64_t comp = reach_from(g, left, s);
        comps.push_back(mask_to_set(comp));
        left &= ~comp;
    }
    return comps;
}

bool connected_within(const Graph& g, uint64_t allowed, int s, int t) {
    uint64_t sb = uint64_t{1} << s, tb = uint64_t{1} << t;
    if (!(allowed & sb) || !(allowed & tb)) return false;
    return (reach_from(g, allowed, s) & tb) != 0;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (uint64_t m = g.row(v); m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_forest(const Graph& g) {
    return g.m() == g.n() - static_cast<int>(connected_components(g).size());
}

bool is_tree(const Graph& g) { return is_connected(g) && g.m() == g.n() - 1; }

Chordality check_chordal(const Graph& g) {
    Chordality res;
    int n = g.n();
    if (n == 0) {
        res.chordal = true;
        return res;
    }
    // maximum cardinality search, producing the order back to front
    std::vector<int> order(static_cast<size_t>(n), -1);
    std::vector<int> weight(static_cast<size_t>(n), 0);
    uint64_t unnumbered = g.all_mask();
    for (int pos = n - 1; pos >= 0; --pos) {
        int best = -1;
        for (uint64_t m = unnumbered; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (best < 0 || weight[v] > weight[best]) best = v;
        }
        order[pos] = best;
        unnumbered &= ~(uint64_t{1} << best);
        for (uint64_t m = g.row(best) & unnumbered; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            ++weight[v];
        }
    }
    // perfect elimination test: later neighbors of each vertex form a clique
    std::vector<uint64_t> later(static_cast<size_t>(n), 0);
    uint64_t seen = 0;
    for (int pos = n - 1; pos >= 0; --pos) {
        later[order[pos]] = seen;
        seen |= uint64_t{1} << order[pos];
    }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
        if (!is_clique(g, g.row(v) & later[v])) ok = false;
    if (ok) {
        res.chordal = true;
        res.peo = order;
        return res;
    }
    auto hole = find_induced_cycle(g, 4, false);
    assert(hole.has_value());
    res.hole = *hole;
    return res;
}

std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g) {
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                uint64_t all = g.all_mask();
                if (connected_within(g, all & ~g.closed_row(c), a, b) &&
                    connected_within(g, all & ~g.closed_row(b), a, c) &&
                    connected_within(g, all & ~g.closed_row(a), b, c))
                    return std::array<int, 3>{a, b, c};
            }
        }
    return std::nullopt;
}

namespace {

struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<VertexSet> blocks;
    uint64_t cuts = 0;
    int timer = 0;

    explicit BlockDfs(const Graph& gg)
        : g(gg), disc(static_cast<size_t>(gg.n()), -1), low(static_cast<size_t>(gg.n()), 0) {}

    void pop_block(std::pair<int, int> until) {
        uint64_t verts = 0;
        for (;;) {
            auto e = stack.back();
            stack.pop_back();
            verts |= (uint64_t{1} << e.first) | (uint64_t{1} << e.second);
            if (e == until) break;
        }
        blocks.push_back(mask_to_set(verts));
    }

    void run(int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (uint64_t m = g.row(v); m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (w == parent) continue;
            if (disc[w] < 0) {
                ++children;
                stack.push_back({v, w});
                run(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent >= 0 || children > 1) cuts |= uint64_t{1} << v;
                    pop_block({v, w});
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

}  // namespace

Blocks biconnected_blocks(const Graph& g) {
    BlockDfs dfs(g);
    for (int v = 0; v < g.n(); ++v)
        if (dfs.disc[v] < 0) dfs.run(v, -1);
    Blocks res;
    res.blocks = std::move(dfs.blocks);
    std::sort(res.blocks.begin(), res.blocks.end());
    res.cut_vertices = mask_to_set(dfs.cuts);
    return res;
}

namespace {

bool embed_rec(const Graph& host, const Graph& pattern, std::vector<int>& map,
               uint64_t used, int depth) {
    if (depth == pattern.n()) return true;
    for (int h = 0; h < host.n(); ++h) {
        if ((used >> h) & 1) continue;
        bool ok = true;
        for (int j = 0; j < depth && ok; ++j)
            if (host.has_edge(map[j], h) != pattern.has_edge(j, depth)) ok = false;
        if (!ok) continue;
        map[depth] = h;
        if (embed_rec(host, pattern, map, used | (uint64_t{1} << h), depth + 1))
            return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.n() > host.n()) return std::nullopt;
    std::vector<int> map(static_cast<size_t>(pattern.n()), -1);
    if (embed_rec(host, pattern, map, 0, 0)) return map;
    return std::nullopt;
}

bool contains_induced(const Graph& host, const Graph& pattern) {
    return find_induced(host, pattern).has_value();
}

namespace {

// grows chordless paths from s using only vertices > s; closes on neighbors of s
bool hole_dfs(const Graph& g, int s, std::vector<int>& path, uint64_t on_path,
              uint64_t banned, int min_len, bool odd_only) {
    int tail = path.back();
    for (uint64_t m = g.row(tail); m;) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (w <= s) continue;
        uint64_t wb = uint64_t{1} << w;
        if ((on_path | banned) & wb) continue;
        bool closes = g.has_edge(w, s);
        int len = static_cast<int>(path.size()) + 1;
        if (closes) {
            if (len >= min_len && (!odd_only || len % 2 == 1)) {
                path.push_back(w);
                return true;
            }
            continue;  // a longer cycle through w would have chord w-s
        }
        path.push_back(w);
        // previous tail becomes interior: its neighbors are chords from now on
        if (hole_dfs(g, s, path, on_path | wb, banned | g.row(tail), min_len, odd_only))
            return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int min_len,
                                                   bool odd_only) {
    assert(min_len >= 4);
    for (int s = 0; s < g.n(); ++s) {
        for (uint64_t m = g.row(s); m;) {
            int v1 = std::countr_zero(m);
            m &= m - 1;
            if (v1 <= s) continue;
            std::vector<int> path{s, v1};
            // interior chords to s are excluded by construction (w not ~ s unless
            // closing); chords among interior vertices via the banned mask
            if (hole_dfs(g, s, path, (uint64_t{1} << s) | (uint64_t{1} << v1), 0,
                         min_len, odd_only))
                return path;
        }
    }
    return std::nullopt;
}

// --- isomorphism machinery ---

namespace {

uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// equitable refinement; colors are canonical ranks 0..c-1
int refine_colors(const Graph& g, std::vector<int>& color) {
    int n = g.n();
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            std::vector<int> nb;
            for (uint64_t m = g.row(v); m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                nb.push_back(color[w]);
            }
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(static_cast<size_t>(n));
        int rank = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || sorted[i].first != sorted[i - 1].first) ++rank;
            next[sorted[i].second] = rank;
        }
        bool stable = true;
        for (int v = 0; v < n && stable; ++v)
            if (next[v] != color[v]) stable = false;
        color = std::move(next);
        if (stable) return rank + 1;
    }
    return 1 + *std::max_element(color.begin(), color.end());
}

struct CanonSearch {
    const Graph& g;
    std::vector<uint64_t> best;
    bool have_best = false;

    explicit CanonSearch(const Graph& gg) : g(gg) {}

    void leaf(const std::vector<int>& color) {
        int n = g.n();
        std::vector<int> vertex_at(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) vertex_at[color[v]] = v;
        std::vector<int> pos(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) pos[v] = color[v];
        std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (uint64_t m = g.row(vertex_at[i]); m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                rows[i] |= uint64_t{1} << pos[w];
            }
        if (!have_best || rows < best) {
            best = std::move(rows);
            have_best = true;
        }
    }

    void run(std::vector<int> color) {
        int classes = refine_colors(g, color);
        if (classes == g.n()) {
            leaf(color);
            return;
        }
        // first color class with more than one vertex
        int target = -1;
        std::vector<int> count(static_cast<size_t>(classes), 0);
        for (int v = 0; v < g.n(); ++v) ++count[color[v]];
        for (int c = 0; c < classes && target < 0; ++c)
            if (count[c] > 1) target = c;
        // vertices with equal open or closed neighborhoods are swapped by an
        // automorphism, so one representative per twin group is enough
        std::vector<uint64_t> tried_open, tried_closed;
        for (int v = 0; v < g.n(); ++v) {
            if (color[v] != target) continue;
            bool twin = false;
            for (size_t i = 0; i < tried_open.size() && !twin; ++i)
                if (tried_open[i] == g.row(v) || tried_closed[i] == g.closed_row(v))
                    twin = true;
            if (twin) continue;
            tried_open.push_back(g.row(v));
            tried_closed.push_back(g.closed_row(v));
            std::vector<int> split = color;
            for (int u = 0; u < g.n(); ++u)
                if (split[u] > target || (split[u] == target && u != v)) ++split[u];
            run(std::move(split));
        }
    }
};

bool iso_rec(const Graph& a, const Graph& b, const std::vector<int>& ca,
             const std::vector<int>& cb, std::vector<int>& map, uint64_t used,
             int depth) {
    if (depth == a.n()) return true;
    for (int h = 0; h < b.n(); ++h) {
        if ((used >> h) & 1) continue;
        if (cb[h] != ca[depth]) continue;
        bool ok = true;
        for (int j = 0; j < depth && ok; ++j)
            if (b.has_edge(map[j], h) != a.has_edge(j, depth)) ok = false;
        if (!ok) continue;
        map[depth] = h;
        if (iso_rec(a, b, ca, cb, map, used | (uint64_t{1} << h), depth + 1)) return true;
    }
    return false;
}

}  // namespace

std::vector<uint64_t> invariant_key(const Graph& g) {
    int n = g.n();
    std::vector<uint64_t> h(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) h[v] = mix(static_cast<uint64_t>(g.degree(v)));
    for (int round = 0; round < n; ++round) {
        std::vector<uint64_t> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<uint64_t> nb;
            for (uint64_t m = g.row(v); m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                nb.push_back(h[w]);
            }
            std::sort(nb.begin(), nb.end());
            uint64_t acc = mix(h[v]);
            for (uint64_t x : nb) acc = mix(acc ^ mix(x));
            next[v] = acc;
        }
        h = std::move(next);
    }
    std::sort(h.begin(), h.end());
    std::vector<uint64_t> key;
    key.push_back(static_cast<uint64_t>(n));
    key.push_back(static_cast<uint64_t>(g.m()));
    key.insert(key.end(), h.begin(), h.end());
    return key;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    if (a.n() == 0) return true;
    if (invariant_key(a) != invariant_key(b)) return false;
    std::vector<int> ca(static_cast<size_t>(a.n()), 0), cb(static_cast<size_t>(b.n()), 0);
    int classes_a = refine_colors(a, ca);
    int classes_b = refine_colors(b, cb);
    if (classes_a != classes_b) return false;
    std::vector<int> map(static_cast<size_t>(a.n()), -1);
    return iso_rec(a, b, ca, cb, map, 0, 0);
}

Graph canonical_form(const Graph& g) {
    if (g.n() == 0) return g;
    CanonSearch search(g);
    search.run(std::vector<int>(static_cast<size_t>(g.n()), 0));
    Graph h(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (uint64_t m = search.best[v]; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (v < w) h.add_edge(v, w);
        }
    return h;
}

}  // namespace epglab
