#include "epglab/tree_model.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "epglab/graph_algos.hpp"

namespace epglab {

void validate_tree_rep(const TreeRep& tr) {
    if (!is_tree(tr.host)) throw RangeError("host is not a tree");
    for (size_t i = 0; i < tr.paths.size(); ++i) {
        const std::vector<int>& p = tr.paths[i];
        std::string tag = "path " + std::to_string(i);
        if (p.empty()) throw RangeError(tag + " is empty");
        uint64_t seen = 0;
        for (size_t j = 0; j < p.size(); ++j) {
            int u = p[j];
            if (u < 0 || u >= tr.host.n())
                throw RangeError(tag + " leaves the host");
            if ((seen >> u) & 1) throw RangeError(tag + " repeats node " + std::to_string(u));
            seen |= uint64_t{1} << u;
            if (j > 0 && !tr.host.has_edge(p[j - 1], u))
                throw RangeError(tag + " jumps between nonadjacent nodes");
        }
    }
}

namespace {

uint64_t node_mask(const std::vector<int>& path) {
    uint64_t m = 0;
    for (int u : path) m |= uint64_t{1} << u;
    return m;
}

// host edge ids follow edge_list order; hosts stay under 64 edges
uint64_t edge_mask(const std::vector<std::pair<int, int>>& edges,
                   const std::vector<int>& path) {
    uint64_t m = 0;
    for (size_t j = 1; j < path.size(); ++j) {
        int a = std::min(path[j - 1], path[j]);
        int b = std::max(path[j - 1], path[j]);
        auto it = std::find(edges.begin(), edges.end(), std::make_pair(a, b));
        m |= uint64_t{1} << (it - edges.begin());
    }
    return m;
}

}  // namespace

Graph tree_intersection_graph(const TreeRep& tr, bool share_edge) {
    validate_tree_rep(tr);
    int n = tr.n();
    Graph g(n);
    std::vector<uint64_t> masks(n);
    std::vector<std::pair<int, int>> edges = edge_list(tr.host);
    for (int i = 0; i < n; ++i)
        masks[i] = share_edge ? edge_mask(edges, tr.paths[i]) : node_mask(tr.paths[i]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (masks[i] & masks[j]) g.add_edge(i, j);
    return g;
}

// --- text format ---

namespace {

std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string word;
        if (probe >> word) lines.push_back(line);
    }
    return lines;
}

}  // namespace

TreeRep parse_tree_rep(std::istream& in) {
    std::vector<std::string> lines = content_lines(in);
    size_t at = 0;
    auto next = [&](const char* what) -> std::istringstream {
        if (at >= lines.size())
            throw ParseError(std::string("missing ") + what);
        return std::istringstream(lines[at++]);
    };

    TreeRep tr;
    {
        std::istringstream head = next("host header");
        std::string word;
        int h = 0;
        if (!(head >> word >> h) || word != "host" || h < 1 || h > 64)
            throw ParseError("expected 'host <nodes>'");
        tr.host = Graph(h);
        for (int e = 0; e + 1 < h; ++e) {
            std::istringstream el = next("host edge");
            int u = -1, v = -1;
            std::string extra;
            if (!(el >> u >> v) || (el >> extra) || u < 0 || v < 0 || u >= h ||
                v >= h || u == v)
                throw ParseError("bad host edge line: " + lines[at - 1]);
            if (tr.host.has_edge(u, v))
                throw ParseError("duplicate host edge: " + lines[at - 1]);
            tr.host.add_edge(u, v);
        }
    }
    {
        std::istringstream head = next("paths header");
        std::string word;
        int n = -1;
        if (!(head >> word >> n) || word != "paths" || n < 0)
            throw ParseError("expected 'paths <count>'");
        tr.paths.resize(n);
        std::vector<char> seen(n, 0);
        for (int i = 0; i < n; ++i) {
            std::istringstream pl = next("path line");
            int id = -1;
            std::string colon;
            if (!(pl >> id >> colon) || colon != ":" || id < 0 || id >= n)
                throw ParseError("bad path line: " + lines[at - 1]);
            if (seen[id]) throw ParseError("duplicate path id " + std::to_string(id));
            seen[id] = 1;
            int node;
            while (pl >> node) tr.paths[id].push_back(node);
            if (tr.paths[id].empty())
                throw ParseError("empty path line: " + lines[at - 1]);
        }
    }
    if (at != lines.size()) throw ParseError("trailing content: " + lines[at]);
    validate_tree_rep(tr);
    return tr;
}

TreeRep parse_tree_rep(const std::string& text) {
    std::istringstream in(text);
    return parse_tree_rep(in);
}

std::string format_tree_rep(const TreeRep& tr) {
    std::ostringstream out;
    out << "host " << tr.host.n() << "\n";
    for (auto [u, v] : edge_list(tr.host)) out << u << " " << v << "\n";
    out << "paths " << tr.n() << "\n";
    for (int i = 0; i < tr.n(); ++i) {
        out << i << " :";
        for (int u : tr.paths[i]) out << " " << u;
        out << "\n";
    }
    return out.str();
}

TreeRep load_tree_rep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_tree_rep(in);
}

void save_tree_rep(const TreeRep& tr, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << format_tree_rep(tr);
}

// --- tree store ---

const std::vector<Graph>& trees_with(int nodes) {
    constexpr int kMax = 16;
    if (nodes < 1 || nodes > kMax)
        throw RangeError("tree store covers 1.." + std::to_string(kMax) + " nodes");
    static std::mutex mu;
    static std::vector<std::vector<Graph>> cache;
    std::scoped_lock lock(mu);
    if (cache.empty()) {
        cache.reserve(kMax);
        cache.push_back({Graph(1)});
    }
    while (static_cast<int>(cache.size()) < nodes) {
        std::set<std::string> seen;
        std::vector<Graph> grown;
        for (const Graph& t : cache.back()) {
            for (int v = 0; v < t.n(); ++v) {
                Graph bigger(t.n() + 1);
                for (auto [a, b] : edge_list(t)) bigger.add_edge(a, b);
                bigger.add_edge(v, t.n());
                Graph canon = canonical_form(bigger);
                if (seen.insert(format_graph(canon)).second)
                    grown.push_back(canon);
            }
        }
        cache.push_back(std::move(grown));
    }
    return cache[nodes - 1];
}

// --- generic host search ---

namespace {

std::vector<int> walk_between(const Graph& host, int u, int v) {
    std::vector<int> parent(host.n(), -1);
    std::deque<int> queue{u};
    std::vector<char> seen(host.n(), 0);
    seen[u] = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for (int y : host.neighbors(x)) {
            if (seen[y]) continue;
            seen[y] = 1;
            parent[y] = x;
            queue.push_back(y);
        }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

struct HostPath {
    int u = 0, v = 0;
    uint64_t mask = 0;  // nodes or edges depending on mode
};

}  // namespace

TreeSearch search_tree_rep(const Graph& g, bool share_edge, int max_host_nodes) {
    TreeSearch res;
    res.host_bound = max_host_nodes;
    int n = g.n();
    if (n == 0) {
        res.verdict = TreeVerdict::found;
        res.rep.host = Graph(1);
        return res;
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    for (int h = 1; h <= max_host_nodes; ++h) {
        for (const Graph& host : trees_with(h)) {
            std::vector<std::pair<int, int>> edges = edge_list(host);
            std::vector<HostPath> universe;
            for (int u = 0; u < h; ++u) {
                for (int v = u; v < h; ++v) {
                    std::vector<int> walk = walk_between(host, u, v);
                    HostPath hp{u, v, 0};
                    hp.mask = share_edge ? edge_mask(edges, walk) : node_mask(walk);
                    universe.push_back(hp);
                }
            }

            std::vector<int> pick(n, -1);
            auto assign = [&](auto&& self, int depth) -> bool {
                if (depth == n) return true;
                int v = order[depth];
                for (size_t c = 0; c < universe.size(); ++c) {
                    bool ok = true;
                    for (int e = 0; e < depth && ok; ++e) {
                        bool share =
                            (universe[c].mask & universe[pick[e]].mask) != 0;
                        if (share != g.has_edge(v, order[e])) ok = false;
                    }
                    if (!ok) continue;
                    pick[depth] = static_cast<int>(c);
                    if (self(self, depth + 1)) return true;
                }
                pick[depth] = -1;
                return false;
            };
            if (!assign(assign, 0)) continue;

            res.verdict = TreeVerdict::found;
            res.rep.host = host;
            res.rep.paths.resize(n);
            for (int d = 0; d < n; ++d) {
                const HostPath& hp = universe[pick[d]];
                res.rep.paths[order[d]] = walk_between(host, hp.u, hp.v);
            }
            validate_tree_rep(res.rep);
            return res;
        }
    }
    res.verdict = TreeVerdict::exhausted;
    return res;
}

// --- clique path trees for chordal graphs ---

namespace {

// Grows spanning trees over the maximal cliques.  An attachment of clique w
// at placed clique u is allowed when everything w shares with the placed part
// lies inside u (so each vertex's cliques stay connected in the tree) and no
// vertex common to u and w already has two tree edges at u (so its cliques
// line up along a path).  Every clique tree arises by such parent-first
// growth from the tree rooted at clique 0, hence the search is complete.
struct PathTreeGrower {
    std::vector<uint64_t> masks;
    int k = 0;
    uint64_t placed = 0, cover = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<uint8_t, 64>> deg;
    std::set<std::vector<uint16_t>> visited;

    explicit PathTreeGrower(const std::vector<VertexSet>& cliques) {
        k = static_cast<int>(cliques.size());
        masks.resize(k);
        for (int i = 0; i < k; ++i) masks[i] = set_to_mask(cliques[i]);
        deg.assign(k, {});
        placed = 1;
        cover = masks[0];
    }

    bool grow() {
        if (std::popcount(placed) == k) return true;
        std::vector<uint16_t> key;
        key.reserve(edges.size());
        for (auto [u, w] : edges)
            key.push_back(static_cast<uint16_t>(u * 64 + w));
        std::sort(key.begin(), key.end());
        if (!visited.insert(std::move(key)).second) return false;

        for (int w = 0; w < k; ++w) {
            if ((placed >> w) & 1) continue;
            uint64_t need = masks[w] & cover;
            for (int u = 0; u < k; ++u) {
                if (!((placed >> u) & 1)) continue;
                if (need & ~masks[u]) continue;
                uint64_t common = masks[w] & masks[u];
                if (!common) continue;
                bool room = true;
                for (uint64_t m = common; m && room; m &= m - 1)
                    if (deg[u][std::countr_zero(m)] >= 2) room = false;
                if (!room) continue;

                edges.emplace_back(u, w);
                placed |= uint64_t{1} << w;
                uint64_t added = masks[w] & ~cover;
                cover |= masks[w];
                for (uint64_t m = common; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    ++deg[u][v];
                    ++deg[w][v];
                }
                if (grow()) return true;
                for (uint64_t m = common; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    --deg[u][v];
                    --deg[w][v];
                }
                cover &= ~added;
                placed &= ~(uint64_t{1} << w);
                edges.pop_back();
            }
        }
        return false;
    }
};

// path of component-local vertex v through the cliques that contain it
std::vector<int> clique_walk(const PathTreeGrower& gr, int v) {
    std::vector<int> nodes;
    for (int i = 0; i < gr.k; ++i)
        if ((gr.masks[i] >> v) & 1) nodes.push_back(i);
    if (nodes.size() == 1) return nodes;
    std::vector<std::vector<int>> adj(gr.k);
    for (auto [u, w] : gr.edges) {
        if (((gr.masks[u] >> v) & 1) && ((gr.masks[w] >> v) & 1)) {
            adj[u].push_back(w);
            adj[w].push_back(u);
        }
    }
    int start = -1;
    for (int u : nodes)
        if (adj[u].size() == 1) start = u;
    std::vector<int> walk{start};
    int prev = -1, cur = start;
    while (walk.size() < nodes.size()) {
        int next = (adj[cur][0] == prev && adj[cur].size() > 1) ? adj[cur][1]
                                                                : adj[cur][0];
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    return walk;
}

}  // namespace

std::optional<TreeRep> vpt_rep_chordal(const Graph& g) {
    if (!check_chordal(g).chordal)
        throw std::invalid_argument("clique path trees need a chordal graph");
    if (g.n() == 0) return TreeRep{Graph(1), {}};

    TreeRep rep;
    rep.paths.resize(g.n());
    std::vector<std::pair<int, int>> host_edges;
    int offset = 0;
    for (const VertexSet& comp : connected_components(g)) {
        Graph local = induced_subgraph(g, comp);
        PathTreeGrower grower(maximal_cliques(local));
        if (!grower.grow()) return std::nullopt;
        for (auto [u, w] : grower.edges)
            host_edges.emplace_back(offset + u, offset + w);
        if (offset > 0) host_edges.emplace_back(offset - 1, offset);  // link
        for (size_t i = 0; i < comp.size(); ++i) {
            std::vector<int> walk = clique_walk(grower, static_cast<int>(i));
            for (int& node : walk) node += offset;
            rep.paths[comp[i]] = std::move(walk);
        }
        offset += grower.k;
    }
    rep.host = Graph(offset);
    for (auto [u, w] : host_edges) rep.host.add_edge(u, w);
    validate_tree_rep(rep);
    return rep;
}

bool is_vpt(const Graph& g) {
    if (!check_chordal(g).chordal) return false;
    for (const VertexSet& comp : connected_components(g)) {
        Graph local = induced_subgraph(g, comp);
        PathTreeGrower grower(maximal_cliques(local));
        if (!grower.grow()) return false;
    }
    return true;
}

}  // namespace epglab
