#include "epglab/b1_search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <memory>
#include <mutex>

#include "epglab/graph_algos.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace epglab {

namespace {

struct Universe {
    int width = 0, height = 0, words = 0;
    std::vector<PathB1> paths;          // ascending by (edge count, fields)
    std::vector<int> edge_counts;
    std::vector<uint64_t> masks;        // `words` words per path, flattened
    std::vector<std::vector<int>> sym;  // sym[s][p] = id of the s-image of p
    std::vector<int> level0;            // ids minimal in their symmetry orbit

    const uint64_t* mask(int p) const {
        return masks.data() + static_cast<size_t>(p) * static_cast<size_t>(words);
    }
    bool intersects(int p, int q) const {
        const uint64_t* a = mask(p);
        const uint64_t* b = mask(q);
        for (int w = 0; w < words; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }

    int id_of(const PathB1& p) const {
        int ec = path_edge_count(p);
        auto it = std::lower_bound(
            paths.begin(), paths.end(), p, [&](const PathB1& x, const PathB1& y) {
                int ex = path_edge_count(x), ey = path_edge_count(y);
                if (ex != ey) return ex < ey;
                return x < y;
            });
        assert(it != paths.end() && *it == p);
        (void)ec;
        return static_cast<int>(it - paths.begin());
    }
};

std::unique_ptr<Universe> build_universe(int width, int height) {
    auto u = std::make_unique<Universe>();
    u->width = width;
    u->height = height;
    u->words = (num_grid_edges(width, height) + 63) / 64;
    std::vector<PathB1>& ps = u->paths;
    for (int y = 0; y < height; ++y)
        for (int x1 = 0; x1 < width; ++x1)
            for (int x2 = x1 + 1; x2 < width; ++x2)
                ps.push_back(straight_path({x1, y}, {x2, y}));
    for (int x = 0; x < width; ++x)
        for (int y1 = 0; y1 < height; ++y1)
            for (int y2 = y1 + 1; y2 < height; ++y2)
                ps.push_back(straight_path({x, y1}, {x, y2}));
    for (int cx = 0; cx < width; ++cx)
        for (int cy = 0; cy < height; ++cy)
            for (int xe = 0; xe < width; ++xe) {
                if (xe == cx) continue;
                for (int ye = 0; ye < height; ++ye) {
                    if (ye == cy) continue;
                    ps.push_back(bent_path({xe, cy}, {cx, cy}, {cx, ye}));
                }
            }
    std::sort(ps.begin(), ps.end(), [](const PathB1& a, const PathB1& b) {
        int ea = path_edge_count(a), eb = path_edge_count(b);
        if (ea != eb) return ea < eb;
        return a < b;
    });
    for (size_t i = 1; i < ps.size(); ++i) assert(!(ps[i - 1] == ps[i]));

    u->edge_counts.reserve(ps.size());
    u->masks.assign(static_cast<size_t>(u->words) * ps.size(), 0);
    for (size_t i = 0; i < ps.size(); ++i) {
        u->edge_counts.push_back(path_edge_count(ps[i]));
        EdgeMask m = path_edge_mask(width, height, ps[i]);
        std::copy(m.begin(), m.end(), u->masks.begin() + static_cast<long>(i) * u->words);
    }

    // grid isometries; with a square grid also the diagonal ones
    std::vector<std::function<Pt(Pt)>> xf;
    int w1 = width - 1, h1 = height - 1;
    xf.push_back([](Pt p) { return p; });
    xf.push_back([w1](Pt p) { return Pt{w1 - p.x, p.y}; });
    xf.push_back([h1](Pt p) { return Pt{p.x, h1 - p.y}; });
    xf.push_back([w1, h1](Pt p) { return Pt{w1 - p.x, h1 - p.y}; });
    if (width == height) {
        xf.push_back([](Pt p) { return Pt{p.y, p.x}; });
        xf.push_back([w1](Pt p) { return Pt{p.y, w1 - p.x}; });
        xf.push_back([h1](Pt p) { return Pt{h1 - p.y, p.x}; });
        xf.push_back([w1, h1](Pt p) { return Pt{h1 - p.y, w1 - p.x}; });
    }
    u->sym.resize(xf.size());
    for (size_t s = 0; s < xf.size(); ++s) {
        u->sym[s].resize(ps.size());
        for (size_t i = 0; i < ps.size(); ++i) {
            const PathB1& p = ps[i];
            PathB1 q = p.bent ? bent_path(xf[s](p.a), xf[s](p.corner), xf[s](p.b))
                              : straight_path(xf[s](p.a), xf[s](p.b));
            u->sym[s][i] = u->id_of(q);
        }
    }
    for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
        bool minimal = true;
        for (size_t s = 1; s < xf.size() && minimal; ++s)
            if (u->sym[s][static_cast<size_t>(i)] < i) minimal = false;
        if (minimal) u->level0.push_back(i);
    }
    return u;
}

const Universe& universe_for(int width, int height) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Universe>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(width, height);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_universe(width, height)).first;
    return *it->second;
}

struct Plan {
    const Graph* g = nullptr;
    const Universe* u = nullptr;
    SearchOptions opt;
    int n = 0;
    std::vector<int> order;             // placement order, degree descending
    std::vector<uint64_t> adj_pos;      // adjacency between order positions
    std::vector<std::vector<std::vector<int>>> cliques_at;  // level -> cliques
                                                            // (member positions)
                                                            // completed there
};

Plan make_plan(const Graph& g, SearchOptions opt) {
    Plan plan;
    plan.g = &g;
    plan.opt = opt;
    plan.n = g.n();
    int side = 3 * std::max(g.n(), 1);
    if (opt.width == 0) plan.opt.width = side;
    if (opt.height == 0) plan.opt.height = side;
    plan.u = &universe_for(plan.opt.width, plan.opt.height);

    plan.order.resize(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) plan.order[static_cast<size_t>(v)] = v;
    std::stable_sort(plan.order.begin(), plan.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> pos(static_cast<size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) pos[static_cast<size_t>(plan.order[static_cast<size_t>(i)])] = i;

    plan.adj_pos.assign(static_cast<size_t>(g.n()), 0);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (g.has_edge(plan.order[static_cast<size_t>(i)], plan.order[static_cast<size_t>(j)]))
                plan.adj_pos[static_cast<size_t>(i)] |= uint64_t{1} << j;

    plan.cliques_at.assign(static_cast<size_t>(g.n()) + 1, {});
    if (opt.require_helly) {
        for (const VertexSet& k : maximal_cliques(g)) {
            std::vector<int> members;
            int last = 0;
            for (int v : k) {
                members.push_back(pos[static_cast<size_t>(v)]);
                last = std::max(last, pos[static_cast<size_t>(v)]);
            }
            std::sort(members.begin(), members.end());
            plan.cliques_at[static_cast<size_t>(last)].push_back(std::move(members));
        }
    }
    return plan;
}

struct Shared {
    std::atomic<uint64_t> nodes{0};
    std::atomic<int> found_branch{INT_MAX};
    std::atomic<bool> stop{false};  // enumeration stopped by the visitor
    std::atomic<bool> budget{false};
    std::mutex visit_mu;
};

class Worker {
public:
    Worker(const Plan& plan, Shared& shared, int branch)
        : plan_(plan), u_(*plan.u), shared_(shared), branch_(branch) {
        snapshot_ = shared_.nodes.load(std::memory_order_relaxed);
        int n = plan_.n;
        cand_.assign(static_cast<size_t>(n) + 1,
                     std::vector<std::vector<int>>(static_cast<size_t>(n)));
        placed_.assign(static_cast<size_t>(n), -1);
    }

    // candidates for every position at the root, first position already chosen
    bool run(int first_path, const std::function<bool(const Rep&)>* visit) {
        visit_ = visit;
        int n = plan_.n;
        if (n == 0) return leaf();
        placed_[0] = first_path;
        ++local_nodes_;
        if (!helly_ok(0)) return false;
        for (int j = 1; j < n; ++j) {
            std::vector<int>& dst = cand_[1][static_cast<size_t>(j)];
            dst.clear();
            bool adj = (plan_.adj_pos[0] >> j) & 1;
            for (int q = 0; q < static_cast<int>(u_.paths.size()); ++q)
                if (u_.intersects(first_path, q) == adj) dst.push_back(q);
            if (dst.empty()) return false;
        }
        return dfs(1);
    }

    uint64_t flush_nodes() {
        uint64_t total = local_nodes_ - flushed_;
        shared_.nodes.fetch_add(total, std::memory_order_relaxed);
        flushed_ = local_nodes_;
        return total;
    }

    bool has_found() const { return has_found_; }
    const Rep& found() const { return found_; }

private:
    bool over_budget() {
        if (!plan_.opt.max_nodes) return false;
        if ((local_nodes_ & 255) == 0) {
            shared_.nodes.fetch_add(local_nodes_ - flushed_, std::memory_order_relaxed);
            flushed_ = local_nodes_;
            snapshot_ = shared_.nodes.load(std::memory_order_relaxed);
        }
        if (snapshot_ + (local_nodes_ - flushed_) > plan_.opt.max_nodes) {
            shared_.budget.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    bool preempted() const {
        return shared_.found_branch.load(std::memory_order_relaxed) < branch_ ||
               shared_.stop.load(std::memory_order_relaxed);
    }

    bool helly_ok(int level) {
        for (const std::vector<int>& members :
             plan_.cliques_at[static_cast<size_t>(level)]) {
            const uint64_t* first = u_.mask(placed_[static_cast<size_t>(members[0])]);
            for (int w = 0; w < u_.words; ++w) {
                uint64_t common = first[w];
                for (size_t i = 1; i < members.size() && common; ++i)
                    common &= u_.mask(placed_[static_cast<size_t>(members[i])])[w];
                if (common) goto next_clique;
            }
            return false;
        next_clique:;
        }
        return true;
    }

    bool leaf() {
        if (visit_) {
            // keep one representative per symmetry orbit: the assignment that
            // is lexicographically least among its images
            for (size_t s = 1; s < u_.sym.size(); ++s) {
                const std::vector<int>& map = u_.sym[s];
                for (int i = 0; i < plan_.n; ++i) {
                    int mine = placed_[static_cast<size_t>(i)];
                    int theirs = map[static_cast<size_t>(mine)];
                    if (theirs < mine) goto rejected;
                    if (theirs > mine) break;
                }
                continue;
            rejected:
                return false;
            }
            Rep rep = to_rep();
            bool carry_on;
            {
                std::lock_guard<std::mutex> lock(shared_.visit_mu);
                carry_on = (*visit_)(rep);
            }
            if (!carry_on) {
                shared_.stop.store(true, std::memory_order_relaxed);
                return true;
            }
            return false;
        }
        found_ = to_rep();
        assert(intersection_graph(found_) == *plan_.g);
        has_found_ = true;
        // smallest first-level branch wins
        int cur = shared_.found_branch.load();
        while (branch_ < cur && !shared_.found_branch.compare_exchange_weak(cur, branch_)) {
        }
        return true;
    }

    Rep to_rep() const {
        Rep rep;
        rep.width = plan_.opt.width;
        rep.height = plan_.opt.height;
        rep.paths.resize(static_cast<size_t>(plan_.n));
        for (int i = 0; i < plan_.n; ++i)
            rep.paths[static_cast<size_t>(plan_.order[static_cast<size_t>(i)])] =
                u_.paths[static_cast<size_t>(placed_[static_cast<size_t>(i)])];
        return rep;
    }

    bool dfs(int level) {
        if (level == plan_.n) return leaf();
        int n = plan_.n;
        const std::vector<int>& mine = cand_[static_cast<size_t>(level)][static_cast<size_t>(level)];
        for (int p : mine) {
            ++local_nodes_;
            if (over_budget()) return true;
            if (preempted()) return true;
            placed_[static_cast<size_t>(level)] = p;
            if (!helly_ok(level)) continue;
            bool dead = false;
            for (int j = level + 1; j < n; ++j) {
                std::vector<int>& dst = cand_[static_cast<size_t>(level) + 1][static_cast<size_t>(j)];
                dst.clear();
                bool adj = (plan_.adj_pos[static_cast<size_t>(level)] >> j) & 1;
                for (int q : cand_[static_cast<size_t>(level)][static_cast<size_t>(j)])
                    if (u_.intersects(p, q) == adj) dst.push_back(q);
                if (dst.empty()) {
                    dead = true;
                    break;
                }
            }
            if (!dead && dfs(level + 1)) return true;
        }
        return false;
    }

    const Plan& plan_;
    const Universe& u_;
    Shared& shared_;
    int branch_;
    const std::function<bool(const Rep&)>* visit_ = nullptr;
    std::vector<std::vector<std::vector<int>>> cand_;
    std::vector<int> placed_;
    uint64_t local_nodes_ = 0, flushed_ = 0, snapshot_ = 0;
    bool has_found_ = false;
    Rep found_;
};

SearchResult run_search(const Graph& g, const SearchOptions& opt,
                        const std::function<bool(const Rep&)>* visit) {
    Plan plan = make_plan(g, opt);
    Shared shared;
    SearchResult res;

    if (plan.n == 0) {
        res.status = SearchStatus::found;
        res.rep = Rep{plan.opt.width, plan.opt.height, {}};
        if (visit) {
            res.status = (*visit)(res.rep) ? SearchStatus::exhausted : SearchStatus::found;
        }
        return res;
    }

    const std::vector<int>& first = plan.u->level0;
    int branches = static_cast<int>(first.size());
    std::vector<std::unique_ptr<Worker>> winners(static_cast<size_t>(branches));

#ifdef _OPENMP
    bool parallel = plan.opt.parallel;
#else
    bool parallel = false;
#endif

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int b = 0; b < branches; ++b) {
            if (shared.found_branch.load() < b || shared.stop.load() || shared.budget.load())
                continue;
            auto w = std::make_unique<Worker>(plan, shared, b);
            w->run(first[static_cast<size_t>(b)], visit);
            w->flush_nodes();
            if (w->has_found()) winners[static_cast<size_t>(b)] = std::move(w);
        }
    } else {
        for (int b = 0; b < branches; ++b) {
            if (shared.found_branch.load() < b || shared.stop.load() || shared.budget.load())
                break;
            auto w = std::make_unique<Worker>(plan, shared, b);
            w->run(first[static_cast<size_t>(b)], visit);
            w->flush_nodes();
            if (w->has_found()) {
                winners[static_cast<size_t>(b)] = std::move(w);
                break;
            }
        }
    }

    res.nodes = shared.nodes.load();
    int fb = shared.found_branch.load();
    if (!visit && fb != INT_MAX) {
        res.status = SearchStatus::found;
        res.rep = winners[static_cast<size_t>(fb)]->found();
    } else if (visit && shared.stop.load()) {
        res.status = SearchStatus::found;
    } else if (shared.budget.load()) {
        res.status = SearchStatus::budget;
    } else {
        res.status = SearchStatus::exhausted;
    }
    return res;
}

}  // namespace

SearchResult search_b1(const Graph& g, const SearchOptions& opt) {
    return run_search(g, opt, nullptr);
}

SearchResult enumerate_reps(const Graph& g, const SearchOptions& opt,
                            const std::function<bool(const Rep&)>& visit) {
    return run_search(g, opt, &visit);
}

namespace {

class ReferenceSearch {
public:
    ReferenceSearch(const Plan& plan) : plan_(plan), u_(*plan.u) {
        placed_.assign(static_cast<size_t>(plan.n), -1);
    }

    SearchResult run() {
        SearchResult res;
        if (plan_.n == 0) {
            res.status = SearchStatus::found;
            res.rep = Rep{plan_.opt.width, plan_.opt.height, {}};
            return res;
        }
        bool done = dfs(0);
        res.nodes = nodes_;
        if (done && has_found_) {
            res.status = SearchStatus::found;
            res.rep = found_;
        } else if (done) {
            res.status = SearchStatus::budget;
        } else {
            res.status = SearchStatus::exhausted;
        }
        return res;
    }

private:
    bool helly_ok(int level) {
        for (const std::vector<int>& members :
             plan_.cliques_at[static_cast<size_t>(level)]) {
            const uint64_t* first = u_.mask(placed_[static_cast<size_t>(members[0])]);
            bool shared_edge = false;
            for (int w = 0; w < u_.words && !shared_edge; ++w) {
                uint64_t common = first[w];
                for (size_t i = 1; i < members.size() && common; ++i)
                    common &= u_.mask(placed_[static_cast<size_t>(members[i])])[w];
                if (common) shared_edge = true;
            }
            if (!shared_edge) return false;
        }
        return true;
    }

    bool dfs(int level) {
        if (level == plan_.n) {
            found_.width = plan_.opt.width;
            found_.height = plan_.opt.height;
            found_.paths.resize(static_cast<size_t>(plan_.n));
            for (int i = 0; i < plan_.n; ++i)
                found_.paths[static_cast<size_t>(plan_.order[static_cast<size_t>(i)])] =
                    u_.paths[static_cast<size_t>(placed_[static_cast<size_t>(i)])];
            has_found_ = true;
            return true;
        }
        int total = static_cast<int>(u_.paths.size());
        bool root = level == 0;
        int root_count = static_cast<int>(u_.level0.size());
        for (int idx = 0; idx < (root ? root_count : total); ++idx) {
            int p = root ? u_.level0[static_cast<size_t>(idx)] : idx;
            bool ok = true;
            for (int j = 0; j < level && ok; ++j) {
                bool adj = (plan_.adj_pos[static_cast<size_t>(j)] >> level) & 1;
                if (u_.intersects(placed_[static_cast<size_t>(j)], p) != adj) ok = false;
            }
            if (!ok) continue;
            ++nodes_;
            if (plan_.opt.max_nodes && nodes_ > plan_.opt.max_nodes) return true;
            placed_[static_cast<size_t>(level)] = p;
            if (!helly_ok(level)) continue;
            if (dfs(level + 1)) return true;
        }
        return false;
    }

    const Plan& plan_;
    const Universe& u_;
    std::vector<int> placed_;
    uint64_t nodes_ = 0;
    bool has_found_ = false;
    Rep found_;
};

}  // namespace

SearchResult search_b1_reference(const Graph& g, const SearchOptions& opt) {
    SearchOptions serial = opt;
    serial.parallel = false;
    Plan plan = make_plan(g, serial);
    return ReferenceSearch(plan).run();
}

}  // namespace epglab
