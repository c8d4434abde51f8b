#include "epglab/construct.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "epglab/classify.hpp"
#include "epglab/graph_algos.hpp"

namespace epglab {
namespace {

// Paths are first laid out in raw signed coordinates; unused grid lines are
// squeezed out at the end.  Rank remapping preserves every segment overlap
// because all segment endpoints survive as grid lines.
struct RawPath {
    Pt a, corner, b;
    bool bent = false;
};

// Four global counters: ascending and descending per axis.  Every line id and
// every anchor position is drawn from one of them with a one-unit gap, so no
// two independent gadgets ever share a grid line or butt against each other.
struct GridAlloc {
    int x_fwd = 0, y_fwd = 0, x_bwd = -1, y_bwd = -1;

    int fwd(bool y_axis, int k) {
        int& c = y_axis ? y_fwd : x_fwd;
        int r = c;
        c += k + 1;
        return r;
    }
    // returns the base of a descending block [base, base + k - 1]
    int bwd(bool y_axis, int k) {
        int& c = y_axis ? y_bwd : x_bwd;
        c -= k + 1;
        return c + 1;
    }
};

// A stretch hosting child anchors: a grid line (column when `col`) with anchor
// positions drawn ascending from the global forward counter of the position
// axis, or descending from the backward counter.
struct Stretch {
    int line = 0;
    bool col = false;
    bool fwd = true;
};

struct Builder {
    const Graph& g;
    Blocks bl;
    std::vector<std::vector<int>> blocks_at;
    std::vector<char> done;
    std::vector<RawPath> raw;
    GridAlloc al;

    explicit Builder(const Graph& gr) : g(gr), bl(biconnected_blocks(gr)) {
        blocks_at.resize(g.n());
        done.assign(bl.blocks.size(), 0);
        raw.resize(g.n());
        for (size_t b = 0; b < bl.blocks.size(); ++b)
            for (int v : bl.blocks[b]) blocks_at[v].push_back(static_cast<int>(b));
    }

    int pos_alloc(const Stretch& s, int k) {
        return s.fwd ? al.fwd(s.col, k) : al.bwd(s.col, k);
    }
    int perp_fwd(const Stretch& s, int k) { return al.fwd(!s.col, k); }
    int perp_bwd(const Stretch& s, int k) { return al.bwd(!s.col, k); }
    int along_fwd(const Stretch& s, int k) { return al.fwd(s.col, k); }

    // (position along the stretch, coordinate on the perpendicular axis)
    static Pt at(const Stretch& s, int pos, int perp) {
        return s.col ? Pt{perp, pos} : Pt{pos, perp};
    }
    static Pt on_line(const Stretch& s, int pos) { return at(s, pos, s.line); }

    bool has_pending(int v) const {
        for (int b : blocks_at[v])
            if (!done[b]) return true;
        return false;
    }

    static void extend(int& lo, int& hi, int from, int to) {
        lo = std::min(lo, from);
        hi = std::max(hi, to);
    }

    // members of a cycle block walked from cut vertex c, starting at its
    // smaller neighbor
    std::vector<int> cycle_order(const VertexSet& block, int c) const {
        uint64_t bmask = set_to_mask(block);
        VertexSet nb = mask_to_set(g.row(c) & bmask);
        if (nb.size() != 2) throw std::logic_error("cycle block degree");
        std::vector<int> order;
        int prev = c, cur = nb[0];
        while (true) {
            order.push_back(cur);
            if (cur == nb[1]) break;
            VertexSet next = mask_to_set((g.row(cur) & bmask) & ~(uint64_t{1} << prev));
            if (next.size() != 1) throw std::logic_error("cycle block walk");
            prev = cur;
            cur = next[0];
        }
        if (order.size() + 1 != block.size()) throw std::logic_error("cycle walk length");
        return order;
    }

    Rep assemble() const {
        if (g.n() == 0) return Rep{1, 1, {}};
        std::vector<int> xs, ys;
        for (const RawPath& r : raw) {
            xs.push_back(r.a.x);
            xs.push_back(r.b.x);
            ys.push_back(r.a.y);
            ys.push_back(r.b.y);
            if (r.bent) {
                xs.push_back(r.corner.x);
                ys.push_back(r.corner.y);
            }
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        auto remap = [](const std::vector<int>& vals, int v) {
            return static_cast<int>(std::lower_bound(vals.begin(), vals.end(), v) -
                                    vals.begin());
        };
        Rep rep;
        rep.width = static_cast<int>(xs.size());
        rep.height = static_cast<int>(ys.size());
        for (const RawPath& r : raw) {
            Pt a{remap(xs, r.a.x), remap(ys, r.a.y)};
            Pt b{remap(xs, r.b.x), remap(ys, r.b.y)};
            if (r.bent) {
                Pt c{remap(xs, r.corner.x), remap(ys, r.corner.y)};
                rep.paths.push_back(bent_path(a, c, b));
            } else {
                rep.paths.push_back(straight_path(a, b));
            }
        }
        validate_rep(rep);
        if (intersection_graph(rep) != g)
            throw std::logic_error("construction does not reproduce the graph");
        return rep;
    }

    // --- block graphs: every block is a clique on one anchor edge ---

    void block_children(int v, const Stretch& host, int& lo, int& hi) {
        for (int b : blocks_at[v]) {
            if (done[b]) continue;
            done[b] = 1;
            int p = pos_alloc(host, 2);
            extend(lo, hi, p, p + 1);
            for (int w : bl.blocks[b]) {
                if (w == v) continue;
                if (!has_pending(w)) {
                    raw[w] = {on_line(host, p), {}, on_line(host, p + 1), false};
                    continue;
                }
                // run along the host line to a private turn-off, then bend
                int rw = along_fwd(host, 1);
                Stretch sub{rw, !host.col, true};
                int clo = INT_MAX, chi = INT_MIN;
                block_children(w, sub, clo, chi);
                raw[w] = {on_line(host, p), on_line(host, rw), at(host, rw, chi), true};
            }
        }
    }

    void block_component(int root) {
        Stretch run{al.fwd(false, 1), true, true};
        int lo = INT_MAX, hi = INT_MIN;
        block_children(root, run, lo, hi);
        if (hi == INT_MIN) {  // isolated vertex
            int q = al.fwd(true, 2);
            raw[root] = {Pt{run.line, q}, {}, Pt{run.line, q + 1}, false};
        } else {
            raw[root] = {on_line(run, lo), {}, on_line(run, hi), false};
        }
    }

    // --- cacti ---

    // Member covering the anchor and bending onto the fresh perpendicular
    // line through the anchor's far end.
    void lay_fwd(int w, const Stretch& host, int p) {
        if (!has_pending(w)) {
            raw[w] = {on_line(host, p), {}, on_line(host, p + 1), false};
            return;
        }
        Stretch sub{p + 1, !host.col, true};
        int clo = INT_MAX, chi = INT_MIN;
        cactus_children(w, sub, clo, chi);
        raw[w] = {on_line(host, p), on_line(host, p + 1), at(host, p + 1, chi), true};
    }

    // Second triangle member: covers the anchor and extends backward on the
    // perpendicular line through the anchor's near end.
    void lay_bwd(int w, const Stretch& host, int p) {
        if (!has_pending(w)) {
            raw[w] = {on_line(host, p), {}, on_line(host, p + 1), false};
            return;
        }
        Stretch sub{p, !host.col, false};
        int clo = INT_MAX, chi = INT_MIN;
        cactus_children(w, sub, clo, chi);
        raw[w] = {at(host, p, clo), on_line(host, p), on_line(host, p + 1), true};
    }

    // Cycle of length >= 5 on an anchor pair [p,p+1], [p+1,p+2]: a ladder of
    // stations climbs the line through p+1, a descender on the line through
    // p+2 hands the chain back to the closing member on the second anchor.
    void lay_long_cycle(const std::vector<int>& u, const Stretch& host, int p) {
        int k = static_cast<int>(u.size()) + 1;
        Stretch cpre{p + 2, !host.col, true};
        int loC = INT_MAX, hiC = INT_MIN;
        cactus_children(u[k - 2], cpre, loC, hiC);
        int yg = perp_fwd(host, 2);
        Stretch cdesc{p + 2, !host.col, true};
        int loD = INT_MAX, hiD = INT_MIN;
        cactus_children(u[k - 3], cdesc, loD, hiD);

        Stretch cfirst{p + 1, !host.col, true};
        int lo1 = INT_MAX, hi1 = INT_MIN;
        cactus_children(u[0], cfirst, lo1, hi1);
        int t = perp_fwd(host, 2);
        raw[u[0]] = {on_line(host, p), on_line(host, p + 1), at(host, p + 1, t + 1), true};

        int prev = t;
        for (int i = 1; i <= k - 5; ++i) {
            Stretch clad{p + 1, !host.col, true};
            int loL = INT_MAX, hiL = INT_MIN;
            cactus_children(u[i], clad, loL, hiL);
            int ti = perp_fwd(host, 2);
            raw[u[i]] = {at(host, p + 1, prev), {}, at(host, p + 1, ti + 1), false};
            prev = ti;
        }

        Stretch ctop{p + 1, !host.col, true};
        int loT = INT_MAX, hiT = INT_MIN;
        cactus_children(u[k - 4], ctop, loT, hiT);
        int top = perp_fwd(host, 1);
        int st = along_fwd(host, 2);
        raw[u[k - 4]] = {at(host, p + 1, prev), at(host, p + 1, top), at(host, st + 1, top), true};
        raw[u[k - 3]] = {at(host, p + 2, yg), at(host, p + 2, top), at(host, st + 1, top), true};
        raw[u[k - 2]] = {on_line(host, p + 1), on_line(host, p + 2), at(host, p + 2, yg + 1), true};
    }

    // Four-cycle on an anchor pair: both of the cut vertex's cycle neighbors
    // use the line through p+1 (one upward, one downward past the stretch
    // line); the opposite vertex crosses between their stations.
    void lay_four_cycle(const std::vector<int>& u, const Stretch& host, int p) {
        int s = perp_bwd(host, 2);
        Stretch cdown{p + 1, !host.col, false};
        int lo3 = INT_MAX, hi3 = INT_MIN;
        cactus_children(u[2], cdown, lo3, hi3);
        int bot = (lo3 == INT_MAX) ? s : lo3;
        raw[u[2]] = {at(host, p + 1, bot), on_line(host, p + 1), on_line(host, p + 2), true};

        int t = perp_fwd(host, 2);
        Stretch cup{p + 1, !host.col, true};
        int lo1 = INT_MAX, hi1 = INT_MIN;
        cactus_children(u[0], cup, lo1, hi1);
        raw[u[0]] = {on_line(host, p), on_line(host, p + 1),
                     at(host, p + 1, std::max(t + 1, hi1)), true};

        Stretch cross{t + 1, host.col, true};
        int lo2 = INT_MAX, hi2 = INT_MIN;
        cactus_children(u[1], cross, lo2, hi2);
        if (hi2 == INT_MIN) {
            raw[u[1]] = {at(host, p + 1, s), {}, at(host, p + 1, t + 1), false};
        } else {
            raw[u[1]] = {at(host, p + 1, s), at(host, p + 1, t + 1), at(host, hi2, t + 1), true};
        }
    }

    void cactus_children(int v, const Stretch& host, int& lo, int& hi) {
        for (int b : blocks_at[v]) {
            if (done[b]) continue;
            done[b] = 1;
            const VertexSet& block = bl.blocks[b];
            int k = static_cast<int>(block.size());
            if (k <= 3) {
                int p = pos_alloc(host, 2);
                extend(lo, hi, p, p + 1);
                VertexSet members;
                for (int w : block)
                    if (w != v) members.push_back(w);
                lay_fwd(members[0], host, p);
                if (members.size() == 2) lay_bwd(members[1], host, p);
            } else {
                std::vector<int> u = cycle_order(block, v);
                int p = pos_alloc(host, 3);
                extend(lo, hi, p, p + 2);
                if (k == 4)
                    lay_four_cycle(u, host, p);
                else
                    lay_long_cycle(u, host, p);
            }
        }
    }

    void cactus_root(int root) {
        Stretch run{al.fwd(false, 1), true, true};
        int lo = INT_MAX, hi = INT_MIN;
        cactus_children(root, run, lo, hi);
        if (hi == INT_MIN) {
            int q = al.fwd(true, 2);
            raw[root] = {Pt{run.line, q}, {}, Pt{run.line, q + 1}, false};
        } else {
            raw[root] = {on_line(run, lo), {}, on_line(run, hi), false};
        }
    }
};

}  // namespace

Rep construct_block_rep(const Graph& g) {
    if (!classify_graph(g).block_graph)
        throw WrongClass("graph is not a block graph");
    if (g.n() == 0) return Rep{1, 1, {}};
    Builder bld(g);
    for (const VertexSet& comp : connected_components(g))
        bld.block_component(comp[0]);
    return bld.assemble();
}

Rep construct_cactus_rep(const Graph& g) {
    if (!classify_graph(g).cactus)
        throw WrongClass("graph is not a connected cactus");
    if (g.n() == 0) return Rep{1, 1, {}};
    Builder bld(g);
    bld.cactus_root(0);
    return bld.assemble();
}

bool is_monotone(const Rep& rep) {
    for (const PathB1& p : rep.paths) {
        if (!p.bent) continue;  // straight segments ascend from a to b
        if (p.corner.x < p.a.x || p.corner.y < p.a.y) return false;
        if (p.b.x < p.corner.x || p.b.y < p.corner.y) return false;
    }
    return true;
}

}  // namespace epglab
