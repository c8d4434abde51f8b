#include "epglab/hellify.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <tuple>

#include "epglab/epg_analysis.hpp"
#include "epglab/families.hpp"
#include "epglab/graph_algos.hpp"

namespace epglab {

namespace {

bool mask_has(const EdgeMask& m, int idx) {
    return (m[static_cast<size_t>(idx) >> 6] >> (idx & 63)) & 1u;
}

struct EdgeRef {
    bool horiz = false;
    int x = 0, y = 0;
};

EdgeRef decode_edge(int width, int height, int idx) {
    int nh = (width - 1) * height;
    if (idx < nh) return {true, idx % (width - 1), idx / (width - 1)};
    idx -= nh;
    return {false, idx / (height - 1), idx % (height - 1)};
}

// Claw geometry around the center: two collinear base edges (negative and
// positive side) plus one perpendicular stem edge.
struct ClawGeom {
    Pt center;
    bool base_horiz = false;
    int stem_sign = 0;  // stem leaves the center toward +axis or -axis
    int base_neg = -1, base_pos = -1, stem = -1;
};

ClawGeom decode_claw(const Rep& rep, const CliqueClass& cc) {
    ClawGeom geo;
    geo.center = cc.center;
    EdgeRef b0 = decode_edge(rep.width, rep.height, cc.claw[0]);
    EdgeRef b1 = decode_edge(rep.width, rep.height, cc.claw[1]);
    EdgeRef st = decode_edge(rep.width, rep.height, cc.claw[2]);
    assert(b0.horiz == b1.horiz && b0.horiz != st.horiz);
    geo.base_horiz = b0.horiz;
    geo.stem = cc.claw[2];
    if (geo.base_horiz) {
        assert(b0.y == cc.center.y && b1.y == cc.center.y);
        geo.base_neg = b0.x == cc.center.x - 1 ? cc.claw[0] : cc.claw[1];
        geo.base_pos = b0.x == cc.center.x ? cc.claw[0] : cc.claw[1];
        assert(st.x == cc.center.x);
        geo.stem_sign = st.y == cc.center.y ? 1 : -1;
        assert(st.y == cc.center.y || st.y == cc.center.y - 1);
    } else {
        assert(b0.x == cc.center.x && b1.x == cc.center.x);
        geo.base_neg = b0.y == cc.center.y - 1 ? cc.claw[0] : cc.claw[1];
        geo.base_pos = b0.y == cc.center.y ? cc.claw[0] : cc.claw[1];
        assert(st.y == cc.center.y);
        geo.stem_sign = st.x == cc.center.x ? 1 : -1;
        assert(st.x == cc.center.x || st.x == cc.center.x - 1);
    }
    return geo;
}

// unit edge from the center going j steps along the stem, 1-based offset
int stem_edge_at(const Rep& rep, const ClawGeom& geo, int j) {
    Pt c = geo.center;
    if (geo.base_horiz) {
        int y = geo.stem_sign > 0 ? c.y + j - 1 : c.y - j;
        return v_edge_index(rep.width, rep.height, c.x, y);
    }
    int x = geo.stem_sign > 0 ? c.x + j - 1 : c.x - j;
    return h_edge_index(rep.width, rep.height, x, c.y);
}

// length of the bent member's arm along the stem direction
int stem_arm_len(const ClawGeom& geo, const PathB1& p) {
    assert(p.bent && p.corner == geo.center);
    Pt ends[2] = {p.a, p.b};
    for (Pt e : ends) {
        if (geo.base_horiz && e.x == geo.center.x) {
            assert((e.y - geo.center.y) * geo.stem_sign > 0);
            return std::abs(e.y - geo.center.y);
        }
        if (!geo.base_horiz && e.y == geo.center.y) {
            assert((e.x - geo.center.x) * geo.stem_sign > 0);
            return std::abs(e.x - geo.center.x);
        }
    }
    assert(false);
    return 0;
}

Pt base_arm_end(const ClawGeom& geo, const PathB1& p) {
    Pt ends[2] = {p.a, p.b};
    for (Pt e : ends) {
        if (geo.base_horiz && e.y == geo.center.y && e.x != geo.center.x) return e;
        if (!geo.base_horiz && e.x == geo.center.x && e.y != geo.center.y) return e;
    }
    assert(false);
    return {};
}

std::array<int, 4> verified_diamond(const Graph& g, std::array<int, 4> d) {
    bool ok = g.has_edge(d[0], d[1]) && g.has_edge(d[0], d[2]) &&
              g.has_edge(d[1], d[2]) && g.has_edge(d[1], d[3]) &&
              g.has_edge(d[2], d[3]) && !g.has_edge(d[0], d[3]);
    if (ok) return d;
    auto m = find_induced(g, diamond_graph());
    if (!m) throw std::logic_error("claw blocked but no diamond found");
    return {(*m)[0], (*m)[1], (*m)[2], (*m)[3]};
}

}  // namespace

HellifyResult hellify(const Rep& input) {
    validate_rep(input);
    HellifyResult res;
    res.rep = input;
    Rep& rep = res.rep;
    const Graph g0 = intersection_graph(rep);
    const int n = rep.n();

    int bend_budget = 1;
    for (const PathB1& p : rep.paths) bend_budget += p.bent ? 1 : 0;

    for (int round = 0;; ++round) {
        assert(round <= bend_budget + 1);
        res.rounds = round;
        Graph g = intersection_graph(rep);
        assert(g == g0);

        std::vector<EdgeMask> masks(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            masks[static_cast<size_t>(i)] = path_edge_mask(rep.width, rep.height, rep.paths[static_cast<size_t>(i)]);

        // lex-least claw clique this round
        bool have_claw = false;
        CliqueClass best;
        VertexSet best_clique;
        for (const VertexSet& K : maximal_cliques(g)) {
            CliqueClass cc = classify_clique(rep, K);
            if (cc.kind == CliqueKind::edge_clique) continue;
            if (cc.kind == CliqueKind::neither)
                throw std::logic_error("maximal clique is neither edge nor claw");
            auto key = std::tuple(cc.center, cc.claw, K);
            if (!have_claw || key < std::tuple(best.center, best.claw, best_clique)) {
                have_claw = true;
                best = cc;
                best_clique = K;
            }
        }
        if (!have_claw) {
            res.success = true;
            return res;
        }

        ClawGeom geo = decode_claw(rep, best);
        const std::vector<int>& members = best_clique;
        const uint64_t clique_mask = set_to_mask(best_clique);

        // member roles: which of the two bases each one covers
        std::vector<int> bent_neg, bent_pos, through;
        for (int v : members) {
            bool cn = mask_has(masks[static_cast<size_t>(v)], geo.base_neg);
            bool cp = mask_has(masks[static_cast<size_t>(v)], geo.base_pos);
            bool cs = mask_has(masks[static_cast<size_t>(v)], geo.stem);
            assert(cn + cp + cs == 2);
            if (cn && cp)
                through.push_back(v);
            else if (cs && cn)
                bent_neg.push_back(v);
            else
                bent_pos.push_back(v);
        }
        // a genuine claw clique has all three roles, else a base edge is common
        assert(!bent_neg.empty() && !bent_pos.empty() && !through.empty());

        // blockers: paths outside the clique meeting a bent member's stem arm;
        // offset = distance of the shared edge from the center
        bool progress = false;
        int best_off = 0, best_t = -1;
        bool any_blocked_neg = false, any_blocked_pos = false;

        std::vector<int> all_bent = bent_neg;
        all_bent.insert(all_bent.end(), bent_pos.begin(), bent_pos.end());
        for (int v : all_bent) {
            const bool neg_side =
                std::find(bent_neg.begin(), bent_neg.end(), v) != bent_neg.end();
            int len = stem_arm_len(geo, rep.paths[static_cast<size_t>(v)]);
            bool blocked = false;
            for (int q = 0; q < n; ++q) {
                if ((clique_mask >> q) & 1) continue;
                for (int j = 1; j <= len; ++j) {
                    if (!mask_has(masks[static_cast<size_t>(q)], stem_edge_at(rep, geo, j))) continue;
                    blocked = true;
                    if (best_t < 0 || j < best_off || (j == best_off && q < best_t)) {
                        best_off = j;
                        best_t = q;
                    }
                    break;
                }
            }
            if (blocked) {
                (neg_side ? any_blocked_neg : any_blocked_pos) = true;
                continue;
            }

            // straightening v adds exactly the opposite base edge; a path that
            // already covers it without being adjacent to v would gain a false
            // adjacency, and that configuration is an induced diamond
            int b_opp = neg_side ? geo.base_pos : geo.base_neg;
            int gainer = -1;
            for (int q = 0; q < n && gainer < 0; ++q)
                if (q != v && !g.has_edge(q, v) && mask_has(masks[static_cast<size_t>(q)], b_opp)) gainer = q;
            if (gainer >= 0) {
                const std::vector<int>& other = neg_side ? bent_pos : bent_neg;
                res.diamond = verified_diamond(g, {v, through[0], other[0], gainer});
                return res;
            }

            Pt base_end = base_arm_end(geo, rep.paths[static_cast<size_t>(v)]);
            Pt opp = geo.center;
            if (geo.base_horiz)
                opp.x += neg_side ? 1 : -1;
            else
                opp.y += neg_side ? 1 : -1;
            rep.paths[static_cast<size_t>(v)] = straight_path(base_end, opp);
            masks[static_cast<size_t>(v)] = path_edge_mask(rep.width, rep.height, rep.paths[static_cast<size_t>(v)]);
            assert(intersection_graph(rep) == g0);
            progress = true;
        }

        if (progress) continue;

        // every bent member is blocked on both sides; the blocker whose shared
        // stem edge lies closest to the center meets every blocked arm, and a
        // maximal clique must hold some vertex it misses
        assert(any_blocked_neg && any_blocked_pos && best_t >= 0);
        int w = -1;
        for (int u : members)
            if (!g.has_edge(u, best_t)) {
                w = u;
                break;
            }
        assert(w >= 0);
        res.diamond = verified_diamond(g, {w, bent_neg[0], bent_pos[0], best_t});
        return res;
    }
}

}  // namespace epglab
