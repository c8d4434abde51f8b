#include "epglab/epg_analysis.hpp"

#include <algorithm>

#include "epglab/graph_algos.hpp"

namespace epglab {

namespace {

bool mask_has(const EdgeMask& m, int e) {
    return (m[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u;
}

std::vector<EdgeMask> all_masks(const Rep& rep) {
    std::vector<EdgeMask> masks;
    masks.reserve(rep.paths.size());
    for (const PathB1& p : rep.paths)
        masks.push_back(path_edge_mask(rep.width, rep.height, p));
    return masks;
}

// star edge indices around (x,y): left, right, down, up; -1 when outside
struct Star {
    int l = -1, r = -1, d = -1, u = -1;
};

Star star_at(const Rep& rep, int x, int y) {
    Star s;
    if (x >= 1) s.l = h_edge_index(rep.width, rep.height, x - 1, y);
    if (x <= rep.width - 2) s.r = h_edge_index(rep.width, rep.height, x, y);
    if (y >= 1) s.d = v_edge_index(rep.width, rep.height, x, y - 1);
    if (y <= rep.height - 2) s.u = v_edge_index(rep.width, rep.height, x, y);
    return s;
}

}  // namespace

CliqueClass classify_clique(const Rep& rep, const VertexSet& clique) {
    assert(!clique.empty());
    std::vector<EdgeMask> masks;
    for (int v : clique)
        masks.push_back(path_edge_mask(rep.width, rep.height, rep.paths[static_cast<size_t>(v)]));

    CliqueClass res;
    EdgeMask common = masks[0];
    for (size_t i = 1; i < masks.size(); ++i)
        for (size_t w = 0; w < common.size(); ++w) common[w] &= masks[i][w];
    for (size_t w = 0; w < common.size(); ++w)
        if (common[w]) {
            res.kind = CliqueKind::edge_clique;
            res.edge = static_cast<int>(w * 64) + std::countr_zero(common[w]);
            return res;
        }

    for (int y = 0; y < rep.height; ++y)
        for (int x = 0; x < rep.width; ++x) {
            Star s = star_at(rep, x, y);
            // two collinear base edges plus one perpendicular stem
            std::array<std::array<int, 3>, 4> claws = {{
                {s.l, s.r, s.u},
                {s.l, s.r, s.d},
                {s.d, s.u, s.l},
                {s.d, s.u, s.r},
            }};
            for (const auto& claw : claws) {
                if (claw[0] < 0 || claw[1] < 0 || claw[2] < 0) continue;
                bool ok = true;
                for (const EdgeMask& m : masks) {
                    int covered = mask_has(m, claw[0]) + mask_has(m, claw[1]) +
                                  mask_has(m, claw[2]);
                    if (covered != 2) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    res.kind = CliqueKind::claw_clique;
                    res.center = Pt{x, y};
                    res.claw = claw;
                    return res;
                }
            }
        }
    return res;
}

std::vector<Pie> find_pies(const Rep& rep) {
    std::vector<EdgeMask> masks = all_masks(rep);
    std::vector<Pie> pies;
    for (int y = 1; y <= rep.height - 2; ++y)
        for (int x = 1; x <= rep.width - 2; ++x) {
            Star s = star_at(rep, x, y);
            // paths covering exactly two of the four star edges, by pair
            std::vector<int> lu, ru, rd, ld, lr, ud;
            for (int i = 0; i < rep.n(); ++i) {
                const EdgeMask& m = masks[static_cast<size_t>(i)];
                bool l = mask_has(m, s.l), r = mask_has(m, s.r);
                bool d = mask_has(m, s.d), u = mask_has(m, s.u);
                if (l + r + d + u != 2) continue;
                if (l && u) lu.push_back(i);
                else if (r && u) ru.push_back(i);
                else if (r && d) rd.push_back(i);
                else if (l && d) ld.push_back(i);
                else if (l && r) lr.push_back(i);
                else if (u && d) ud.push_back(i);
            }
            auto disjoint = [&](int i, int j) {
                return !masks_intersect(masks[static_cast<size_t>(i)],
                                        masks[static_cast<size_t>(j)]);
            };
            for (int a : lu)
                for (int b : ru)
                    for (int c : rd)
                        for (int e : ld)
                            if (disjoint(a, c) && disjoint(b, e))
                                pies.push_back({Pt{x, y}, true, {a, b, c, e}});
            for (int a : lu)
                for (int c : rd)
                    for (int p : ud)
                        for (int q : lr)
                            if (disjoint(a, c) && disjoint(p, q))
                                pies.push_back({Pt{x, y}, false, {a, p, c, q}});
            for (int b : ru)
                for (int e : ld)
                    for (int p : ud)
                        for (int q : lr)
                            if (disjoint(b, e) && disjoint(p, q))
                                pies.push_back({Pt{x, y}, false, {b, p, e, q}});
        }
    return pies;
}

std::vector<VertexSet> non_edge_cliques(const Rep& rep) {
    Graph g = intersection_graph(rep);
    std::vector<VertexSet> bad;
    for (const VertexSet& k : maximal_cliques(g)) {
        CliqueClass c = classify_clique(rep, k);
        if (c.kind != CliqueKind::edge_clique) bad.push_back(k);
    }
    return bad;
}

bool is_helly(const Rep& rep) { return non_edge_cliques(rep).empty(); }

}  // namespace epglab
