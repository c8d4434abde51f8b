// Single-bend grid paths: construction, parsing, intersection semantics,
// clique classification, pies, and the helly check against a brute-force
// subfamily oracle.

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "epglab/epg_analysis.hpp"
#include "epglab/families.hpp"
#include "epglab/graph.hpp"
#include "epglab/graph_algos.hpp"
#include "epglab/render.hpp"
#include "epglab/rep.hpp"
#include "oracles.hpp"

using namespace epglab;

namespace {

bool mask_has(const EdgeMask& m, int e) {
    return (m[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u;
}

// uniform-ish random valid path on a w x h grid
PathB1 random_path(TestRng& rng, int w, int h) {
    for (;;) {
        if (rng.below(2) == 0) {
            if (rng.below(2) == 0) {
                int y = rng.below(h), x1 = rng.below(w), x2 = rng.below(w);
                if (x1 != x2) return straight_path({x1, y}, {x2, y});
            } else {
                int x = rng.below(w), y1 = rng.below(h), y2 = rng.below(h);
                if (y1 != y2) return straight_path({x, y1}, {x, y2});
            }
        } else {
            int cx = rng.below(w), cy = rng.below(h);
            int xe = rng.below(w), ye = rng.below(h);
            if (xe != cx && ye != cy) return bent_path({xe, cy}, {cx, cy}, {cx, ye});
        }
    }
}

// random path guaranteed to cover the horizontal edge (x,y)-(x+1,y) or the
// vertical edge (x,y)-(x,y+1)
PathB1 random_path_through(TestRng& rng, int w, int h, bool horiz, int x, int y) {
    if (horiz) {
        int lo = x - rng.below(x + 1), hi = x + 1 + rng.below(w - x - 1);
        if (rng.below(2) == 0) return straight_path({lo, y}, {hi, y});
        bool at_hi = rng.below(2) == 0;
        int bx = at_hi ? hi : lo;
        int ye = rng.below(h);
        if (ye == y) return straight_path({lo, y}, {hi, y});
        return bent_path({at_hi ? lo : hi, y}, {bx, y}, {bx, ye});
    }
    int lo = y - rng.below(y + 1), hi = y + 1 + rng.below(h - y - 1);
    if (rng.below(2) == 0) return straight_path({x, lo}, {x, hi});
    bool at_hi = rng.below(2) == 0;
    int by = at_hi ? hi : lo;
    int xe = rng.below(w);
    if (xe == x) return straight_path({x, lo}, {x, hi});
    return bent_path({x, at_hi ? lo : hi}, {x, by}, {xe, by});
}

std::vector<Pt> points_in_order(const PathB1& p) {
    std::vector<Pt> pts;
    auto walk = [&](Pt s, Pt t) {
        int dx = (t.x > s.x) - (t.x < s.x), dy = (t.y > s.y) - (t.y < s.y);
        for (Pt c = s; !(c == t); c = Pt{c.x + dx, c.y + dy}) pts.push_back(c);
    };
    if (p.bent) {
        walk(p.a, p.corner);
        walk(p.corner, p.b);
    } else {
        walk(p.a, p.b);
    }
    pts.push_back(p.b);
    return pts;
}

Rep translated(const Rep& rep, int dx, int dy, int w, int h) {
    Rep out;
    out.width = w;
    out.height = h;
    for (const PathB1& p : rep.paths) {
        Pt a{p.a.x + dx, p.a.y + dy}, b{p.b.x + dx, p.b.y + dy};
        if (p.bent)
            out.paths.push_back(bent_path(a, Pt{p.corner.x + dx, p.corner.y + dy}, b));
        else
            out.paths.push_back(straight_path(a, b));
    }
    return out;
}

// brute force: every pairwise-intersecting subfamily must share an edge
bool oracle_helly(const Rep& rep) {
    int n = rep.n();
    std::vector<EdgeMask> masks;
    for (const PathB1& p : rep.paths)
        masks.push_back(path_edge_mask(rep.width, rep.height, p));
    for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
        if (std::popcount(s) < 2) continue;
        bool pairwise = true;
        for (int u = 0; u < n && pairwise; ++u) {
            if (!((s >> u) & 1)) continue;
            for (int v = u + 1; v < n && pairwise; ++v)
                if (((s >> v) & 1) && !masks_intersect(masks[static_cast<size_t>(u)], masks[static_cast<size_t>(v)]))
                    pairwise = false;
        }
        if (!pairwise) continue;
        EdgeMask common;
        bool first = true;
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1)) continue;
            if (first) {
                common = masks[static_cast<size_t>(v)];
                first = false;
            } else {
                for (size_t w = 0; w < common.size(); ++w) common[w] &= masks[static_cast<size_t>(v)][w];
            }
        }
        bool any = false;
        for (uint64_t w : common) any |= w != 0;
        if (!any) return false;
    }
    return true;
}

// fixtures around the star at (1,1) on a 3x3 grid
Rep true_pie_rep() {
    Rep r;
    r.width = r.height = 3;
    r.paths = {bent_path({0, 1}, {1, 1}, {1, 2}), bent_path({1, 2}, {1, 1}, {2, 1}),
               bent_path({2, 1}, {1, 1}, {1, 0}), bent_path({1, 0}, {1, 1}, {0, 1})};
    return r;
}

Rep false_pie_rep() {
    Rep r;
    r.width = r.height = 3;
    r.paths = {bent_path({0, 1}, {1, 1}, {1, 2}), straight_path({1, 0}, {1, 2}),
               bent_path({2, 1}, {1, 1}, {1, 0}), straight_path({0, 1}, {2, 1})};
    return r;
}

void test_path_basics() {
    PathB1 s = straight_path({3, 0}, {0, 0});
    REQUIRE(s.a == Pt({0, 0}) && s.b == Pt({3, 0}));  // endpoints ordered
    REQUIRE(!s.bent);
    REQUIRE_EQ(path_edge_count(s), 3);

    PathB1 b = bent_path({0, 0}, {2, 0}, {2, 2});
    REQUIRE(b.bent);
    REQUIRE_EQ(path_edge_count(b), 4);

    REQUIRE_THROWS(straight_path({1, 1}, {1, 1}), RangeError);
    REQUIRE_THROWS(straight_path({0, 0}, {1, 1}), RangeError);
    REQUIRE_THROWS(bent_path({0, 0}, {0, 0}, {1, 0}), RangeError);
    REQUIRE_THROWS(bent_path({0, 0}, {1, 0}, {2, 0}), RangeError);
    REQUIRE_THROWS(bent_path({0, 0}, {1, 1}, {1, 2}), RangeError);

    // traversal order anchors at the smaller endpoint
    std::vector<int> se = edges_in_order(4, 1, straight_path({0, 0}, {3, 0}));
    REQUIRE(se == std::vector<int>({0, 1, 2}));
    std::vector<int> be = edges_in_order(3, 3, bent_path({0, 0}, {2, 0}, {2, 2}));
    REQUIRE_EQ(be.size(), 4u);
    REQUIRE(be[0] == h_edge_index(3, 3, 0, 0) && be[1] == h_edge_index(3, 3, 1, 0));
    REQUIRE(be[2] == v_edge_index(3, 3, 2, 0) && be[3] == v_edge_index(3, 3, 2, 1));
    REQUIRE_EQ(edges_in_order(2, 2, straight_path({0, 1}, {1, 1})).size(), 1u);

    // the ordered edges are exactly the mask bits
    TestRng rng(0xed9e);
    for (int t = 0; t < 100; ++t) {
        PathB1 p = random_path(rng, 5, 5);
        EdgeMask m = path_edge_mask(5, 5, p);
        std::vector<int> order = edges_in_order(5, 5, p);
        REQUIRE_EQ(static_cast<int>(order.size()), path_edge_count(p));
        std::set<int> from_order(order.begin(), order.end());
        REQUIRE_EQ(from_order.size(), order.size());
        for (int e = 0; e < num_grid_edges(5, 5); ++e)
            REQUIRE_EQ(mask_has(m, e), from_order.count(e) == 1);
    }

    validate_rep(true_pie_rep());
    Rep bad = true_pie_rep();
    bad.width = 2;  // paths now leave the grid
    REQUIRE_THROWS(validate_rep(bad), RangeError);
    REQUIRE_THROWS(validate_rep(Rep{0, 3, {}}), RangeError);
}

void test_parse_format() {
    Rep r = parse_rep(
        "# comment\n"
        "grid 3 3\n"
        "0 : (0,0)-(2,0)\n"
        "\n"
        "1 : (0,0)-(1,0)-(1,2)\n");
    REQUIRE_EQ(r.width, 3);
    REQUIRE_EQ(r.n(), 2);
    REQUIRE(!r.paths[0].bent);
    REQUIRE(r.paths[1].bent && r.paths[1].corner == Pt({1, 0}));

    // a collinear middle point is a spelled-out non-bend
    Rep flat = parse_rep("grid 4 1\n0 : (0,0)-(1,0)-(3,0)\n");
    REQUIRE(!flat.paths[0].bent);
    REQUIRE(flat.paths[0].a == Pt({0, 0}) && flat.paths[0].b == Pt({3, 0}));
    REQUIRE_THROWS(parse_rep("grid 4 1\n0 : (0,0)-(3,0)-(1,0)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 4 1\n0 : (0,0)-(0,0)-(3,0)\n"), ParseError);

    REQUIRE_THROWS(parse_rep(""), ParseError);
    REQUIRE_THROWS(parse_rep("mesh 3 3\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3 9\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\n0 (0,0)-(1,0)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\nx : (0,0)-(1,0)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\n1 : (0,0)-(1,0)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\n0 : (0,0)-(1,0)\n0 : (0,1)-(1,1)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\n0 : (0,0)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\n0 : (0,0)-(1,0)-(1,1)-(2,1)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\n0 : (0,0)-(0,0)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\n0 : (0,0)-(5,0)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\n0 : (0,0)-(1,1)\n"), ParseError);
    REQUIRE_THROWS(parse_rep("grid 3 3\n0 : (0,0-(1,0)\n"), ParseError);

    // round trips
    TestRng rng(0xf0f0);
    for (int t = 0; t < 50; ++t) {
        Rep rep;
        rep.width = rep.height = 5;
        int n = 1 + rng.below(5);
        for (int i = 0; i < n; ++i) rep.paths.push_back(random_path(rng, 5, 5));
        REQUIRE(parse_rep(format_rep(rep)) == rep);
    }
    Rep tp = true_pie_rep();
    save_rep(tp, "/tmp/epglab_test_rep.txt");
    REQUIRE(load_rep("/tmp/epglab_test_rep.txt") == tp);
}

void test_intersection_graph() {
    // sharing a single unit edge makes K2; touching at a point does not
    Rep share;
    share.width = 4;
    share.height = 2;
    share.paths = {straight_path({0, 0}, {2, 0}), straight_path({1, 0}, {3, 0})};
    REQUIRE(intersection_graph(share) == from_edges(2, {{0, 1}}));

    Rep touch;
    touch.width = touch.height = 3;
    touch.paths = {straight_path({0, 1}, {2, 1}), straight_path({1, 1}, {1, 2})};
    REQUIRE_EQ(intersection_graph(touch).m(), 0);

    Rep cross;
    cross.width = cross.height = 3;
    cross.paths = {straight_path({0, 1}, {2, 1}), straight_path({1, 0}, {1, 2})};
    REQUIRE_EQ(intersection_graph(cross).m(), 0);

    REQUIRE(is_isomorphic(intersection_graph(true_pie_rep()), cycle_graph(4)));
    REQUIRE(is_isomorphic(intersection_graph(false_pie_rep()), cycle_graph(4)));

    // translation leaves the intersection graph untouched
    TestRng rng(0x7a5);
    for (int t = 0; t < 60; ++t) {
        Rep rep;
        rep.width = rep.height = 4;
        int n = 2 + rng.below(4);
        for (int i = 0; i < n; ++i) rep.paths.push_back(random_path(rng, 4, 4));
        Graph g = intersection_graph(rep);
        REQUIRE(intersection_graph(translated(rep, 2, 1, 8, 8)) == g);
        REQUIRE(intersection_graph(translated(rep, 0, 4, 4, 8)) == g);
    }
}

void test_classify_clique() {
    // three paths through one shared edge
    Rep edge3;
    edge3.width = 4;
    edge3.height = 3;
    edge3.paths = {straight_path({0, 1}, {2, 1}), straight_path({1, 1}, {3, 1}),
                   bent_path({1, 0}, {1, 1}, {3, 1})};
    CliqueClass ec = classify_clique(edge3, {0, 1, 2});
    REQUIRE(ec.kind == CliqueKind::edge_clique);
    REQUIRE_EQ(ec.edge, h_edge_index(4, 3, 1, 1));  // the least shared edge

    // two paths bending at (1,0), arms left/right and up, third through
    Rep claw3;
    claw3.width = 3;
    claw3.height = 2;
    claw3.paths = {bent_path({0, 0}, {1, 0}, {1, 1}), bent_path({2, 0}, {1, 0}, {1, 1}),
                   straight_path({0, 0}, {2, 0})};
    CliqueClass cc = classify_clique(claw3, {0, 1, 2});
    REQUIRE(cc.kind == CliqueKind::claw_clique);
    REQUIRE(cc.center == Pt({1, 0}));
    std::set<int> claw_edges(cc.claw.begin(), cc.claw.end());
    std::set<int> expect = {h_edge_index(3, 2, 0, 0), h_edge_index(3, 2, 1, 0),
                            v_edge_index(3, 2, 1, 0)};
    REQUIRE(claw_edges == expect);

    // non-adjacent pair classifies as neither kind
    Rep far;
    far.width = 4;
    far.height = 1;
    far.paths = {straight_path({0, 0}, {1, 0}), straight_path({2, 0}, {3, 0})};
    REQUIRE(classify_clique(far, {0, 1}).kind == CliqueKind::neither);
}

void test_pies() {
    std::vector<Pie> tp = find_pies(true_pie_rep());
    REQUIRE_EQ(tp.size(), 1u);
    REQUIRE(tp[0].proper);
    REQUIRE(tp[0].center == Pt({1, 1}));
    std::set<int> m1(tp[0].members.begin(), tp[0].members.end());
    REQUIRE(m1 == std::set<int>({0, 1, 2, 3}));

    std::vector<Pie> fp = find_pies(false_pie_rep());
    REQUIRE_EQ(fp.size(), 1u);
    REQUIRE(!fp[0].proper);
    REQUIRE(fp[0].center == Pt({1, 1}));

    Rep disjoint;
    disjoint.width = 5;
    disjoint.height = 1;
    disjoint.paths = {straight_path({0, 0}, {1, 0}), straight_path({3, 0}, {4, 0})};
    REQUIRE(find_pies(disjoint).empty());
}

void test_helly() {
    // every maximal clique of C4 is a single edge, and adjacent paths share
    // a grid edge by definition, so pie representations are vacuously helly
    REQUIRE(is_helly(true_pie_rep()));
    REQUIRE(is_helly(false_pie_rep()));

    // claw-clique triangle: no common edge, so not helly
    Rep claw3;
    claw3.width = 3;
    claw3.height = 2;
    claw3.paths = {bent_path({0, 0}, {1, 0}, {1, 1}), bent_path({2, 0}, {1, 0}, {1, 1}),
                   straight_path({0, 0}, {2, 0})};
    REQUIRE(!is_helly(claw3));
    std::vector<VertexSet> wit = non_edge_cliques(claw3);
    REQUIRE_EQ(wit.size(), 1u);
    REQUIRE(wit[0] == VertexSet({0, 1, 2}));

    // edge-clique triangle is helly
    Rep edge3;
    edge3.width = 3;
    edge3.height = 1;
    edge3.paths = {straight_path({0, 0}, {1, 0}), straight_path({0, 0}, {2, 0}),
                   straight_path({1, 0}, {2, 0})};
    REQUIRE(is_helly(edge3));
    REQUIRE(non_edge_cliques(edge3).empty());

    REQUIRE(is_helly(Rep{1, 1, {}}));

    TestRng rng(0xbeefed);
    for (int t = 0; t < 250; ++t) {
        Rep rep;
        rep.width = rep.height = 4;
        int n = 2 + rng.below(4);
        for (int i = 0; i < n; ++i) rep.paths.push_back(random_path(rng, 4, 4));
        REQUIRE_EQ(is_helly(rep), oracle_helly(rep));
        REQUIRE_EQ(is_helly(rep), non_edge_cliques(rep).empty());
        // each witness is a maximal clique of the intersection graph
        Graph g = intersection_graph(rep);
        for (const VertexSet& w : non_edge_cliques(rep)) {
            uint64_t m = set_to_mask(w);
            REQUIRE(oracle_clique(g, m));
            for (int v = 0; v < n; ++v)
                if (!((m >> v) & 1)) REQUIRE(!oracle_clique(g, m | (uint64_t{1} << v)));
            REQUIRE(classify_clique(rep, w).kind != CliqueKind::edge_clique);
        }
    }
}

// if e_m lies between e_l and e_r on a path, any two intersecting paths
// covering e_l and e_r respectively cannot both avoid e_m
void test_between_edge_property() {
    TestRng rng(0x0b51);
    const int w = 6, h = 6;
    int triggered = 0;
    for (int t = 0; t < 4000; ++t) {
        PathB1 p = random_path(rng, w, h);
        std::vector<int> order = edges_in_order(w, h, p);
        if (order.size() < 3) continue;
        int i = rng.below(static_cast<int>(order.size()) - 2);
        int j = i + 1 + rng.below(static_cast<int>(order.size()) - i - 2);
        int k = j + 1 + rng.below(static_cast<int>(order.size()) - j - 1);
        int el = order[static_cast<size_t>(i)], em = order[static_cast<size_t>(j)], er = order[static_cast<size_t>(k)];

        auto decode = [&](int e) {
            int nh = (w - 1) * h;
            if (e < nh) return std::tuple(true, e % (w - 1), e / (w - 1));
            return std::tuple(false, (e - nh) / (h - 1), (e - nh) % (h - 1));
        };
        auto [lh, lx, ly] = decode(el);
        PathB1 pl = random_path_through(rng, w, h, lh, lx, ly);
        auto [rh, rx, ry] = decode(er);
        PathB1 pr = random_path_through(rng, w, h, rh, rx, ry);

        EdgeMask ml = path_edge_mask(w, h, pl), mr = path_edge_mask(w, h, pr);
        REQUIRE(mask_has(ml, el));
        REQUIRE(mask_has(mr, er));
        if (!masks_intersect(ml, mr)) continue;
        ++triggered;
        REQUIRE(mask_has(ml, em) || mask_has(mr, em));
    }
    REQUIRE(triggered > 200);  // the hypothesis fired often enough to matter
}

// a path covering an edge of p and passing through a point of p covers the
// whole stretch of p between them
void test_segment_property() {
    TestRng rng(0x5e9);
    const int w = 6, h = 6;
    int triggered = 0;
    for (int t = 0; t < 4000; ++t) {
        PathB1 p = random_path(rng, w, h);
        std::vector<int> order = edges_in_order(w, h, p);
        std::vector<Pt> pts = points_in_order(p);
        int j = rng.below(static_cast<int>(order.size()));
        auto decode = [&](int e) {
            int nh = (w - 1) * h;
            if (e < nh) return std::tuple(true, e % (w - 1), e / (w - 1));
            return std::tuple(false, (e - nh) / (h - 1), (e - nh) % (h - 1));
        };
        auto [eh, ex, ey] = decode(order[static_cast<size_t>(j)]);
        PathB1 q = random_path_through(rng, w, h, eh, ex, ey);
        EdgeMask mq = path_edge_mask(w, h, q);
        std::set<Pt> qpoints;
        for (Pt qp : points_in_order(q)) qpoints.insert(qp);
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            if (!qpoints.count(pts[static_cast<size_t>(i)])) continue;
            ++triggered;
            int lo = std::min(i, j), hi = i <= j ? j : i - 1;
            for (int e = lo; e <= hi; ++e)
                REQUIRE(mask_has(mq, order[static_cast<size_t>(e)]));
        }
    }
    REQUIRE(triggered > 500);
}

void test_compress() {
    Rep spread;
    spread.width = 10;
    spread.height = 9;
    spread.paths = {straight_path({1, 2}, {7, 2}), bent_path({4, 2}, {7, 2}, {7, 8})};
    Rep c = compress_rep(spread);
    REQUIRE(c.width <= 4 && c.height <= 3);
    REQUIRE(intersection_graph(c) == intersection_graph(spread));
    REQUIRE(compress_rep(c) == c);

    TestRng rng(0xc0c0);
    for (int t = 0; t < 60; ++t) {
        Rep rep;
        rep.width = 9;
        rep.height = 8;
        int n = 2 + rng.below(4);
        for (int i = 0; i < n; ++i) rep.paths.push_back(random_path(rng, 9, 8));
        Rep small = compress_rep(rep);
        REQUIRE(small.width <= rep.width && small.height <= rep.height);
        REQUIRE(intersection_graph(small) == intersection_graph(rep));
        REQUIRE(compress_rep(small) == small);
    }
}

void test_render() {
    Rep tp = true_pie_rep();
    std::string ascii = render_rep(tp);
    REQUIRE(!ascii.empty());
    REQUIRE(render_rep(tp) == ascii);  // deterministic

    std::string svg = render_svg(tp);
    REQUIRE(svg.find("<svg") != std::string::npos);
    size_t polylines = 0, at = 0;
    while ((at = svg.find("<polyline", at)) != std::string::npos) {
        ++polylines;
        ++at;
    }
    REQUIRE_EQ(polylines, 4u);

    Rep single;
    single.width = 3;
    single.height = 1;
    single.paths = {straight_path({0, 0}, {2, 0})};
    std::string one = render_svg(single);
    size_t count = 0;
    at = 0;
    while ((at = one.find("<polyline", at)) != std::string::npos) {
        ++count;
        ++at;
    }
    REQUIRE_EQ(count, 1u);
    REQUIRE(!render_rep(single).empty());
}

}  // namespace

int main() {
    test_path_basics();
    test_parse_format();
    test_intersection_graph();
    test_classify_clique();
    test_pies();
    test_helly();
    test_between_edge_property();
    test_segment_property();
    test_compress();
    test_render();
    done("unit_epg_model");
    return 0;
}
