#include "epglab/classify.hpp"

#include "epglab/families.hpp"
#include "epglab/graph_algos.hpp"

namespace epglab {

namespace {

int induced_edges(const Graph& g, const VertexSet& verts) {
    int count = 0;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) ++count;
    return count;
}

}  // namespace

ClassFlags classify_graph(const Graph& g) {
    ClassFlags f;
    f.bipartite = is_bipartite(g);

    Blocks blocks = biconnected_blocks(g);
    f.block_graph = true;
    bool blocks_cactus = true;
    for (const VertexSet& b : blocks.blocks) {
        int k = static_cast<int>(b.size());
        int m = induced_edges(g, b);
        if (m != k * (k - 1) / 2) f.block_graph = false;
        if (k > 2 && m != k) blocks_cactus = false;  // k == 2 is a bridge
    }
    f.cactus = is_connected(g) && blocks_cactus;

    f.line_of_bipartite = !contains_induced(g, claw_graph()) &&
                          !contains_induced(g, diamond_graph()) &&
                          !find_induced_cycle(g, 5, /*odd_only=*/true).has_value();
    return f;
}

VennEvidence upgrade_evidence(const ClassFlags& f, VennEvidence e) {
    if (f.block_graph || f.cactus || f.line_of_bipartite) {
        if (e.b1 == Tri::unknown) e.b1 = Tri::yes;
        if (e.helly_b1 == Tri::unknown) e.helly_b1 = Tri::yes;
    }
    if (f.bipartite && e.b1 == Tri::yes && e.helly_b1 == Tri::unknown)
        e.helly_b1 = Tri::yes;
    if (e.helly_b1 == Tri::yes && e.b1 == Tri::unknown) e.b1 = Tri::yes;
    return e;
}

VennResult venn_region(const ClassFlags& f, VennEvidence e) {
    e = upgrade_evidence(f, e);
    if (f.bipartite) {
        if (f.line_of_bipartite) {
            if (f.cactus) return {{f.block_graph ? 9 : 8}};
            return {{7}};
        }
        if (f.cactus) return {{f.block_graph ? 10 : 11}};
        if (e.b1 == Tri::yes) return {{12}};
        if (e.b1 == Tri::no) return {{13}};
        return {{12, 13}};
    }
    if (f.line_of_bipartite) {
        // a non-bipartite claw/diamond/odd-hole-free cactus has only edge and
        // triangle blocks, so it is a block graph and region 6 stays empty
        if (f.cactus) return {{f.block_graph ? 5 : 0}};
        return {{f.block_graph ? 4 : 2}};
    }
    if (f.cactus) return {{f.block_graph ? 15 : 16}};
    if (f.block_graph) return {{14}};
    // no class flag set: placed by representability alone
    if (e.helly_b1 == Tri::yes) return {{3}};
    if (e.b1 == Tri::yes) {
        if (e.helly_b1 == Tri::no) return {{1}};
        return {{1, 3}};
    }
    // region 17's outer ring needs unbounded-bend evidence we never compute,
    // so a refuted graph stays ambiguous between the ring and the outside
    if (e.b1 == Tri::no) return {{17, 0}};
    if (e.helly_b1 == Tri::no) return {{1, 17, 0}};
    return {{1, 3, 17, 0}};
}

std::string venn_region_name(int region) {
    switch (region) {
        case 0: return "outside";
        case 1: return "representable, no helly representation";
        case 2: return "line-of-bipartite only";
        case 3: return "helly representable only";
        case 4: return "line-of-bipartite and block";
        case 5: return "line-of-bipartite, block and cactus";
        case 6: return "line-of-bipartite and cactus, not block (empty)";
        case 7: return "bipartite and line-of-bipartite, not cactus";
        case 8: return "bipartite, line-of-bipartite and cactus";
        case 9: return "bipartite, line-of-bipartite, cactus and block";
        case 10: return "bipartite, cactus and block";
        case 11: return "bipartite and cactus";
        case 12: return "bipartite, representable";
        case 13: return "bipartite, not representable";
        case 14: return "block only";
        case 15: return "block and cactus";
        case 16: return "cactus only";
        case 17: return "not representable with one bend";
        default: return "unknown region";
    }
}

}  // namespace epglab
