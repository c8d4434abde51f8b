#include "epglab/certificates.hpp"

#include "epglab/families.hpp"
#include "epglab/graph_algos.hpp"

namespace epglab {

BranchGraph branch_graph(const Graph& g, const VertexSet& clique) {
    uint64_t cmask = set_to_mask(clique);
    uint64_t outside = 0;
    for (int c : clique) outside |= g.row(c);
    outside &= ~cmask;

    BranchGraph bg;
    bg.verts = mask_to_set(outside);
    int k = static_cast<int>(bg.verts.size());
    bg.graph = Graph(k);
    for (int i = 0; i < k; ++i) {
        uint64_t ci = g.row(bg.verts[i]) & cmask;
        for (int j = i + 1; j < k; ++j) {
            uint64_t cj = g.row(bg.verts[j]) & cmask;
            if (g.has_edge(bg.verts[i], bg.verts[j])) continue;
            if (!(ci & cj)) continue;
            bool i_in_j = (ci & ~cj) == 0;
            bool j_in_i = (cj & ~ci) == 0;
            if (i_in_j || j_in_i) continue;
            bg.graph.add_edge(i, j);
        }
    }
    return bg;
}

std::vector<NeighborhoodAtCert> check_neighborhood_at(const Graph& g) {
    std::vector<NeighborhoodAtCert> certs;
    for (int v = 0; v < g.n(); ++v) {
        VertexSet nb = g.neighbors(v);
        Graph local = induced_subgraph(g, nb);
        auto at = find_asteroidal_triple(local);
        if (!at) continue;
        NeighborhoodAtCert c;
        c.vertex = v;
        for (int i = 0; i < 3; ++i) c.triple[i] = nb[(*at)[i]];
        certs.push_back(c);
    }
    return certs;
}

std::vector<BranchCert> check_branch_conditions(const Graph& g) {
    std::vector<BranchCert> certs;
    for (const VertexSet& clique : maximal_cliques(g)) {
        BranchGraph bg = branch_graph(g, clique);
        if (bg.graph.n() == 0) continue;

        if (auto cyc = find_induced_cycle(bg.graph, 4, /*odd_only=*/false)) {
            BranchCert c;
            c.kind = BranchCert::Kind::cycle;
            c.clique = clique;
            for (int i : *cyc) c.witness.push_back(bg.verts[i]);
            certs.push_back(c);
        }
        if (auto p6 = find_induced(bg.graph, path_graph(6))) {
            BranchCert c;
            c.kind = BranchCert::Kind::long_path;
            c.clique = clique;
            for (int i : *p6) c.witness.push_back(bg.verts[i]);
            certs.push_back(c);
        }
        int chi = chromatic_number(bg.graph);
        if (chi > 3) {
            BranchCert c;
            c.kind = BranchCert::Kind::big_chromatic;
            c.clique = clique;
            c.witness = bg.verts;
            c.chromatic = chi;
            certs.push_back(c);
        }
    }
    return certs;
}

std::vector<ForbiddenCert> scan_forbidden(const Graph& g,
                                          const std::vector<CatalogEntry>& catalog) {
    std::vector<ForbiddenCert> certs;
    for (const CatalogEntry& e : catalog) {
        if (e.graph.n() > g.n()) continue;
        if (auto image = find_induced(g, e.graph))
            certs.push_back({e.name, *image});
    }
    return certs;
}

}  // namespace epglab
