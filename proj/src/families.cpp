#include "epglab/families.hpp"

#include <sstream>

#include "epglab/catalog.hpp"

namespace epglab {

Graph path_graph(int n) {
    if (n < 1) throw RangeError("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw RangeError("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw RangeError("complete needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw RangeError("complete_bipartite needs sides >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw RangeError("star needs >= 1 leaf");
    return complete_bipartite(1, leaves);
}

Graph claw_graph() { return star_graph(3); }

Graph wheel_graph(int n) {
    if (n < 4) throw RangeError("wheel needs n >= 4");
    Graph g(n);
    for (int i = 0; i + 1 < n - 1; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, n - 2);
    for (int i = 0; i < n - 1; ++i) g.add_edge(i, n - 1);
    return g;
}

Graph diamond_graph() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

Graph bull_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    return g;
}

Graph net_graph() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

Graph gem_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    for (int i = 0; i < 4; ++i) g.add_edge(i, 4);
    return g;
}

Graph sun_graph(int k) {
    if (k < 3) throw RangeError("sun needs k >= 3");
    Graph g(2 * k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(k + i, k + j);
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, k + i);
        g.add_edge((i + 1) % k, k + i);
    }
    return g;
}

namespace {

std::vector<int> parse_args(const std::string& args, size_t want, const std::string& name) {
    std::vector<int> out;
    std::istringstream in(args);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw ParseError("bad numeric argument '" + piece + "' in family spec");
        }
    }
    if (out.size() != want)
        throw ParseError(name + " takes " + std::to_string(want) + " argument(s)");
    return out;
}

}  // namespace

Graph make_family(const std::string& spec) {
    std::string name = spec, args;
    if (size_t colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    if (name == "catalog") {
        if (args.empty()) throw ParseError("catalog spec needs a name, e.g. catalog:F6");
        return catalog_graph(args);
    }
    if (name == "path") return path_graph(parse_args(args, 1, name)[0]);
    if (name == "cycle") return cycle_graph(parse_args(args, 1, name)[0]);
    if (name == "complete") return complete_graph(parse_args(args, 1, name)[0]);
    if (name == "complete_bipartite") {
        std::vector<int> v = parse_args(args, 2, name);
        return complete_bipartite(v[0], v[1]);
    }
    if (name == "star") return star_graph(parse_args(args, 1, name)[0]);
    if (name == "wheel") return wheel_graph(parse_args(args, 1, name)[0]);
    if (name == "sun") return sun_graph(parse_args(args, 1, name)[0]);
    if (!args.empty()) throw ParseError(name + " takes no arguments");
    if (name == "claw") return claw_graph();
    if (name == "diamond") return diamond_graph();
    if (name == "bull") return bull_graph();
    if (name == "net") return net_graph();
    if (name == "gem") return gem_graph();
    throw ParseError("unknown family '" + name + "'");
}

std::string family_help() {
    return "  path:N cycle:N complete:N complete_bipartite:A,B star:K wheel:N sun:K\n"
           "  claw diamond bull net gem\n"
           "  catalog:NAME      (e.g. catalog:F6, catalog:F5(9), catalog:S3p, catalog:E4)\n";
}

}  // namespace epglab
