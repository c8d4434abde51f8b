#include "epglab/rep.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace epglab {

namespace {

bool axis_aligned(Pt p, Pt q) { return p.x == q.x || p.y == q.y; }

void order_endpoints(PathB1& p) {
    if (p.b < p.a) std::swap(p.a, p.b);
}

}  // namespace

PathB1 straight_path(Pt a, Pt b) {
    if (a == b) throw RangeError("path needs at least one grid edge");
    if (!axis_aligned(a, b)) throw RangeError("straight path must be axis aligned");
    PathB1 p;
    p.a = a;
    p.b = b;
    p.bent = false;
    order_endpoints(p);
    p.corner = p.a;
    return p;
}

PathB1 bent_path(Pt a, Pt corner, Pt b) {
    if (a == corner || b == corner) throw RangeError("bent path has a zero-length arm");
    if (!axis_aligned(a, corner) || !axis_aligned(corner, b))
        throw RangeError("bent path arms must be axis aligned");
    bool first_horizontal = a.y == corner.y;
    bool second_horizontal = corner.y == b.y;
    if (first_horizontal == second_horizontal)
        throw RangeError("bent path arms must be perpendicular");
    PathB1 p;
    p.a = a;
    p.b = b;
    p.corner = corner;
    p.bent = true;
    order_endpoints(p);
    return p;
}

int num_grid_edges(int width, int height) {
    return height * (width - 1) + width * (height - 1);
}

int h_edge_index(int width, int height, int x, int y) {
    (void)height;
    assert(0 <= x && x < width - 1 && 0 <= y);
    return y * (width - 1) + x;
}

int v_edge_index(int width, int height, int x, int y) {
    assert(0 <= x && x < width && 0 <= y && y < height - 1);
    return height * (width - 1) + x * (height - 1) + y;
}

namespace {

void add_segment(EdgeMask& mask, int width, int height, Pt p, Pt q) {
    if (p.y == q.y) {
        for (int x = std::min(p.x, q.x); x < std::max(p.x, q.x); ++x) {
            int e = h_edge_index(width, height, x, p.y);
            mask[static_cast<size_t>(e) >> 6] |= uint64_t{1} << (e & 63);
        }
    } else {
        for (int y = std::min(p.y, q.y); y < std::max(p.y, q.y); ++y) {
            int e = v_edge_index(width, height, p.x, y);
            mask[static_cast<size_t>(e) >> 6] |= uint64_t{1} << (e & 63);
        }
    }
}

}  // namespace

EdgeMask path_edge_mask(int width, int height, const PathB1& p) {
    EdgeMask mask(static_cast<size_t>(num_grid_edges(width, height) + 63) / 64, 0);
    if (p.bent) {
        add_segment(mask, width, height, p.a, p.corner);
        add_segment(mask, width, height, p.corner, p.b);
    } else {
        add_segment(mask, width, height, p.a, p.b);
    }
    return mask;
}

bool masks_intersect(const EdgeMask& a, const EdgeMask& b) {
    size_t words = std::min(a.size(), b.size());
    for (size_t i = 0; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

int path_edge_count(const PathB1& p) {
    auto arm = [](Pt s, Pt t) { return std::abs(s.x - t.x) + std::abs(s.y - t.y); };
    if (!p.bent) return arm(p.a, p.b);
    return arm(p.a, p.corner) + arm(p.corner, p.b);
}

std::vector<int> edges_in_order(int width, int height, const PathB1& p) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(path_edge_count(p)));
    auto walk = [&](Pt s, Pt t) {
        int dx = (t.x > s.x) - (t.x < s.x);
        int dy = (t.y > s.y) - (t.y < s.y);
        for (Pt c = s; !(c == t);) {
            if (dx != 0) {
                out.push_back(h_edge_index(width, height, std::min(c.x, c.x + dx), c.y));
                c.x += dx;
            } else {
                out.push_back(v_edge_index(width, height, c.x, std::min(c.y, c.y + dy)));
                c.y += dy;
            }
        }
    };
    if (p.bent) {
        walk(p.a, p.corner);
        walk(p.corner, p.b);
    } else {
        walk(p.a, p.b);
    }
    return out;
}

void validate_path(int width, int height, const PathB1& p) {
    auto inside = [&](Pt pt) {
        return 0 <= pt.x && pt.x < width && 0 <= pt.y && pt.y < height;
    };
    if (!inside(p.a) || !inside(p.b) || (p.bent && !inside(p.corner)))
        throw RangeError("path leaves the grid");
    // re-run the constructor checks
    if (p.bent)
        bent_path(p.a, p.corner, p.b);
    else
        straight_path(p.a, p.b);
}

void validate_rep(const Rep& rep) {
    if (rep.width < 1 || rep.height < 1) throw RangeError("empty grid");
    if (rep.width > 1024 || rep.height > 1024) throw RangeError("grid too large");
    for (const PathB1& p : rep.paths) validate_path(rep.width, rep.height, p);
}

Graph intersection_graph(const Rep& rep) {
    validate_rep(rep);
    Graph g(rep.n());
    std::vector<EdgeMask> masks;
    masks.reserve(rep.paths.size());
    for (const PathB1& p : rep.paths)
        masks.push_back(path_edge_mask(rep.width, rep.height, p));
    for (int u = 0; u < rep.n(); ++u)
        for (int v = u + 1; v < rep.n(); ++v)
            if (masks_intersect(masks[u], masks[v])) g.add_edge(u, v);
    return g;
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Pt parse_point(const std::string& tok) {
    // "(x,y)"
    if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')')
        throw ParseError("bad point '" + tok + "'");
    std::string body = tok.substr(1, tok.size() - 2);
    size_t comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("bad point '" + tok + "'");
    try {
        size_t used = 0;
        std::string xs = strip(body.substr(0, comma)), ys = strip(body.substr(comma + 1));
        Pt p;
        p.x = std::stoi(xs, &used);
        if (used != xs.size()) throw std::invalid_argument(xs);
        p.y = std::stoi(ys, &used);
        if (used != ys.size()) throw std::invalid_argument(ys);
        return p;
    } catch (const std::exception&) {
        throw ParseError("bad point '" + tok + "'");
    }
}

std::vector<Pt> parse_points(const std::string& spec) {
    // points are joined by '-' between a ')' and a '('
    std::vector<Pt> pts;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t close = spec.find(')', pos);
        if (close == std::string::npos) throw ParseError("bad path spec '" + spec + "'");
        pts.push_back(parse_point(strip(spec.substr(pos, close - pos + 1))));
        pos = close + 1;
        while (pos < spec.size() && (spec[pos] == ' ' || spec[pos] == '\t')) ++pos;
        if (pos == spec.size()) break;
        if (spec[pos] != '-') throw ParseError("bad path spec '" + spec + "'");
        ++pos;
        while (pos < spec.size() && (spec[pos] == ' ' || spec[pos] == '\t')) ++pos;
    }
    return pts;
}

}  // namespace

Rep parse_rep(std::istream& in) {
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty representation input");
    std::istringstream header(lines[0]);
    std::string kw;
    int w = 0, h = 0;
    if (!(header >> kw >> w >> h) || kw != "grid")
        throw ParseError("expected 'grid W H' header, got: " + lines[0]);
    std::string rest;
    if (header >> rest) throw ParseError("trailing tokens in grid header");
    int n = static_cast<int>(lines.size()) - 1;
    Rep rep;
    rep.width = w;
    rep.height = h;
    rep.paths.resize(static_cast<size_t>(n));
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int i = 1; i <= n; ++i) {
        const std::string& line = lines[static_cast<size_t>(i)];
        size_t colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("missing ':' in line: " + line);
        std::string ids = strip(line.substr(0, colon));
        int id = -1;
        try {
            size_t used = 0;
            id = std::stoi(ids, &used);
            if (used != ids.size()) throw std::invalid_argument(ids);
        } catch (const std::exception&) {
            throw ParseError("bad path id '" + ids + "'");
        }
        if (id < 0 || id >= n) throw ParseError("path id out of range: " + line);
        if (seen[static_cast<size_t>(id)]) throw ParseError("duplicate path id: " + line);
        seen[static_cast<size_t>(id)] = true;
        std::vector<Pt> pts = parse_points(strip(line.substr(colon + 1)));
        try {
            if (pts.size() == 2) {
                rep.paths[static_cast<size_t>(id)] = straight_path(pts[0], pts[1]);
            } else if (pts.size() == 3) {
                bool flat = (pts[0].y == pts[1].y && pts[1].y == pts[2].y) ||
                            (pts[0].x == pts[1].x && pts[1].x == pts[2].x);
                if (flat) {
                    // a listed bend collinear with the endpoints is no bend;
                    // normalize, but reject corners outside the span
                    int lo = std::min(pts[0].x + pts[0].y, pts[2].x + pts[2].y);
                    int hi = std::max(pts[0].x + pts[0].y, pts[2].x + pts[2].y);
                    int mid = pts[1].x + pts[1].y;
                    if (mid <= lo || hi <= mid)
                        throw RangeError("collinear bend outside the path span");
                    rep.paths[static_cast<size_t>(id)] = straight_path(pts[0], pts[2]);
                } else {
                    rep.paths[static_cast<size_t>(id)] = bent_path(pts[0], pts[1], pts[2]);
                }
            } else {
                throw ParseError("path needs 2 or 3 points: " + line);
            }
        } catch (const RangeError& err) {
            throw ParseError(std::string(err.what()) + ": " + line);
        }
    }
    try {
        validate_rep(rep);
    } catch (const RangeError& err) {
        throw ParseError(err.what());
    }
    return rep;
}

Rep parse_rep(const std::string& text) {
    std::istringstream in(text);
    return parse_rep(in);
}

std::string format_rep(const Rep& rep) {
    std::ostringstream out;
    out << "grid " << rep.width << ' ' << rep.height << '\n';
    for (int i = 0; i < rep.n(); ++i) {
        const PathB1& p = rep.paths[static_cast<size_t>(i)];
        out << i << " : (" << p.a.x << ',' << p.a.y << ')';
        if (p.bent) out << "-(" << p.corner.x << ',' << p.corner.y << ')';
        out << "-(" << p.b.x << ',' << p.b.y << ")\n";
    }
    return out.str();
}

Rep load_rep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_rep(in);
}

void save_rep(const Rep& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << format_rep(rep);
}

Rep compress_rep(const Rep& rep) {
    // Columns and rows that carry no path point can be deleted: overlap
    // intervals of parallel runs have their extreme coordinates at path
    // points, so shared edges survive and no new sharing appears.
    std::vector<int> xs, ys;
    for (const PathB1& p : rep.paths) {
        for (Pt pt : {p.a, p.b, p.corner}) {
            xs.push_back(pt.x);
            ys.push_back(pt.y);
        }
    }
    if (xs.empty()) return Rep{1, 1, {}};
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto xrank = [&](int x) {
        return static_cast<int>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
    };
    auto yrank = [&](int y) {
        return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
    };
    Rep out;
    out.width = static_cast<int>(xs.size());
    out.height = static_cast<int>(ys.size());
    for (const PathB1& p : rep.paths) {
        Pt a{xrank(p.a.x), yrank(p.a.y)};
        Pt b{xrank(p.b.x), yrank(p.b.y)};
        if (p.bent)
            out.paths.push_back(bent_path(a, Pt{xrank(p.corner.x), yrank(p.corner.y)}, b));
        else
            out.paths.push_back(straight_path(a, b));
    }
    assert(intersection_graph(out) == intersection_graph(rep));
    return out;
}

}  // namespace epglab
