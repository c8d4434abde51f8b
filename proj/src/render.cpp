#include "epglab/render.hpp"

#include <sstream>

namespace epglab {

std::string render_rep(const Rep& rep) {
    int w = rep.width, h = rep.height;
    int cols = 2 * w - 1, rows = 2 * h - 1;
    std::vector<std::string> canvas(static_cast<size_t>(rows),
                                    std::string(static_cast<size_t>(cols), ' '));
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) canvas[static_cast<size_t>(2 * y)][static_cast<size_t>(2 * x)] = '.';

    std::vector<std::vector<int>> hcount(static_cast<size_t>(h), std::vector<int>(static_cast<size_t>(std::max(w - 1, 0)), 0));
    std::vector<std::vector<int>> vcount(static_cast<size_t>(std::max(h - 1, 0)), std::vector<int>(static_cast<size_t>(w), 0));
    std::vector<std::vector<char>> howner(static_cast<size_t>(h), std::vector<char>(static_cast<size_t>(std::max(w - 1, 0)), ' '));
    std::vector<std::vector<char>> vowner(static_cast<size_t>(std::max(h - 1, 0)), std::vector<char>(static_cast<size_t>(w), ' '));

    auto letter = [](int i) { return static_cast<char>('a' + i % 26); };
    auto mark_segment = [&](int id, Pt p, Pt q) {
        if (p.y == q.y) {
            for (int x = std::min(p.x, q.x); x < std::max(p.x, q.x); ++x) {
                ++hcount[static_cast<size_t>(p.y)][static_cast<size_t>(x)];
                howner[static_cast<size_t>(p.y)][static_cast<size_t>(x)] = letter(id);
            }
        } else {
            for (int y = std::min(p.y, q.y); y < std::max(p.y, q.y); ++y) {
                ++vcount[static_cast<size_t>(y)][static_cast<size_t>(p.x)];
                vowner[static_cast<size_t>(y)][static_cast<size_t>(p.x)] = letter(id);
            }
        }
    };
    for (int i = 0; i < rep.n(); ++i) {
        const PathB1& p = rep.paths[static_cast<size_t>(i)];
        if (p.bent) {
            mark_segment(i, p.a, p.corner);
            mark_segment(i, p.corner, p.b);
        } else {
            mark_segment(i, p.a, p.b);
        }
    }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x + 1 < w; ++x) {
            int c = hcount[static_cast<size_t>(y)][static_cast<size_t>(x)];
            if (c == 0) continue;
            canvas[static_cast<size_t>(2 * y)][static_cast<size_t>(2 * x + 1)] =
                c == 1 ? howner[static_cast<size_t>(y)][static_cast<size_t>(x)]
                       : (c <= 9 ? static_cast<char>('0' + c) : '*');
        }
    for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x < w; ++x) {
            int c = vcount[static_cast<size_t>(y)][static_cast<size_t>(x)];
            if (c == 0) continue;
            canvas[static_cast<size_t>(2 * y + 1)][static_cast<size_t>(2 * x)] =
                c == 1 ? vowner[static_cast<size_t>(y)][static_cast<size_t>(x)]
                       : (c <= 9 ? static_cast<char>('0' + c) : '*');
        }

    std::ostringstream out;
    for (int row = rows - 1; row >= 0; --row) out << canvas[static_cast<size_t>(row)] << '\n';
    for (int i = 0; i < rep.n(); ++i) {
        const PathB1& p = rep.paths[static_cast<size_t>(i)];
        out << "path " << i << " (" << letter(i) << ") : (" << p.a.x << ',' << p.a.y << ')';
        if (p.bent) out << "-(" << p.corner.x << ',' << p.corner.y << ')';
        out << "-(" << p.b.x << ',' << p.b.y << ")\n";
    }
    return out.str();
}

std::string render_svg(const Rep& rep) {
    const int cell = 40, margin = 30;
    const int w = (rep.width - 1) * cell + 2 * margin;
    const int h = (rep.height - 1) * cell + 2 * margin;
    // y axis flipped so the origin sits bottom-left like the text format
    auto px = [&](double x) { return margin + x * cell; };
    auto py = [&](double y) { return h - margin - y * cell; };
    static const char* palette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                                    "#d35400", "#16a085", "#7f8c8d", "#f39c12",
                                    "#2c3e50", "#e84393"};
    const int ncolors = static_cast<int>(sizeof(palette) / sizeof(palette[0]));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 160
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w + 160 << " " << h
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int y = 0; y < rep.height; ++y)
        out << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\""
            << px(rep.width - 1) << "\" y2=\"" << py(y)
            << "\" stroke=\"#dddddd\"/>\n";
    for (int x = 0; x < rep.width; ++x)
        out << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\""
            << px(x) << "\" y2=\"" << py(rep.height - 1)
            << "\" stroke=\"#dddddd\"/>\n";

    for (int i = 0; i < rep.n(); ++i) {
        const PathB1& p = rep.paths[static_cast<size_t>(i)];
        // small per-path diagonal offset keeps shared edges distinguishable
        double off = (i % 7 - 3) * 2.5 / cell;
        const char* color = palette[i % ncolors];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2.5\" stroke-linecap=\"round\" points=\"";
        out << px(p.a.x + off) << "," << py(p.a.y + off);
        if (p.bent) out << " " << px(p.corner.x + off) << "," << py(p.corner.y + off);
        out << " " << px(p.b.x + off) << "," << py(p.b.y + off) << "\"/>\n";
    }
    for (int i = 0; i < rep.n(); ++i) {
        const char* color = palette[i % ncolors];
        int ly = 20 + 18 * i;
        out << "<rect x=\"" << w + 10 << "\" y=\"" << ly - 10
            << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << w + 28 << "\" y=\"" << ly
            << "\" font-family=\"monospace\" font-size=\"13\">path " << i
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace epglab
