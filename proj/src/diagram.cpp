#include "cwlab/diagram.hpp"

#include <cmath>
#include <cstdio>

namespace cwlab {

namespace {

void check_rank_two(const std::vector<std::pair<std::string, RootVector>>& roots) {
    if (roots.empty()) throw RankNotTwo("diagram needs a non-empty rank-2 root list");
    for (const auto& [label, root] : roots)
        if (root.size() != 2)
            throw RankNotTwo("root of '" + label + "' has rank " + std::to_string(root.size()) +
                             ", diagram needs rank 2");
}

std::string fmt(double v) {
    // Fixed precision keeps the output byte-stable.
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v + 0.0);  // normalize -0
    return buf;
}

}  // namespace

std::string render_diagram_svg(const std::vector<std::pair<std::string, RootVector>>& roots) {
    check_rank_two(roots);
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-3 -3 6 6\" width=\"480\" height=\"480\">\n";
    out += "  <rect x=\"-3\" y=\"-3\" width=\"6\" height=\"6\" fill=\"white\"/>\n";
    out += "  <line x1=\"-3\" y1=\"0\" x2=\"3\" y2=\"0\" stroke=\"#cccccc\" stroke-width=\"0.02\"/>\n";
    out += "  <line x1=\"0\" y1=\"-3\" x2=\"0\" y2=\"3\" stroke=\"#cccccc\" stroke-width=\"0.02\"/>\n";
    for (const auto& [label, root] : roots) {
        // SVG y grows downward; flip the second component.
        double x = root[0].to_double_real();
        double y = -root[1].to_double_real();
        out += "  <line x1=\"0\" y1=\"0\" x2=\"" + fmt(x) + "\" y2=\"" + fmt(y) +
               "\" stroke=\"black\" stroke-width=\"0.03\"/>\n";
        double len = std::hypot(x, y);
        if (len > 1e-12) {
            // Small arrowhead at the tip.
            double ux = x / len, uy = y / len;
            double hx = x - 0.12 * ux, hy = y - 0.12 * uy;
            double px = -uy * 0.06, py = ux * 0.06;
            out += "  <polygon points=\"" + fmt(x) + "," + fmt(y) + " " + fmt(hx + px) + "," +
                   fmt(hy + py) + " " + fmt(hx - px) + "," + fmt(hy - py) + "\" fill=\"black\"/>\n";
        }
        out += "  <text x=\"" + fmt(x * 1.12) + "\" y=\"" + fmt(y * 1.12) +
               "\" font-size=\"0.18\" text-anchor=\"middle\">" + label + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string render_diagram_ascii(const std::vector<std::pair<std::string, RootVector>>& roots) {
    check_rank_two(roots);
    constexpr int kCols = 61, kRows = 31;  // [-3,3] at 0.1 / 0.2 per cell
    std::vector<std::string> grid(kRows, std::string(kCols, ' '));
    for (int r = 0; r < kRows; ++r) grid[r][kCols / 2] = '|';
    for (int c = 0; c < kCols; ++c) grid[kRows / 2][c] = '-';
    grid[kRows / 2][kCols / 2] = '+';

    auto plot = [&grid](double x, double y, char mark) {
        int c = static_cast<int>(std::lround((x + 3.0) / 6.0 * (kCols - 1)));
        int r = static_cast<int>(std::lround((3.0 - y) / 6.0 * (kRows - 1)));
        if (c >= 0 && c < kCols && r >= 0 && r < kRows) grid[r][c] = mark;
    };
    for (const auto& [label, root] : roots)
        plot(root[0].to_double_real(), root[1].to_double_real(), '*');

    std::string out;
    for (const auto& line : grid) out += line + "\n";
    out += "\n";
    for (const auto& [label, root] : roots) out += label + ": " + format_root(root) + "\n";
    return out;
}

}  // namespace cwlab
