#include "qmdt/diagram.hpp"

#include "qmdt/error.hpp"

#include <algorithm>
#include <sstream>

namespace qmdt {

namespace {

constexpr int kMiddleGap = 4;

struct Layout {
    int r;
    const std::vector<int>& j;

    int height() const { return static_cast<int>(j.size()) - 1; }
    int step(int t) const { return j[t] - j[t - 1]; }
    int shellStart(int t) const { return 2 * j[t - 1] + (t - 1); }
    int halfWidth() const { return 2 * r + height() - 2; }
    int width() const { return 2 * halfWidth() + kMiddleGap; }
    int labelColumn(int t) const { return shellStart(t) + step(t) - 1; }

    // Pyramids in one half are separated by two blanks; the right half mirrors the left.
    int column(const ShellNode& n) const {
        const int x = shellStart(n.shell) + 2 * (n.i - j[n.shell - 1]) + n.row;
        return n.left ? x : width() - 1 - x;
    }
};

void trimRight(std::string& line) { line.erase(line.find_last_not_of(' ') + 1); }

} // namespace

ShellDiagram shellDiagram(int r, const std::vector<int>& pattern) {
    if (pattern.size() < 2 || pattern.front() != 0 || pattern.back() != r ||
        !std::is_sorted(pattern.begin(), pattern.end(), std::less_equal<>()))
        fail("PatternInvalid", "pattern must increase strictly from 0 to r");
    ShellDiagram d{r, pattern, {}};
    int top = 0;
    for (std::size_t t = 1; t < pattern.size(); ++t)
        top = std::max(top, pattern[t] - pattern[t - 1] - 1);
    for (int row = 0; row <= top; ++row) {
        std::vector<ShellNode> left;
        for (int t = 1; t < static_cast<int>(pattern.size()); ++t)
            for (int i = pattern[t - 1]; i < pattern[t] - row; ++i)
                left.push_back({row, i, true, t});
        std::vector<ShellNode> nodes = left;
        for (auto it = left.rbegin(); it != left.rend(); ++it)
            nodes.push_back({it->row, it->i, false, it->shell});
        d.rows.push_back(std::move(nodes));
    }
    return d;
}

ShellDiagram shellDiagram(const Profile& p) { return shellDiagram(p.r, p.pattern); }

std::string renderAscii(const ShellDiagram& d) {
    const Layout lay{d.r, d.pattern};
    const int width = lay.width();
    std::ostringstream out;
    for (int row = static_cast<int>(d.rows.size()) - 1; row >= 0; --row) {
        std::string line(width, ' ');
        for (const ShellNode& n : d.rows[row])
            line[lay.column(n)] = 'o';
        trimRight(line);
        out << line << '\n';
    }
    std::string labels(width + 8, ' ');
    for (int t = 1; t <= lay.height(); ++t) {
        const std::string tag = std::to_string(t - 1);
        labels.replace(lay.labelColumn(t), tag.size(), tag);
        labels.replace(width - 1 - lay.labelColumn(t), tag.size(), tag);
    }
    trimRight(labels);
    out << labels << '\n';
    return out.str();
}

std::string renderSvg(const ShellDiagram& d) {
    const Layout lay{d.r, d.pattern};
    constexpr int unit = 12;
    constexpr int margin = 12;
    const int rows = static_cast<int>(d.rows.size());
    const int w = lay.width() * unit + 2 * margin;
    const int h = (rows + 1) * 2 * unit + 2 * margin;
    auto x = [&](int col) { return margin + col * unit + unit / 2; };
    auto y = [&](int row) { return margin + (rows - 1 - row) * 2 * unit + unit; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
        << w << ' ' << h << "\">\n";
    out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    for (int row = 0; row < rows; ++row)
        for (const ShellNode& n : d.rows[row]) {
            const int hi = n.i, li = n.i + n.row;
            out << "<circle cx=\"" << x(lay.column(n)) << "\" cy=\"" << y(row)
                << "\" r=\"4\" fill=\"black\" data-shell=\"" << n.shell - 1 << "\"><title>"
                << (n.left ? "h" + std::to_string(hi) + " x l" + std::to_string(li)
                           : "l" + std::to_string(li) + " x h" + std::to_string(hi))
                << "</title></circle>\n";
        }
    const int labelY = margin + rows * 2 * unit + unit;
    for (int t = 1; t <= lay.height(); ++t)
        for (int col : {lay.labelColumn(t), lay.width() - 1 - lay.labelColumn(t)})
            out << "<text x=\"" << x(col) << "\" y=\"" << labelY
                << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << t - 1 << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace qmdt
