#pragma once

#include "qmdt/profile.hpp"

#include <string>
#include <vector>

namespace qmdt {

// h^i x l_{i+row} when `left`, otherwise l_{i+row} x h^i; shell is 1-based.
struct ShellNode {
    int row = 0;
    int i = 0;
    bool left = true;
    int shell = 1;
    bool operator==(const ShellNode&) const = default;
};

struct ShellDiagram {
    int r = 0;
    std::vector<int> pattern;
    // rows[j] lists the left half by ascending i, then the right half by descending i.
    std::vector<std::vector<ShellNode>> rows;
};

ShellDiagram shellDiagram(const Profile& p);
// The layout depends only on r and the pattern, which need not satisfy the
// isotropy bounds (the r = 12, {2,8,12} illustration does not). Throws PatternInvalid.
ShellDiagram shellDiagram(int r, const std::vector<int>& pattern);

// Pyramids drawn with 'o', top row first, shell labels t-1 on the last line.
std::string renderAscii(const ShellDiagram& d);
std::string renderSvg(const ShellDiagram& d);

} // namespace qmdt
