#include "qmdt/mdt.hpp"

#include "qmdt/error.hpp"

#include <algorithm>
#include <sstream>

namespace qmdt {

std::string symbolText(LambdaSymbol x) {
    return std::to_string(x.i) + (x.side == Side::Lo ? "_lo" : "^up");
}

void MdtPartition::canonicalize() {
    for (Block& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
}

std::string partitionText(const MdtPartition& p) {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < p.blocks.size(); ++k) {
        out << (k ? "," : "") << '{';
        for (std::size_t e = 0; e < p.blocks[k].size(); ++e)
            out << (e ? "," : "") << symbolText(p.blocks[k][e]);
        out << '}';
    }
    out << '}';
    return out.str();
}

bool inWindow(LambdaSymbol x, int r, int dX) {
    if (x.side == Side::Lo)
        return 0 <= x.i && x.i < r;
    return dX - r < x.i && x.i <= dX;
}

std::vector<LambdaSymbol> lambdaSet(int r, int dX) {
    std::vector<LambdaSymbol> out;
    for (int i = 0; i < r; ++i)
        out.push_back(lo(i));
    for (int i = dX - r + 1; i <= dX; ++i)
        out.push_back(up(i));
    return out;
}

std::vector<LambdaSymbol> lambdaSet(const Profile& p) { return lambdaSet(p.r, p.quadricDim()); }

Block shiftBlock(const Block& b, int k) {
    Block out;
    for (LambdaSymbol x : b)
        out.push_back({x.side, x.i + k});
    return out;
}

std::optional<int> lowerEnd(const Block& b) {
    std::optional<int> a;
    for (LambdaSymbol x : b)
        if (x.side == Side::Lo && (!a || x.i < *a))
            a = x.i;
    return a;
}

std::optional<int> upperEnd(const Block& b) {
    std::optional<int> top;
    for (LambdaSymbol x : b)
        if (x.side == Side::Up && (!top || x.i > *top))
            top = x.i;
    return top;
}

bool coBlocked(const MdtPartition& p, LambdaSymbol x, LambdaSymbol y) {
    for (const Block& b : p.blocks) {
        bool hasX = std::find(b.begin(), b.end(), x) != b.end();
        bool hasY = std::find(b.begin(), b.end(), y) != b.end();
        if (hasX || hasY)
            return hasX && hasY;
    }
    return false;
}

Corr alphaCycle(LambdaSymbol x, const Profile& p) {
    const int dX = p.quadricDim();
    if (!inWindow(x, p.r, dX))
        fail("OutOfWindow", "symbol " + symbolText(x) + " is not in Lambda(X)");
    Corr out{Cycle({p, p}), 1};
    if (x.side == Side::Lo)
        out.cycle.toggle({H(x.i), L(x.i)});
    else
        out.cycle.toggle({L(dX - x.i), H(dX - x.i)});
    return out;
}

std::vector<SymbolPair> forcedConnections(const Profile& p) {
    std::vector<SymbolPair> out;
    const int dX = p.quadricDim();
    for (int t = 1; t <= p.height(); ++t)
        for (int i = 0; i < p.i(t); ++i)
            out.push_back({lo(p.j(t - 1) + i), up(dX - (p.j(t) - 1 - i))});
    return out;
}

bool isVirtualPfisterNeighbour(const Profile& p) {
    const int n = ceilLog2(p.dim) - 1;
    const int m = p.dim - (1 << n);
    const bool hasM = std::find(p.pattern.begin(), p.pattern.end(), m) != p.pattern.end();
    if (!hasM)
        return false;
    return p.j(1) == m || m == 1 || m == 2;
}

std::vector<SymbolPair> vpnConnections(const Profile& p) {
    std::vector<SymbolPair> out;
    for (int t = 0; t < p.height(); ++t) {
        const Profile k = p.kernel(t);
        if (!isVirtualPfisterNeighbour(k))
            continue;
        const int w = p.j(t);
        const int n = ceilLog2(k.dim) - 1;
        const int m = k.dim - (1 << n);
        for (int i = 0; i < m; ++i)
            out.push_back({lo(i + w), up((1 << n) + i - 1 + w)});
        // The kernel step ending at m starts inside the kernel's upper block.
        for (int u = 2; u <= k.height(); ++u)
            if (k.j(u) == m)
                out.push_back({lo(w), lo(k.j(u - 1) + w)});
    }
    return out;
}

std::vector<SymbolPair> excellentConnections(const Profile& p) {
    std::vector<SymbolPair> out;
    for (const ExcellentPair& e : excellentPairs(p))
        out.push_back({lo(e.a), up(e.b)});
    return out;
}

namespace {

struct RuleName {
    Rule rule;
    const char* id;
};

constexpr RuleName kRuleNames[] = {
    {Rule::Parity, "R-PARITY"}, {Rule::Dual, "R-DUAL"},   {Rule::Endpoint, "R-ENDPOINT"},
    {Rule::Shift, "R-SHIFT"},   {Rule::Upper, "R-UPPER"}, {Rule::Karpenko, "R-KARPENKO"},
    {Rule::Exc, "R-EXC"},       {Rule::Vpn, "R-VPN"},     {Rule::Vishik, "R-VISHIK"},
};

} // namespace

std::string ruleId(Rule rule) {
    for (const RuleName& n : kRuleNames)
        if (n.rule == rule)
            return n.id;
    return "R-UNKNOWN";
}

Rule parseRuleId(const std::string& id) {
    for (const RuleName& n : kRuleNames)
        if (id == n.id)
            return n.rule;
    fail("UnknownRule", "unknown rule id '" + id + "'");
}

std::string provenanceName(Provenance p) {
    switch (p) {
    case Provenance::Proven:
        return "proven";
    case Provenance::Conjectural:
        return "conjectural";
    case Provenance::InterpretationSensitive:
        return "interpretation-sensitive";
    }
    return "unknown";
}

Provenance provenance(Rule rule, const Profile& p) {
    switch (rule) {
    case Rule::Exc:
        return p.s <= 1 ? Provenance::Proven : Provenance::Conjectural;
    case Rule::Vishik:
        return Provenance::InterpretationSensitive;
    default:
        return Provenance::Proven;
    }
}

RuleSet& RuleSet::enable(Rule r) {
    mask |= 1u << static_cast<unsigned>(r);
    return *this;
}

RuleSet& RuleSet::disable(Rule r) {
    mask &= ~(1u << static_cast<unsigned>(r));
    return *this;
}

std::vector<Rule> RuleSet::rules() const {
    std::vector<Rule> out;
    for (const RuleName& n : kRuleNames)
        if (has(n.rule))
            out.push_back(n.rule);
    return out;
}

RuleSet RuleSet::proven(const Profile& p) {
    RuleSet rs;
    for (const RuleName& n : kRuleNames)
        if (provenance(n.rule, p) == Provenance::Proven)
            rs.enable(n.rule);
    return rs;
}

RuleSet RuleSet::parse(const std::string& ids, const Profile& p) {
    RuleSet rs;
    std::istringstream in(ids);
    std::string id;
    bool any = false;
    while (std::getline(in, id, ',')) {
        any = true;
        if (id == "proven")
            rs.mask |= proven(p).mask;
        else
            rs.enable(parseRuleId(id));
    }
    if (!any)
        fail("UnknownRule", "empty rule list");
    return rs;
}

MdtPartition mdtHeightOne(const Profile& p) {
    if (p.height() != 1)
        fail("NotHeightOne", "profile has nondefective height " + std::to_string(p.height()));
    MdtPartition out;
    for (int i = 0; i < p.r; ++i)
        out.blocks.push_back({lo(i), up(p.r + p.s - 1 + i)});
    out.canonicalize();
    return out;
}

namespace {

void requireCovers(const MdtPartition& part, int r, int dX, const std::string& code, const std::string& what) {
    std::vector<LambdaSymbol> seen;
    for (const Block& b : part.blocks) {
        if (b.empty())
            fail(code, what + ": empty block");
        seen.insert(seen.end(), b.begin(), b.end());
    }
    std::sort(seen.begin(), seen.end());
    if (seen != lambdaSet(r, dX))
        fail(code, what + ": blocks do not partition the symbol set");
}

} // namespace

MdtPartition mdtPfisterNeighbour(const Profile& p, const MdtPartition& inner) {
    const PfisterNeighbourInfo info = pfisterNeighbourInvariants(p.dim, p.s);
    if (p.j(1) != info.m)
        fail("NotNeighbourEligible", "first splitting step " + std::to_string(p.j(1)) + " differs from m = " +
                                         std::to_string(info.m));
    const int lower = 1 << info.n;
    MdtPartition out;
    for (int i = 0; i < info.m; ++i)
        out.blocks.push_back({lo(i), up(lower - 1 + i)});
    const int rest = p.r - info.m;
    if (rest == 0) {
        if (!inner.blocks.empty())
            fail("ArityMismatch", "no complementary partition expected when r = m");
    } else {
        requireCovers(inner, rest, 2 * rest + p.s - 2, "ArityMismatch", "complementary partition");
        for (const Block& b : inner.blocks)
            out.blocks.push_back(shiftBlock(b, info.m));
    }
    out.canonicalize();
    return out;
}

MdtPartition mdtStronglyExcellent(const std::vector<int>& nList, int s) {
    const StronglyExcellent se = stronglyExcellentProfile(nList, s);
    MdtPartition out;
    int offset = 0;
    for (std::size_t i = 0; i < nList.size(); ++i) {
        const int top = (1 << (nList[i] - 1)) - 1;
        for (int j = 0; j < se.m[i]; ++j)
            out.blocks.push_back({lo(offset + j), up(top + offset + j)});
        offset += se.m[i];
    }
    out.canonicalize();
    requireCovers(out, se.profile.r, se.profile.quadricDim(), "ConstraintViolated", "strongly excellent blocks");
    return out;
}

MdtPartition mdtIsotropicLift(int w, const MdtPartition& inner, const Profile& innerProfile) {
    if (w < 1)
        fail("DomainError", "Witt index of the lift must be positive");
    requireCovers(inner, innerProfile.r, innerProfile.quadricDim(), "InvalidPartition", "inner partition");
    const int dX = innerProfile.quadricDim() + 2 * w;
    MdtPartition out;
    for (int i = 0; i < w; ++i)
        out.blocks.push_back({lo(i)});
    for (int i = dX - w + 1; i <= dX; ++i)
        out.blocks.push_back({up(i)});
    for (const Block& b : inner.blocks)
        out.blocks.push_back(shiftBlock(b, w));
    out.canonicalize();
    return out;
}

} // namespace qmdt
