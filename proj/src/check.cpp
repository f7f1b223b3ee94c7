#include "qmdt/error.hpp"
#include "qmdt/mdt.hpp"

#include <algorithm>
#include <map>

namespace qmdt {

namespace {

std::string blockText(const Block& b) {
    MdtPartition single{{b}};
    std::string text = partitionText(single);
    return text.substr(1, text.size() - 2);
}

int v2OrNone(int x) { return x > 0 ? v2(x) : -1; }

class Checker {
public:
    Checker(const Profile& p, const MdtPartition& part, const RuleSet& rules)
        : p_(p), part_(part), rules_(rules), dX_(p.quadricDim()) {
        for (std::size_t k = 0; k < part.blocks.size(); ++k)
            for (LambdaSymbol x : part.blocks[k])
                owner_[x] = static_cast<int>(k);
    }

    std::vector<Violation> run() {
        validate();
        if (rules_.has(Rule::Parity))
            parity();
        if (rules_.has(Rule::Dual))
            pairs(Rule::Dual, forcedConnections(p_));
        if (rules_.has(Rule::Endpoint))
            endpoint();
        if (rules_.has(Rule::Shift))
            shift();
        if (rules_.has(Rule::Upper))
            upper();
        if (rules_.has(Rule::Karpenko))
            karpenko();
        if (rules_.has(Rule::Exc))
            pairs(Rule::Exc, excellentConnections(p_));
        if (rules_.has(Rule::Vpn))
            pairs(Rule::Vpn, vpnConnections(p_));
        if (rules_.has(Rule::Vishik))
            vishik();
        return std::move(out_);
    }

private:
    void report(Rule r, std::string witness) { out_.push_back({ruleId(r), std::move(witness)}); }

    void validate() const {
        std::vector<LambdaSymbol> seen;
        for (const Block& b : part_.blocks) {
            if (b.empty())
                fail("InvalidPartition", "partition contains an empty block");
            seen.insert(seen.end(), b.begin(), b.end());
        }
        std::sort(seen.begin(), seen.end());
        if (seen != lambdaSet(p_))
            fail("InvalidPartition", "blocks do not partition Lambda(X) exactly once");
    }

    const Block* blockOf(LambdaSymbol x) const {
        auto it = owner_.find(x);
        return it == owner_.end() ? nullptr : &part_.blocks[it->second];
    }

    const Block* blockStartingAt(int a) const {
        const Block* b = blockOf(lo(a));
        return b && lowerEnd(*b) == a ? b : nullptr;
    }

    void parity() {
        for (const Block& b : part_.blocks)
            if (b.size() % 2 != 0)
                report(Rule::Parity, "block " + blockText(b) + " has odd size " + std::to_string(b.size()));
    }

    void pairs(Rule r, const std::vector<SymbolPair>& connections) {
        for (const auto& [x, y] : connections)
            if (owner_.at(x) != owner_.at(y))
                report(r, symbolText(x) + " and " + symbolText(y) + " lie in different blocks");
    }

    int expectedUpper(int a) const {
        const int t = p_.shellOf(a);
        if (rules_.endpoint == EndpointReading::Printed)
            return dX_ - (a + p_.i(t) - 1);
        return a + dX_ + 1 - p_.j(t - 1) - p_.j(t);
    }

    void endpoint() {
        for (const Block& b : part_.blocks) {
            auto a = lowerEnd(b);
            auto top = upperEnd(b);
            if (!a || !top) {
                report(Rule::Endpoint, "block " + blockText(b) + " lacks a lower or an upper symbol");
                continue;
            }
            const int want = expectedUpper(*a);
            if (*top != want)
                report(Rule::Endpoint, "block " + blockText(b) + " has b = " + std::to_string(*top) +
                                           ", expected " + std::to_string(want));
        }
    }

    void shift() {
        for (int t = 1; t <= p_.height(); ++t) {
            bool occupied = false;
            for (const Block& b : part_.blocks) {
                auto a = lowerEnd(b);
                occupied = occupied || (a && p_.j(t - 1) <= *a && *a < p_.j(t));
            }
            if (!occupied)
                continue;
            const Block* base = blockStartingAt(p_.j(t - 1));
            if (!base) {
                report(Rule::Shift, "shell " + std::to_string(t) + " has blocks but none starts at " +
                                        std::to_string(p_.j(t - 1)));
                continue;
            }
            for (int k = 1; k < p_.i(t); ++k) {
                Block moved = shiftBlock(*base, k);
                std::sort(moved.begin(), moved.end());
                Block actual;
                if (const Block* b = blockOf(moved.front()))
                    actual = *b;
                std::sort(actual.begin(), actual.end());
                if (actual != moved)
                    report(Rule::Shift, "shift by " + std::to_string(k) + " of " + blockText(*base) +
                                            " is not a block");
            }
            for (LambdaSymbol x : *base) {
                if (x.side != Side::Lo)
                    continue;
                const int tt = p_.shellOf(x.i);
                if (tt >= t && x.i + p_.i(t) > p_.j(tt))
                    report(Rule::Shift, symbolText(x) + " in the base block of shell " + std::to_string(t) +
                                            " violates i + i_t <= j_t'");
            }
        }
    }

    std::vector<int> upperLows(const Block& u) const {
        std::vector<int> lows;
        for (LambdaSymbol x : u)
            if (x.side == Side::Lo)
                lows.push_back(x.i);
        std::sort(lows.begin(), lows.end());
        return lows;
    }

    // Index t with j_t == i for 1 <= t < h, or 0.
    int interiorStepAt(int i) const {
        for (int t = 1; t < p_.height(); ++t)
            if (p_.j(t) == i)
                return t;
        return 0;
    }

    void upper() {
        const Block& u = *blockOf(lo(0));
        const int izh = izhboldinDim(p_);
        auto top = upperEnd(u);
        if (!top || *top != izh - 1)
            report(Rule::Upper, "upper block " + blockText(u) + " must end at " + std::to_string(izh - 1));
        const std::vector<int> lows = upperLows(u);
        if (u.size() != 2) {
            if (lows.size() < 2)
                report(Rule::Upper, "upper block " + blockText(u) + " needs at least two lower symbols");
            else if (!interiorStepAt(lows[1]))
                report(Rule::Upper, "first positive lower index " + std::to_string(lows[1]) +
                                        " of the upper block is not an interior pattern entry");
        }
        if (p_.height() >= 2) {
            const int j1 = p_.j(1), j2 = p_.j(2), i1 = p_.i(1), i2 = p_.i(2);
            std::vector<int> inShell;
            for (int i : lows)
                if (j1 <= i && i < j2)
                    inShell.push_back(i);
            if (!inShell.empty()) {
                std::vector<int> want;
                for (int i = i1; i <= j2 - i1; i += i1)
                    want.push_back(i);
                if (i2 % i1 != 0 || inShell != want)
                    report(Rule::Upper, "upper block meets shell 2 but not as the multiples of i_1");
            }
        }
    }

    void karpenko() {
        const Block& u = *blockOf(lo(0));
        if (u.size() <= 2)
            return;
        const std::vector<int> lows = upperLows(u);
        const int i1 = p_.i(1);
        const int v = ceilLog2(i1);
        for (int i : lows)
            if (i > 0 && i % (1 << v) != 0)
                report(Rule::Karpenko, std::to_string(i) + "_lo in the upper block is not divisible by 2^" +
                                           std::to_string(v));
        if (lows.size() < 2)
            return;
        const int t = interiorStepAt(lows[1]);
        if (!t)
            return; // reported by R-UPPER
        const int e = v2(i1);
        const int next = v2(p_.i(t + 1));
        if (next < e)
            report(Rule::Karpenko, "v2(i_" + std::to_string(t + 1) + ") < v2(i_1)");
        const int gap = v2OrNone(p_.j(t) - i1);
        if (gap >= e + 2 && next > e + 1)
            report(Rule::Karpenko, "v2(j_t - i_1) >= v2(i_1) + 2 forces v2(i_" + std::to_string(t + 1) +
                                       ") <= v2(i_1) + 1");
    }

    void vishik() {
        for (int t = 1; t < p_.height(); ++t) {
            const Block* base = blockStartingAt(p_.j(t - 1));
            if (!base)
                continue;
            const std::int64_t big = p_.dim - 2 * p_.j(t - 1) - p_.j(t);
            const AlternatingExpansion e = alternating2adic(big);
            const int j = static_cast<int>(e.n.size());
            for (int k = 1; k <= j; ++k) {
                // 2 d_k = M + sum_{i >= k} (-1)^{k+i-1} 2^{n_i}
                std::int64_t twice = big;
                for (int i = k; i <= j; ++i)
                    twice += ((k + i - 1) % 2 == 0 ? 1 : -1) * (std::int64_t{1} << e.n[i - 1]);
                const std::int64_t d = p_.j(t - 1) + twice / 2;
                if (d >= p_.r)
                    continue;
                if (std::find(base->begin(), base->end(), lo(static_cast<int>(d))) == base->end())
                    report(Rule::Vishik, std::to_string(d) + "_lo missing from " + blockText(*base));
                for (int tt = t; tt <= p_.height(); ++tt)
                    if (p_.j(tt - 1) < d && d <= p_.j(tt) && d + p_.i(t) > p_.j(tt))
                        report(Rule::Vishik, "d_k = " + std::to_string(d) + " violates d_k + i_t <= j_t'");
            }
        }
    }

    const Profile& p_;
    const MdtPartition& part_;
    const RuleSet& rules_;
    const int dX_;
    std::map<LambdaSymbol, int> owner_;
    std::vector<Violation> out_;
};

} // namespace

std::vector<Violation> checkPartition(const Profile& p, const MdtPartition& partition, const RuleSet& rules) {
    return Checker(p, partition, rules).run();
}

} // namespace qmdt
