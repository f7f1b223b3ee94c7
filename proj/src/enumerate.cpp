#include "qmdt/error.hpp"
#include "qmdt/mdt.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmdt {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

struct Atom {
    std::vector<LambdaSymbol> symbols; // sorted
    std::optional<int> minLo;
    std::optional<int> maxUp;
};

// Search state: block index per atom plus the per-block lower end and upper maximum.
struct Prefix {
    std::vector<int> assign;
    std::vector<int> blockLo;  // -1 for blocks without a lower symbol
    std::vector<int> blockTop; // -1 when no upper symbol yet
};

class Search {
public:
    Search(const Profile& p, const RuleSet& rules, const EnumerateOptions& opt) : p_(p), rules_(rules) {
        if (p.r > opt.maxR)
            fail("BoundExceeded", "r = " + std::to_string(p.r) + " exceeds the enumeration bound " +
                                      std::to_string(opt.maxR));
        buildAtoms();
        if (static_cast<int>(atoms_.size()) > opt.maxAtoms)
            fail("BoundExceeded", std::to_string(atoms_.size()) + " independent symbol groups exceed the bound " +
                                      std::to_string(opt.maxAtoms));
    }

    int atomCount() const { return static_cast<int>(atoms_.size()); }

    // Extends `state` (covering `state.assign.size()` atoms) depth-first, either
    // collecting complete partitions or stopping at `stopDepth` and collecting prefixes.
    void extend(Prefix& state, std::size_t stopDepth, std::vector<MdtPartition>* done,
                std::vector<Prefix>* frontier) const {
        const std::size_t k = state.assign.size();
        if (k == atoms_.size()) {
            MdtPartition part = materialize(state);
            if (checkPartition(p_, part, rules_).empty())
                done->push_back(std::move(part));
            return;
        }
        if (frontier && k == stopDepth) {
            frontier->push_back(state);
            return;
        }
        const Atom& atom = atoms_[k];
        const int open = static_cast<int>(state.blockLo.size());
        for (int b = 0; b <= open; ++b) {
            const bool fresh = b == open;
            if (fresh) {
                if (endpoint() && !atom.minLo)
                    continue; // later atoms carry no lower symbol either
                state.blockLo.push_back(atom.minLo.value_or(-1));
                state.blockTop.push_back(-1);
            }
            const int savedTop = state.blockTop[b];
            if (atom.maxUp)
                state.blockTop[b] = std::max(savedTop, *atom.maxUp);
            if (!exceedsEndpoint(state, b)) {
                state.assign.push_back(b);
                extend(state, stopDepth, done, frontier);
                state.assign.pop_back();
            }
            state.blockTop[b] = savedTop;
            if (fresh) {
                state.blockLo.pop_back();
                state.blockTop.pop_back();
            }
        }
    }

private:
    bool endpoint() const { return rules_.has(Rule::Endpoint); }

    bool exceedsEndpoint(const Prefix& state, int b) const {
        if (!endpoint() || state.blockLo[b] < 0 || state.blockTop[b] < 0)
            return false;
        const int a = state.blockLo[b];
        const int t = p_.shellOf(a);
        const int dX = p_.quadricDim();
        const int want = rules_.endpoint == EndpointReading::Printed ? dX - (a + p_.i(t) - 1)
                                                                     : a + dX + 1 - p_.j(t - 1) - p_.j(t);
        return state.blockTop[b] > want;
    }

    void buildAtoms() {
        const std::vector<LambdaSymbol> symbols = lambdaSet(p_);
        std::map<LambdaSymbol, int> index;
        for (std::size_t k = 0; k < symbols.size(); ++k)
            index[symbols[k]] = static_cast<int>(k);
        UnionFind uf(static_cast<int>(symbols.size()));
        auto merge = [&](const std::vector<SymbolPair>& pairs) {
            for (const auto& [x, y] : pairs) {
                auto ix = index.find(x), iy = index.find(y);
                if (ix != index.end() && iy != index.end())
                    uf.join(ix->second, iy->second);
            }
        };
        if (rules_.has(Rule::Dual))
            merge(forcedConnections(p_));
        if (rules_.has(Rule::Exc))
            merge(excellentConnections(p_));
        if (rules_.has(Rule::Vpn))
            merge(vpnConnections(p_));

        std::map<int, Atom> groups;
        for (std::size_t k = 0; k < symbols.size(); ++k)
            groups[uf.find(static_cast<int>(k))].symbols.push_back(symbols[k]);
        for (auto& [root, atom] : groups) {
            for (LambdaSymbol x : atom.symbols) {
                if (x.side == Side::Lo && !atom.minLo)
                    atom.minLo = x.i;
                if (x.side == Side::Up)
                    atom.maxUp = x.i;
            }
            atoms_.push_back(std::move(atom));
        }
        // Lower-bearing atoms first, ordered by their least symbol.
        std::sort(atoms_.begin(), atoms_.end(),
                  [](const Atom& a, const Atom& b) { return a.symbols.front() < b.symbols.front(); });
    }

    MdtPartition materialize(const Prefix& state) const {
        MdtPartition part;
        part.blocks.resize(state.blockLo.size());
        for (std::size_t k = 0; k < atoms_.size(); ++k) {
            Block& b = part.blocks[state.assign[k]];
            b.insert(b.end(), atoms_[k].symbols.begin(), atoms_[k].symbols.end());
        }
        part.canonicalize();
        return part;
    }

    const Profile& p_;
    const RuleSet& rules_;
    std::vector<Atom> atoms_;
};

void finish(std::vector<MdtPartition>& out) { std::sort(out.begin(), out.end()); }

} // namespace

std::vector<MdtPartition> enumerateMDTSerial(const Profile& p, const RuleSet& rules, const EnumerateOptions& opt) {
    Search search(p, rules, opt);
    std::vector<MdtPartition> out;
    Prefix root;
    search.extend(root, 0, &out, nullptr);
    finish(out);
    return out;
}

std::vector<MdtPartition> enumerateMDT(const Profile& p, const RuleSet& rules, const EnumerateOptions& opt) {
    Search search(p, rules, opt);
    std::vector<MdtPartition> out;
    std::vector<Prefix> frontier;
    Prefix root;
    const std::size_t depth = static_cast<std::size_t>(std::min(search.atomCount(), 4));
    search.extend(root, depth, &out, &frontier);

    const int n = static_cast<int>(frontier.size());
    std::vector<std::vector<MdtPartition>> found(n);
    bool failed = false;
    std::string failCode, failMessage;
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) {
        try {
            search.extend(frontier[k], 0, &found[k], nullptr);
        } catch (const Error& e) {
#pragma omp critical(qmdt_enumerate_error)
            {
                failed = true;
                failCode = e.code();
                failMessage = e.what();
            }
        }
    }
    if (failed)
        fail(failCode, failMessage);
    for (auto& part : found)
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    finish(out);
    return out;
}

} // namespace qmdt
