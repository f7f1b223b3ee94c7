#pragma once

// Brute-force reference computations. They follow the defining statements
// directly and share no code with the library beyond its value types.

#include "qmdt/mdt.hpp"
#include "qmdt/profile.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

struct Expansion {
    std::vector<int> n;
    std::vector<std::int64_t> twiceM; // 2 m_i, exact even for a trailing 2^{-1}
};

// Every alternating expansion value = 2^{n_1} - 2^{n_2} + ... with
// n_1 > ... > n_{j-1} > n_j + 1, found by scanning all exponent subsets.
inline std::vector<std::vector<int>> alternatingExpansions(std::int64_t value, int maxExp) {
    std::vector<std::vector<int>> found;
    for (std::uint32_t mask = 1; mask < (1u << (maxExp + 1)); ++mask) {
        std::int64_t sum = 0;
        int sign = 1, last = -1, beforeLast = -1;
        for (int e = maxExp; e >= 0; --e)
            if (mask >> e & 1u) {
                sum += sign * (std::int64_t{1} << e);
                sign = -sign;
                beforeLast = last;
                last = e;
            }
        if (sum != value || (beforeLast >= 0 && beforeLast <= last + 1))
            continue;
        std::vector<int> n;
        for (int e = maxExp; e >= 0; --e)
            if (mask >> e & 1u)
                n.push_back(e);
        found.push_back(n);
    }
    return found;
}

inline std::optional<Expansion> expansion(const std::vector<std::vector<int>>& all) {
    if (all.size() != 1)
        return std::nullopt;
    Expansion e{all.front(), {}};
    const std::size_t j = e.n.size();
    for (std::size_t i = 0; i < j; ++i) {
        // 2 m_i = 2^{n_i} - 2 * 2^{n_{i+1}} + ... (alternating)
        std::int64_t twice = std::int64_t{1} << e.n[i];
        for (std::size_t k = i + 1; k < j; ++k)
            twice += ((k - i) % 2 == 1 ? -2 : 2) * (std::int64_t{1} << e.n[k]);
        e.twiceM.push_back(twice);
    }
    return e;
}

inline std::optional<Expansion> expansion(std::int64_t value, int maxExp) {
    return expansion(alternatingExpansions(value, maxExp));
}

struct Pair {
    int a, b, k;
};

// Every (a, b) with 0 <= a, d_X - b < r and some 1 <= k <= j' with
// b - a = 2^{n_k - 1} - 1 and m_1 + ... + m_{k-1} <= a, d_X - b < m_1 + ... + m_k.
inline std::vector<Pair> excellentPairs(int dim, int r, const std::optional<Expansion>& e) {
    std::vector<Pair> out;
    if (!e)
        return out;
    const int j = static_cast<int>(e->n.size());
    const int jPrime = dim % 2 == 0 ? j : j - 1;
    const int dX = dim - 2;
    std::vector<std::int64_t> prefixTwice{0};
    for (std::int64_t t : e->twiceM)
        prefixTwice.push_back(prefixTwice.back() + t);
    for (int a = 0; a < r; ++a)
        for (int b = dX - r + 1; b <= dX; ++b)
            for (int k = 1; k <= jPrime; ++k) {
                if (e->n[k - 1] < 1 || b - a != (1 << (e->n[k - 1] - 1)) - 1)
                    continue;
                const std::int64_t lowTwice = prefixTwice[k - 1];
                const std::int64_t highTwice = prefixTwice[k];
                if (lowTwice <= 2 * a && 2 * a < highTwice && lowTwice <= 2 * (dX - b) && 2 * (dX - b) < highTwice)
                    out.push_back({a, b, k});
            }
    return out;
}

inline std::vector<Pair> excellentPairs(int dim, int r, int maxExp) {
    return excellentPairs(dim, r, expansion(dim, maxExp));
}

// n choose k mod 2 from Pascal's triangle.
inline std::vector<std::vector<int>> pascalMod2(int rows) {
    std::vector<std::vector<int>> c(rows + 1, std::vector<int>(rows + 1, 0));
    for (int n = 0; n <= rows; ++n) {
        c[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            c[n][k] = (c[n - 1][k - 1] + c[n - 1][k]) % 2;
    }
    return c;
}

// Every set partition of `items`, as lists of blocks.
template <class T>
void forEachSetPartition(const std::vector<T>& items, const std::function<void(const std::vector<std::vector<T>>&)>& f) {
    std::vector<std::vector<T>> blocks;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == items.size()) {
            f(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(items[k]);
            go(k + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({items[k]});
        go(k + 1);
        blocks.pop_back();
    };
    go(0);
}

// All partitions of Lambda(X) with no violations, by exhaustive filtering.
inline std::vector<qmdt::MdtPartition> feasiblePartitions(const qmdt::Profile& p, const qmdt::RuleSet& rules) {
    std::vector<qmdt::MdtPartition> out;
    forEachSetPartition<qmdt::LambdaSymbol>(qmdt::lambdaSet(p), [&](const std::vector<qmdt::Block>& blocks) {
        qmdt::MdtPartition part{blocks};
        part.canonicalize();
        if (qmdt::checkPartition(p, part, rules).empty())
            out.push_back(part);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Every pattern 0 < j_1 < ... < r whose steps obey i_t <= 2^{v2(dim - 2 j_{t-1} - i_t)}.
inline std::vector<std::vector<int>> stepBoundPatterns(int r, int s) {
    auto v2 = [](int x) {
        int v = 0;
        while (x % 2 == 0) {
            x /= 2;
            ++v;
        }
        return v;
    };
    const int dim = 2 * r + s;
    std::vector<std::vector<int>> out;
    std::vector<int> cur{0};
    std::function<void()> go = [&] {
        if (cur.back() == r) {
            out.push_back(cur);
            return;
        }
        for (int i = 1; cur.back() + i <= r; ++i) {
            const int rest = dim - 2 * cur.back() - i;
            if (rest > 0 && i <= (1 << v2(rest))) {
                cur.push_back(cur.back() + i);
                go();
                cur.pop_back();
            }
        }
    };
    go();
    return out;
}

} // namespace oracle
