#include "qmdt/profile.hpp"

#include "qmdt/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qmdt {

namespace {

std::string patternText(const std::vector<int>& pattern) {
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < pattern.size(); ++k)
        out << (k ? "," : "") << pattern[k];
    out << ']';
    return out.str();
}

// x with x*2^u < r <= (x+1)*2^u.
std::int64_t blockIndex(std::int64_t r, int u) { return (r - 1) >> u; }

} // namespace

int v2(std::int64_t n) {
    if (n <= 0)
        fail("DomainError", "v2 needs a positive integer, got " + std::to_string(n));
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

bool isPowerOfTwo(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

int ceilLog2(std::int64_t x) {
    int v = 0;
    while ((std::int64_t{1} << v) < x)
        ++v;
    return v;
}

bool i1BoundHolds(int dim, int i) {
    if (i < 1 || i >= dim)
        return false;
    int u = v2(dim - i);
    return u >= 31 || i <= (1 << u);
}

int Profile::shellOf(int a) const {
    for (int t = 1; t <= height(); ++t)
        if (pattern[t - 1] <= a && a < pattern[t])
            return t;
    fail("OutOfWindow", "lower index " + std::to_string(a) + " outside [0," + std::to_string(r) + ")");
}

Profile Profile::kernel(int t) const {
    if (t < 0 || t >= height())
        fail("InvalidLevel", "kernel level " + std::to_string(t) + " outside [0," + std::to_string(height()) + ")");
    Profile k;
    int w = pattern[t];
    k.dim = dim - 2 * w;
    k.r = r - w;
    k.s = s;
    for (int u = t; u <= height(); ++u)
        k.pattern.push_back(pattern[u] - w);
    return k;
}

Profile mkProfile(int dim, int r, int s, std::vector<int> pattern) {
    if (r < 1 || s < 0 || dim != 2 * r + s)
        fail("DimMismatch", "need dim = 2r + s with r >= 1, s >= 0; got dim=" + std::to_string(dim) +
                                " r=" + std::to_string(r) + " s=" + std::to_string(s));
    if (pattern.size() < 2 || pattern.front() != 0 || pattern.back() != r ||
        !std::is_sorted(pattern.begin(), pattern.end(), std::less_equal<int>{}) ||
        std::adjacent_find(pattern.begin(), pattern.end()) != pattern.end())
        fail("PatternInvalid", "pattern " + patternText(pattern) + " must increase strictly from 0 to r=" +
                                   std::to_string(r));
    for (std::size_t t = 1; t < pattern.size(); ++t) {
        int step = pattern[t] - pattern[t - 1];
        int kernelDim = dim - 2 * pattern[t - 1];
        if (!i1BoundHolds(kernelDim, step))
            fail("StepViolatesI1Bound", "step i_" + std::to_string(t) + " = " + std::to_string(step) +
                                            " exceeds 2^v2(" + std::to_string(kernelDim - step) + ") = " +
                                            std::to_string(1 << v2(kernelDim - step)));
    }
    return Profile{dim, r, s, std::move(pattern)};
}

int izhboldinDim(const Profile& p) { return p.dim - p.j(1); }

int i1MaxByTheorem(int dim) {
    if (dim < 2)
        fail("DomainError", "dimension must be at least 2");
    int best = 1;
    for (int i = 1; i < dim; ++i)
        if (i1BoundHolds(dim, i))
            best = i;
    return best;
}

I1Rules parseI1Rules(const std::string& ids) {
    I1Rules rules = 0;
    std::istringstream in(ids);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name == "base")
            rules |= I1Base;
        else if (name == "singular")
            rules |= I1Singular;
        else if (name == "conjectural")
            rules |= I1Conjectural;
        else if (name == "proven")
            rules |= I1Base | I1Singular;
        else
            fail("UnknownRule", "unknown i1 rule '" + name + "' (expected base, singular, conjectural)");
    }
    return rules;
}

std::set<int> i1AdmissibleSet(int r, int s, I1Rules rules) {
    if (r < 1 || s < 0)
        fail("DimMismatch", "need r >= 1 and s >= 0");
    const int dim = 2 * r + s;
    std::set<int> out;
    for (int i = 1; i <= r; ++i) {
        const int izh = dim - i;
        const int u = v2(izh);
        const std::int64_t pu = std::int64_t{1} << u;
        const std::int64_t tail = r - blockIndex(r, u) * pu;
        if ((rules & I1Base) && !i1BoundHolds(dim, i))
            continue;
        // Proven when i >= s: s < 2^u and i <= r - x 2^u <= 2^u - s.
        if ((rules & I1Singular) && i >= s && !(s < pu && i <= tail && tail <= pu - s))
            continue;
        if (rules & I1Conjectural) {
            int n = ceilLog2(dim) - 1;
            int m = dim - (1 << n);
            if (r < m && i > m - r)
                continue;
            if (s < pu + i && !(i <= tail && tail <= pu - s))
                continue;
        }
        out.insert(i);
    }
    return out;
}

AlternatingExpansion alternating2adic(std::int64_t value) {
    if (value < 1)
        fail("DomainError", "alternating expansion needs a positive integer");
    AlternatingExpansion e;
    e.value = value;
    std::int64_t rest = value;
    while (!isPowerOfTwo(rest)) {
        int top = ceilLog2(rest);
        e.n.push_back(top);
        rest = (std::int64_t{1} << top) - rest;
    }
    e.n.push_back(v2(rest));

    const int j = static_cast<int>(e.n.size());
    e.jPrime = (value % 2 == 0) ? j : j - 1;
    // tail[i] = 2^{n_i} - 2^{n_{i+1}} + ... (0-based), tail[j] = 0.
    std::vector<std::int64_t> tail(j + 1, 0);
    for (int i = j - 1; i >= 0; --i)
        tail[i] = (std::int64_t{1} << e.n[i]) - tail[i + 1];
    for (int i = 0; i < e.jPrime; ++i)
        e.m.push_back((std::int64_t{1} << (e.n[i] - 1)) - tail[i + 1]);
    return e;
}

std::vector<ExcellentPair> excellentPairs(int dim, int r) {
    std::vector<ExcellentPair> out;
    const int dX = dim - 2;
    const AlternatingExpansion e = alternating2adic(dim);
    std::int64_t lo = 0;
    for (int k = 1; k <= e.jPrime; ++k) {
        const std::int64_t hi = lo + e.m[k - 1];
        const std::int64_t span = (std::int64_t{1} << (e.n[k - 1] - 1)) - 1;
        for (std::int64_t a = lo; a < std::min<std::int64_t>(hi, r); ++a) {
            const std::int64_t b = a + span;
            const std::int64_t co = dX - b;
            if (co >= lo && co < hi && co >= 0 && co < r)
                out.push_back({static_cast<int>(a), static_cast<int>(b), k});
        }
        lo = hi;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ExcellentPair> excellentPairs(const Profile& p) { return excellentPairs(p.dim, p.r); }

StronglyExcellent stronglyExcellentProfile(const std::vector<int>& nList, int s) {
    if (nList.empty())
        fail("ConstraintViolated", "exponent list is empty");
    if (s < 0)
        fail("ConstraintViolated", "s must be nonnegative");
    if (nList.front() > 30)
        fail("ConstraintViolated", "exponents above 30 are not supported");
    for (std::size_t k = 1; k < nList.size(); ++k)
        if (nList[k] >= nList[k - 1])
            fail("ConstraintViolated", "exponents must strictly decrease");
    const int h = static_cast<int>(nList.size());
    const int last = nList.back();
    if (s > 0 && (std::int64_t{1} << (last - 1 < 0 ? 0 : last - 1)) <= s)
        fail("ConstraintViolated", "last exponent " + std::to_string(last) + " must exceed log2(s) + 1");
    if (s > 0 && last < 1)
        fail("ConstraintViolated", "last exponent must be positive");
    if (s == 0 && last < 1)
        fail("ConstraintViolated", "last exponent must be at least 1 when s = 0");
    if (s == 0 && h >= 2 && nList[h - 2] <= last + 1)
        fail("ConstraintViolated", "with s = 0 the last two exponents need a gap of at least 2");

    StronglyExcellent out;
    // kernelDims[i] = dim phi_i; kernelDims[h] = s.
    out.kernelDims.assign(h + 1, 0);
    out.kernelDims[h] = s;
    for (int i = h - 1; i >= 0; --i)
        out.kernelDims[i] = (1 << nList[i]) - out.kernelDims[i + 1];
    std::vector<int> pattern{0};
    for (int i = 0; i < h; ++i) {
        int mi = out.kernelDims[i] - (1 << (nList[i] - 1));
        if (mi <= 0)
            fail("ConstraintViolated", "splitting step m_" + std::to_string(i + 1) + " is not positive");
        out.m.push_back(mi);
        pattern.push_back(pattern.back() + mi);
    }
    const int dim = out.kernelDims[0];
    if ((dim - s) % 2 != 0 || (dim - s) / 2 != pattern.back())
        fail("ConstraintViolated", "splitting steps do not sum to r");
    try {
        out.profile = mkProfile(dim, (dim - s) / 2, s, pattern);
    } catch (const Error& err) {
        fail("ConstraintViolated", err.what());
    }
    return out;
}

std::vector<std::vector<int>> patternEnumerate(int r, int s, I1Rules rules) {
    if (r < 1 || s < 0)
        fail("DimMismatch", "need r >= 1 and s >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> current{0};
    std::function<void(int)> extend = [&](int used) {
        if (used == r) {
            out.push_back(current);
            return;
        }
        for (int step : i1AdmissibleSet(r - used, s, rules)) {
            current.push_back(used + step);
            extend(used + step);
            current.pop_back();
        }
    };
    extend(0);
    std::sort(out.begin(), out.end());
    return out;
}

PfisterNeighbourInfo pfisterNeighbourInvariants(int dim, int s) {
    if (dim < 2 || s < 0 || (dim - s) < 2 || (dim - s) % 2 != 0)
        fail("DimMismatch", "need dim - s even and at least 2");
    const int r = (dim - s) / 2;
    PfisterNeighbourInfo info;
    info.n = ceilLog2(dim) - 1;
    const int lower = 1 << info.n;
    if (r + s > lower)
        fail("NotNeighbourEligible", "r + s = " + std::to_string(r + s) + " exceeds 2^n = " + std::to_string(lower));
    info.m = dim - lower;
    info.complementaryDim = 2 * lower - dim;
    info.closeNeighbour = (dim == 2 * lower - s);
    return info;
}

} // namespace qmdt
