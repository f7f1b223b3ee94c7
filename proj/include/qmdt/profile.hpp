#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace qmdt {

// Discrete fingerprint of an anisotropic nondefective form of type (r,s):
// dim = 2r + s and the nondefective splitting pattern 0 = j_0 < ... < j_h = r.
struct Profile {
    int dim = 0;
    int r = 0;
    int s = 0;
    std::vector<int> pattern;

    int height() const { return static_cast<int>(pattern.size()) - 1; }
    int quadricDim() const { return dim - 2; }
    int j(int t) const { return pattern.at(t); }
    // Higher Witt index i_t = j_t - j_{t-1}, 1 <= t <= h.
    int i(int t) const { return pattern.at(t) - pattern.at(t - 1); }
    // Shell t (1-based) containing the lower index a, i.e. j_{t-1} <= a < j_t.
    int shellOf(int a) const;
    // Anisotropic kernel after t steps of the splitting tower: type (r - j_t, s).
    Profile kernel(int t) const;

    bool operator==(const Profile&) const = default;
};

// Validates and builds a profile. Throws DimMismatch, PatternInvalid or
// StepViolatesI1Bound.
Profile mkProfile(int dim, int r, int s, std::vector<int> pattern);

// 2-adic valuation of a positive integer.
int v2(std::int64_t n);
bool isPowerOfTwo(std::int64_t n);
// Smallest v with x <= 2^v.
int ceilLog2(std::int64_t x);

// The first higher isotropy index bound: i <= 2^{v2(dim - i)}.
bool i1BoundHolds(int dim, int i);

int izhboldinDim(const Profile& p);
int i1MaxByTheorem(int dim);

// Filters for admissible first higher isotropy indices.
enum I1Rule : unsigned {
    I1Base = 1u << 0,
    I1Singular = 1u << 1,
    I1Conjectural = 1u << 2,
};
using I1Rules = unsigned;

// Parses "base,singular,conjectural" (any subset); "proven" means base,singular.
// Unknown names throw UnknownRule.
I1Rules parseI1Rules(const std::string& ids);

std::set<int> i1AdmissibleSet(int r, int s, I1Rules rules);

// dim = 2^{n_1} - 2^{n_2} + ... with n_1 > ... > n_{j-1} > n_j + 1.
struct AlternatingExpansion {
    std::int64_t value = 0;
    std::vector<int> n;
    // m_i for 1 <= i <= jPrime; for odd values the last m would be a half-integer.
    std::vector<std::int64_t> m;
    int jPrime = 0;
};

AlternatingExpansion alternating2adic(std::int64_t value);

struct ExcellentPair {
    int a = 0;
    int b = 0;
    int k = 0;
    bool operator==(const ExcellentPair&) const = default;
    auto operator<=>(const ExcellentPair&) const = default;
};

// Depends only on dim and r; taking them directly lets callers skip pattern validation.
std::vector<ExcellentPair> excellentPairs(int dim, int r);
std::vector<ExcellentPair> excellentPairs(const Profile& p);

struct StronglyExcellent {
    Profile profile;
    // dim phi_0, ..., dim phi_{h-1}, followed by s = dim of the final quasilinear kernel.
    std::vector<int> kernelDims;
    std::vector<int> m;
};

// Throws ConstraintViolated when the exponent list breaks the gap conditions.
StronglyExcellent stronglyExcellentProfile(const std::vector<int>& nList, int s);

std::vector<std::vector<int>> patternEnumerate(int r, int s, I1Rules rules);

struct PfisterNeighbourInfo {
    int n = 0;
    int m = 0;
    int complementaryDim = 0;
    bool closeNeighbour = false;
};

// Throws NotNeighbourEligible when r + s > 2^n.
PfisterNeighbourInfo pfisterNeighbourInvariants(int dim, int s);

} // namespace qmdt
