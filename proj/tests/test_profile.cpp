#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qmdt/error.hpp"
#include "qmdt/profile.hpp"

#include <algorithm>
#include <numeric>

using namespace qmdt;

namespace {

std::string errorCode(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("mkProfile validates dimension, pattern and step bounds") {
    CHECK(mkProfile(6, 2, 2, {0, 2}).height() == 1);
    CHECK(mkProfile(7, 2, 3, {0, 1, 2}).height() == 2);
    CHECK(errorCode([] { mkProfile(12, 3, 6, {0, 3}); }) == "StepViolatesI1Bound");
    CHECK(errorCode([] { mkProfile(7, 2, 2, {0, 2}); }) == "DimMismatch");
    CHECK(errorCode([] { mkProfile(6, 2, 2, {0, 1}); }) == "PatternInvalid");
    CHECK(errorCode([] { mkProfile(6, 2, 2, {1, 2}); }) == "PatternInvalid");
    CHECK(errorCode([] { mkProfile(6, 2, 2, {0, 1, 1, 2}); }) == "PatternInvalid");
    CHECK(errorCode([] { mkProfile(0, 0, 0, {0}); }) != "");
}

TEST_CASE("mkProfile accepts exactly the patterns the step bound allows") {
    for (int r = 1; r <= 6; ++r)
        for (int s = 0; s <= 6; ++s) {
            const auto allowed = oracle::stepBoundPatterns(r, s);
            // Every increasing pattern from 0 to r is a subset of {1..r-1} plus the ends.
            for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
                std::vector<int> pat{0};
                for (int k = 1; k < r; ++k)
                    if (mask >> (k - 1) & 1u)
                        pat.push_back(k);
                pat.push_back(r);
                const bool expected = std::find(allowed.begin(), allowed.end(), pat) != allowed.end();
                const bool ok = errorCode([&] { mkProfile(2 * r + s, r, s, pat); }).empty();
                CHECK_MESSAGE(ok == expected, "r=" << r << " s=" << s);
            }
        }
}

TEST_CASE("kernel profiles drop the first t steps") {
    const Profile p = mkProfile(10, 5, 0, {0, 1, 3, 5});
    const Profile k = p.kernel(1);
    CHECK(k.dim == 8);
    CHECK(k.r == 4);
    CHECK(k.pattern == std::vector<int>{0, 2, 4});
    CHECK(p.shellOf(0) == 1);
    CHECK(p.shellOf(2) == 2);
    CHECK(p.shellOf(4) == 3);
}

TEST_CASE("Izhboldin dimension") {
    CHECK(izhboldinDim(mkProfile(6, 2, 2, {0, 2})) == 4);
    CHECK(izhboldinDim(mkProfile(12, 3, 6, {0, 1, 3})) == 11);
    CHECK(izhboldinDim(mkProfile(16, 8, 0, {0, 8})) == 8);
}

TEST_CASE("i1MaxByTheorem matches a direct scan") {
    CHECK(i1MaxByTheorem(12) == 4);
    CHECK(i1MaxByTheorem(9) == 1);
    for (int n = 1; n <= 8; ++n)
        CHECK(i1MaxByTheorem(1 << (n + 1)) == (1 << n));
    for (int dim = 3; dim <= 300; ++dim) {
        int best = 0;
        for (int i = 1; i <= dim - 2; ++i) {
            int rest = dim - i, v = 1;
            while (rest % 2 == 0) {
                rest /= 2;
                v *= 2;
            }
            if (i <= v)
                best = i;
        }
        CHECK_MESSAGE(i1MaxByTheorem(dim) == best, "dim=" << dim);
    }
}

TEST_CASE("i1AdmissibleSet examples") {
    CHECK(i1AdmissibleSet(3, 2, I1Base | I1Singular) == std::set<int>{1});
    CHECK(i1AdmissibleSet(4, 0, I1Base) == std::set<int>{1, 2, 4});
    CHECK(i1AdmissibleSet(3, 6, I1Base | I1Singular | I1Conjectural) == std::set<int>{1});
    CHECK(parseI1Rules("base,singular") == (I1Base | I1Singular));
    CHECK(parseI1Rules("proven") == (I1Base | I1Singular));
    CHECK(errorCode([] { parseI1Rules("base,bogus"); }) == "UnknownRule");
}

TEST_CASE("i1AdmissibleSet with s = 0 and base rule is the theorem bound on [1, r]") {
    for (int r = 1; r <= 40; ++r) {
        std::set<int> expected;
        for (int i = 1; i <= r; ++i) {
            int rest = 2 * r - i, v = 1;
            while (rest % 2 == 0) {
                rest /= 2;
                v *= 2;
            }
            if (i <= v)
                expected.insert(i);
        }
        CHECK(i1AdmissibleSet(r, 0, I1Base) == expected);
    }
}

TEST_CASE("alternating2adic examples") {
    const AlternatingExpansion twelve = alternating2adic(12);
    CHECK(twelve.n == std::vector<int>{4, 2});
    CHECK(twelve.m == std::vector<std::int64_t>{4, 2});
    const AlternatingExpansion ten = alternating2adic(10);
    CHECK(ten.n == std::vector<int>{4, 3, 1});
    CHECK(ten.m == std::vector<std::int64_t>{2, 2, 1});
    for (int k = 1; k <= 20; ++k) {
        const AlternatingExpansion e = alternating2adic(std::int64_t{1} << k);
        CHECK(e.n == std::vector<int>{k});
        CHECK(e.m == std::vector<std::int64_t>{std::int64_t{1} << (k - 1)});
    }
    CHECK(alternating2adic(7).jPrime == 1);
    CHECK(errorCode([] { alternating2adic(0); }) == "DomainError");
}

TEST_CASE("alternating2adic is the unique gapped expansion up to 4096") {
    for (int value = 1; value <= 4096; ++value) {
        const auto all = oracle::alternatingExpansions(value, 13);
        REQUIRE_MESSAGE(all.size() == 1, "value=" << value);
        const AlternatingExpansion e = alternating2adic(value);
        CHECK_MESSAGE(e.n == all.front(), "value=" << value);
        std::int64_t sum = 0, mSum = 0;
        for (std::size_t i = 0; i < e.n.size(); ++i)
            sum += (i % 2 == 0 ? 1 : -1) * (std::int64_t{1} << e.n[i]);
        for (std::int64_t m : e.m) {
            CHECK(m > 0);
            mSum += m;
        }
        CHECK(sum == value);
        if (value % 2 == 0)
            CHECK(2 * mSum == value);
    }
}

TEST_CASE("excellentPairs examples") {
    const auto ten = excellentPairs(mkProfile(10, 3, 4, {0, 1, 3}));
    REQUIRE(ten.size() == 2);
    CHECK((ten[0].a == 0 && ten[0].b == 7));
    CHECK((ten[1].a == 1 && ten[1].b == 8));
    // dim 7, r = 2: only (1,4); (0,3) has d_X - b = 2, outside the window.
    const auto seven = excellentPairs(7, 2);
    REQUIRE(seven.size() == 1);
    CHECK((seven[0].a == 1 && seven[0].b == 4));
    const auto five = excellentPairs(5, 1);
    REQUIRE(five.size() == 1);
    CHECK((five[0].a == 0 && five[0].b == 3));
    for (int k = 1; k <= 5; ++k) {
        const auto pf = excellentPairs(1 << (k + 1), 1 << k);
        REQUIRE(pf.size() == static_cast<std::size_t>(1 << k));
        for (int i = 0; i < (1 << k); ++i)
            CHECK((pf[i].a == i && pf[i].b == (1 << k) - 1 + i));
    }
}

TEST_CASE("excellent pairs lie in the index window with power-of-two span") {
    for (int dim = 2; dim <= 200; ++dim)
        for (int r = 1; 2 * r <= dim; ++r)
            for (const ExcellentPair& e : excellentPairs(dim, r)) {
                CHECK(isPowerOfTwo(e.b - e.a + 1));
                CHECK((0 <= e.a && e.a < r));
                CHECK((dim - 2 - r < e.b && e.b <= dim - 2));
            }
}

TEST_CASE("stronglyExcellentProfile") {
    const StronglyExcellent se = stronglyExcellentProfile({4, 2}, 1);
    CHECK(se.profile.dim == 13);
    CHECK(se.profile.pattern == std::vector<int>{0, 5, 6});
    CHECK(se.m == std::vector<int>{5, 1});
    CHECK(se.kernelDims == std::vector<int>{13, 3, 1});

    for (int k = 1; k <= 6; ++k) {
        const StronglyExcellent pf = stronglyExcellentProfile({k + 1}, 0);
        CHECK(pf.profile.dim == (1 << (k + 1)));
        CHECK(pf.profile.pattern == std::vector<int>{0, 1 << k});
    }
    const StronglyExcellent six = stronglyExcellentProfile({3, 1}, 0);
    CHECK(six.profile.dim == 6);
    CHECK(six.profile.pattern == std::vector<int>{0, 2, 3});

    CHECK(errorCode([] { stronglyExcellentProfile({3, 2}, 0); }) == "ConstraintViolated");
    CHECK(errorCode([] { stronglyExcellentProfile({2, 3}, 0); }) == "ConstraintViolated");
    CHECK(errorCode([] { stronglyExcellentProfile({4, 2}, 2); }) == "ConstraintViolated");
    CHECK(errorCode([] { stronglyExcellentProfile({}, 0); }) == "ConstraintViolated");
}

TEST_CASE("strongly excellent kernel dimensions decrease to s") {
    for (int n1 = 2; n1 <= 8; ++n1)
        for (int n2 = 1; n2 < n1; ++n2)
            for (int s : {0, 1, 3}) {
                try {
                    const StronglyExcellent se = stronglyExcellentProfile({n1, n2}, s);
                    CHECK(se.kernelDims.back() == s);
                    for (std::size_t i = 1; i < se.kernelDims.size(); ++i)
                        CHECK(se.kernelDims[i] < se.kernelDims[i - 1]);
                } catch (const Error& e) {
                    CHECK(e.code() == "ConstraintViolated");
                }
            }
}

TEST_CASE("patternEnumerate") {
    using P = std::vector<std::vector<int>>;
    CHECK(patternEnumerate(2, 2, I1Base) == P{{0, 1, 2}, {0, 2}});
    CHECK(patternEnumerate(1, 7, I1Base) == P{{0, 1}});
    CHECK(patternEnumerate(3, 2, I1Base | I1Singular) == P{{0, 1, 2, 3}, {0, 1, 3}});
}

TEST_CASE("patternEnumerate with base rule equals the step-bound oracle") {
    for (int r = 1; r <= 8; ++r)
        for (int s = 0; s <= 8; ++s) {
            auto expected = oracle::stepBoundPatterns(r, s);
            std::sort(expected.begin(), expected.end());
            const auto got = patternEnumerate(r, s, I1Base);
            CHECK(got == expected);
            std::vector<int> oneStep(r + 1);
            std::iota(oneStep.begin(), oneStep.end(), 0);
            CHECK(std::find(got.begin(), got.end(), oneStep) != got.end());
            if (i1AdmissibleSet(r, s, I1Base).count(r))
                CHECK(std::find(got.begin(), got.end(), std::vector<int>{0, r}) != got.end());
        }
}

TEST_CASE("pfisterNeighbourInvariants") {
    const PfisterNeighbourInfo six = pfisterNeighbourInvariants(6, 2);
    CHECK(six.n == 2);
    CHECK(six.m == 2);
    CHECK(six.complementaryDim == 2);
    CHECK(six.closeNeighbour);
    CHECK(errorCode([] { pfisterNeighbourInvariants(12, 6); }) == "NotNeighbourEligible");
    for (int n = 1; n <= 8; ++n) {
        const PfisterNeighbourInfo pf = pfisterNeighbourInvariants(1 << (n + 1), 0);
        CHECK(pf.m == (1 << n));
        CHECK(pf.complementaryDim == 0);
    }
}
