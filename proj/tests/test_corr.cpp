#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"
#include "qmdt/corr.hpp"
#include "qmdt/error.hpp"

using namespace qmdt;

namespace {

const Profile kR2 = mkProfile(6, 2, 2, {0, 2});
const Profile kR3 = mkProfile(8, 3, 2, {0, 1, 3});
const Profile kR5 = mkProfile(12, 5, 2, {0, 2, 3, 4, 5});

Corr sq(const Profile& p, std::initializer_list<Basis> terms) { return Corr{Cycle({p, p}, terms), 1}; }

void requireClean(const props::Tally& t) {
    for (const std::string& note : t.notes)
        MESSAGE(note);
    CHECK(t.failures == 0);
}

} // namespace

TEST_CASE("composition law") {
    // Middle product l1 . h1 = l0 has degree 1.
    CHECK(compose(sq(kR2, {{H(0), L(1)}}), sq(kR2, {{H(1), L(1)}})) == sq(kR2, {{H(0), L(1)}}));
    CHECK(compose(sq(kR2, {{H(0), L(1)}}), sq(kR2, {{H(0), H(0)}})).cycle.isZero());
    const Corr x = sq(kR2, {{H(1), L(0)}, {L(1), H(1)}});
    CHECK(compose(x, diagonalClass(kR2)) == x);
    CHECK(compose(diagonalClass(kR2), x) == x);
    CHECK_THROWS_AS(compose(sq(kR2, {{H(0), H(0)}}), sq(kR3, {{H(0), H(0)}})), Error);
}

TEST_CASE("composition across different quadrics") {
    const Profile y = mkProfile(5, 1, 3, {0, 1});
    const Corr f{Cycle({kR2, y}, {{H(1), L(0)}}), 1};
    const Corr g{Cycle({y, kR3}, {{H(0), L(2)}}), 1};
    CHECK(compose(f, g) == Corr{Cycle({kR2, kR3}, {{H(1), L(2)}}), 1});
    CHECK_THROWS_AS(compose(g, f), Error);
}

TEST_CASE("diagonal class") {
    const Profile r1 = mkProfile(3, 1, 1, {0, 1});
    CHECK(diagonalClass(r1) == sq(r1, {{H(0), L(0)}, {L(0), H(0)}}));
    CHECK(diagonalClass(kR2).cycle.support.size() == 4);
    // With s = 0 and dim = 2 (mod 4) the exceptional square l_{r-1}^2 = l_0 needs h^{r-1} x h^{r-1}.
    const Profile dim6 = mkProfile(6, 3, 0, {0, 2, 3});
    CHECK(diagonalClass(dim6).cycle.support.count({H(2), H(2)}) == 1);
    CHECK(transpose(diagonalClass(kR3)) == diagonalClass(kR3));
}

TEST_CASE("diagonal is a two-sided identity and composition is associative for r <= 4") {
    props::Tally t;
    for (const Profile& p : props::smallProfiles())
        props::compositionAxioms(p, t);
    requireClean(t);
}

TEST_CASE("transpose") {
    CHECK(transpose(sq(kR3, {{H(1), L(2)}})) == sq(kR3, {{L(2), H(1)}}));
    const auto basis = props::tuples({kR3, kR3});
    for (const Basis& a : basis) {
        const Corr f = sq(kR3, {a});
        CHECK(transpose(transpose(f)) == f);
        for (const Basis& b : basis) {
            const Corr g = sq(kR3, {b});
            CHECK(transpose(compose(f, g)) == compose(transpose(g), transpose(f)));
        }
    }
}

TEST_CASE("derivative operators") {
    CHECK(derivative(1, 0, sq(kR2, {{H(0), L(1)}})) == sq(kR2, {{H(1), L(1)}}));
    const Corr f = sq(kR3, {{H(0), L(2)}});
    CHECK(derivative(0, 0, f) == f);
    CHECK(derivative(1, 1, f) == derivative(1, 0, derivative(0, 1, f)));
    CHECK(derivative(1, 0, derivative(0, 1, f)) == derivative(0, 1, derivative(1, 0, f)));
    CHECK_THROWS_WITH_AS(derivative(2, 1, f), doctest::Contains("needs dimension"), Error);
    CHECK_THROWS_AS(derivative(0, 0, sq(kR3, {{H(0), L(2)}, {H(0), L(1)}})), Error);
    props::Tally t;
    for (const Profile& p : props::smallProfiles())
        props::derivativeAxioms(p, t);
    requireClean(t);
}

TEST_CASE("essential part, intersection and containment") {
    const Corr mixed = sq(kR3, {{H(1), H(2)}, {H(0), L(1)}});
    CHECK(essential(mixed) == sq(kR3, {{H(0), L(1)}}));
    CHECK(essential(essential(mixed)) == essential(mixed));
    CHECK(cap(mixed, mixed) == mixed);
    CHECK(cap(mixed, sq(kR3, {})).cycle.isZero());
    CHECK(contains(mixed, sq(kR3, {{H(1), H(2)}})));
    CHECK_FALSE(contains(mixed, sq(kR3, {{H(1), L(2)}})));
}

TEST_CASE("diagonal multiplication") {
    CHECK(diagonalMult(Cycle({kR3, kR3}, {{H(1), L(1)}})) == Cycle({kR3}, {{L(0)}}));
    CHECK(diagonalMult(Cycle({kR3, kR3}, {{H(0), H(0)}})) == Cycle({kR3}, {{H(0)}}));
    CHECK(diagonalMult(Cycle({kR3, kR3, kR3, kR3}, {{H(0), H(1), L(0), L(2)}})) ==
          Cycle({kR3, kR3}, {{L(0), L(1)}}));
    CHECK_THROWS_AS(diagonalMult(Cycle({kR3})), Error);
}

TEST_CASE("isotropic reduction along the tower") {
    const std::vector<Profile> two{kR5, kR5};
    const Profile k = kR5.kernel(1);
    CHECK(reduceF(kR5, 1, Cycle(two, {{L(3), H(2)}})) == Cycle({k, k}, {{L(1), H(0)}}));
    CHECK(reduceF(kR5, 1, Cycle(two, {{H(1), L(0)}})).isZero());
    CHECK(reduceG(kR5, 1, Cycle({k, k}, {{L(1), H(0)}})) == Cycle(two, {{L(3), H(2)}}));
    CHECK_THROWS_AS(reduceF(kR5, 4, Cycle(two)), Error);
    CHECK_THROWS_AS(reduceG(kR5, 1, Cycle(two)), Error);
    props::Tally t;
    for (const Profile& p : props::smallProfiles())
        props::reductionAxioms(p, t);
    requireClean(t);
}

TEST_CASE("reduceF is onto the kernel span") {
    for (const Profile& p : props::smallProfiles())
        for (int level = 0; level < p.height(); ++level) {
            const Profile k = p.kernel(level);
            std::set<Basis> hit;
            for (const Basis& b : props::tuples({p, p}))
                for (const Basis& z : reduceF(p, level, Cycle({p, p}, {b})).support)
                    hit.insert(z);
            CHECK(hit.size() == props::tuples({k, k}).size());
        }
}

TEST_CASE("reduction bridge pushes forward like reduceF") {
    for (const Profile& p : props::smallProfiles()) {
        const bool exceptional = p.s == 0 && p.dim % 4 == 2;
        for (int level = 0; level < p.height(); ++level) {
            const Corr bridge = reductionBridge(p, level);
            for (Symbol x : props::factorBasis(p)) {
                const Cycle c({p}, {{x}});
                if (exceptional && x == L(p.r - 1))
                    continue;
                CHECK(pushForward(bridge, c) == reduceF(p, level, c));
            }
            const Profile k = p.kernel(level);
            for (Symbol y : props::factorBasis(k)) {
                const Cycle c({k}, {{y}});
                if (k.s == 0 && k.dim % 4 == 2 && y == L(k.r - 1))
                    continue;
                CHECK(pullBack(bridge, c) == reduceG(p, level, c));
            }
        }
    }
}
