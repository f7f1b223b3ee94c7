#pragma once

#include "qmdt/chow.hpp"

namespace qmdt {

// A cycle on X x Y where the first `split` factors form X.
struct Corr {
    Cycle cycle;
    int split = 0;

    std::vector<Profile> left() const;
    std::vector<Profile> right() const;
    bool operator==(const Corr&) const = default;
};

Corr makeCorr(Cycle cycle, int split);

// g o f for f: X -> Y and g: Y -> Z, via (b' x c) o (a x b) = deg(b b') a x c.
Corr compose(const Corr& f, const Corr& g);

// Sum of h^i x l_i + l_i x h^i. When s = 0 and dim = 2 (mod 4) the term
// h^{r-1} x h^{r-1} is added so the class stays a two-sided identity.
Corr diagonalClass(const Profile& p);

Corr transpose(const Corr& f);

// Multiplication by h^{k1} x h^{k2} on a homogeneous cycle of X^2 of dimension
// d_X + j with k1 + k2 <= j. Throws DegreeUnderflow or NotHomogeneous.
Corr derivative(int k1, int k2, const Corr& f);

// Drops every tuple made only of h-classes.
Corr essential(const Corr& f);
Corr cap(const Corr& f, const Corr& g);
// g is contained in f when cap(f, g) = g.
bool contains(const Corr& f, const Corr& g);

// Pulls back along the diagonal: X^{2m} -> X^m by multiplying the halves.
Cycle diagonalMult(const Cycle& f);

// Reduction to the t-th kernel of the splitting tower: indices shift by j_t.
Cycle reduceF(const Profile& p, int t, const Cycle& f);
Cycle reduceG(const Profile& p, int t, const Cycle& f);

// The rational class on X x X_t whose push-forward realizes reduceF on one factor.
Corr reductionBridge(const Profile& p, int t);
Cycle pushForward(const Corr& alpha, const Cycle& x);
Cycle pullBack(const Corr& alpha, const Cycle& y);

} // namespace qmdt
