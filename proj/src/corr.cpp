#include "qmdt/corr.hpp"

#include "qmdt/error.hpp"

namespace qmdt {

namespace {

Basis slice(const Basis& b, std::size_t from, std::size_t to) { return Basis(b.begin() + from, b.begin() + to); }

std::vector<Profile> sliceContext(const std::vector<Profile>& c, std::size_t from, std::size_t to) {
    return std::vector<Profile>(c.begin() + from, c.begin() + to);
}

// deg(x . y) for two tuples over the same factors: 1 iff every factor multiplies to l_0.
bool pairsToPoint(const Basis& x, const Basis& y, const std::vector<Profile>& ctx) {
    for (std::size_t f = 0; f < x.size(); ++f) {
        auto c = mulSymbol(x[f], y[f], ctx[f]);
        if (!c || *c != L(0))
            return false;
    }
    return true;
}

void requireSquare(const Corr& f) {
    if (f.cycle.arity() != 2 || f.split != 1 || f.cycle.context[0] != f.cycle.context[1])
        fail("ContextMismatch", "expected a correspondence on X x X");
}

} // namespace

std::vector<Profile> Corr::left() const { return sliceContext(cycle.context, 0, split); }
std::vector<Profile> Corr::right() const { return sliceContext(cycle.context, split, cycle.arity()); }

Corr makeCorr(Cycle cycle, int split) {
    if (split < 0 || static_cast<std::size_t>(split) > cycle.arity())
        fail("ContextMismatch", "split " + std::to_string(split) + " outside the factor range");
    return Corr{std::move(cycle), split};
}

Corr compose(const Corr& f, const Corr& g) {
    const std::vector<Profile> middle = f.right();
    if (middle != g.left())
        fail("ContextMismatch", "middle factors of the composition do not match");
    std::vector<Profile> ctx = f.left();
    const std::vector<Profile> right = g.right();
    ctx.insert(ctx.end(), right.begin(), right.end());
    Corr out{Cycle(ctx), f.split};
    const std::size_t n = f.cycle.arity();
    const std::size_t gn = g.cycle.arity();
    for (const Basis& fb : f.cycle.support) {
        const Basis beta = slice(fb, f.split, n);
        for (const Basis& gb : g.cycle.support) {
            if (!pairsToPoint(beta, slice(gb, 0, g.split), middle))
                continue;
            Basis z = slice(fb, 0, f.split);
            const Basis gamma = slice(gb, g.split, gn);
            z.insert(z.end(), gamma.begin(), gamma.end());
            out.cycle.toggle(z);
        }
    }
    return out;
}

Corr diagonalClass(const Profile& p) {
    Corr d{Cycle({p, p}), 1};
    for (int i = 0; i < p.r; ++i) {
        d.cycle.toggle({H(i), L(i)});
        d.cycle.toggle({L(i), H(i)});
    }
    if (p.s == 0 && p.dim % 4 == 2)
        d.cycle.toggle({H(p.r - 1), H(p.r - 1)});
    return d;
}

Corr transpose(const Corr& f) {
    const std::size_t n = f.cycle.arity();
    std::vector<Profile> ctx = f.right();
    const std::vector<Profile> left = f.left();
    ctx.insert(ctx.end(), left.begin(), left.end());
    Corr out{Cycle(ctx), static_cast<int>(n) - f.split};
    for (const Basis& b : f.cycle.support) {
        Basis z = slice(b, f.split, n);
        const Basis a = slice(b, 0, f.split);
        z.insert(z.end(), a.begin(), a.end());
        out.cycle.toggle(z);
    }
    return out;
}

Corr derivative(int k1, int k2, const Corr& f) {
    requireSquare(f);
    if (k1 < 0 || k2 < 0)
        fail("DomainError", "derivative orders must be nonnegative");
    if (!f.cycle.isHomogeneous())
        fail("NotHomogeneous", "derivative needs a homogeneous cycle");
    const Profile& p = f.cycle.context[0];
    if (k1 + k2 > 0 && !f.cycle.isZero()) {
        const int j = *f.cycle.dimension() - p.quadricDim();
        if (k1 + k2 > j)
            fail("DegreeUnderflow", "D^{" + std::to_string(k1) + "," + std::to_string(k2) +
                                        "} needs dimension at least d_X + " + std::to_string(k1 + k2));
    }
    if (k1 >= p.r || k2 >= p.r)
        return Corr{Cycle(f.cycle.context), f.split};
    Cycle factor(f.cycle.context, {{H(k1), H(k2)}});
    return Corr{mul(f.cycle, factor), f.split};
}

Corr essential(const Corr& f) {
    Corr out{Cycle(f.cycle.context), f.split};
    for (const Basis& b : f.cycle.support) {
        bool allH = true;
        for (Symbol x : b)
            allH = allH && x.kind == Kind::H;
        if (!allH)
            out.cycle.toggle(b);
    }
    return out;
}

Corr cap(const Corr& f, const Corr& g) {
    requireSameContext(f.cycle, g.cycle);
    Corr out{Cycle(f.cycle.context), f.split};
    for (const Basis& b : f.cycle.support)
        if (g.cycle.support.count(b))
            out.cycle.toggle(b);
    return out;
}

bool contains(const Corr& f, const Corr& g) { return cap(f, g).cycle == g.cycle; }

Cycle diagonalMult(const Cycle& f) {
    const std::size_t n = f.arity();
    if (n == 0 || n % 2 != 0)
        fail("ContextMismatch", "diagonal multiplication needs an even number of factors");
    for (std::size_t k = 1; k < n; ++k)
        if (f.context[k] != f.context[0])
            fail("ContextMismatch", "diagonal multiplication needs copies of one quadric");
    const std::size_t m = n / 2;
    const std::vector<Profile> half(f.context.begin(), f.context.begin() + m);
    Cycle out(half);
    for (const Basis& b : f.support) {
        Cycle x(half, {slice(b, 0, m)});
        Cycle y(half, {slice(b, m, n)});
        out += mul(x, y);
    }
    return out;
}

Cycle reduceF(const Profile& p, int t, const Cycle& f) {
    const Profile k = p.kernel(t);
    for (const Profile& c : f.context)
        if (c != p)
            fail("ContextMismatch", "reduceF input must live on copies of the profile");
    const int w = p.j(t);
    Cycle out(std::vector<Profile>(f.arity(), k));
    for (const Basis& b : f.support) {
        Basis z;
        bool dies = false;
        for (Symbol x : b) {
            if (x.i < w) {
                dies = true;
                break;
            }
            z.push_back({x.kind, x.i - w});
        }
        if (!dies)
            out.toggle(z);
    }
    return out;
}

Cycle reduceG(const Profile& p, int t, const Cycle& f) {
    const Profile k = p.kernel(t);
    for (const Profile& c : f.context)
        if (c != k)
            fail("ContextMismatch", "reduceG input must live on copies of the kernel profile");
    const int w = p.j(t);
    Cycle out(std::vector<Profile>(f.arity(), p));
    for (const Basis& b : f.support) {
        Basis z;
        for (Symbol x : b)
            z.push_back({x.kind, x.i + w});
        out.toggle(z);
    }
    return out;
}

Corr reductionBridge(const Profile& p, int t) {
    const Profile k = p.kernel(t);
    const int w = p.j(t);
    Corr out{Cycle({p, k}), 1};
    for (int i = 0; i < k.r; ++i) {
        out.cycle.toggle({H(i + w), L(i)});
        out.cycle.toggle({L(i + w), H(i)});
    }
    return out;
}

Cycle pushForward(const Corr& alpha, const Cycle& x) {
    if (x.context != alpha.left())
        fail("ContextMismatch", "push-forward source does not match the correspondence");
    const std::size_t n = alpha.cycle.arity();
    Cycle out(alpha.right());
    for (const Basis& a : alpha.cycle.support)
        for (const Basis& xb : x.support)
            if (pairsToPoint(xb, slice(a, 0, alpha.split), x.context))
                out.toggle(slice(a, alpha.split, n));
    return out;
}

Cycle pullBack(const Corr& alpha, const Cycle& y) { return pushForward(transpose(alpha), y); }

} // namespace qmdt
