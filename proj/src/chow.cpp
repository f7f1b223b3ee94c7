#include "qmdt/chow.hpp"

#include "qmdt/error.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace qmdt {

int symbolDim(Symbol x, const Profile& p) { return x.kind == Kind::H ? p.quadricDim() - x.i : x.i; }

Cycle::Cycle(std::vector<Profile> ctx, std::initializer_list<Basis> terms) : context(std::move(ctx)) {
    for (const Basis& b : terms)
        toggle(b);
}

void Cycle::toggle(const Basis& b) {
    requireValidBasis(context, b);
    auto [it, inserted] = support.insert(b);
    if (!inserted)
        support.erase(it);
}

std::optional<int> Cycle::dimension() const {
    std::optional<int> dim;
    for (const Basis& b : support) {
        int d = 0;
        for (std::size_t f = 0; f < b.size(); ++f)
            d += symbolDim(b[f], context[f]);
        if (dim && *dim != d)
            return std::nullopt;
        dim = d;
    }
    return dim;
}

Cycle& Cycle::operator+=(const Cycle& other) {
    requireSameContext(*this, other);
    for (const Basis& b : other.support)
        toggle(b);
    return *this;
}

Cycle operator+(Cycle a, const Cycle& b) {
    a += b;
    return a;
}

void requireSameContext(const Cycle& a, const Cycle& b) {
    if (a.context != b.context)
        fail("ContextMismatch", "cycles live on different products of quadrics");
}

void requireValidBasis(const std::vector<Profile>& context, const Basis& b) {
    if (b.size() != context.size())
        fail("ContextMismatch", "basis tuple has " + std::to_string(b.size()) + " factors, context has " +
                                    std::to_string(context.size()));
    for (std::size_t f = 0; f < b.size(); ++f)
        if (b[f].i < 0 || b[f].i >= context[f].r)
            fail("OutOfWindow", "index " + std::to_string(b[f].i) + " outside [0," +
                                    std::to_string(context[f].r) + ") in factor " + std::to_string(f));
}

bool binomMod2(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n)
        return false;
    return (k & ~n) == 0;
}

std::optional<Symbol> mulSymbol(Symbol a, Symbol b, const Profile& p) {
    if (a.kind == Kind::L && b.kind == Kind::H)
        std::swap(a, b);
    if (a.kind == Kind::H && b.kind == Kind::H) {
        if (a.i + b.i < p.r)
            return H(a.i + b.i);
        return std::nullopt;
    }
    if (a.kind == Kind::H) {
        if (a.i <= b.i)
            return L(b.i - a.i);
        return std::nullopt;
    }
    // Two linear subspaces of half dimension meet in a point only in this case.
    const int half = (p.dim - 2) / 2;
    if (p.s == 0 && p.dim % 4 == 2 && a.i == half && b.i == half)
        return L(0);
    return std::nullopt;
}

Cycle mulFactor(Symbol a, Symbol b, const Profile& p) {
    Cycle out({p});
    if (auto c = mulSymbol(a, b, p))
        out.toggle({*c});
    return out;
}

Cycle mul(const Cycle& a, const Cycle& b) {
    requireSameContext(a, b);
    Cycle out(a.context);
    for (const Basis& x : a.support)
        for (const Basis& y : b.support) {
            Basis z(x.size());
            bool zero = false;
            for (std::size_t f = 0; f < x.size() && !zero; ++f) {
                auto c = mulSymbol(x[f], y[f], a.context[f]);
                if (c)
                    z[f] = *c;
                else
                    zero = true;
            }
            if (!zero)
                out.toggle(z);
        }
    return out;
}

int degree(const Cycle& c) {
    Basis point(c.arity(), L(0));
    return c.support.count(point) ? 1 : 0;
}

Cycle identityCycle(const std::vector<Profile>& context) {
    Cycle out(context);
    out.toggle(Basis(context.size(), H(0)));
    return out;
}

namespace {

std::optional<Symbol> steenrodSymbol(int j, Symbol x, const Profile& p) {
    if (x.kind == Kind::H) {
        if (x.i + j < p.r && binomMod2(x.i, j))
            return H(x.i + j);
        return std::nullopt;
    }
    if (j <= x.i && binomMod2(p.dim - x.i - 1, j))
        return L(x.i - j);
    return std::nullopt;
}

} // namespace

Cycle steenrod(int j, const Cycle& c) {
    if (j < 0)
        fail("DomainError", "Steenrod degree must be nonnegative");
    Cycle out(c.context);
    for (const Basis& b : c.support) {
        Basis current(b.size());
        // Cartan sum over all splittings j = j_1 + ... + j_m.
        std::function<void(std::size_t, int)> spread = [&](std::size_t f, int left) {
            if (f == b.size()) {
                if (left == 0)
                    out.toggle(current);
                return;
            }
            for (int jf = 0; jf <= left; ++jf) {
                auto y = steenrodSymbol(jf, b[f], c.context[f]);
                if (!y)
                    continue;
                current[f] = *y;
                spread(f + 1, left - jf);
            }
        };
        spread(0, j);
    }
    return out;
}

Cycle externalProduct(const Cycle& a, const Cycle& b) {
    std::vector<Profile> ctx = a.context;
    ctx.insert(ctx.end(), b.context.begin(), b.context.end());
    Cycle out(ctx);
    for (const Basis& x : a.support)
        for (const Basis& y : b.support) {
            Basis z = x;
            z.insert(z.end(), y.begin(), y.end());
            out.toggle(z);
        }
    return out;
}

std::string formatCycle(const Cycle& c) {
    if (c.isZero())
        return "0";
    std::ostringstream out;
    bool firstTerm = true;
    for (const Basis& b : c.support) {
        if (!firstTerm)
            out << " + ";
        firstTerm = false;
        for (std::size_t f = 0; f < b.size(); ++f)
            out << (f ? "*" : "") << (b[f].kind == Kind::H ? 'h' : 'l') << b[f].i;
    }
    return out.str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep))
        parts.push_back(strip(part));
    if (!s.empty() && s.back() == sep)
        parts.push_back("");
    return parts;
}

Basis parseTerm(const std::string& term) {
    Basis b;
    for (const std::string& factor : splitOn(term, '*')) {
        if (factor.size() < 2 || (factor[0] != 'h' && factor[0] != 'l'))
            fail("ParseError", "bad factor '" + factor + "' (expected h<i> or l<i>)");
        for (std::size_t k = 1; k < factor.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(factor[k])))
                fail("ParseError", "bad factor '" + factor + "'");
        b.push_back({factor[0] == 'h' ? Kind::H : Kind::L, std::stoi(factor.substr(1))});
    }
    return b;
}

} // namespace

std::size_t textArity(const std::string& text) {
    std::string t = strip(text);
    if (t == "0" || t.empty())
        return 0;
    return parseTerm(splitOn(t, '+').front()).size();
}

Cycle parseCycle(const std::string& text, const std::vector<Profile>& context) {
    Cycle out(context);
    std::string t = strip(text);
    if (t == "0")
        return out;
    if (t.empty())
        fail("ParseError", "empty cycle text");
    for (const std::string& term : splitOn(t, '+')) {
        if (term.empty())
            fail("ParseError", "empty term in '" + text + "'");
        if (term == "0")
            continue;
        out.toggle(parseTerm(term));
    }
    return out;
}

} // namespace qmdt
