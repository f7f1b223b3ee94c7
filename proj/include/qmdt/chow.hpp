#pragma once

#include "qmdt/profile.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qmdt {

enum class Kind : std::uint8_t { H, L };

// h^i (codimension i) or l_i (dimension i) in one quadric factor.
struct Symbol {
    Kind kind = Kind::H;
    int i = 0;
    auto operator<=>(const Symbol&) const = default;
};

inline Symbol H(int i) { return {Kind::H, i}; }
inline Symbol L(int i) { return {Kind::L, i}; }

// Dimension of the class in a quadric of dimension d_X.
int symbolDim(Symbol x, const Profile& p);

// One symbol per factor of the product.
using Basis = std::vector<Symbol>;

// F2-linear combination of basis tuples over a fixed product of quadrics.
struct Cycle {
    std::vector<Profile> context;
    std::set<Basis> support;

    Cycle() = default;
    explicit Cycle(std::vector<Profile> ctx) : context(std::move(ctx)) {}
    Cycle(std::vector<Profile> ctx, std::initializer_list<Basis> terms);

    std::size_t arity() const { return context.size(); }
    bool isZero() const { return support.empty(); }
    // Adds one basis tuple over F2 (a repeated tuple cancels).
    void toggle(const Basis& b);
    // Total dimension when every term agrees; nullopt for zero or mixed cycles.
    std::optional<int> dimension() const;
    bool isHomogeneous() const { return isZero() || dimension().has_value(); }

    Cycle& operator+=(const Cycle& other);
    bool operator==(const Cycle& other) const = default;
};

Cycle operator+(Cycle a, const Cycle& b);

void requireSameContext(const Cycle& a, const Cycle& b);
void requireValidBasis(const std::vector<Profile>& context, const Basis& b);

// n choose k mod 2 via Lucas' theorem.
bool binomMod2(std::int64_t n, std::int64_t k);

// Product of two symbols in one factor; nullopt means zero.
std::optional<Symbol> mulSymbol(Symbol a, Symbol b, const Profile& p);
Cycle mulFactor(Symbol a, Symbol b, const Profile& p);
Cycle mul(const Cycle& a, const Cycle& b);

// Coefficient of the all-l_0 tuple.
int degree(const Cycle& c);

Cycle identityCycle(const std::vector<Profile>& context);
Cycle steenrod(int j, const Cycle& c);
Cycle externalProduct(const Cycle& a, const Cycle& b);

// Text notation: "h0*l2 + h1*l1", "0" for the zero cycle.
std::string formatCycle(const Cycle& c);
Cycle parseCycle(const std::string& text, const std::vector<Profile>& context);
// Arity of the first term of a cycle text, or 0 for "0".
std::size_t textArity(const std::string& text);

} // namespace qmdt
