#pragma once
// The four ambient spaces whose rational divisor class groups we compute in.

#include <stdexcept>
#include <string>

namespace hypdiv {

enum class SpaceKind {
    HyperellipticBase,     // moduli of stable hyperelliptic curves, no marked points
    HyperellipticPointed,  // same with n marked points
    StablePointed,         // moduli of stable n-pointed genus-g curves
    RationalQuotient,      // (2g+2)-pointed rational curves modulo the full symmetric group
};

struct Space {
    SpaceKind kind = SpaceKind::HyperellipticBase;
    int g = 0;  // genus
    int n = 0;  // marked points (for RationalQuotient: the number of orbifold points 2g+2)

    static Space hyperelliptic(int g) {
        require_genus(g);
        return {SpaceKind::HyperellipticBase, g, 0};
    }
    static Space hyperelliptic_pointed(int g, int n) {
        require_genus(g);
        require_points(n);
        return {SpaceKind::HyperellipticPointed, g, n};
    }
    static Space stable_pointed(int g, int n) {
        require_genus(g);
        require_points(n);
        return {SpaceKind::StablePointed, g, n};
    }
    static Space rational_quotient(int g) {
        require_genus(g);
        return {SpaceKind::RationalQuotient, g, 2 * g + 2};
    }

    bool has_marked_points() const {
        return kind == SpaceKind::HyperellipticPointed || kind == SpaceKind::StablePointed;
    }

    friend bool operator==(const Space& a, const Space& b) {
        return a.kind == b.kind && a.g == b.g && a.n == b.n;
    }
    friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }
    friend bool operator<(const Space& a, const Space& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.g != b.g) return a.g < b.g;
        return a.n < b.n;
    }

    std::string describe() const;

  private:
    static void require_genus(int g) {
        if (g < 2) throw std::invalid_argument("genus must be at least 2");
    }
    static void require_points(int n) {
        if (n < 0) throw std::invalid_argument("negative number of marked points");
    }
};

}  // namespace hypdiv
