#include "hypdiv/pullback.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypdiv {

namespace {

// Subsets of an arbitrary sorted ground set, by bitmask value.
void for_each_subset_of(const Subset& ground, const std::function<void(const Subset&)>& fn) {
    const int m = static_cast<int>(ground.size());
    if (m > 30) throw std::invalid_argument("subset enumeration bound exceeded");
    const unsigned long total = 1ul << m;
    Subset s;
    s.reserve(ground.size());
    for (unsigned long mask = 0; mask < total; ++mask) {
        s.clear();
        for (int k = 0; k < m; ++k) {
            if (mask & (1ul << k)) s.push_back(ground[static_cast<size_t>(k)]);
        }
        fn(s);
    }
}

Subset sorted_union(const Subset& a, const Subset& b) {
    Subset out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

PencilDivisor pencil_divisor(int g) {
    const Space space = Space::stable_pointed(g, g);
    DivisorClass base(space);
    base.add(LabelKind::Lambda, 0, Rational(-1));
    for (int k = 1; k <= g; ++k) base.add(LabelKind::Psi, k, Rational(1));
    for (int i = 1; i <= g; ++i) {
        for (int j = i + 1; j <= g; ++j) {
            base.add(LabelKind::Delta, 0, Subset{i, j}, Rational(-3));
        }
    }
    if (g > 2) {
        Subset full(static_cast<size_t>(g));
        for (int k = 1; k <= g; ++k) full[static_cast<size_t>(k - 1)] = k;
        base.add(LabelKind::Delta, 0, full, -frac(g * (g + 1), 2));
    }
    return PencilDivisor{std::move(base), true};
}

DivisorClass forgetful_pullback(const DivisorClass& x, const Subset& retained, int n) {
    if (x.space().kind != SpaceKind::StablePointed)
        throw std::invalid_argument("forgetful_pullback expects a class on the stable pointed space");
    const int m = x.space().n;
    if (static_cast<int>(retained.size()) != m)
        throw std::invalid_argument("retained set size does not match the point count of the class");
    int prev = 0;
    for (int k : retained) {
        if (k <= prev || k < 1 || k > n)
            throw std::invalid_argument("retained set must be a sorted subset of {1,...,n}");
        prev = k;
    }
    const Subset forgotten = complement(retained, n);
    auto relabel = [&](const Subset& u) {
        Subset out;
        out.reserve(u.size());
        for (int k : u) out.push_back(retained[static_cast<size_t>(k - 1)]);
        return out;
    };

    DivisorClass out(Space::stable_pointed(x.space().g, n));
    for (const auto& [label, c] : x.coefficients()) {
        const Rational& coeff = c;
        switch (label.kind) {
            case LabelKind::Lambda:
            case LabelKind::DeltaIrr:
                out.add(label.kind, 0, coeff);
                break;
            case LabelKind::Psi: {
                const int point = retained[static_cast<size_t>(label.index - 1)];
                out.add(LabelKind::Psi, point, coeff);
                for_each_subset_of(forgotten, [&](const Subset& t) {
                    if (t.empty()) return;
                    out.add(LabelKind::Delta, 0, sorted_union(Subset{point}, t), -coeff);
                });
                break;
            }
            case LabelKind::Delta: {
                const Subset u = relabel(label.subset);
                for_each_subset_of(forgotten, [&](const Subset& t) {
                    out.add(LabelKind::Delta, label.index, sorted_union(u, t), coeff);
                });
                break;
            }
            default:
                throw std::logic_error("unexpected generator on the stable pointed space");
        }
    }
    return out;
}

SymmetricDivisorClass symmetrized_pencil_average(int g, int n) {
    if (n <= g) throw std::invalid_argument("symmetrized average requires n > g");
    const Space space = Space::stable_pointed(g, n);
    const Integer denom = binomial(n - 1, g - 1);

    SymmetricDivisorClass out(space);
    out.add({LabelKind::Lambda, 0, 0}, -frac(n, g));
    out.add({LabelKind::Psi, 0, 0}, Rational(1));

    // Orbit coefficients of the genus-0 boundary terms of the stored pencil
    // class, grouped by cardinality (one pass keeps the g = 2 coincidence of
    // the pair term and the full-set term consistent with the stored class).
    std::map<int, Rational> stored;
    for (const auto& [label, c] : pencil_divisor(g).base.coefficients()) {
        if (label.kind == LabelKind::Delta && label.index == 0) {
            stored[static_cast<int>(label.subset.size())] = c;
        }
    }

    for (int s = 2; s <= n; ++s) {
        // point-class rule: each retained point k in S' with the rest of S'
        // forgotten contributes -1
        Rational acc = Rational(-s) * Rational(binomial(n - s, g - 1));
        for (const auto& [u, cu] : stored) {
            acc += cu * Rational(binomial(s, u) * binomial(n - s, g - u));
        }
        out.add({LabelKind::Delta, 0, s}, acc / Rational(denom));
    }
    return out;
}

SymmetricDivisorClass enumerate_pencil_average(int g, int n, int max_n) {
    if (n <= g) throw std::invalid_argument("symmetrized average requires n > g");
    if (n > max_n)
        throw std::invalid_argument("enumeration bound exceeded: n = " + std::to_string(n) +
                                    " > " + std::to_string(max_n));
    const Space space = Space::stable_pointed(g, n);
    const DivisorClass base = pencil_divisor(g).base;

    DivisorClass total(space);
    for_each_subset_of_size(n, g, [&](const Subset& retained) {
        total.accumulate(forgetful_pullback(base, retained, n), Rational(1));
    });
    DivisorClass scaled(space);
    scaled.accumulate(total, frac(Integer(1), binomial(n - 1, g - 1)));
    return symmetrize(scaled);
}

namespace {

SymmetricDivisorClass lambda_pullback_symmetric(int g, int n, LambdaVariant variant) {
    const Space space = Space::hyperelliptic_pointed(g, n);
    const int delta_scale = variant == LambdaVariant::Faithful ? 4 : 1;
    SymmetricDivisorClass out(space);
    out.add({LabelKind::Eps0, 0, 0}, frac(g, 8 * g + 4));
    for (int i = 1; 2 * i <= g - 1; ++i) {
        const int mult = self_conjugate_index(space, LabelKind::Eps, i) ? 2 : 1;
        const int s_max = mult == 2 ? n - 1 : n;
        const Rational c = frac(2 * (i + 1) * (g - i), 8 * g + 4) * mult;
        for (int s = 0; s <= s_max; ++s) out.add({LabelKind::Eps, i, s}, c);
    }
    for (int i = 1; 2 * i <= g; ++i) {
        const int mult = self_conjugate_index(space, LabelKind::Delta, i) ? 2 : 1;
        const int s_max = mult == 2 ? n - 1 : n;
        const Rational c = frac(delta_scale * i * (g - i), 8 * g + 4) * mult;
        for (int s = 0; s <= s_max; ++s) out.add({LabelKind::Delta, i, s}, c);
    }
    return out;
}

}  // namespace

DivisorClass restrict_to_hyperelliptic(const DivisorClass& x, LambdaVariant variant) {
    if (x.space().kind != SpaceKind::StablePointed)
        throw std::invalid_argument("restriction expects a class on the stable pointed space");
    const int g = x.space().g;
    const int n = x.space().n;
    const Space target = Space::hyperelliptic_pointed(g, n);
    DivisorClass out(target);
    for (const auto& [label, c] : x.coefficients()) {
        switch (label.kind) {
            case LabelKind::Psi:
                out.add(LabelKind::Psi, label.index, c);
                break;
            case LabelKind::Delta:
                out.add(LabelKind::Delta, label.index, label.subset, c);
                break;
            case LabelKind::DeltaIrr: {
                out.add(LabelKind::Eps0, 0, c);
                for (int i = 1; 2 * i <= g - 1; ++i) {
                    for (int s = 0; s <= n; ++s) {
                        for (const auto& eps : orbit_labels(target, {LabelKind::Eps, i, s})) {
                            out.add_canonical(eps, 2 * c);
                        }
                    }
                }
                break;
            }
            case LabelKind::Lambda:
                out.accumulate(
                    hyperelliptic_forgetful_pullback(lambda_boundary_expression(g, variant), n), c);
                break;
            default:
                throw std::logic_error("unexpected generator on the stable pointed space");
        }
    }
    return out;
}

SymmetricDivisorClass restrict_to_hyperelliptic(const SymmetricDivisorClass& x,
                                                LambdaVariant variant) {
    if (x.space().kind != SpaceKind::StablePointed)
        throw std::invalid_argument("restriction expects a class on the stable pointed space");
    const int g = x.space().g;
    const int n = x.space().n;
    const Space target = Space::hyperelliptic_pointed(g, n);
    SymmetricDivisorClass out(target);
    for (const auto& [label, c] : x.coefficients()) {
        switch (label.kind) {
            case LabelKind::Psi:
                out.add({LabelKind::Psi, 0, 0}, c);
                break;
            case LabelKind::Delta:
                out.add(label, c);
                break;
            case LabelKind::DeltaIrr: {
                out.add({LabelKind::Eps0, 0, 0}, c);
                for (int i = 1; 2 * i <= g - 1; ++i) {
                    const int s_max =
                        self_conjugate_index(target, LabelKind::Eps, i) ? n - 1 : n;
                    for (int s = 0; s <= s_max; ++s) out.add({LabelKind::Eps, i, s}, 2 * c);
                }
                break;
            }
            case LabelKind::Lambda:
                out.accumulate(lambda_pullback_symmetric(g, n, variant), c);
                break;
            default:
                throw std::logic_error("unexpected generator on the stable pointed space");
        }
    }
    return out;
}

}  // namespace hypdiv
