#include "hypdiv/formulas.hpp"

#include <stdexcept>

namespace hypdiv {

std::string to_string(SpaceVariant v) {
    return v == SpaceVariant::Stack ? "stack" : "coarse";
}

std::string to_string(LambdaVariant v) {
    return v == LambdaVariant::Faithful ? "faithful" : "printed";
}

LambdaVariant parse_lambda_variant(const std::string& name) {
    if (name == "faithful") return LambdaVariant::Faithful;
    if (name == "printed") return LambdaVariant::Printed;
    throw std::invalid_argument("unknown lambda variant: " + name + " (expected faithful|printed)");
}

DivisorClass lambda_boundary_expression(int g, LambdaVariant variant) {
    const Space space = Space::hyperelliptic(g);
    const int delta_scale = variant == LambdaVariant::Faithful ? 4 : 1;
    DivisorClass out(space);
    out.add(LabelKind::Eps0, 0, frac(g, 8 * g + 4));
    for (int i = 1; 2 * i <= g - 1; ++i) {
        out.add(LabelKind::Eps, i, frac(2 * (i + 1) * (g - i), 8 * g + 4));
    }
    for (int i = 1; 2 * i <= g; ++i) {
        out.add(LabelKind::Delta, i, frac(delta_scale * i * (g - i), 8 * g + 4));
    }
    return out;
}

DivisorClass lambda_relation(int g) {
    return lambda_boundary_expression(g, LambdaVariant::Faithful);
}

DivisorClass delta_irr_decomposition(int g) {
    const Space space = Space::hyperelliptic(g);
    DivisorClass out(space);
    out.add(LabelKind::Eps0, 0, Rational(1));
    for (int i = 1; 2 * i <= g - 1; ++i) out.add(LabelKind::Eps, i, Rational(2));
    return out;
}

DivisorClass delta_irr_decomposition(int g, int n) {
    const Space space = Space::hyperelliptic_pointed(g, n);
    DivisorClass out(space);
    out.add(LabelKind::Eps0, 0, Rational(1));
    // each distinct generator once, with coefficient 2
    for (int i = 1; 2 * i <= g - 1; ++i) {
        for (int s = 0; s <= n; ++s) {
            for (const auto& label : orbit_labels(space, {LabelKind::Eps, i, s})) {
                out.add_canonical(label, Rational(2));
            }
        }
    }
    return out;
}

DivisorClass canonical_class_rational_quotient(int g) {
    const Space space = Space::rational_quotient(g);
    DivisorClass out(space);
    out.add(LabelKind::QuotDelta, 2, -frac(1, 2) - frac(1, 2 * g + 1));
    for (int s = 3; s <= g + 1; ++s) {
        out.add(LabelKind::QuotDelta, s, frac(s * (2 * g + 2 - s), 2 * g + 1) - 2);
    }
    return out;
}

DivisorClass phi_pullback(const DivisorClass& x) {
    if (x.space().kind != SpaceKind::RationalQuotient)
        throw std::invalid_argument("phi_pullback expects a class on the rational quotient");
    const int g = x.space().g;
    DivisorClass out(Space::hyperelliptic(g));
    for (const auto& [label, c] : x.coefficients()) {
        const int s = label.index;
        if (s % 2 == 0) {
            const int i = (s - 2) / 2;
            if (i == 0) {
                out.add(LabelKind::Eps0, 0, c);
            } else {
                out.add(LabelKind::Eps, i, c);
            }
        } else {
            out.add(LabelKind::Delta, (s - 1) / 2, c / 2);
        }
    }
    return out;
}

DivisorClass canonical_class_base(int g, SpaceVariant variant) {
    const Space space = Space::hyperelliptic(g);
    DivisorClass out(space);
    out.add(LabelKind::Eps0, 0, -frac(1, 2) - frac(1, 2 * g + 1));
    for (int i = 1; 2 * i <= g - 1; ++i) {
        out.add(LabelKind::Eps, i, frac(2 * (2 * i + 2) * (g - i), 2 * g + 1) - 2);
    }
    for (int i = 1; 2 * i <= g; ++i) {
        Rational c = frac((2 * i + 1) * (2 * g - 2 * i + 1), 4 * g + 2);
        if (variant == SpaceVariant::Coarse) c -= 1;
        out.add(LabelKind::Delta, i, c);
    }
    return out;
}

DivisorClass canonical_class_pointed(int g, int n, SpaceVariant variant) {
    if (n < 1) throw std::invalid_argument("pointed canonical class requires n >= 1");
    if (variant == SpaceVariant::Coarse && n < 2)
        throw std::invalid_argument("coarse canonical class requires n >= 2");
    const Space space = Space::hyperelliptic_pointed(g, n);
    DivisorClass out(space);
    for (int k = 1; k <= n; ++k) out.add(LabelKind::Psi, k, Rational(1));
    out.add(LabelKind::Eps0, 0, -frac(1, 2) - frac(1, 2 * g + 1));
    for_each_subset(n, [&](const Subset& s) {
        for (int i = 1; 2 * i <= g - 1; ++i) {
            out.add(LabelKind::Eps, i, s, frac(2 * (2 * i + 2) * (g - i), 2 * g + 1) - 2);
        }
        for (int i = 1; 2 * i <= g; ++i) {
            out.add(LabelKind::Delta, i, s, frac((2 * i + 1) * (2 * g - 2 * i + 1), 4 * g + 2));
        }
        if (s.size() >= 2) out.add(LabelKind::Delta, 0, s, Rational(-2));
    });
    if (variant == SpaceVariant::Coarse) {
        for (int i = 1; i <= g; ++i) out.add(LabelKind::Delta, i, Subset{}, Rational(-1));
    }
    return out;
}

SymmetricDivisorClass canonical_class_pointed_symmetric(int g, int n, SpaceVariant variant) {
    if (n < 1) throw std::invalid_argument("pointed canonical class requires n >= 1");
    if (variant == SpaceVariant::Coarse && n < 2)
        throw std::invalid_argument("coarse canonical class requires n >= 2");
    const Space space = Space::hyperelliptic_pointed(g, n);
    SymmetricDivisorClass out(space);
    out.add({LabelKind::Psi, 0, 0}, Rational(1));
    out.add({LabelKind::Eps0, 0, 0}, -frac(1, 2) - frac(1, 2 * g + 1));
    // Summing a conjugation-symmetric coefficient over all subsets doubles the
    // per-generator value exactly at a self-conjugate genus index.
    for (int i = 1; 2 * i <= g - 1; ++i) {
        const int mult = self_conjugate_index(space, LabelKind::Eps, i) ? 2 : 1;
        const Rational c = (frac(2 * (2 * i + 2) * (g - i), 2 * g + 1) - 2) * mult;
        const int s_max = mult == 2 ? n - 1 : n;
        for (int s = 0; s <= s_max; ++s) out.add({LabelKind::Eps, i, s}, c);
    }
    for (int i = 1; 2 * i <= g; ++i) {
        const int mult = self_conjugate_index(space, LabelKind::Delta, i) ? 2 : 1;
        const Rational c = frac((2 * i + 1) * (2 * g - 2 * i + 1), 4 * g + 2) * mult;
        const int s_max = mult == 2 ? n - 1 : n;
        for (int s = 0; s <= s_max; ++s) out.add({LabelKind::Delta, i, s}, c);
    }
    for (int s = 2; s <= n; ++s) out.add({LabelKind::Delta, 0, s}, Rational(-2));
    if (variant == SpaceVariant::Coarse) {
        // raw terms delta(i, empty) for i = 1..g, canonicalized
        for (int i = 1; 2 * i <= g; ++i) out.add({LabelKind::Delta, i, 0}, Rational(-1));
        for (int j = 1; 2 * j < g; ++j) out.add({LabelKind::Delta, j, n}, Rational(-1));
        out.add({LabelKind::Delta, 0, n}, Rational(-1));
    }
    return out;
}

DivisorClass hyperelliptic_forgetful_pullback(const DivisorClass& x, int n) {
    if (x.space().kind != SpaceKind::HyperellipticBase)
        throw std::invalid_argument("forgetful pullback expects a class on the base space");
    const int g = x.space().g;
    DivisorClass out(Space::hyperelliptic_pointed(g, n));
    for (const auto& [label, c] : x.coefficients()) {
        switch (label.kind) {
            case LabelKind::Eps0:
                out.add(LabelKind::Eps0, 0, c);
                break;
            case LabelKind::Eps:
            case LabelKind::Delta:
                for_each_subset(n, [&](const Subset& s) { out.add(label.kind, label.index, s, c); });
                break;
            default:
                throw std::logic_error("unexpected generator on the base space");
        }
    }
    return out;
}

DivisorClass ramification_divisor(int g) {
    const Space space = Space::hyperelliptic(g);
    DivisorClass out(space);
    for (int i = 1; 2 * i <= g; ++i) out.add(LabelKind::Delta, i, Rational(1));
    return out;
}

DivisorClass ramification_divisor(int g, int n) {
    if (n < 2)
        throw std::invalid_argument(
            "ramification divisor on the pointed space is unsupported for n = 1 "
            "(the marked-point quasireflection locus is not modeled)");
    const Space space = Space::hyperelliptic_pointed(g, n);
    DivisorClass out(space);
    for (int i = 1; i <= g; ++i) out.add(LabelKind::Delta, i, Subset{}, Rational(1));
    return out;
}

}  // namespace hypdiv
