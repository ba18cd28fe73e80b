#include "hypdiv/label.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypdiv {

std::string Space::describe() const {
    std::ostringstream os;
    switch (kind) {
        case SpaceKind::HyperellipticBase: os << "Hbar(" << g << ")"; break;
        case SpaceKind::HyperellipticPointed: os << "Hbar(" << g << "," << n << ")"; break;
        case SpaceKind::StablePointed: os << "Mbar(" << g << "," << n << ")"; break;
        case SpaceKind::RationalQuotient: os << "M0bar(" << n << ")/S" << n; break;
    }
    return os.str();
}

Subset complement(const Subset& s, int n) {
    Subset out;
    out.reserve(static_cast<size_t>(n) - s.size());
    size_t j = 0;
    for (int k = 1; k <= n; ++k) {
        if (j < s.size() && s[j] == k) {
            ++j;
        } else {
            out.push_back(k);
        }
    }
    return out;
}

namespace {

void validate_subset(const Subset& s, int n) {
    int prev = 0;
    for (int k : s) {
        if (k <= prev) throw std::invalid_argument("subset must be sorted and duplicate-free");
        if (k < 1 || k > n) {
            throw std::invalid_argument("subset contains a point label outside {1,...," +
                                        std::to_string(n) + "}");
        }
        prev = k;
    }
}

[[noreturn]] void bad_kind(const Space& space, const char* what) {
    throw std::invalid_argument(std::string(what) + " is not a generator on " + space.describe());
}

// Canonical side of a conjugate pair at a self-conjugate index: the
// lexicographically smaller of S and its complement as sorted sequences.
const Subset& lex_min_side(const Subset& s, const Subset& sc) {
    return s <= sc ? s : sc;
}

}  // namespace

std::optional<ClassLabel> canonicalize_label(const Space& space, LabelKind kind, int index,
                                             const Subset& subset) {
    const int g = space.g;
    const int n = space.n;

    switch (kind) {
        case LabelKind::Lambda:
        case LabelKind::DeltaIrr: {
            if (space.kind != SpaceKind::StablePointed) bad_kind(space, "lambda/delta_irr");
            if (index != 0 || !subset.empty())
                throw std::invalid_argument("lambda/delta_irr carry no index or subset");
            return ClassLabel{space, kind, 0, {}};
        }

        case LabelKind::Psi: {
            if (!space.has_marked_points()) bad_kind(space, "psi");
            if (index < 1 || index > n)
                throw std::invalid_argument("psi index out of range 1.." + std::to_string(n));
            if (!subset.empty()) throw std::invalid_argument("psi carries no subset");
            return ClassLabel{space, LabelKind::Psi, index, {}};
        }

        case LabelKind::Eps0: {
            if (space.kind != SpaceKind::HyperellipticBase &&
                space.kind != SpaceKind::HyperellipticPointed)
                bad_kind(space, "eps0");
            if (index != 0 || !subset.empty())
                throw std::invalid_argument("eps0 carries no index or subset");
            return ClassLabel{space, LabelKind::Eps0, 0, {}};
        }

        case LabelKind::Eps: {
            if (space.kind != SpaceKind::HyperellipticBase &&
                space.kind != SpaceKind::HyperellipticPointed)
                bad_kind(space, "eps");
            validate_subset(subset, n);
            if (index < 0 || index > g)
                throw std::invalid_argument("eps genus index out of range");
            // Genus-0 sides of a nonseparating pair are not subset-indexed;
            // the single class eps0 stands for all of them.
            if (index == 0 || index == g - 1)
                throw std::invalid_argument("eps with a genus-0 side has no subset-indexed class; use eps0");
            if (2 * index > g - 1)
                return ClassLabel{space, LabelKind::Eps, g - 1 - index, complement(subset, n)};
            if (2 * index == g - 1)
                return ClassLabel{space, LabelKind::Eps, index,
                                  lex_min_side(subset, complement(subset, n))};
            return ClassLabel{space, LabelKind::Eps, index, subset};
        }

        case LabelKind::Delta: {
            if (space.kind == SpaceKind::RationalQuotient) bad_kind(space, "delta");
            validate_subset(subset, n);
            if (index < 0 || index > g)
                throw std::invalid_argument("delta genus index out of range 0.." +
                                            std::to_string(g));
            int i = index;
            Subset s = subset;
            if (2 * i > g) {
                i = g - i;
                s = complement(s, n);
            } else if (2 * i == g) {
                s = lex_min_side(s, complement(s, n));
            }
            if (i == 0 && s.size() <= 1) return std::nullopt;  // unstable: the zero divisor
            return ClassLabel{space, LabelKind::Delta, i, std::move(s)};
        }

        case LabelKind::QuotDelta: {
            if (space.kind != SpaceKind::RationalQuotient) bad_kind(space, "quotient boundary class");
            if (!subset.empty()) throw std::invalid_argument("quotient classes carry no subset");
            const int N = space.n;
            if (index < 0 || index > N)
                throw std::invalid_argument("cardinality out of range 0.." + std::to_string(N));
            int s = std::min(index, N - index);
            if (s <= 1) return std::nullopt;
            return ClassLabel{space, LabelKind::QuotDelta, s, {}};
        }
    }
    throw std::logic_error("unreachable label kind");
}

std::optional<ClassLabel> canonicalize_label(const Space& space, LabelKind kind, int index) {
    return canonicalize_label(space, kind, index, Subset{});
}

bool is_canonical(const ClassLabel& label) {
    auto c = canonicalize_label(label.space, label.kind, label.index, label.subset);
    return c.has_value() && *c == label;
}

std::string label_name(const ClassLabel& label) {
    std::ostringstream os;
    switch (label.kind) {
        case LabelKind::Lambda: return "lambda";
        case LabelKind::DeltaIrr: return "delta_irr";
        case LabelKind::Eps0: return "eps0";
        case LabelKind::Psi:
            os << "psi(" << label.index << ")";
            return os.str();
        case LabelKind::QuotDelta:
            os << "delta0(" << label.index << ")";
            return os.str();
        case LabelKind::Eps:
        case LabelKind::Delta: {
            os << (label.kind == LabelKind::Eps ? "eps(" : "delta(") << label.index << ",{";
            for (size_t i = 0; i < label.subset.size(); ++i) {
                if (i) os << ",";
                os << label.subset[i];
            }
            os << "})";
            return os.str();
        }
    }
    throw std::logic_error("unreachable label kind");
}

}  // namespace hypdiv
