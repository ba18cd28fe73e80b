#pragma once
// Canonical names for the generators of the rational divisor class groups.
//
// Different namings of the same geometric divisor are identified by
// canonicalize_label:
//
//   delta(i, S) = delta(g-i,   complement of S)     separating-node classes
//   eps(i, S)   = eps(g-1-i,   complement of S)     nonseparating-pair classes
//   quot-delta(s) = quot-delta(N-s)                 on the rational quotient
//
// Self-conjugate indices (2i = g for delta, 2i = g-1 for eps) are resolved by
// taking the lexicographically smaller of S and its complement as sorted
// integer sequences.  delta(0, S) with |S| <= 1 is the zero divisor.

#include "hypdiv/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypdiv {

/// Sorted set of marked-point indices drawn from {1, ..., n}.
using Subset = std::vector<int>;

Subset complement(const Subset& s, int n);

enum class LabelKind {
    Lambda,    // Hodge class (generator only on the stable pointed space)
    Psi,       // cotangent point class, index = point label
    DeltaIrr,  // irreducible-node boundary class (generator only on the stable pointed space)
    Eps0,      // self-node class on the hyperelliptic spaces (carries no subset)
    Eps,       // nonseparating-pair class, index = smaller genus, subset on the index side
    Delta,     // separating-node class, index = smaller genus, subset on the index side
    QuotDelta, // boundary class on the rational quotient, index = orbit cardinality
};

struct ClassLabel {
    Space space;
    LabelKind kind = LabelKind::Eps0;
    int index = 0;
    Subset subset;

    friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
        return a.space == b.space && a.kind == b.kind && a.index == b.index &&
               a.subset == b.subset;
    }
    friend bool operator!=(const ClassLabel& a, const ClassLabel& b) { return !(a == b); }
    friend bool operator<(const ClassLabel& a, const ClassLabel& b) {
        if (a.space != b.space) return a.space < b.space;
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.index != b.index) return a.index < b.index;
        return a.subset < b.subset;
    }
};

/// Returns the unique canonical representative, or nullopt when the raw data
/// names the zero divisor.  Throws std::invalid_argument for labels that do
/// not exist on the space (bad index range, subset outside {1..n}, kind not
/// defined on the space).
std::optional<ClassLabel> canonicalize_label(const Space& space, LabelKind kind, int index,
                                             const Subset& subset);

/// Convenience builders for kinds that need no subset.
std::optional<ClassLabel> canonicalize_label(const Space& space, LabelKind kind, int index = 0);

/// True when the given data is already in canonical form.
bool is_canonical(const ClassLabel& label);

/// Compact stable rendering, e.g. "psi(3)", "eps0", "eps(1,{2,3})",
/// "delta(0,{1,2})", "delta0(4)" (rational quotient), "lambda", "delta_irr".
std::string label_name(const ClassLabel& label);

}  // namespace hypdiv
