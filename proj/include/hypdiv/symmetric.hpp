#pragma once
// Symmetric-basis representation for classes invariant under relabeling of
// the marked points.  A symmetric label (kind, i, s) stands for the sum of
// all distinct canonical generators with that kind, genus index and subset
// cardinality s, and stores the common per-generator coefficient.  This keeps
// computations polynomial in n where the labeled basis would need 2^n terms.

#include "hypdiv/divisor_class.hpp"

#include <functional>
#include <map>
#include <vector>

namespace hypdiv {

struct SymmetricLabel {
    LabelKind kind = LabelKind::Eps0;
    int index = 0;        // genus index for eps/delta, 0 otherwise
    int cardinality = 0;  // |S| for eps/delta, 0 otherwise

    friend bool operator==(const SymmetricLabel& a, const SymmetricLabel& b) {
        return a.kind == b.kind && a.index == b.index && a.cardinality == b.cardinality;
    }
    friend bool operator<(const SymmetricLabel& a, const SymmetricLabel& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.index != b.index) return a.index < b.index;
        return a.cardinality < b.cardinality;
    }
};

/// "psi", "eps0", "lambda", "delta_irr", "eps(i,s)", "delta(i,s)", "delta0(s)".
std::string symmetric_label_name(const SymmetricLabel& label);

/// Inverse of symmetric_label_name.
SymmetricLabel parse_symmetric_label(const std::string& name);

/// An index at which the two sides of a node have equal genus, so that S and
/// its complement name the same divisor.
bool self_conjugate_index(const Space& space, LabelKind kind, int index);

/// Number of distinct canonical labels aggregated by a symmetric label.
Integer orbit_size(const Space& space, const SymmetricLabel& label);

/// All distinct canonical labels aggregated by a symmetric label, in
/// increasing label order.  Intended for small n.
std::vector<ClassLabel> orbit_labels(const Space& space, const SymmetricLabel& label);

class SymmetricDivisorClass {
  public:
    using CoefficientMap = std::map<SymmetricLabel, Rational>;

    explicit SymmetricDivisorClass(Space space) : space_(space) {}

    const Space& space() const { return space_; }
    const CoefficientMap& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coefficient(const SymmetricLabel& label) const;

    /// Accumulates onto a symmetric label; requires a nonempty orbit.
    void add(const SymmetricLabel& label, const Rational& c);

    void accumulate(const SymmetricDivisorClass& other, const Rational& c);

    friend bool operator==(const SymmetricDivisorClass& a, const SymmetricDivisorClass& b) {
        return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SymmetricDivisorClass& a, const SymmetricDivisorClass& b) {
        return !(a == b);
    }

  private:
    Space space_;
    CoefficientMap coeffs_;
};

/// Groups the canonical labels of an S_n-invariant class by (kind, i, |S|).
/// Throws std::invalid_argument with a diagnostic when coefficients within an
/// orbit disagree or part of an orbit is missing.
SymmetricDivisorClass symmetrize(const DivisorClass& x);

/// Emits the sum over all distinct canonical labels of every orbit.
/// Left inverse of symmetrize.
DivisorClass expand(const SymmetricDivisorClass& x);

bool is_effective_certificate(const SymmetricDivisorClass& x);

/// Calls fn(subset) for every subset of {1..n} with the given cardinality,
/// in lexicographic order.
void for_each_subset_of_size(int n, int size, const std::function<void(const Subset&)>& fn);

/// Calls fn(subset) for every subset of {1..n}, ordered by bitmask value.
void for_each_subset(int n, const std::function<void(const Subset&)>& fn);

}  // namespace hypdiv
