#pragma once
// Sparse exact linear combinations of canonical generators.  The generators
// form a free basis of the rational divisor class group on each space, so
// the normalized sparse map is a unique representation and coefficientwise
// comparisons are meaningful.

#include "hypdiv/label.hpp"
#include "hypdiv/rational.hpp"

#include <map>

namespace hypdiv {

class DivisorClass {
  public:
    using CoefficientMap = std::map<ClassLabel, Rational>;

    explicit DivisorClass(Space space) : space_(space) {}

    const Space& space() const { return space_; }
    const CoefficientMap& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    size_t term_count() const { return coeffs_.size(); }

    /// Coefficient of a canonical label (zero when absent).
    Rational coefficient(const ClassLabel& label) const;

    /// Canonicalizes the raw label data and accumulates; a raw name of the
    /// zero divisor is dropped.  Zero accumulated coefficients are erased.
    void add(LabelKind kind, int index, const Subset& subset, const Rational& c);
    void add(LabelKind kind, int index, const Rational& c) { add(kind, index, {}, c); }

    /// Accumulates onto an already-canonical label of this space.
    void add_canonical(const ClassLabel& label, const Rational& c);

    /// Adds c times another class on the same space.
    void accumulate(const DivisorClass& other, const Rational& c);

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

  private:
    Space space_;
    CoefficientMap coeffs_;
};

/// c1*a + c2*b.  Throws std::invalid_argument when the spaces differ.
DivisorClass combine(const DivisorClass& a, const Rational& c1, const DivisorClass& b,
                     const Rational& c2);

/// True iff every coefficient is >= 0.  Sufficient for effectivity (the
/// generators are classes of effective divisors and the representation is
/// unique); false does not prove non-effectivity.
bool is_effective_certificate(const DivisorClass& x);

}  // namespace hypdiv
