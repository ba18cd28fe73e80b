#include "hypdiv/divisor_class.hpp"

#include <stdexcept>

namespace hypdiv {

Rational DivisorClass::coefficient(const ClassLabel& label) const {
    auto it = coeffs_.find(label);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void DivisorClass::add(LabelKind kind, int index, const Subset& subset, const Rational& c) {
    if (sgn(c) == 0) return;
    auto label = canonicalize_label(space_, kind, index, subset);
    if (!label) return;  // raw name of the zero divisor
    add_canonical(*label, c);
}

void DivisorClass::add_canonical(const ClassLabel& label, const Rational& c) {
    if (label.space != space_)
        throw std::invalid_argument("label belongs to " + label.space.describe() + ", class to " +
                                    space_.describe());
    if (sgn(c) == 0) return;
    auto [it, inserted] = coeffs_.emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) coeffs_.erase(it);
    }
}

void DivisorClass::accumulate(const DivisorClass& other, const Rational& c) {
    if (other.space_ != space_)
        throw std::invalid_argument("space mismatch: " + space_.describe() + " vs " +
                                    other.space_.describe());
    if (sgn(c) == 0) return;
    for (const auto& [label, coeff] : other.coeffs_) add_canonical(label, coeff * c);
}

DivisorClass combine(const DivisorClass& a, const Rational& c1, const DivisorClass& b,
                     const Rational& c2) {
    if (a.space() != b.space())
        throw std::invalid_argument("space mismatch: " + a.space().describe() + " vs " +
                                    b.space().describe());
    DivisorClass out(a.space());
    out.accumulate(a, c1);
    out.accumulate(b, c2);
    return out;
}

bool is_effective_certificate(const DivisorClass& x) {
    for (const auto& [label, c] : x.coefficients()) {
        if (sgn(c) < 0) return false;
    }
    return true;
}

}  // namespace hypdiv
