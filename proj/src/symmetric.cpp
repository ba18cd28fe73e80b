#include "hypdiv/symmetric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypdiv {

std::string symmetric_label_name(const SymmetricLabel& label) {
    std::ostringstream os;
    switch (label.kind) {
        case LabelKind::Lambda: return "lambda";
        case LabelKind::DeltaIrr: return "delta_irr";
        case LabelKind::Eps0: return "eps0";
        case LabelKind::Psi: return "psi";
        case LabelKind::QuotDelta:
            os << "delta0(" << label.index << ")";
            return os.str();
        case LabelKind::Eps:
            os << "eps(" << label.index << "," << label.cardinality << ")";
            return os.str();
        case LabelKind::Delta:
            if (label.index == 0) {
                os << "delta0(" << label.cardinality << ")";
            } else {
                os << "delta(" << label.index << "," << label.cardinality << ")";
            }
            return os.str();
    }
    throw std::logic_error("unreachable label kind");
}

SymmetricLabel parse_symmetric_label(const std::string& name) {
    auto fail = [&]() -> SymmetricLabel {
        throw std::invalid_argument("unrecognized symmetric label: " + name);
    };
    if (name == "lambda") return {LabelKind::Lambda, 0, 0};
    if (name == "delta_irr") return {LabelKind::DeltaIrr, 0, 0};
    if (name == "eps0") return {LabelKind::Eps0, 0, 0};
    if (name == "psi") return {LabelKind::Psi, 0, 0};
    auto paren = name.find('(');
    if (paren == std::string::npos || name.back() != ')') return fail();
    const std::string head = name.substr(0, paren);
    const std::string body = name.substr(paren + 1, name.size() - paren - 2);
    auto comma = body.find(',');
    try {
        if (head == "delta0") {
            if (comma != std::string::npos) return fail();
            return {LabelKind::Delta, 0, std::stoi(body)};
        }
        if (comma == std::string::npos) return fail();
        const int i = std::stoi(body.substr(0, comma));
        const int s = std::stoi(body.substr(comma + 1));
        if (head == "eps") return {LabelKind::Eps, i, s};
        if (head == "delta") return {LabelKind::Delta, i, s};
    } catch (const std::exception&) {
        return fail();
    }
    return fail();
}

bool self_conjugate_index(const Space& space, LabelKind kind, int index) {
    if (kind == LabelKind::Delta) return 2 * index == space.g;
    if (kind == LabelKind::Eps) return 2 * index == space.g - 1;
    return false;
}

Integer orbit_size(const Space& space, const SymmetricLabel& label) {
    const int n = space.n;
    const int s = label.cardinality;
    switch (label.kind) {
        case LabelKind::Lambda:
        case LabelKind::DeltaIrr:
        case LabelKind::Eps0:
        case LabelKind::QuotDelta:
            return Integer(1);
        case LabelKind::Psi:
            return Integer(n);
        case LabelKind::Eps:
        case LabelKind::Delta: {
            if (s < 0 || s > n) return Integer(0);
            if (label.kind == LabelKind::Delta && label.index == 0)
                return s >= 2 ? binomial(n, s) : Integer(0);
            if (!self_conjugate_index(space, label.kind, label.index)) return binomial(n, s);
            // Conjugation pairs S with its complement; canonical representatives
            // are the empty set and the proper subsets containing the point 1.
            if (s == 0) return Integer(1);
            if (s == n) return Integer(0);
            return binomial(n - 1, s - 1);
        }
    }
    throw std::logic_error("unreachable label kind");
}

std::vector<ClassLabel> orbit_labels(const Space& space, const SymmetricLabel& label) {
    std::vector<ClassLabel> out;
    const int n = space.n;
    switch (label.kind) {
        case LabelKind::Lambda:
        case LabelKind::DeltaIrr:
        case LabelKind::Eps0:
            out.push_back(*canonicalize_label(space, label.kind, 0));
            return out;
        case LabelKind::QuotDelta:
            out.push_back(*canonicalize_label(space, label.kind, label.index));
            return out;
        case LabelKind::Psi:
            for (int k = 1; k <= n; ++k) out.push_back(*canonicalize_label(space, LabelKind::Psi, k));
            return out;
        case LabelKind::Eps:
        case LabelKind::Delta: {
            const bool self_conj = self_conjugate_index(space, label.kind, label.index);
            for_each_subset_of_size(n, label.cardinality, [&](const Subset& s) {
                if (self_conj) {
                    // keep one representative per conjugate pair
                    if (!s.empty() && (s.front() != 1 || static_cast<int>(s.size()) == n)) return;
                }
                auto c = canonicalize_label(space, label.kind, label.index, s);
                if (c) out.push_back(*c);
            });
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    throw std::logic_error("unreachable label kind");
}

Rational SymmetricDivisorClass::coefficient(const SymmetricLabel& label) const {
    auto it = coeffs_.find(label);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymmetricDivisorClass::add(const SymmetricLabel& label, const Rational& c) {
    if (sgn(c) == 0) return;
    if (orbit_size(space_, label) == 0)
        throw std::invalid_argument("empty orbit for " + symmetric_label_name(label) + " on " +
                                    space_.describe());
    auto [it, inserted] = coeffs_.emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) coeffs_.erase(it);
    }
}

void SymmetricDivisorClass::accumulate(const SymmetricDivisorClass& other, const Rational& c) {
    if (other.space_ != space_)
        throw std::invalid_argument("space mismatch: " + space_.describe() + " vs " +
                                    other.space_.describe());
    if (sgn(c) == 0) return;
    for (const auto& [label, coeff] : other.coeffs_) add(label, coeff * c);
}

namespace {

SymmetricLabel to_symmetric(const ClassLabel& label) {
    switch (label.kind) {
        case LabelKind::Lambda:
        case LabelKind::DeltaIrr:
        case LabelKind::Eps0:
            return {label.kind, 0, 0};
        case LabelKind::Psi:
            return {LabelKind::Psi, 0, 0};
        case LabelKind::QuotDelta:
            return {LabelKind::QuotDelta, label.index, 0};
        case LabelKind::Eps:
        case LabelKind::Delta:
            return {label.kind, label.index, static_cast<int>(label.subset.size())};
    }
    throw std::logic_error("unreachable label kind");
}

}  // namespace

SymmetricDivisorClass symmetrize(const DivisorClass& x) {
    SymmetricDivisorClass out(x.space());
    std::map<SymmetricLabel, std::pair<Rational, Integer>> groups;  // coefficient, label count
    for (const auto& [label, c] : x.coefficients()) {
        SymmetricLabel key = to_symmetric(label);
        auto [it, inserted] = groups.emplace(key, std::make_pair(c, Integer(1)));
        if (!inserted) {
            if (it->second.first != c) {
                throw std::invalid_argument(
                    "not invariant under point relabeling: orbit " + symmetric_label_name(key) +
                    " has coefficients " + to_fraction_string(it->second.first) + " and " +
                    to_fraction_string(c));
            }
            it->second.second += 1;
        }
    }
    for (const auto& [key, group] : groups) {
        Integer expected = orbit_size(x.space(), key);
        if (group.second != expected) {
            throw std::invalid_argument("not invariant under point relabeling: orbit " +
                                        symmetric_label_name(key) + " has " +
                                        group.second.get_str() + " of " + expected.get_str() +
                                        " generators present");
        }
        out.add(key, group.first);
    }
    return out;
}

DivisorClass expand(const SymmetricDivisorClass& x) {
    DivisorClass out(x.space());
    for (const auto& [key, c] : x.coefficients()) {
        for (const auto& label : orbit_labels(x.space(), key)) out.add_canonical(label, c);
    }
    return out;
}

bool is_effective_certificate(const SymmetricDivisorClass& x) {
    for (const auto& [label, c] : x.coefficients()) {
        if (sgn(c) < 0) return false;
    }
    return true;
}

void for_each_subset_of_size(int n, int size, const std::function<void(const Subset&)>& fn) {
    if (size < 0 || size > n) return;
    Subset s(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) s[static_cast<size_t>(i)] = i + 1;
    while (true) {
        fn(s);
        // next combination in lexicographic order
        int i = size - 1;
        while (i >= 0 && s[static_cast<size_t>(i)] == n - (size - 1 - i)) --i;
        if (i < 0) break;
        ++s[static_cast<size_t>(i)];
        for (int j = i + 1; j < size; ++j) s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
    }
}

void for_each_subset(int n, const std::function<void(const Subset&)>& fn) {
    if (n < 0) throw std::invalid_argument("negative ground set");
    if (n > 30) throw std::invalid_argument("subset enumeration bound exceeded (n > 30)");
    const unsigned long total = 1ul << n;
    Subset s;
    s.reserve(static_cast<size_t>(n));
    for (unsigned long mask = 0; mask < total; ++mask) {
        s.clear();
        for (int k = 0; k < n; ++k) {
            if (mask & (1ul << k)) s.push_back(k + 1);
        }
        fn(s);
    }
}

}  // namespace hypdiv
