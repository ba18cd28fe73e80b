#pragma once
// Age computations for diagonalized finite-order actions on a tangent space,
// the senior/junior classification behind the canonical-singularity
// criterion, and the classifier for automorphisms of smooth hyperelliptic
// curves acting on the deformation space of the curve.

#include "hypdiv/rational.hpp"

#include <vector>

namespace hypdiv {

/// A cyclic-group action diag(zeta^a_1, ..., zeta^a_d) for zeta a primitive
/// m-th root of unity; exponents are stored reduced mod m.
struct AutomorphismAction {
    int order = 1;
    std::vector<int> exponents;

    /// Reduces raw exponents mod order; order must be positive.
    static AutomorphismAction make(int order, const std::vector<int>& raw_exponents);
};

enum class ActionVerdict { Identity, Quasireflection, Junior, Senior };

std::string to_string(ActionVerdict v);

struct ActionClassification {
    ActionVerdict verdict = ActionVerdict::Identity;
    Rational minimal_age = Rational(0);  // minimum age over all primitive-root substitutions
};

/// age with respect to zeta^k: sum over i of (k * a_i mod m) / m.
/// k must be a unit mod m.
Rational age(const AutomorphismAction& action, int k);

/// Units of Z/m in increasing order (for m = 1: {0}, the trivial group).
std::vector<int> units_mod(int m);

/// Classifies the action: Identity when all exponents vanish,
/// Quasireflection when exactly one is nonzero, otherwise Senior iff the age
/// is >= 1 for every primitive-root substitution.  minimal_age is always the
/// exact minimum over units.
ActionClassification seniority(const AutomorphismAction& action);

/// Tangent action of an automorphism of a smooth hyperelliptic curve of genus
/// g inducing a rotation of order m on the quotient line (m = 1 encodes the
/// hyperelliptic involution, which acts trivially).  The (2g-1)-dimensional
/// eigenvalue exponent list is (2, 3, ..., 2g) mod m, read off the invariant
/// quadratic differentials x^k (dx/y)^2.  Requires 1 <= m <= 2g+2.
AutomorphismAction smooth_hyperelliptic_action(int g, int m);
ActionClassification classify_smooth_hyperelliptic_action(int g, int m);

/// Reid-Tai criterion for a finite linear group without quasireflections,
/// given the actions of all nontrivial elements: the quotient has canonical
/// singularities iff every listed action is senior.  Throws
/// std::invalid_argument when a quasireflection is present (such groups must
/// first be reduced by their quasireflection subgroup, which is not modeled
/// here).
bool canonical_singularity_verdict(const std::vector<AutomorphismAction>& actions);

}  // namespace hypdiv
