#pragma once
// Constructors for the named divisor classes on the hyperelliptic moduli
// spaces: the boundary expression of the Hodge class, the irreducible-node
// decomposition, canonical classes (stack and coarse variants) on the base
// and pointed spaces, the canonical class of the rational quotient model,
// the boundary dictionary of the quotient isomorphism, and the ramification
// divisors of the stack-to-coarse comparison maps.
//
// Pointed-space formulas are generated by summing raw (index, subset) terms
// over all subsets and canonicalizing, so conjugate namings of one divisor
// accumulate their coefficients automatically.

#include "hypdiv/divisor_class.hpp"
#include "hypdiv/symmetric.hpp"

namespace hypdiv {

/// Canonical classes exist on the moduli stack and on its coarse space; the
/// two differ by the ramification divisor of the comparison map.
enum class SpaceVariant { Stack, Coarse };

/// Scaling of the separating-node coefficients in the boundary expression of
/// the Hodge class used when restricting classes from the stable pointed
/// space.  Faithful preserves the base-space relation coefficients 4i(g-i);
/// Printed uses i(g-i).  Verifier verdicts must agree under both.
enum class LambdaVariant { Faithful, Printed };

std::string to_string(SpaceVariant v);
std::string to_string(LambdaVariant v);
LambdaVariant parse_lambda_variant(const std::string& name);

/// Hodge class in the boundary basis on the base hyperelliptic space:
/// (8g+4)*lambda = g*eps0 + sum 2(i+1)(g-i)*eps_i + sum 4i(g-i)*delta_i.
DivisorClass lambda_relation(int g);

/// Same with the delta coefficient selected by the variant.
DivisorClass lambda_boundary_expression(int g, LambdaVariant variant);

/// delta_irr = eps0 + 2 * sum of the nonseparating-pair classes, on the base
/// space (n absent) or the pointed space (each distinct generator once).
DivisorClass delta_irr_decomposition(int g);
DivisorClass delta_irr_decomposition(int g, int n);

/// Canonical class of the quotient model of the base space, in the
/// quotient boundary basis delta0(2..g+1).
DivisorClass canonical_class_rational_quotient(int g);

/// Boundary dictionary of the quotient isomorphism, extended linearly:
/// delta0(2i+2) -> eps_i (eps0 for i = 0), delta0(2i+1) -> (1/2) delta_i.
DivisorClass phi_pullback(const DivisorClass& x);

/// Canonical class of the base hyperelliptic space.
DivisorClass canonical_class_base(int g, SpaceVariant variant);

/// Canonical class of the n-pointed hyperelliptic space (labeled basis).
/// Coarse requires n >= 2.
DivisorClass canonical_class_pointed(int g, int n, SpaceVariant variant);

/// Same class in the symmetric basis, built from per-orbit closed forms;
/// usable for large n.
SymmetricDivisorClass canonical_class_pointed_symmetric(int g, int n, SpaceVariant variant);

/// Pullback along the map forgetting all marked points: eps0 -> eps0,
/// eps_i -> sum over all subsets, delta_i -> sum over all subsets.
DivisorClass hyperelliptic_forgetful_pullback(const DivisorClass& x, int n);

/// Ramification divisor of the stack-to-coarse map: sum of delta_i on the
/// base space; sum over i = 1..g of delta(i, empty) on the pointed space
/// (n >= 2; the n = 1 pointed space has an extra quasireflection locus that
/// this catalog does not model).
DivisorClass ramification_divisor(int g);
DivisorClass ramification_divisor(int g, int n);

}  // namespace hypdiv
