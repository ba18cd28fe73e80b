#pragma once
// Forgetful-map pullback calculus on the stable pointed space, the
// degree-g-pencil divisor through the marked points and its symmetrized
// average over g-element subsets, the brute-force enumeration oracle for
// that average, and restriction to the hyperelliptic locus.

#include "hypdiv/formulas.hpp"

namespace hypdiv {

/// Known terms of the class of the closure of the locus of g-pointed curves
/// carrying a degree-g pencil through the sum of the marked points, on the
/// g-pointed stable space.  An effective combination of further boundary
/// divisors has been dropped; omitted_remainder records that.  Dropping it
/// only strengthens every certificate assembled from this class (the
/// remainder enters those certificates with nonnegative sign).
struct PencilDivisor {
    DivisorClass base;
    bool omitted_remainder = true;
};

/// Known terms: -lambda + sum psi_i - 3 * each delta(0,{i,j})
/// - g(g+1)/2 * delta(0,{1..g}).  For g = 2 the pair term and the full-set
/// term name the same class; the stored coefficient is -3.
PencilDivisor pencil_divisor(int g);

/// Pullback along the map forgetting the points outside `retained`.
/// x lives on the m-pointed stable space, |retained| = m, and the point
/// labels of x are identified with the elements of retained in increasing
/// order.  With F the forgotten set:
///   lambda -> lambda,  delta_irr -> delta_irr,
///   psi_k -> psi_k - sum over nonempty T in F of delta(0, {k} union T),
///   delta(a, U) -> sum over T in F of delta(a, U union T).
DivisorClass forgetful_pullback(const DivisorClass& x, const Subset& retained, int n);

/// Closed form for the average of pencil-divisor pullbacks over all
/// g-element subsets of {1..n}, rescaled by 1/C(n-1, g-1).  Requires n > g.
SymmetricDivisorClass symmetrized_pencil_average(int g, int n);

/// The same class by explicit enumeration of all C(n, g) pullbacks;
/// the independent oracle for symmetrized_pencil_average.  Enumeration is
/// refused above max_n (default 14).
SymmetricDivisorClass enumerate_pencil_average(int g, int n, int max_n = 14);

/// Restriction to the hyperelliptic locus: psi and separating boundary
/// classes restrict to their namesakes, delta_irr decomposes through the
/// nonseparating-pair classes, and lambda expands into the boundary basis
/// (pulled back from the base space, with the chosen variant).
DivisorClass restrict_to_hyperelliptic(const DivisorClass& x, LambdaVariant variant);
SymmetricDivisorClass restrict_to_hyperelliptic(const SymmetricDivisorClass& x,
                                                LambdaVariant variant);

}  // namespace hypdiv
