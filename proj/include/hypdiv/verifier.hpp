#pragma once
// Assembles E(eps) = K_coarse - eps * psi - (1 - eps) * W on the n-pointed
// hyperelliptic space in the symmetric basis, solves the exact linear
// feasibility problem for eps in [0, 1), and classifies (g, n).
//
// Verdict semantics: when some eps > 0 is feasible, K decomposes as an ample
// multiple plus effective classes, so the space is of general type; when only
// eps = 0 is feasible, K itself is effective and the Kodaira dimension is
// nonnegative.  Both verdicts consume three statements as axioms, recorded in
// every certificate: psi is ample, W is effective on the hyperelliptic locus,
// and the singularities impose no adjunction conditions.  An empty interval
// is reported as Inconclusive, never as a negative result.

#include "hypdiv/pullback.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypdiv {

/// c(eps) = constant + slope * eps, exactly.
struct AffineCoefficient {
    Rational constant;
    Rational slope;

    Rational at(const Rational& eps) const { return constant + slope * eps; }

    friend bool operator==(const AffineCoefficient& a, const AffineCoefficient& b) {
        return a.constant == b.constant && a.slope == b.slope;
    }
};

/// Subinterval of [0, 1): [lo, hi] when hi_closed, else [lo, hi).
struct EpsilonInterval {
    bool empty = true;
    Rational lo;
    Rational hi;
    bool hi_closed = false;

    bool contains(const Rational& eps) const {
        if (empty) return false;
        if (eps < lo) return false;
        return hi_closed ? eps <= hi : eps < hi;
    }
};

enum class Verdict { GeneralType, NonnegativeKodaira, Inconclusive };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& name);

using CoefficientRow = std::pair<SymmetricLabel, AffineCoefficient>;

struct KodairaCertificate {
    int g = 0;
    int n = 0;
    LambdaVariant lambda_variant = LambdaVariant::Faithful;
    Verdict verdict = Verdict::Inconclusive;
    EpsilonInterval feasible_interval;
    std::optional<Rational> chosen_epsilon;
    std::vector<CoefficientRow> coefficients;
    std::vector<SymmetricLabel> binding_constraints;
};

/// The three statements every verdict relies on.
const std::vector<std::string>& certificate_assumptions();

/// Symmetric-basis coefficients of E(eps), one affine row per label, in
/// increasing label order.  Requires g >= 2 and n >= max(2, g+1).  Also
/// checks the monotonicity of the genus-0 coefficient family (the per-term
/// coefficient of the cardinality-s boundary class in W is >= the
/// cardinality-2 one) and throws if it fails.
std::vector<CoefficientRow> build_certificate_coefficients(int g, int n, LambdaVariant variant);

/// Exact intersection of { eps in [0,1) : row(eps) >= 0 } over all rows.
EpsilonInterval feasibility_interval(const std::vector<CoefficientRow>& coefficients);

/// Full certificate for one (g, n).  chosen_epsilon is the midpoint of the
/// positive feasible part for GeneralType, 0 for NonnegativeKodaira, absent
/// for Inconclusive.  binding_constraints lists the rows vanishing at the
/// upper interval endpoint (for an empty interval: the rows already negative
/// at eps = 0).
KodairaCertificate classify_kodaira(int g, int n, LambdaVariant variant);

/// Re-derives the verdict of a certificate from its rows; used by the
/// independent recheck.
Verdict verdict_from_interval(const EpsilonInterval& interval);

struct GridCell {
    int g = 0;
    int n = 0;
    std::optional<KodairaCertificate> certificate;
    std::string error;  // nonempty when the cell failed
};

/// One certificate per cell, in input order; per-cell failures are captured
/// in GridCell::error without aborting the grid.  parallelism > 1 fans the
/// cells out to a worker pool; the result is identical for every degree.
std::vector<GridCell> grid_verify(const std::vector<std::pair<int, int>>& cells,
                                  LambdaVariant variant, int parallelism = 1);

}  // namespace hypdiv
