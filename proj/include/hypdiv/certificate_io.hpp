#pragma once
// Stable serialization of certificates and grid reports, and the independent
// recheck of an emitted certificate.
//
// Certificate JSON schema (field names are a stable contract):
//   g, n, lambda_variant, verdict,
//   epsilon {num, den}                       (absent for Inconclusive)
//   epsilon_interval {lo{num,den}, hi{num,den}, hi_closed}   (null when empty)
//   coefficients [{label, constant{num,den}, slope{num,den}}]
//   binding_constraints [label]
//   assumptions [string]
// All fractions are in lowest terms; num/den are decimal strings so that
// values beyond 2^53 survive every JSON reader unchanged.

#include "hypdiv/render.hpp"
#include "hypdiv/verifier.hpp"

#include <string>
#include <vector>

namespace hypdiv {

std::string certificate_to_json(const KodairaCertificate& cert);
KodairaCertificate certificate_from_json(const std::string& text);

/// Human-readable one-paragraph summary.
std::string certificate_to_text(const KodairaCertificate& cert);

struct RecheckResult {
    bool ok = false;
    std::string message;  // first failure, or "ok"
};

/// Recomputes the coefficient rows, interval, verdict and chosen epsilon for
/// the certificate's (g, n, variant), compares them field by field, and
/// re-evaluates every row at chosen_epsilon checking nonnegativity.
RecheckResult recheck_certificate(const KodairaCertificate& cert);

/// Grid report renderings.  Row order follows the cell order.
std::string grid_report_csv(const std::vector<GridCell>& cells, LambdaVariant variant);
std::string grid_report_json(const std::vector<GridCell>& cells, LambdaVariant variant);
std::string grid_report_text(const std::vector<GridCell>& cells, LambdaVariant variant);
std::string grid_report_latex(const std::vector<GridCell>& cells, LambdaVariant variant);
std::string grid_report(const std::vector<GridCell>& cells, LambdaVariant variant,
                        OutputFormat format);

}  // namespace hypdiv
