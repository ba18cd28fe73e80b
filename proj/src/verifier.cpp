#include "hypdiv/verifier.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace hypdiv {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::GeneralType: return "GeneralType";
        case Verdict::NonnegativeKodaira: return "NonnegativeKodaira";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    throw std::logic_error("unreachable verdict");
}

Verdict parse_verdict(const std::string& name) {
    if (name == "GeneralType") return Verdict::GeneralType;
    if (name == "NonnegativeKodaira") return Verdict::NonnegativeKodaira;
    if (name == "Inconclusive") return Verdict::Inconclusive;
    throw std::invalid_argument("unknown verdict: " + name);
}

const std::vector<std::string>& certificate_assumptions() {
    static const std::vector<std::string> kAssumptions = {
        "psi-ample", "W-effective", "no-adjunction-conditions"};
    return kAssumptions;
}

std::vector<CoefficientRow> build_certificate_coefficients(int g, int n, LambdaVariant variant) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    if (n < 2 || n <= g)
        throw std::invalid_argument("requires n >= max(2, g+1); got g = " + std::to_string(g) +
                                    ", n = " + std::to_string(n));

    const SymmetricDivisorClass w_ambient = symmetrized_pencil_average(g, n);

    // The per-term coefficient of delta0(s) in W is -b_s with b_s >= b_2; the
    // genus-0 rows of E inherit their positivity margin from this.
    const Rational b2 = -w_ambient.coefficient({LabelKind::Delta, 0, 2});
    for (int s = 3; s < n; ++s) {
        const Rational bs = -w_ambient.coefficient({LabelKind::Delta, 0, s});
        if (bs < b2)
            throw std::logic_error("monotonicity failure: b_" + std::to_string(s) + " = " +
                                   to_fraction_string(bs) + " < b_2 = " + to_fraction_string(b2));
    }

    const SymmetricDivisorClass k_coarse = canonical_class_pointed_symmetric(g, n, SpaceVariant::Coarse);
    const SymmetricDivisorClass w = restrict_to_hyperelliptic(w_ambient, variant);

    // E = K - eps*psi - (1-eps)*W: constant = K - W, slope = W - [psi].
    std::map<SymmetricLabel, AffineCoefficient> rows;
    rows[{LabelKind::Psi, 0, 0}] = AffineCoefficient{Rational(0), Rational(0)};
    for (const auto& [label, c] : k_coarse.coefficients()) {
        auto& row = rows[label];
        row.constant += c;
    }
    for (const auto& [label, c] : w.coefficients()) {
        auto& row = rows[label];
        row.constant -= c;
        row.slope += c;
    }
    rows[{LabelKind::Psi, 0, 0}].slope -= 1;

    std::vector<CoefficientRow> out;
    out.reserve(rows.size());
    for (auto& [label, row] : rows) out.emplace_back(label, row);
    return out;
}

EpsilonInterval feasibility_interval(const std::vector<CoefficientRow>& coefficients) {
    // start from [0, 1)
    EpsilonInterval interval;
    interval.empty = false;
    interval.lo = Rational(0);
    interval.hi = Rational(1);
    interval.hi_closed = false;

    for (const auto& [label, row] : coefficients) {
        const int s = sgn(row.slope);
        if (s == 0) {
            if (sgn(row.constant) < 0) {
                interval.empty = true;
                break;
            }
            continue;
        }
        const Rational bound = -row.constant / row.slope;
        if (s > 0) {
            // feasible for eps >= bound
            if (bound > interval.lo) interval.lo = bound;
        } else {
            // feasible for eps <= bound
            if (bound < interval.hi || (bound == interval.hi && !interval.hi_closed)) {
                interval.hi = bound;
                interval.hi_closed = true;
            }
        }
        if (interval.lo > interval.hi ||
            (interval.lo == interval.hi && !interval.hi_closed)) {
            interval.empty = true;
            break;
        }
    }
    if (!interval.empty && interval.lo >= 1) interval.empty = true;
    if (interval.empty) {
        interval.lo = Rational(0);
        interval.hi = Rational(0);
        interval.hi_closed = false;
    }
    return interval;
}

Verdict verdict_from_interval(const EpsilonInterval& interval) {
    if (interval.empty) return Verdict::Inconclusive;
    // A nonempty degenerate interval is a closed point, so some eps > 0 is
    // feasible exactly when lo > 0 or hi > lo.
    if (interval.lo > 0 || interval.hi > interval.lo) return Verdict::GeneralType;
    return Verdict::NonnegativeKodaira;
}

KodairaCertificate classify_kodaira(int g, int n, LambdaVariant variant) {
    KodairaCertificate cert;
    cert.g = g;
    cert.n = n;
    cert.lambda_variant = variant;
    cert.coefficients = build_certificate_coefficients(g, n, variant);
    cert.feasible_interval = feasibility_interval(cert.coefficients);
    cert.verdict = verdict_from_interval(cert.feasible_interval);

    switch (cert.verdict) {
        case Verdict::GeneralType: {
            const Rational lo = cert.feasible_interval.lo;
            const Rational hi = cert.feasible_interval.hi;
            cert.chosen_epsilon = (std::max(lo, Rational(0)) + hi) / 2;
            break;
        }
        case Verdict::NonnegativeKodaira:
            cert.chosen_epsilon = Rational(0);
            break;
        case Verdict::Inconclusive:
            break;
    }

    if (cert.feasible_interval.empty) {
        for (const auto& [label, row] : cert.coefficients) {
            if (sgn(row.constant) < 0) cert.binding_constraints.push_back(label);
        }
    } else if (cert.feasible_interval.hi < 1 || cert.feasible_interval.hi_closed) {
        const Rational hi = cert.feasible_interval.hi;
        for (const auto& [label, row] : cert.coefficients) {
            if (sgn(row.slope) != 0 && sgn(row.at(hi)) == 0) {
                cert.binding_constraints.push_back(label);
            }
        }
    }
    return cert;
}

std::vector<GridCell> grid_verify(const std::vector<std::pair<int, int>>& cells,
                                  LambdaVariant variant, int parallelism) {
    std::vector<GridCell> out(cells.size());
    if (parallelism < 1) parallelism = 1;

    auto run_cell = [&](size_t idx) {
        GridCell& cell = out[idx];
        cell.g = cells[idx].first;
        cell.n = cells[idx].second;
        try {
            cell.certificate = classify_kodaira(cell.g, cell.n, variant);
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    };

    if (parallelism == 1 || cells.size() <= 1) {
        for (size_t i = 0; i < cells.size(); ++i) run_cell(i);
        return out;
    }

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= cells.size()) break;
            run_cell(i);
        }
    };
    std::vector<std::thread> pool;
    const size_t threads = std::min<size_t>(static_cast<size_t>(parallelism), cells.size());
    pool.reserve(threads);
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace hypdiv
