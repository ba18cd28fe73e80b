#include "hypdiv/certificate_io.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>

namespace hypdiv {

using nlohmann::json;

namespace {

json fraction_json(const Rational& x) {
    return {{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

Rational fraction_from_json(const json& j) {
    const std::string num = j.at("num").get<std::string>();
    const std::string den = j.at("den").get<std::string>();
    return parse_fraction(num + "/" + den);
}

std::string interval_text(const EpsilonInterval& iv) {
    if (iv.empty) return "empty";
    return "[" + to_fraction_string(iv.lo) + ", " + to_fraction_string(iv.hi) +
           (iv.hi_closed ? "]" : ")");
}

}  // namespace

std::string certificate_to_json(const KodairaCertificate& cert) {
    json j;
    j["g"] = cert.g;
    j["n"] = cert.n;
    j["lambda_variant"] = to_string(cert.lambda_variant);
    j["verdict"] = to_string(cert.verdict);
    if (cert.chosen_epsilon) j["epsilon"] = fraction_json(*cert.chosen_epsilon);
    if (cert.feasible_interval.empty) {
        j["epsilon_interval"] = nullptr;
    } else {
        j["epsilon_interval"] = {{"lo", fraction_json(cert.feasible_interval.lo)},
                                 {"hi", fraction_json(cert.feasible_interval.hi)},
                                 {"hi_closed", cert.feasible_interval.hi_closed}};
    }
    json rows = json::array();
    for (const auto& [label, row] : cert.coefficients) {
        rows.push_back({{"label", symmetric_label_name(label)},
                        {"constant", fraction_json(row.constant)},
                        {"slope", fraction_json(row.slope)}});
    }
    j["coefficients"] = rows;
    json binding = json::array();
    for (const auto& label : cert.binding_constraints) binding.push_back(symmetric_label_name(label));
    j["binding_constraints"] = binding;
    j["assumptions"] = certificate_assumptions();
    return j.dump(2);
}

KodairaCertificate certificate_from_json(const std::string& text) {
    json j = json::parse(text);
    KodairaCertificate cert;
    cert.g = j.at("g").get<int>();
    cert.n = j.at("n").get<int>();
    cert.lambda_variant = parse_lambda_variant(j.at("lambda_variant").get<std::string>());
    cert.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (j.contains("epsilon") && !j.at("epsilon").is_null()) {
        cert.chosen_epsilon = fraction_from_json(j.at("epsilon"));
    }
    const json& iv = j.at("epsilon_interval");
    if (iv.is_null()) {
        cert.feasible_interval.empty = true;
    } else {
        cert.feasible_interval.empty = false;
        cert.feasible_interval.lo = fraction_from_json(iv.at("lo"));
        cert.feasible_interval.hi = fraction_from_json(iv.at("hi"));
        cert.feasible_interval.hi_closed = iv.at("hi_closed").get<bool>();
    }
    for (const json& row : j.at("coefficients")) {
        cert.coefficients.emplace_back(
            parse_symmetric_label(row.at("label").get<std::string>()),
            AffineCoefficient{fraction_from_json(row.at("constant")),
                              fraction_from_json(row.at("slope"))});
    }
    for (const json& name : j.at("binding_constraints")) {
        cert.binding_constraints.push_back(parse_symmetric_label(name.get<std::string>()));
    }
    if (j.contains("assumptions")) {
        std::vector<std::string> assumptions;
        for (const json& a : j.at("assumptions")) assumptions.push_back(a.get<std::string>());
        if (assumptions != certificate_assumptions()) {
            throw std::invalid_argument("certificate lists unexpected assumptions");
        }
    }
    return cert;
}

std::string certificate_to_text(const KodairaCertificate& cert) {
    std::ostringstream os;
    os << "Hbar(" << cert.g << "," << cert.n << "): " << to_string(cert.verdict)
       << " [lambda variant: " << to_string(cert.lambda_variant) << "]\n";
    os << "  feasible epsilon: " << interval_text(cert.feasible_interval) << "\n";
    if (cert.chosen_epsilon) {
        os << "  chosen epsilon:   " << to_fraction_string(*cert.chosen_epsilon) << "\n";
    }
    if (!cert.binding_constraints.empty()) {
        os << "  binding:          ";
        for (size_t i = 0; i < cert.binding_constraints.size(); ++i) {
            if (i) os << ", ";
            os << symmetric_label_name(cert.binding_constraints[i]);
        }
        os << "\n";
    }
    os << "  assumptions:      ";
    const auto& assumptions = certificate_assumptions();
    for (size_t i = 0; i < assumptions.size(); ++i) {
        if (i) os << ", ";
        os << assumptions[i];
    }
    os << "\n";
    return os.str();
}

RecheckResult recheck_certificate(const KodairaCertificate& cert) {
    auto fail = [](std::string msg) { return RecheckResult{false, std::move(msg)}; };
    KodairaCertificate fresh;
    try {
        fresh = classify_kodaira(cert.g, cert.n, cert.lambda_variant);
    } catch (const std::exception& e) {
        return fail(std::string("recomputation failed: ") + e.what());
    }

    if (fresh.coefficients.size() != cert.coefficients.size())
        return fail("coefficient row count differs from recomputation");
    for (size_t i = 0; i < fresh.coefficients.size(); ++i) {
        if (!(fresh.coefficients[i].first == cert.coefficients[i].first) ||
            !(fresh.coefficients[i].second == cert.coefficients[i].second)) {
            return fail("coefficient row " + symmetric_label_name(cert.coefficients[i].first) +
                        " differs from recomputation");
        }
    }

    const EpsilonInterval& a = fresh.feasible_interval;
    const EpsilonInterval& b = cert.feasible_interval;
    if (a.empty != b.empty ||
        (!a.empty && (a.lo != b.lo || a.hi != b.hi || a.hi_closed != b.hi_closed)))
        return fail("feasible interval differs from recomputation");

    if (fresh.verdict != cert.verdict) return fail("verdict differs from recomputation");

    if (fresh.chosen_epsilon.has_value() != cert.chosen_epsilon.has_value())
        return fail("chosen epsilon presence differs from recomputation");
    if (cert.chosen_epsilon) {
        if (*fresh.chosen_epsilon != *cert.chosen_epsilon)
            return fail("chosen epsilon differs from recomputation");
        if (!cert.feasible_interval.contains(*cert.chosen_epsilon))
            return fail("chosen epsilon lies outside the feasible interval");
        if (cert.verdict == Verdict::GeneralType && !(*cert.chosen_epsilon > 0))
            return fail("GeneralType requires a positive chosen epsilon");
        for (const auto& [label, row] : cert.coefficients) {
            if (sgn(row.at(*cert.chosen_epsilon)) < 0) {
                return fail("coefficient of " + symmetric_label_name(label) +
                            " is negative at the chosen epsilon");
            }
        }
    }

    if (fresh.binding_constraints != cert.binding_constraints)
        return fail("binding constraints differ from recomputation");

    return RecheckResult{true, "ok"};
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string binding_list(const KodairaCertificate& cert, const char* sep) {
    std::string out;
    for (size_t i = 0; i < cert.binding_constraints.size(); ++i) {
        if (i) out += sep;
        out += symmetric_label_name(cert.binding_constraints[i]);
    }
    return out;
}

}  // namespace

std::string grid_report_csv(const std::vector<GridCell>& cells, LambdaVariant variant) {
    std::ostringstream os;
    os << "g,n,lambda_variant,verdict,eps_lo,eps_hi,hi_closed,chosen_epsilon,binding_constraints,error\n";
    for (const auto& cell : cells) {
        os << cell.g << "," << cell.n << "," << to_string(variant) << ",";
        if (cell.certificate) {
            const auto& cert = *cell.certificate;
            os << to_string(cert.verdict) << ",";
            if (cert.feasible_interval.empty) {
                os << ",,,";
            } else {
                os << to_fraction_string(cert.feasible_interval.lo) << ","
                   << to_fraction_string(cert.feasible_interval.hi) << ","
                   << (cert.feasible_interval.hi_closed ? "true" : "false") << ",";
            }
            os << (cert.chosen_epsilon ? to_fraction_string(*cert.chosen_epsilon) : "") << ",";
            os << csv_escape(binding_list(cert, ";")) << ",";
        } else {
            os << "error,,,,,";
        }
        os << csv_escape(cell.error) << "\n";
    }
    return os.str();
}

std::string grid_report_json(const std::vector<GridCell>& cells, LambdaVariant variant) {
    json rows = json::array();
    for (const auto& cell : cells) {
        json row;
        row["g"] = cell.g;
        row["n"] = cell.n;
        if (cell.certificate) {
            const auto& cert = *cell.certificate;
            row["verdict"] = to_string(cert.verdict);
            if (cert.feasible_interval.empty) {
                row["epsilon_interval"] = nullptr;
            } else {
                row["epsilon_interval"] = {{"lo", fraction_json(cert.feasible_interval.lo)},
                                           {"hi", fraction_json(cert.feasible_interval.hi)},
                                           {"hi_closed", cert.feasible_interval.hi_closed}};
            }
            if (cert.chosen_epsilon) row["epsilon"] = fraction_json(*cert.chosen_epsilon);
            json binding = json::array();
            for (const auto& label : cert.binding_constraints) {
                binding.push_back(symmetric_label_name(label));
            }
            row["binding_constraints"] = binding;
        } else {
            row["error"] = cell.error;
        }
        rows.push_back(row);
    }
    json out = {{"lambda_variant", to_string(variant)},
                {"assumptions", certificate_assumptions()},
                {"cells", rows}};
    return out.dump(2);
}

std::string grid_report_text(const std::vector<GridCell>& cells, LambdaVariant variant) {
    std::ostringstream os;
    os << "lambda variant: " << to_string(variant) << "\n";
    os << std::left << std::setw(4) << "g" << std::setw(5) << "n" << std::setw(20) << "verdict"
       << std::setw(28) << "feasible epsilon" << "binding\n";
    for (const auto& cell : cells) {
        os << std::left << std::setw(4) << cell.g << std::setw(5) << cell.n;
        if (cell.certificate) {
            const auto& cert = *cell.certificate;
            os << std::setw(20) << to_string(cert.verdict) << std::setw(28)
               << interval_text(cert.feasible_interval) << binding_list(cert, ", ");
        } else {
            os << std::setw(20) << "error" << cell.error;
        }
        os << "\n";
    }
    return os.str();
}

std::string grid_report_latex(const std::vector<GridCell>& cells, LambdaVariant variant) {
    std::ostringstream os;
    os << "% lambda variant: " << to_string(variant) << "\n";
    os << "\\begin{tabular}{rrll}\n";
    os << "$g$ & $n$ & verdict & feasible $\\epsilon$ \\\\\n\\hline\n";
    for (const auto& cell : cells) {
        os << cell.g << " & " << cell.n << " & ";
        if (cell.certificate) {
            const auto& cert = *cell.certificate;
            os << to_string(cert.verdict) << " & $";
            if (cert.feasible_interval.empty) {
                os << "\\emptyset";
            } else {
                os << "[" << latex_fraction(cert.feasible_interval.lo) << ", "
                   << latex_fraction(cert.feasible_interval.hi)
                   << (cert.feasible_interval.hi_closed ? "]" : ")");
            }
            os << "$ \\\\\n";
        } else {
            os << "error & " << cell.error << " \\\\\n";
        }
    }
    os << "\\end{tabular}\n";
    return os.str();
}

std::string grid_report(const std::vector<GridCell>& cells, LambdaVariant variant,
                        OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return grid_report_csv(cells, variant);
        case OutputFormat::Json: return grid_report_json(cells, variant);
        case OutputFormat::Text: return grid_report_text(cells, variant);
        case OutputFormat::Latex: return grid_report_latex(cells, variant);
    }
    throw std::logic_error("unreachable format");
}

}  // namespace hypdiv
