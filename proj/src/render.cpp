#include "hypdiv/render.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace hypdiv {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "latex") return OutputFormat::Latex;
    throw std::invalid_argument("unknown output format: " + name +
                                " (expected text|json|csv|latex)");
}

std::string to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Latex: return "latex";
    }
    throw std::logic_error("unreachable format");
}

namespace {

std::string subset_list(const Subset& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    return os.str();
}

}  // namespace

std::string pretty_label(const ClassLabel& label) {
    std::ostringstream os;
    const bool pointed = label.space.has_marked_points();
    switch (label.kind) {
        case LabelKind::Lambda: return "lambda";
        case LabelKind::DeltaIrr: return "delta_irr";
        case LabelKind::Eps0: return "eps_0";
        case LabelKind::Psi:
            os << "psi_" << label.index;
            return os.str();
        case LabelKind::QuotDelta:
            os << "delta_{0," << label.index << "}";
            return os.str();
        case LabelKind::Eps:
        case LabelKind::Delta: {
            const char* head = label.kind == LabelKind::Eps ? "eps" : "delta";
            if (!pointed) {
                os << head << "_" << label.index;
            } else {
                os << head << "_{" << label.index << ",{" << subset_list(label.subset) << "}}";
            }
            return os.str();
        }
    }
    throw std::logic_error("unreachable label kind");
}

std::string pretty_symmetric_label(const SymmetricLabel& label) {
    std::ostringstream os;
    switch (label.kind) {
        case LabelKind::Lambda: return "lambda";
        case LabelKind::DeltaIrr: return "delta_irr";
        case LabelKind::Eps0: return "eps_0";
        case LabelKind::Psi: return "psi";
        case LabelKind::QuotDelta:
            os << "delta_{0," << label.index << "}";
            return os.str();
        case LabelKind::Eps:
        case LabelKind::Delta:
            os << (label.kind == LabelKind::Eps ? "eps" : "delta") << "_{" << label.index
               << ",s=" << label.cardinality << "}";
            return os.str();
    }
    throw std::logic_error("unreachable label kind");
}

std::string latex_label(const ClassLabel& label) {
    std::ostringstream os;
    const bool pointed = label.space.has_marked_points();
    switch (label.kind) {
        case LabelKind::Lambda: return "\\lambda";
        case LabelKind::DeltaIrr: return "\\delta_{\\mathrm{irr}}";
        case LabelKind::Eps0: return "\\epsilon_0";
        case LabelKind::Psi:
            os << "\\psi_{" << label.index << "}";
            return os.str();
        case LabelKind::QuotDelta:
            os << "\\delta_{0," << label.index << "}";
            return os.str();
        case LabelKind::Eps:
        case LabelKind::Delta: {
            const char* head = label.kind == LabelKind::Eps ? "\\epsilon" : "\\delta";
            if (!pointed) {
                os << head << "_{" << label.index << "}";
            } else {
                os << head << "_{" << label.index << ",\\{" << subset_list(label.subset) << "\\}}";
            }
            return os.str();
        }
    }
    throw std::logic_error("unreachable label kind");
}

std::string latex_symmetric_label(const SymmetricLabel& label) {
    std::ostringstream os;
    switch (label.kind) {
        case LabelKind::Lambda: return "\\lambda";
        case LabelKind::DeltaIrr: return "\\delta_{\\mathrm{irr}}";
        case LabelKind::Eps0: return "\\epsilon_0";
        case LabelKind::Psi: return "\\psi";
        case LabelKind::QuotDelta:
            os << "\\delta_{0," << label.index << "}";
            return os.str();
        case LabelKind::Eps:
        case LabelKind::Delta:
            os << "\\sum_{|S|=" << label.cardinality << "}"
               << (label.kind == LabelKind::Eps ? "\\epsilon" : "\\delta") << "_{" << label.index
               << ",S}";
            return os.str();
    }
    throw std::logic_error("unreachable label kind");
}

std::string latex_fraction(const Rational& x) {
    std::ostringstream os;
    if (x.get_den() == 1) {
        os << x.get_num().get_str();
        return os.str();
    }
    if (sgn(x) < 0) os << "-";
    os << "\\frac{" << Integer(abs(x.get_num())).get_str() << "}{" << x.get_den().get_str() << "}";
    return os.str();
}

namespace {

template <typename Class, typename LabelPrinter>
std::string class_text(const Class& x, LabelPrinter printer) {
    if (x.coefficients().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : x.coefficients()) {
        if (!first) os << ", ";
        os << printer(label) << ": " << to_fraction_string(c);
        first = false;
    }
    return os.str();
}

template <typename Class, typename LabelPrinter>
std::string class_latex(const Class& x, LabelPrinter printer) {
    if (x.coefficients().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : x.coefficients()) {
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1) os << latex_fraction(a) << "\\,";
        os << printer(label);
        first = false;
    }
    return os.str();
}

template <typename Class, typename LabelNamer>
std::string class_json(const Class& x, LabelNamer namer) {
    json coeffs = json::array();
    for (const auto& [label, c] : x.coefficients()) {
        coeffs.push_back({{"label", namer(label)},
                          {"coefficient",
                           {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}}}});
    }
    json out = {{"space", x.space().describe()}, {"coefficients", coeffs}};
    return out.dump(2);
}

template <typename Class, typename LabelNamer>
std::string class_csv(const Class& x, LabelNamer namer) {
    std::ostringstream os;
    os << "label,num,den\n";
    for (const auto& [label, c] : x.coefficients()) {
        os << namer(label) << "," << c.get_num().get_str() << "," << c.get_den().get_str() << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_class_text(const DivisorClass& x) {
    return class_text(x, [](const ClassLabel& l) { return pretty_label(l); });
}
std::string render_class_text(const SymmetricDivisorClass& x) {
    return class_text(x, [](const SymmetricLabel& l) { return pretty_symmetric_label(l); });
}
std::string render_class_latex(const DivisorClass& x) {
    return class_latex(x, [](const ClassLabel& l) { return latex_label(l); });
}
std::string render_class_latex(const SymmetricDivisorClass& x) {
    return class_latex(x, [](const SymmetricLabel& l) { return latex_symmetric_label(l); });
}
std::string render_class_json(const DivisorClass& x) {
    return class_json(x, [](const ClassLabel& l) { return label_name(l); });
}
std::string render_class_json(const SymmetricDivisorClass& x) {
    return class_json(x, [](const SymmetricLabel& l) { return symmetric_label_name(l); });
}
std::string render_class_csv(const DivisorClass& x) {
    return class_csv(x, [](const ClassLabel& l) { return label_name(l); });
}
std::string render_class_csv(const SymmetricDivisorClass& x) {
    return class_csv(x, [](const SymmetricLabel& l) { return symmetric_label_name(l); });
}

std::string render_class(const DivisorClass& x, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return render_class_text(x);
        case OutputFormat::Json: return render_class_json(x);
        case OutputFormat::Csv: return render_class_csv(x);
        case OutputFormat::Latex: return render_class_latex(x);
    }
    throw std::logic_error("unreachable format");
}

std::string render_class(const SymmetricDivisorClass& x, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return render_class_text(x);
        case OutputFormat::Json: return render_class_json(x);
        case OutputFormat::Csv: return render_class_csv(x);
        case OutputFormat::Latex: return render_class_latex(x);
    }
    throw std::logic_error("unreachable format");
}

}  // namespace hypdiv
