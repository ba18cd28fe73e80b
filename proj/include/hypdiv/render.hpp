#pragma once
// Human- and machine-readable renderings of labels and classes.  The compact
// ASCII grammar (label_name / symmetric_label_name) is the stable wire
// format; the pretty and latex renderings mirror the usual notation
// (eps_i, delta_{i,S}, psi_i).

#include "hypdiv/divisor_class.hpp"
#include "hypdiv/symmetric.hpp"

#include <string>

namespace hypdiv {

enum class OutputFormat { Text, Json, Csv, Latex };

OutputFormat parse_output_format(const std::string& name);
std::string to_string(OutputFormat format);

std::string pretty_label(const ClassLabel& label);
std::string pretty_symmetric_label(const SymmetricLabel& label);
std::string latex_label(const ClassLabel& label);
std::string latex_symmetric_label(const SymmetricLabel& label);

std::string latex_fraction(const Rational& x);

/// "eps_0: -7/10, delta_1: -1/10" style single-line listing (pretty labels).
std::string render_class_text(const DivisorClass& x);
std::string render_class_text(const SymmetricDivisorClass& x);

/// Signed LaTeX sum of coefficient * label.
std::string render_class_latex(const DivisorClass& x);
std::string render_class_latex(const SymmetricDivisorClass& x);

/// JSON with the ASCII label grammar and exact num/den string fields.
std::string render_class_json(const DivisorClass& x);
std::string render_class_json(const SymmetricDivisorClass& x);

/// "label,num,den" rows.
std::string render_class_csv(const DivisorClass& x);
std::string render_class_csv(const SymmetricDivisorClass& x);

std::string render_class(const DivisorClass& x, OutputFormat format);
std::string render_class(const SymmetricDivisorClass& x, OutputFormat format);

}  // namespace hypdiv
