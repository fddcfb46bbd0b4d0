#pragma once

#include <string>

#include "lepage/exterior.hpp"

namespace lepage {

/// One term per line: "<basis>: <coefficient>", basis labels joined by '^'.
/// The zero form prints as "0".
std::string format_form_text(const ExteriorForm& form);

/// Sum of coefficient times dx^{i} \wedge \omega^{σ}_{J} terms.
std::string format_form_latex(const ExteriorForm& form);

inline constexpr const char* kFormSchema = "lepage.form/1";

/// FormDocument JSON: schema, chart {n, m, order}, degree and the terms in
/// basis order, each {coeff, basis}.
std::string to_form_document(const ExteriorForm& form, int indent = 2);

/// Inverse of to_form_document. Throws ParseError on malformed JSON or
/// coefficients, std::invalid_argument on schema violations.
ExteriorForm from_form_document(const std::string& json);

}  // namespace lepage
