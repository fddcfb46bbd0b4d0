#include "lepage/form_io.hpp"

#include "json.hpp"
#include "lepage/errors.hpp"
#include "lepage/parser.hpp"
#include "lepage/printer.hpp"

namespace lepage {

namespace {

std::string basis_text(const BasisTuple& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "^" : "") + t[k].label();
  return out;
}

std::string element_latex(CoframeElement e, int m) {
  if (e.is_dx()) return "dx^{" + std::to_string(e.index()) + "}";
  std::string out = "\\omega";
  if (m != 1) out += "^{" + std::to_string(e.sigma()) + "}";
  if (e.order() > 0) out += "_{" + e.multi_index().digits() + "}";
  return out;
}

}  // namespace

std::string format_form_text(const ExteriorForm& form) {
  if (form.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : form.terms()) {
    if (!out.empty()) out += "\n";
    out += (t.empty() ? std::string("1") : basis_text(t)) + ": " + to_string(c, form.chart().m);
  }
  return out;
}

std::string format_form_latex(const ExteriorForm& form) {
  if (form.is_zero()) return "0";
  const int m = form.chart().m;
  std::string out;
  for (const auto& [t, c] : form.terms()) {
    std::string basis;
    for (std::size_t k = 0; k < t.size(); ++k) basis += (k ? " \\wedge " : "") + element_latex(t[k], m);
    std::string coeff = to_latex(c, m);
    bool sum = c.kind() == NodeKind::Sum;
    std::string term = c.is_one() && !t.empty() ? basis : (sum ? "\\left(" + coeff + "\\right)" : coeff) +
                                                               (t.empty() ? "" : " " + basis);
    if (out.empty()) {
      out = term;
    } else if (term.starts_with("-")) {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string to_form_document(const ExteriorForm& form, int indent) {
  nlohmann::ordered_json doc;
  doc["schema"] = kFormSchema;
  doc["chart"] = {{"n", form.chart().n}, {"m", form.chart().m}, {"order", form.order()}};
  doc["degree"] = form.degree();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [t, c] : form.terms()) {
    auto basis = nlohmann::ordered_json::array();
    for (auto e : t) basis.push_back(e.label());
    terms.push_back({{"coeff", to_string(c, form.chart().m)}, {"basis", basis}});
  }
  doc["terms"] = terms;
  return doc.dump(indent);
}

ExteriorForm from_form_document(const std::string& json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  try {
    if (doc.at("schema").get<std::string>() != kFormSchema) throw std::invalid_argument("unsupported form schema");
    const auto& chart = doc.at("chart");
    ChartContext ctx(chart.at("n").get<int>(), chart.at("m").get<int>(), chart.at("order").get<int>());
    const int degree = doc.at("degree").get<int>();
    ExteriorForm out(ctx, degree, ctx.max_order);
    for (const auto& term : doc.at("terms")) {
      BasisTuple t;
      for (const auto& label : term.at("basis")) t.push_back(CoframeElement::from_label(label.get<std::string>()));
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (!(t[k - 1] < t[k])) throw std::invalid_argument("basis labels must be strictly increasing");
      }
      if (out.terms().contains(t)) throw std::invalid_argument("repeated basis tuple");
      out.add_term(t, parse_expression(term.at("coeff").get<std::string>(), ctx));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed form document: ") + e.what());
  }
}

}  // namespace lepage
