#include "lepage/printer.hpp"

#include "lepage/expr.hpp"

namespace lepage {

namespace {

enum Slot { kTerm = 0, kFactor = 1, kDenominator = 2, kBase = 3 };

struct Style {
  bool latex = false;
  int m = 1;
};

std::string integer_text(const mpz_class& z) { return z.get_str(); }

std::string variable_text(JetVariable v, const Style& s) {
  if (!s.latex) return v.name(s.m);
  if (v.is_base()) return "x^{" + std::to_string(v.base_index()) + "}";
  std::string out = "y";
  if (s.m != 1) out += "^{" + std::to_string(v.fiber_index()) + "}";
  if (v.order() > 0) out += "_{" + v.multi_index().digits() + "}";
  return out;
}

std::string wrap(const std::string& body, const Style& s) {
  return s.latex ? "\\left(" + body + "\\right)" : "(" + body + ")";
}

std::string print(const Expr& e, Slot slot, const Style& s);

// Printed magnitude of e together with its sign, so that sums can use
// binary minus.
std::string unsigned_text(const Expr& e, bool& negative, Slot slot, const Style& s);

std::string join_factors(const std::vector<std::string>& parts, const Style& s) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += s.latex ? " " : "*";
    out += parts[k];
  }
  return out;
}

std::string constant_text(const mpq_class& q, Slot slot, const Style& s) {
  mpq_class a = abs(q);
  std::string body;
  if (a.get_den() == 1) {
    body = integer_text(a.get_num());
  } else if (s.latex) {
    body = "\\frac{" + integer_text(a.get_num()) + "}{" + integer_text(a.get_den()) + "}";
  } else {
    body = integer_text(a.get_num()) + "/" + integer_text(a.get_den());
    if (slot >= kDenominator) body = "(" + body + ")";
  }
  return body;
}

std::string product_text(const Expr& e, bool& negative, const Style& s) {
  std::vector<Expr> num;
  std::vector<Expr> den;
  mpq_class coef = 1;
  bool has_coef = false;
  for (const auto& c : e.children()) {
    if (c.kind() == NodeKind::Constant) {
      coef *= c.value();
      has_coef = true;
    } else if (c.kind() == NodeKind::Power && c.exponent() < 0) {
      den.push_back(c.exponent() == -1 ? c.children()[0] : Expr::power(c.children()[0], -c.exponent()));
    } else {
      num.push_back(c);
    }
  }
  negative = coef < 0;
  mpq_class a = abs(coef);
  std::vector<std::string> num_parts;
  std::vector<std::string> den_parts;
  bool show_coef = has_coef && (a != 1 || num.empty());
  if (!den.empty() && show_coef && a.get_den() != 1) {
    // Fold the rational coefficient into the fraction.
    if (a.get_num() != 1 || num.empty()) num_parts.push_back(integer_text(a.get_num()));
    den_parts.push_back(integer_text(a.get_den()));
  } else if (show_coef) {
    num_parts.push_back(constant_text(a, kFactor, s));
  }
  for (const auto& f : num) num_parts.push_back(print(f, kFactor, s));
  for (const auto& f : den) den_parts.push_back(print(f, den.size() == 1 && den_parts.empty() ? kDenominator : kFactor, s));
  if (num_parts.empty()) num_parts.push_back("1");
  if (den_parts.empty()) return join_factors(num_parts, s);
  if (s.latex) return "\\frac{" + join_factors(num_parts, s) + "}{" + join_factors(den_parts, s) + "}";
  std::string d = join_factors(den_parts, s);
  if (den_parts.size() > 1) d = "(" + d + ")";
  return join_factors(num_parts, s) + "/" + d;
}

std::string unsigned_text(const Expr& e, bool& negative, Slot slot, const Style& s) {
  negative = false;
  switch (e.kind()) {
    case NodeKind::Constant:
      negative = e.value() < 0;
      return constant_text(e.value(), slot, s);
    case NodeKind::Product: return product_text(e, negative, s);
    default: return print(e, slot, s);
  }
}

std::string print(const Expr& e, Slot slot, const Style& s) {
  switch (e.kind()) {
    case NodeKind::Constant:
    case NodeKind::Product: {
      bool neg = false;
      std::string body = unsigned_text(e, neg, slot, s);
      bool compound = e.kind() == NodeKind::Product && !s.latex && slot >= kDenominator;
      if (neg) body = "-" + body;
      if ((neg && slot >= kFactor) || compound ||
          (e.kind() == NodeKind::Product && slot >= kBase)) {
        return wrap(body, s);
      }
      if (e.kind() == NodeKind::Constant && e.value().get_den() != 1 && slot >= kBase) return wrap(body, s);
      return body;
    }
    case NodeKind::Variable: return variable_text(e.var(), s);
    case NodeKind::Sum: {
      std::string out;
      bool first = true;
      for (const auto& c : e.children()) {
        bool neg = false;
        std::string t = unsigned_text(c, neg, kTerm, s);
        if (first) {
          out = neg ? "-" + t : t;
        } else {
          out += neg ? " - " : " + ";
          out += t;
        }
        first = false;
      }
      return slot >= kFactor ? wrap(out, s) : out;
    }
    case NodeKind::Power: {
      const Expr& b = e.children()[0];
      if (e.exponent() < 0) {
        Expr pos = e.exponent() == -1 ? b : Expr::power(b, -e.exponent());
        std::string body = s.latex ? "\\frac{1}{" + print(pos, kTerm, s) + "}" : "1/" + print(pos, kDenominator, s);
        return (!s.latex && slot >= kDenominator) ? wrap(body, s) : body;
      }
      std::string base = print(b, kBase, s);
      std::string body = s.latex ? base + "^{" + std::to_string(e.exponent()) + "}" : base + "^" + std::to_string(e.exponent());
      return slot >= kBase ? wrap(body, s) : body;
    }
    case NodeKind::Quotient: {
      if (s.latex) {
        return "\\frac{" + print(e.children()[0], kTerm, s) + "}{" + print(e.children()[1], kTerm, s) + "}";
      }
      std::string body = print(e.children()[0], kFactor, s) + "/" + print(e.children()[1], kDenominator, s);
      return slot >= kDenominator ? wrap(body, s) : body;
    }
    case NodeKind::Function: {
      std::string arg = print(e.children()[0], kTerm, s);
      if (s.latex) return "\\" + function_name(e.function_kind()) + wrap(arg, s);
      return function_name(e.function_kind()) + "(" + arg + ")";
    }
  }
  return "";
}

}  // namespace

std::string to_string(const Expr& e, int m) { return print(e, kTerm, Style{false, m}); }

std::string to_latex(const Expr& e, int m) { return print(e, kTerm, Style{true, m}); }

}  // namespace lepage
