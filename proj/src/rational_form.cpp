#include "rational_form.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lepage/errors.hpp"

namespace lepage {
Expr make_canonical_node(std::shared_ptr<detail::Node> node,
                         std::shared_ptr<const detail::RationalForm> form);
}

namespace lepage::detail {

// ---------------------------------------------------------------------------
// Atoms and monomials
// ---------------------------------------------------------------------------

JetVariable Atom::variable() const { return JetVariable::from_key(key); }

Expr Atom::to_expr() const {
  if (is_variable()) return Expr::variable(variable());
  return Expr::function(function(), arg);
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept {
  if (auto c = a.key <=> b.key; c != 0) return c;
  if (a.is_variable()) return std::strong_ordering::equal;
  return a.arg <=> b.arg;
}

int total_degree(const Monomial& m) noexcept {
  int d = 0;
  for (const auto& [atom, e] : m) d += e;
  return d;
}

// Graded lexicographic order on exponent vectors, with smaller atoms
// acting as the more significant variables.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
  std::size_t k = 0;
  for (; k < a.size() && k < b.size(); ++k) {
    auto ca = a[k].first <=> b[k].first;
    if (ca == 0) {
      if (auto c = a[k].second <=> b[k].second; c != 0) return c;
      continue;
    }
    return ca < 0 ? (a[k].second <=> 0) : (0 <=> b[k].second);
  }
  if (k < a.size()) return a[k].second <=> 0;
  if (k < b.size()) return 0 <=> b[k].second;
  return std::strong_ordering::equal;
}

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

Monomial monomial_power(const Monomial& m, int k) {
  Monomial out;
  if (k == 0) return out;
  out.reserve(m.size());
  for (const auto& [atom, e] : m) out.emplace_back(atom, e * k);
  return out;
}

// Terms are kept in descending monomial order so that the leading term
// comes first.
bool term_before(const Term& a, const Term& b) { return compare_monomials(a.mono, b.mono) > 0; }

}  // namespace

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

Poly Poly::constant(const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back(Term{{}, c});
  return p;
}

Poly Poly::monomial(Monomial m, const mpq_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back(Term{std::move(m), c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && compare_monomials(p.terms_.back().mono, t.mono) == 0) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.empty());
}

mpq_class Poly::constant_value() const { return terms_.empty() ? mpq_class(0) : terms_.front().coef; }

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size()) {
      out.terms_.push_back(a.terms_[i++]);
      continue;
    }
    if (i == a.terms_.size()) {
      out.terms_.push_back(b.terms_[j++]);
      continue;
    }
    auto c = compare_monomials(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      mpq_class s = a.terms_[i].coef + b.terms_[j].coef;
      if (s != 0) out.terms_.push_back(Term{a.terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + b.scaled(-1); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      terms.push_back(Term{multiply_monomials(ta.mono, tb.mono), ta.coef * tb.coef});
    }
  }
  return Poly::from_terms(std::move(terms));
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Poly out = *this;
  for (auto& t : out.terms_) t.coef *= c;
  return out;
}

Poly Poly::times_monomial(const Monomial& m, const mpq_class& c) const {
  if (c == 0 || is_zero()) return {};
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(Term{multiply_monomials(t.mono, m), t.coef * c});
  return Poly::from_terms(std::move(terms));
}

Poly Poly::power(int k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  std::size_t k = 0;
  for (; k < a.terms_.size() && k < b.terms_.size(); ++k) {
    if (auto c = compare_monomials(a.terms_[k].mono, b.terms_[k].mono); c != 0) return c;
    int cc = cmp(a.terms_[k].coef, b.terms_[k].coef);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// ---------------------------------------------------------------------------
// Rational forms
// ---------------------------------------------------------------------------

namespace {

std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b, bool take_max) {
  std::vector<Factor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
    } else if (i == a.size()) {
      out.push_back(b[j++]);
    } else {
      auto c = a[i].poly <=> b[j].poly;
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j++]);
      } else {
        int e = take_max ? std::max(a[i].exponent, b[j].exponent) : a[i].exponent + b[j].exponent;
        out.push_back(Factor{a[i].poly, e});
        ++i;
        ++j;
      }
    }
  }
  return out;
}

// prod_k F_k^{e_k} for the factors of `target` not already covered by `have`.
Poly missing_part(const std::vector<Factor>& target, const std::vector<Factor>& have) {
  Poly out = Poly::constant(1);
  std::size_t j = 0;
  for (const auto& f : target) {
    while (j < have.size() && (have[j].poly <=> f.poly) < 0) ++j;
    int have_e = (j < have.size() && (have[j].poly <=> f.poly) == 0) ? have[j].exponent : 0;
    if (f.exponent > have_e) out = out * f.poly.power(f.exponent - have_e);
  }
  return out;
}

Poly expand(const std::vector<Factor>& den) {
  Poly out = Poly::constant(1);
  for (const auto& f : den) out = out * f.poly.power(f.exponent);
  return out;
}

}  // namespace

RationalForm add(const RationalForm& a, const RationalForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den.size() == b.den.size() &&
      std::equal(a.den.begin(), a.den.end(), b.den.begin(), [](const Factor& x, const Factor& y) {
        return x.exponent == y.exponent && x.poly == y.poly;
      })) {
    RationalForm out{a.num + b.num, a.den};
    if (out.num.is_zero()) out.den.clear();
    return out;
  }
  auto lcm = merge_factors(a.den, b.den, true);
  Poly num = a.num * missing_part(lcm, a.den) + b.num * missing_part(lcm, b.den);
  if (num.is_zero()) return {};
  return {std::move(num), std::move(lcm)};
}

RationalForm multiply(const RationalForm& a, const RationalForm& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num * b.num, merge_factors(a.den, b.den, false)};
}

RationalForm negate(const RationalForm& a) { return scale(a, -1); }

RationalForm scale(const RationalForm& a, const mpq_class& c) {
  if (c == 0 || a.is_zero()) return {};
  return {a.num.scaled(c), a.den};
}

RationalForm inverse(const RationalForm& a) {
  if (a.is_zero()) throw DomainError("division by zero", "0");
  // Split the numerator as c * content * P with P normalized.
  std::map<Atom, int> content;
  bool first = true;
  for (const auto& t : a.num.terms()) {
    if (first) {
      for (const auto& [atom, e] : t.mono) content[atom] = e;
      first = false;
      continue;
    }
    for (auto& [atom, e] : content) {
      auto it = std::find_if(t.mono.begin(), t.mono.end(), [&](const auto& p) { return p.first == atom; });
      e = std::min(e, it == t.mono.end() ? 0 : it->second);
    }
    for (const auto& [atom, e] : t.mono) {
      if (!content.contains(atom)) content[atom] = std::min(e, 0);
    }
  }
  Monomial content_mono;
  for (const auto& [atom, e] : content) {
    if (e != 0) content_mono.emplace_back(atom, e);
  }
  Poly reduced = a.num.times_monomial(monomial_power(content_mono, -1), 1);
  mpq_class lead = reduced.terms().front().coef;
  Poly normalized = reduced.scaled(1 / lead);

  RationalForm out;
  out.num = expand(a.den).times_monomial(monomial_power(content_mono, -1), 1 / lead);
  if (!normalized.is_constant()) out.den.push_back(Factor{std::move(normalized), 1});
  return out;
}

RationalForm power(const RationalForm& a, int k) {
  if (k == 0) return RationalForm::constant(1);
  if (k < 0) return power(inverse(a), -k);
  if (a.is_zero()) return {};
  RationalForm out{a.num.power(k), a.den};
  for (auto& f : out.den) f.exponent *= k;
  return out;
}

// ---------------------------------------------------------------------------
// Tree <-> form
// ---------------------------------------------------------------------------

namespace {

RationalForm inverse_of(const Expr& e);

RationalForm function_form(FunctionKind fn, const Expr& raw_arg) {
  Expr arg = to_expr(form_of(raw_arg));
  if (arg.is_zero()) {
    switch (fn) {
      case FunctionKind::Sin: return {};
      case FunctionKind::Cos:
      case FunctionKind::Exp: return RationalForm::constant(1);
      case FunctionKind::Ln: throw DomainError("logarithm of zero", "ln(0)");
    }
  }
  if (fn == FunctionKind::Ln && arg.is_one()) return {};
  return RationalForm::of(Poly::monomial({{Atom::of(fn, arg), 1}}));
}

RationalForm compute_form(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Constant: return RationalForm::constant(e.value());
    case NodeKind::Variable: return RationalForm::of(Poly::monomial({{Atom::of(e.var()), 1}}));
    case NodeKind::Sum: {
      RationalForm acc;
      for (const auto& c : e.children()) acc = add(acc, form_of(c));
      return acc;
    }
    case NodeKind::Product: {
      RationalForm acc = RationalForm::constant(1);
      for (const auto& c : e.children()) {
        acc = multiply(acc, form_of(c));
        if (acc.is_zero()) break;
      }
      return acc;
    }
    case NodeKind::Power:
      return e.exponent() >= 0 ? power(form_of(e.children()[0]), e.exponent())
                               : power(inverse_of(e.children()[0]), -e.exponent());
    case NodeKind::Quotient: return multiply(form_of(e.children()[0]), inverse_of(e.children()[1]));
    case NodeKind::Function: return function_form(e.function_kind(), e.children()[0]);
  }
  return {};
}

// Inversion that distributes over products and powers before expanding, so
// that factored denominators of canonical trees are recovered exactly.
RationalForm inverse_of(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Product: {
      RationalForm acc = RationalForm::constant(1);
      for (const auto& c : e.children()) acc = multiply(acc, inverse_of(c));
      return acc;
    }
    case NodeKind::Power:
      return e.exponent() >= 0 ? power(inverse_of(e.children()[0]), e.exponent())
                               : power(form_of(e.children()[0]), -e.exponent());
    case NodeKind::Quotient: return multiply(form_of(e.children()[1]), inverse_of(e.children()[0]));
    default: {
      RationalForm f = form_of(e);
      if (f.is_zero()) throw DomainError("division by zero", to_string(e));
      return inverse(f);
    }
  }
}

Expr monomial_tree(const Monomial& mono, const mpq_class& coef) {
  std::vector<Expr> factors;
  if (coef != 1 || mono.empty()) factors.push_back(Expr::constant(coef));
  for (const auto& [atom, e] : mono) {
    Expr a = atom.to_expr();
    factors.push_back(e == 1 ? a : Expr::power(a, e));
  }
  return factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
}

Expr poly_tree(const Poly& p) {
  if (p.is_zero()) return Expr();
  std::vector<Expr> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.push_back(monomial_tree(t.mono, t.coef));
  return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
}

Expr attach(const Expr& tree, RationalForm form) {
  auto node = std::make_shared<Node>(tree.node());
  return make_canonical_node(std::move(node), std::make_shared<const RationalForm>(std::move(form)));
}

}  // namespace

RationalForm form_of(const Expr& e) {
  if (e.node().form) return *e.node().form;
  return compute_form(e);
}

const RationalForm& cached_form(const Expr& e) {
  if (!e.node().form) throw std::logic_error("cached_form on a non-canonical expression");
  return *e.node().form;
}

Expr to_expr(RationalForm form) {
  Expr num = poly_tree(form.num);
  if (form.den.empty()) return attach(num, std::move(form));
  std::vector<Expr> factors;
  for (const auto& f : form.den) {
    Expr base = attach(poly_tree(f.poly), RationalForm::of(f.poly));
    factors.push_back(f.exponent == 1 ? base : Expr::power(base, f.exponent));
  }
  Expr den = factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
  return attach(Expr::quotient(num, den), std::move(form));
}

// ---------------------------------------------------------------------------
// Derivations
// ---------------------------------------------------------------------------

namespace {

// Derivative of f at its argument, as a form.
RationalForm outer_derivative(FunctionKind fn, const Expr& arg) {
  switch (fn) {
    case FunctionKind::Sin: return RationalForm::of(Poly::monomial({{Atom::of(FunctionKind::Cos, arg), 1}}));
    case FunctionKind::Cos:
      return RationalForm::of(Poly::monomial({{Atom::of(FunctionKind::Sin, arg), 1}}, -1));
    case FunctionKind::Exp: return RationalForm::of(Poly::monomial({{Atom::of(FunctionKind::Exp, arg), 1}}));
    case FunctionKind::Ln: return inverse(form_of(arg));
  }
  return {};
}

RationalForm derive_poly(const Poly& p, const VariableDerivation& derivation) {
  std::vector<Term> poly_terms;
  RationalForm chain;
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < t.mono.size(); ++k) {
      const auto& [atom, e] = t.mono[k];
      Monomial rest = t.mono;
      if (e == 1) {
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        rest[k].second = e - 1;
      }
      mpq_class c = t.coef * e;
      if (atom.is_variable()) {
        auto d = derivation(atom.variable());
        if (!d || d->is_zero()) continue;
        for (const auto& dt : d->terms()) {
          poly_terms.push_back(Term{multiply_monomials(rest, dt.mono), c * dt.coef});
        }
      } else {
        RationalForm darg = derive(form_of(atom.arg), derivation);
        if (darg.is_zero()) continue;
        RationalForm piece = multiply(outer_derivative(atom.function(), atom.arg), darg);
        chain = add(chain, multiply(piece, RationalForm::of(Poly::monomial(rest, c))));
      }
    }
  }
  return add(RationalForm::of(Poly::from_terms(std::move(poly_terms))), chain);
}

}  // namespace

RationalForm derive(const RationalForm& f, const VariableDerivation& derivation) {
  RationalForm acc = derive_poly(f.num, derivation);
  if (f.den.empty()) return acc;
  for (const auto& factor : f.den) {
    RationalForm dF = derive_poly(factor.poly, derivation);
    if (dF.is_zero()) continue;
    RationalForm inv_factor{Poly::constant(1), {Factor{factor.poly, 1}}};
    acc = add(acc, multiply(scale(multiply(RationalForm::of(f.num), dF), -factor.exponent), inv_factor));
  }
  if (acc.is_zero()) return acc;
  return multiply(acc, RationalForm{Poly::constant(1), f.den});
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

namespace {

struct AtomValues {
  const Point& point;
  double guard;
  std::map<Atom, double> cache;
  bool rejected = false;

  double get(const Atom& a) {
    if (auto it = cache.find(a); it != cache.end()) return it->second;
    double v = 0.0;
    if (a.is_variable()) {
      auto it = point.find(a.variable());
      if (it == point.end()) throw MissingVariable("no value for " + a.variable().name(1));
      v = it->second;
    } else {
      double arg = 0.0;
      try {
        arg = eval_numeric(a.arg, point);
      } catch (const DomainError&) {
        rejected = true;
        return 0.0;
      }
      switch (a.function()) {
        case FunctionKind::Sin: v = std::sin(arg); break;
        case FunctionKind::Cos: v = std::cos(arg); break;
        case FunctionKind::Exp: v = std::exp(arg); break;
        case FunctionKind::Ln:
          if (arg < guard) {
            rejected = true;
            return 0.0;
          }
          v = std::log(arg);
          break;
      }
    }
    cache.emplace(a, v);
    return v;
  }

  // Returns {value, sum of |term|}.
  std::pair<double, double> poly(const Poly& p) {
    double value = 0.0, scale = 0.0;
    for (const auto& t : p.terms()) {
      double v = t.coef.get_d();
      for (const auto& [atom, e] : t.mono) {
        double x = get(atom);
        if (rejected) return {0.0, 0.0};
        if (e < 0 && std::abs(x) < guard) {
          rejected = true;
          return {0.0, 0.0};
        }
        v *= std::pow(x, e);
      }
      value += v;
      scale += std::abs(v);
    }
    return {value, scale};
  }
};

}  // namespace

FormSample sample_form(const RationalForm& f, const Point& point, double pole_guard) {
  AtomValues values{point, pole_guard, {}};
  auto [num, num_scale] = values.poly(f.num);
  if (values.rejected) return {0.0, 0.0, true};
  double den = 1.0;
  for (const auto& factor : f.den) {
    auto [v, s] = values.poly(factor.poly);
    if (values.rejected || std::abs(v) < pole_guard) return {0.0, 0.0, true};
    den *= std::pow(v, factor.exponent);
  }
  return {num / den, num_scale / std::abs(den), false};
}

}  // namespace lepage::detail
