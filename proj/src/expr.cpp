#include "lepage/expr.hpp"

#include <cmath>

#include "lepage/errors.hpp"
#include "rational_form.hpp"

namespace lepage {

using detail::Node;

std::string function_name(FunctionKind f) {
  switch (f) {
    case FunctionKind::Sin: return "sin";
    case FunctionKind::Cos: return "cos";
    case FunctionKind::Exp: return "exp";
    case FunctionKind::Ln: return "ln";
  }
  return "?";
}

Expr make_canonical_node(std::shared_ptr<Node> node, std::shared_ptr<const detail::RationalForm> form) {
  node->form = std::move(form);
  return Expr(std::shared_ptr<const Node>(std::move(node)));
}

namespace {

std::shared_ptr<const Node> constant_node(const mpq_class& v) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Constant;
  n->value = v;
  n->value.canonicalize();
  return n;
}

const std::shared_ptr<const Node>& zero_node() {
  static const std::shared_ptr<const Node> zero = constant_node(0);
  return zero;
}

std::shared_ptr<Node> compound(NodeKind kind, std::vector<Expr> children) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(children);
  return n;
}

}  // namespace

Expr::Expr() : node_(zero_node()) {}
Expr::Expr(int value) : node_(value == 0 ? zero_node() : constant_node(value)) {}
Expr::Expr(const mpq_class& value) : node_(constant_node(value)) {}
Expr::Expr(JetVariable v) : Expr(variable(v)) {}

Expr Expr::constant(const mpq_class& value) { return Expr(value); }

Expr Expr::rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("division by zero", std::to_string(numerator) + "/0");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return Expr(q);
}

Expr Expr::variable(JetVariable v) {
  if (!v.is_base() && !v.is_fiber()) throw std::invalid_argument("placeholder jet variable");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Variable;
  n->var = v;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) return Expr();
  if (terms.size() == 1) return terms.front();
  return Expr(std::shared_ptr<const Node>(compound(NodeKind::Sum, std::move(terms))));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) return Expr(1);
  if (factors.size() == 1) return factors.front();
  return Expr(std::shared_ptr<const Node>(compound(NodeKind::Product, std::move(factors))));
}

Expr Expr::power(Expr base, int exponent) {
  auto n = compound(NodeKind::Power, {std::move(base)});
  n->exponent = exponent;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::quotient(Expr numerator, Expr denominator) {
  return Expr(std::shared_ptr<const Node>(compound(NodeKind::Quotient, {std::move(numerator), std::move(denominator)})));
}

Expr Expr::function(FunctionKind f, Expr argument) {
  auto n = compound(NodeKind::Function, {std::move(argument)});
  n->fn = f;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

NodeKind Expr::kind() const noexcept { return node_->kind; }
const mpq_class& Expr::value() const noexcept { return node_->value; }

JetVariable Expr::var() const {
  if (node_->kind != NodeKind::Variable) throw std::logic_error("not a variable node");
  return node_->var;
}

std::span<const Expr> Expr::children() const noexcept { return node_->children; }
int Expr::exponent() const noexcept { return node_->exponent; }
FunctionKind Expr::function_kind() const noexcept { return node_->fn; }
bool Expr::is_zero() const noexcept { return node_->kind == NodeKind::Constant && node_->value == 0; }
bool Expr::is_one() const noexcept { return node_->kind == NodeKind::Constant && node_->value == 1; }
bool Expr::is_canonical() const noexcept { return node_->form != nullptr; }

bool operator==(const Expr& a, const Expr& b) noexcept { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Expr& a, const Expr& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case NodeKind::Constant: {
      int c = cmp(x.value, y.value);
      return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case NodeKind::Variable: return x.var <=> y.var;
    case NodeKind::Power:
      if (auto c = x.exponent <=> y.exponent; c != 0) return c;
      break;
    case NodeKind::Function:
      if (auto c = x.fn <=> y.fn; c != 0) return c;
      break;
    default: break;
  }
  if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
  for (std::size_t k = 0; k < x.children.size(); ++k) {
    if (auto c = x.children[k] <=> y.children[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator-(const Expr& a) { return Expr::product({Expr(-1), a}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::quotient(a, b); }
Expr pow(const Expr& base, int exponent) { return Expr::power(base, exponent); }
Expr sin(const Expr& a) { return Expr::function(FunctionKind::Sin, a); }
Expr cos(const Expr& a) { return Expr::function(FunctionKind::Cos, a); }
Expr exp(const Expr& a) { return Expr::function(FunctionKind::Exp, a); }
Expr ln(const Expr& a) { return Expr::function(FunctionKind::Ln, a); }

Expr x(int i) { return Expr::variable(JetVariable::base(i)); }
Expr y(int sigma, std::initializer_list<int> indices) {
  return Expr::variable(JetVariable::fiber(sigma, MultiIndex(indices)));
}

Expr canonicalize(const Expr& e) {
  if (e.is_canonical()) return e;
  return detail::to_expr(detail::form_of(e));
}

Expr diff(const Expr& e, JetVariable v) {
  auto d = detail::derive(detail::form_of(e), [v](JetVariable w) -> std::optional<detail::Poly> {
    if (w == v) return detail::Poly::constant(1);
    return std::nullopt;
  });
  return detail::to_expr(std::move(d));
}

Expr diff(const Expr& e, JetVariable v, const ChartContext& ctx) {
  ctx.require(v);
  require_in_chart(e, ctx);
  return diff(e, v);
}

namespace {

Expr substitute_tree(const Expr& e, const Bindings& bindings) {
  switch (e.kind()) {
    case NodeKind::Constant: return Expr(e.value());
    case NodeKind::Variable: {
      auto it = bindings.find(e.var());
      return it == bindings.end() ? Expr::variable(e.var()) : it->second;
    }
    default: break;
  }
  std::vector<Expr> children;
  children.reserve(e.children().size());
  for (const auto& c : e.children()) children.push_back(substitute_tree(c, bindings));
  switch (e.kind()) {
    case NodeKind::Sum: return Expr::sum(std::move(children));
    case NodeKind::Product: return Expr::product(std::move(children));
    case NodeKind::Power: return Expr::power(children[0], e.exponent());
    case NodeKind::Quotient: return Expr::quotient(children[0], children[1]);
    case NodeKind::Function: return Expr::function(e.function_kind(), children[0]);
    default: return e;
  }
}

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
  return canonicalize(substitute_tree(e, bindings));
}

Expr substitute(const Expr& e, const Bindings& bindings, const ChartContext& ctx) {
  require_in_chart(e, ctx);
  for (const auto& [v, target] : bindings) {
    ctx.require(v);
    require_in_chart(target, ctx);
  }
  return substitute(e, bindings);
}

double eval_numeric(const Expr& e, const Point& point) {
  switch (e.kind()) {
    case NodeKind::Constant: return e.value().get_d();
    case NodeKind::Variable: {
      auto it = point.find(e.var());
      if (it == point.end()) throw MissingVariable("no value for " + e.var().name(1));
      return it->second;
    }
    case NodeKind::Sum: {
      double s = 0.0;
      for (const auto& c : e.children()) s += eval_numeric(c, point);
      return s;
    }
    case NodeKind::Product: {
      double p = 1.0;
      for (const auto& c : e.children()) p *= eval_numeric(c, point);
      return p;
    }
    case NodeKind::Power: {
      double b = eval_numeric(e.children()[0], point);
      if (e.exponent() < 0 && b == 0.0) throw DomainError("pole", to_string(e));
      return std::pow(b, e.exponent());
    }
    case NodeKind::Quotient: {
      double num = eval_numeric(e.children()[0], point);
      double den = eval_numeric(e.children()[1], point);
      if (den == 0.0) throw DomainError("pole", to_string(e));
      return num / den;
    }
    case NodeKind::Function: {
      double a = eval_numeric(e.children()[0], point);
      switch (e.function_kind()) {
        case FunctionKind::Sin: return std::sin(a);
        case FunctionKind::Cos: return std::cos(a);
        case FunctionKind::Exp: return std::exp(a);
        case FunctionKind::Ln:
          if (a <= 0.0) throw DomainError("logarithm of a non-positive number", to_string(e));
          return std::log(a);
      }
    }
  }
  return 0.0;
}

namespace {

void collect_variables(const Expr& e, std::set<JetVariable>& out) {
  if (e.kind() == NodeKind::Variable) {
    out.insert(e.var());
    return;
  }
  for (const auto& c : e.children()) collect_variables(c, out);
}

}  // namespace

std::set<JetVariable> variables(const Expr& e) {
  std::set<JetVariable> out;
  collect_variables(e, out);
  return out;
}

int jet_order(const Expr& e) {
  int r = 0;
  for (auto v : variables(e)) r = std::max(r, v.order());
  return r;
}

bool contains_function(const Expr& e) {
  if (e.kind() == NodeKind::Function) return true;
  for (const auto& c : e.children()) {
    if (contains_function(c)) return true;
  }
  return false;
}

void require_in_chart(const Expr& e, const ChartContext& ctx) {
  for (auto v : variables(e)) ctx.require(v);
}

}  // namespace lepage
