#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lepage/chart.hpp"
#include "lepage/jet_variable.hpp"

namespace lepage {

enum class NodeKind : std::uint8_t { Constant, Variable, Sum, Product, Power, Quotient, Function };

enum class FunctionKind : std::uint8_t { Sin, Cos, Exp, Ln };

std::string function_name(FunctionKind f);

namespace detail {
struct Node;
struct RationalForm;
}  // namespace detail

/// Immutable symbolic scalar over jet coordinates.
///
/// Expressions are trees of shared, immutable nodes. The builders below
/// construct raw trees without simplification (apart from refusing
/// malformed arity); use canonicalize() to obtain the canonical
/// representative. Canonical trees are sums of monomials over a quotient
/// by a product of normalized polynomial factors.
class Expr {
 public:
  /// The zero constant.
  Expr();
  Expr(int value);  // NOLINT(google-explicit-constructor)
  explicit Expr(const mpq_class& value);
  explicit Expr(JetVariable v);

  static Expr constant(const mpq_class& value);
  static Expr rational(long numerator, long denominator);
  static Expr variable(JetVariable v);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, int exponent);
  static Expr quotient(Expr numerator, Expr denominator);
  static Expr function(FunctionKind f, Expr argument);

  NodeKind kind() const noexcept;
  /// Constant payload; zero for non-constants.
  const mpq_class& value() const noexcept;
  JetVariable var() const;
  std::span<const Expr> children() const noexcept;
  int exponent() const noexcept;
  FunctionKind function_kind() const noexcept;

  bool is_constant() const noexcept { return kind() == NodeKind::Constant; }
  /// Structural test: the zero constant node.
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the tree is the output of canonicalize().
  bool is_canonical() const noexcept;

  friend bool operator==(const Expr& a, const Expr& b) noexcept;
  /// Structural total order on trees.
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b) noexcept;

  const detail::Node& node() const noexcept { return *node_; }

 private:
  friend struct detail::Node;
  friend Expr make_canonical_node(std::shared_ptr<detail::Node> node,
                                  std::shared_ptr<const detail::RationalForm> form);
  explicit Expr(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr pow(const Expr& base, int exponent);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr exp(const Expr& a);
Expr ln(const Expr& a);

/// Coordinate shorthands: x(i) = x^i, y(σ, {j...}) = y^σ_J.
Expr x(int i);
Expr y(int sigma, std::initializer_list<int> indices = {});

using Point = std::map<JetVariable, double>;
using Bindings = std::map<JetVariable, Expr>;

/// Canonical representative; numeric value is preserved and
/// canonicalize(canonicalize(e)) == canonicalize(e).
Expr canonicalize(const Expr& e);

/// Plain partial derivative treating every sorted-index jet coordinate as
/// an independent variable. Result is canonical.
Expr diff(const Expr& e, JetVariable v);
/// As above, rejecting variables outside ctx.
Expr diff(const Expr& e, JetVariable v, const ChartContext& ctx);

/// Simultaneous substitution followed by canonicalization.
Expr substitute(const Expr& e, const Bindings& bindings);
Expr substitute(const Expr& e, const Bindings& bindings, const ChartContext& ctx);

/// IEEE evaluation of the tree. Throws MissingVariable or DomainError.
double eval_numeric(const Expr& e, const Point& point);

/// Variables occurring anywhere in the tree (including function arguments).
std::set<JetVariable> variables(const Expr& e);
/// Highest |J| among fiber coordinates occurring in e (0 if none).
int jet_order(const Expr& e);
bool contains_function(const Expr& e);
/// Throws ChartMismatch when a variable of e lies outside ctx.
void require_in_chart(const Expr& e, const ChartContext& ctx);

/// Plain-text rendering in the parser grammar; m selects fiber naming.
std::string to_string(const Expr& e, int m = 1);

}  // namespace lepage
