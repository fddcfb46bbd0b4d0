#pragma once

// Internal normal form behind canonicalize().
//
// A RationalForm is N / prod_k F_k^{e_k}: N is an expanded Laurent
// polynomial in atoms (jet coordinates and elementary-function
// applications), and every F_k is a polynomial normalized to have no
// monomial content and leading coefficient 1. For expressions without
// elementary functions the form is zero iff N has no terms.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "lepage/expr.hpp"

namespace lepage::detail {

struct Node {
  NodeKind kind = NodeKind::Constant;
  mpq_class value;
  JetVariable var;
  std::vector<Expr> children;
  int exponent = 0;
  FunctionKind fn = FunctionKind::Sin;
  std::shared_ptr<const RationalForm> form;  // set only on canonical roots
};

struct Atom {
  static constexpr std::uint64_t kFunctionTag = std::uint64_t{3} << 60;

  std::uint64_t key = 0;
  Expr arg;  // canonical argument for function atoms

  static Atom of(JetVariable v) { return Atom{v.key(), Expr()}; }
  static Atom of(FunctionKind f, Expr argument) {
    return Atom{kFunctionTag | static_cast<std::uint64_t>(f), std::move(argument)};
  }

  bool is_variable() const noexcept { return key < kFunctionTag; }
  JetVariable variable() const;
  FunctionKind function() const noexcept { return static_cast<FunctionKind>(key & 0xFF); }
  Expr to_expr() const;
};

std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept;
inline bool operator==(const Atom& a, const Atom& b) noexcept { return (a <=> b) == 0; }

/// Sorted by atom, no zero exponents.
using Monomial = std::vector<std::pair<Atom, int>>;

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) noexcept;
Monomial multiply_monomials(const Monomial& a, const Monomial& b);
int total_degree(const Monomial& m) noexcept;

struct Term {
  Monomial mono;
  mpq_class coef;
};

/// Expanded Laurent polynomial; terms sorted by monomial, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const mpq_class& c);
  static Poly monomial(Monomial m, const mpq_class& c = 1);
  /// Sorts, merges like terms and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term coefficient if the polynomial is constant.
  mpq_class constant_value() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;
  Poly times_monomial(const Monomial& m, const mpq_class& c) const;
  Poly power(int k) const;

  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;
  friend bool operator==(const Poly& a, const Poly& b) noexcept { return (a <=> b) == 0; }

 private:
  std::vector<Term> terms_;
};

struct Factor {
  Poly poly;
  int exponent = 1;
};

struct RationalForm {
  Poly num;
  std::vector<Factor> den;  // sorted by poly, positive exponents

  static RationalForm constant(const mpq_class& c) { return {Poly::constant(c), {}}; }
  static RationalForm of(const Poly& p) { return {p, {}}; }
  bool is_zero() const noexcept { return num.is_zero(); }
  bool is_polynomial() const noexcept { return den.empty(); }
};

RationalForm add(const RationalForm& a, const RationalForm& b);
RationalForm multiply(const RationalForm& a, const RationalForm& b);
RationalForm negate(const RationalForm& a);
RationalForm scale(const RationalForm& a, const mpq_class& c);
/// Throws DomainError on a zero operand.
RationalForm inverse(const RationalForm& a);
RationalForm power(const RationalForm& a, int k);

/// Canonical form of an arbitrary tree; uses cached forms where present.
const RationalForm& cached_form(const Expr& e);
RationalForm form_of(const Expr& e);
/// Materialized canonical tree with the form attached to its root.
Expr to_expr(RationalForm form);

/// Derivative of each coordinate under a derivation; nullopt means zero.
using VariableDerivation = std::function<std::optional<Poly>(JetVariable)>;

/// Applies the derivation with the Leibniz and chain rules.
RationalForm derive(const RationalForm& f, const VariableDerivation& derivation);

struct FormSample {
  double value = 0.0;
  double scale = 0.0;  // sum of |term| / |denominator|
  bool rejected = false;
};

/// Evaluates a form, rejecting the point when a denominator factor, a
/// negatively-powered atom or a logarithm argument comes within pole_guard
/// of a singularity.
FormSample sample_form(const RationalForm& f, const Point& point, double pole_guard);

}  // namespace lepage::detail
