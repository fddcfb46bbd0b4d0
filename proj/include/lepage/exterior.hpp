#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lepage/chart.hpp"
#include "lepage/expr.hpp"

namespace lepage {

/// Element of the contact-adapted coframe: dx^i or ω^σ_J. Ordered with
/// every dx first (by i), then ω by (σ, |J|, J).
class CoframeElement {
 public:
  static CoframeElement dx(int i);
  static CoframeElement omega(int sigma, const MultiIndex& J = {});

  bool is_dx() const noexcept { return var_.is_base(); }
  bool is_omega() const noexcept { return var_.is_fiber(); }
  int index() const noexcept { return var_.base_index(); }
  int sigma() const noexcept { return var_.fiber_index(); }
  MultiIndex multi_index() const { return var_.multi_index(); }
  /// |J| for ω^σ_J, 0 for dx^i.
  int order() const noexcept { return var_.order(); }

  /// The coordinate whose differential this element adapts: x^i or y^σ_J.
  JetVariable coordinate() const noexcept { return var_; }

  /// Basis label: dx<i> or w<σ>[_<J>].
  std::string label() const;
  static CoframeElement from_label(const std::string& label);

  friend bool operator==(CoframeElement a, CoframeElement b) noexcept { return a.var_ == b.var_; }
  friend std::strong_ordering operator<=>(CoframeElement a, CoframeElement b) noexcept { return a.var_ <=> b.var_; }

 private:
  explicit CoframeElement(JetVariable v) : var_(v) {}
  JetVariable var_;
};

using BasisTuple = std::vector<CoframeElement>;

/// Sorts a tuple of coframe elements and returns the permutation sign, or 0
/// when an element repeats.
int sort_with_sign(BasisTuple& tuple);

/// Exterior polynomial in the adapted coframe with canonical coefficients.
class ExteriorForm {
 public:
  ExteriorForm() = default;
  ExteriorForm(const ChartContext& ctx, int degree, int order);

  static ExteriorForm scalar(const ChartContext& ctx, const Expr& f, int order);
  static ExteriorForm dx(const ChartContext& ctx, int i);
  static ExteriorForm omega(const ChartContext& ctx, int sigma, const MultiIndex& J = {});

  const ChartContext& chart() const noexcept { return ctx_; }
  int degree() const noexcept { return degree_; }
  /// Declared jet order of the form.
  int order() const noexcept { return order_; }
  const std::map<BasisTuple, Expr>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of a strictly increasing tuple, zero when absent.
  Expr coefficient(const BasisTuple& tuple) const;

  /// Adds coeff * e1 ∧ ... ∧ eq for an arbitrary ordering of the elements.
  void add_term(BasisTuple tuple, const Expr& coeff);

  /// Same form regarded on a higher jet order.
  ExteriorForm lifted(int order) const;

  /// Highest jet order among the coefficients.
  int coefficient_order() const;

  friend ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b);
  friend ExteriorForm operator-(const ExteriorForm& a, const ExteriorForm& b);
  friend ExteriorForm operator*(const Expr& f, const ExteriorForm& a);

 private:
  ChartContext ctx_;
  int degree_ = 0;
  int order_ = 0;
  std::map<BasisTuple, Expr> terms_;
};

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm exterior_derivative(const ExteriorForm& a);
ExteriorForm horizontalization(const ExteriorForm& a);
/// Terms with exactly k contact factors; the zero form when k > degree.
ExteriorForm contact_component(const ExteriorForm& a, int k);

struct OmegaBasis {
  ExteriorForm omega0;
  /// omega[j-1] = ω_j = i_{∂/∂x^j} ω₀.
  std::vector<ExteriorForm> omega;
};

OmegaBasis omega_basis(const ChartContext& ctx);

/// Sign of the permutation, 0 on repeated entries.
int levi_civita(const std::vector<int>& indices);

}  // namespace lepage
