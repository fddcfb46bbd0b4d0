#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lepage/chart.hpp"
#include "lepage/exterior.hpp"
#include "lepage/expr.hpp"
#include "lepage/jet_calculus.hpp"

namespace lepage {

/// Derivative conventions for the free-index formulas: `lepage` governs the
/// principal Lepage equivalent, the Carathéodory forms and the
/// order-reducibility test; `coefficients` governs P, Q, R of the
/// second-order fundamental form and the triviality conditions.
struct Conventions {
  DerivativeConvention lepage = DerivativeConvention::Symmetrized;
  DerivativeConvention coefficients = DerivativeConvention::Symmetrized;

  friend bool operator==(const Conventions&, const Conventions&) = default;
};

/// The shipped default, fixed by calibrate_convention (see docs/calibration.md).
Conventions default_conventions();
std::string describe(const Conventions& c);

/// λ = ℒ ω₀ of declared order r.
class Lagrangian {
 public:
  Lagrangian(const ChartContext& ctx, int r, const Expr& L);

  const ChartContext& chart() const noexcept { return ctx_; }
  int order() const noexcept { return r_; }
  const Expr& function() const noexcept { return L_; }
  int n() const noexcept { return ctx_.n; }
  int m() const noexcept { return ctx_.m; }

  /// ℒ ω₀ as an exterior form.
  ExteriorForm form() const;

 private:
  ChartContext ctx_;
  int r_;
  Expr L_;
};

/// E_σ(ℒ), σ = 1..m.
std::vector<Expr> euler_lagrange_expressions(const Lagrangian& lambda);
/// Σ_σ E_σ ω^σ ∧ ω₀.
ExteriorForm euler_lagrange_form(const Lagrangian& lambda);

ExteriorForm principal_lepage(const Lagrangian& lambda,
                              DerivativeConvention convention = default_conventions().lepage);

ExteriorForm caratheodory_first(const Lagrangian& lambda);
ExteriorForm caratheodory_second(const Lagrangian& lambda,
                                 DerivativeConvention convention = default_conventions().lepage);

/// The three 2-contact blocks of the n = 2 decomposition
/// Λ = Θ + blocks, built term by term from the explicit display.
ExteriorForm caratheodory_n2_blocks(const Lagrangian& lambda,
                                    DerivativeConvention convention = default_conventions().lepage);

ExteriorForm fundamental_first_order(const Lagrangian& lambda);

struct FundamentalCoefficients {
  using Table = std::map<std::pair<int, int>, Expr>;
  Table P;
  Table Q1;
  Table Q2;
  Table R12;

  static int kappa(int j) { return j == 1 ? 2 : 1; }
  /// R^{i,j}_{σ,ν}.
  Expr R(int i, int j, int sigma, int nu) const;
  Expr Q(int j, int sigma, int nu) const { return (j == 1 ? Q1 : Q2).at({sigma, nu}); }
};

struct FundamentalSecondOrder {
  ExteriorForm Z;
  FundamentalCoefficients coefficients;
};

/// Coefficients P, Q, R of the second-order fundamental form (n = 2).
FundamentalCoefficients fundamental_coefficients(const Lagrangian& lambda,
                                                 DerivativeConvention convention = default_conventions().coefficients);

/// Throws OrderReducibilityViolation when the order-reducibility conditions
/// fail (tested under conventions.lepage).
FundamentalSecondOrder fundamental_second_order_n2(const Lagrangian& lambda,
                                                   const Conventions& conventions = default_conventions());

}  // namespace lepage

namespace lepage {

/// One scalar condition of a family, e.g. label "order-reducibility[5]"
/// with the fiber indices it was instantiated at.
struct LabeledCondition {
  std::string label;
  std::string indices;
  Expr value;
};

/// Order-reducibility conditions. For n = 2 the five explicit conditions,
/// otherwise the cyclic condition over all index quadruples.
std::vector<LabeledCondition> order_conditions(const Lagrangian& lambda, DerivativeConvention convention);
/// The same conditions in general-n form, also for n = 2.
std::vector<LabeledCondition> order_conditions_general(const Lagrangian& lambda, DerivativeConvention convention);

}  // namespace lepage
