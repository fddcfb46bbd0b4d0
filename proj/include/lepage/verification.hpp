#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lepage/exterior.hpp"
#include "lepage/variational.hpp"
#include "lepage/zero_test.hpp"

namespace lepage {

struct CheckReport {
  bool pass = true;
  /// Name of the failed condition family, with its instance.
  std::string condition;
  std::optional<Expr> witness;
  std::optional<Point> witness_point;
  /// Basis tuple of the offending coefficient, for form-valued checks.
  std::string basis;

  static CheckReport ok() { return {}; }
  explicit operator bool() const noexcept { return pass; }
};

/// Condition (i): every term of p₁(dρ) has its contact factor of the form ω^σ.
CheckReport is_lepage_form(const ExteriorForm& rho, const ZeroPolicy& policy = {});
/// Lepage form with h(ρ) = λ.
CheckReport is_lepage_equivalent(const ExteriorForm& rho, const Lagrangian& lambda, const ZeroPolicy& policy = {});

CheckReport is_trivial(const Lagrangian& lambda, const ZeroPolicy& policy = {});

/// The four families of triviality conditions for r = 2, with the
/// symmetrizations expanded over all permutations of the named index groups.
CheckReport trivial_conditions_second_order(const Lagrangian& lambda,
                                            DerivativeConvention convention = default_conventions().coefficients,
                                            const ZeroPolicy& policy = {});

CheckReport order_reducible(const Lagrangian& lambda, DerivativeConvention convention = default_conventions().lepage,
                            const ZeroPolicy& policy = {});

/// Conditions for triviality of an order-reducible second-order Lagrangian.
/// Throws PreconditionError when λ is not order-reducible.
CheckReport combination_conditions(const Lagrangian& lambda,
                                   const Conventions& conventions = default_conventions(),
                                   const ZeroPolicy& policy = {});
/// The same conditions as individual expressions; for n = 2 the explicit
/// displays, otherwise the general symmetrized form.
std::vector<LabeledCondition> combination_condition_list(const Lagrangian& lambda, DerivativeConvention convention);
std::vector<LabeledCondition> combination_condition_list_general(const Lagrangian& lambda,
                                                                 DerivativeConvention convention);
std::vector<LabeledCondition> trivial_condition_list(const Lagrangian& lambda, DerivativeConvention convention);

/// dρ = 0; a failure names the first nonzero coefficient in basis order.
CheckReport closure_check(const ExteriorForm& rho, const ZeroPolicy& policy = {});

/// Coefficientwise equality of two forms.
CheckReport forms_equal(const ExteriorForm& a, const ExteriorForm& b, const ZeroPolicy& policy = {});

struct DivergenceGenerator {
  ChartContext ctx;
  /// g^1 .. g^n.
  std::vector<Expr> g;
  /// Declared order s of the g^i.
  int order = 0;
};

/// ℒ = d_i g^i, of order s + 1. For s = 2 the cyclic condition on the
/// second-order dependence of g is checked first (PreconditionError).
Lagrangian make_divergence_lagrangian(const DivergenceGenerator& g,
                                      DerivativeConvention convention = default_conventions().coefficients);

/// E_σ(ℒ) against its expansion in cut derivatives and the explicit
/// third- and fourth-order blocks.
Expr el_expansion(const Lagrangian& lambda, int sigma, DerivativeConvention convention);
CheckReport el_expansion_crosscheck(const Lagrangian& lambda,
                                    DerivativeConvention convention = default_conventions().coefficients,
                                    const ZeroPolicy& policy = {});

struct CalibrationEntry {
  std::string name;
  /// "closed", "not closed: <coefficient> at <basis>" or "refused: <reason>".
  std::string outcome;
  bool closed = false;
};

struct CalibrationCombination {
  Conventions conventions;
  bool pass = false;
  std::vector<CalibrationEntry> entries;
};

struct CalibrationReport {
  std::vector<CalibrationCombination> combinations;
  std::vector<Conventions> passing;
  bool ambiguous() const { return passing.size() > 1; }
  /// The unique passing combination.
  std::optional<Conventions> selected() const;
  std::string to_text() const;
};

struct NamedLagrangian {
  std::string name;
  Lagrangian lambda;
};

/// Runs the second-order fundamental form and the closure check under all
/// four convention pairs. Throws PreconditionError on an empty or
/// non-trivial corpus and CalibrationFailure when no pair passes.
CalibrationReport calibrate_convention(const std::vector<NamedLagrangian>& corpus, const ZeroPolicy& policy = {});

/// Compares d_i f along prolonged random polynomial sections with central
/// differences of f along the same sections.
struct SectionOracleOptions {
  int trials = 10;
  int points = 10;
  double h = 1e-4;
  double tolerance = 1e-5;
  std::uint64_t seed = 0;
};
CheckReport random_section_oracle(const Expr& f, const ChartContext& ctx, const SectionOracleOptions& options = {});

/// Built-in corpora (n = 2).
std::vector<NamedLagrangian> first_order_corpus();
std::vector<NamedLagrangian> second_order_corpus();
/// Trivial, order-reducible second-order Lagrangians: divergence-generated
/// ones with first-order g plus the Hessian determinant.
std::vector<NamedLagrangian> trivial_order_reducible_corpus();
/// Non-trivial, order-reducible second-order Lagrangians.
std::vector<NamedLagrangian> nontrivial_order_reducible_corpus();
/// Non-vanishing second-order Lagrangians for the Carathéodory form.
std::vector<NamedLagrangian> caratheodory_corpus();

Lagrangian camassa_holm();
Lagrangian hessian_determinant();

}  // namespace lepage
