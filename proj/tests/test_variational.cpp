#include "doctest.h"
#include "lepage/errors.hpp"
#include "lepage/printer.hpp"
#include "lepage/variational.hpp"
#include "lepage/verification.hpp"
#include "support.hpp"

using namespace lepage;
using testsupport::is_zero;

namespace {

const ChartContext M1(2, 1, 2);
const ChartContext M2(2, 2, 2);
const Expr half = Expr::rational(1, 2);

Expr u(std::initializer_list<int> I) { return y(1, I); }

Lagrangian dirichlet() { return Lagrangian(M1, 1, half * (pow(u({1}), 2) + pow(u({2}), 2))); }

bool same(const ExteriorForm& a, const ExteriorForm& b) { return forms_equal(a, b).pass; }

}  // namespace

TEST_CASE("euler-lagrange expressions") {
  auto E = euler_lagrange_expressions(dirichlet());
  CHECK(is_zero(E[0] + u({1, 1}) + u({2, 2})));
  CHECK(euler_lagrange_expressions(hessian_determinant())[0].is_zero());
  CHECK(euler_lagrange_expressions(Lagrangian(M1, 1, x(1) * pow(x(2), 3)))[0].is_zero());
}

TEST_CASE("euler-lagrange form") {
  auto E = euler_lagrange_form(dirichlet());
  BasisTuple t{CoframeElement::dx(1), CoframeElement::dx(2), CoframeElement::omega(1)};
  CHECK(E.terms().size() == 1);
  // ω ∧ dx1 ∧ dx2 = dx1 ∧ dx2 ∧ ω.
  CHECK(is_zero(E.coefficient(t) + u({1, 1}) + u({2, 2})));
  CHECK(euler_lagrange_form(hessian_determinant()).is_zero());
}

TEST_CASE("principal lepage equivalent, first order") {
  auto lambda = dirichlet();
  auto theta = principal_lepage(lambda);
  auto b = omega_basis(M1.with_order(1));
  auto w = ExteriorForm::omega(M1.with_order(1), 1);
  auto expected = lambda.form() + u({1}) * wedge(w, b.omega[0]) + u({2}) * wedge(w, b.omega[1]);
  CHECK(same(theta, expected));
  CHECK(same(contact_component(exterior_derivative(theta), 1), euler_lagrange_form(lambda)));
}

TEST_CASE("principal lepage equivalent, second order") {
  Lagrangian lambda(M1, 2, u({2}) * u({1, 2}));
  auto theta = principal_lepage(lambda);
  CHECK(same(horizontalization(theta), lambda.form()));
  CHECK(theta.coefficient_order() <= 2);
  bool has_second = false;
  for (const auto& [t, c] : theta.terms()) {
    for (auto e : t) has_second = has_second || (e.is_omega() && e.order() == 1);
  }
  CHECK(has_second);
  CHECK(is_lepage_equivalent(theta, lambda));
  CHECK(same(contact_component(exterior_derivative(theta), 1), euler_lagrange_form(lambda)));
}

TEST_CASE("caratheodory form, first order") {
  ChartContext line(1, 1, 1);
  Lagrangian lambda(line, 1, pow(y(1, {1}), 2) + x(1));
  auto expected = lambda.form() + 2 * y(1, {1}) * ExteriorForm::omega(line, 1);
  CHECK(same(caratheodory_first(lambda), expected));

  Lagrangian mixed(M1, 1, u({1}) * u({2}));
  auto L = caratheodory_first(mixed);
  CHECK(same(horizontalization(L), mixed.form()));
  auto diff = L - principal_lepage(mixed);
  CHECK(same(contact_component(diff, 2), diff));
  CHECK_THROWS_AS(caratheodory_first(Lagrangian(M1, 1, Expr(0))), UndefinedForm);
}

TEST_CASE("caratheodory form, second order") {
  for (const auto& e : caratheodory_corpus()) {
    INFO(e.name);
    auto L = caratheodory_second(e.lambda);
    CHECK(same(horizontalization(L), e.lambda.form()));
    CHECK(same(L, principal_lepage(e.lambda) + caratheodory_n2_blocks(e.lambda)));
  }
  Lagrangian one(M1, 2, Expr(1));
  CHECK(same(caratheodory_second(one), one.form()));
  CHECK(same(principal_lepage(one), one.form()));
}

TEST_CASE("fundamental form, first order") {
  Lagrangian null(M2, 1, y(1, {1}) * y(2, {2}) - y(1, {2}) * y(2, {1}));
  auto Z = fundamental_first_order(null);
  auto two = contact_component(Z, 2);
  CHECK(two.terms().size() == 1);
  CHECK(two.coefficient({CoframeElement::omega(1), CoframeElement::omega(2)}).is_one());
  CHECK(closure_check(Z));
  CHECK(Z.coefficient_order() <= 1);
  for (const auto& e : first_order_corpus()) {
    INFO(e.name);
    auto Ze = fundamental_first_order(e.lambda);
    CHECK(Ze.coefficient_order() <= 1);
    if (e.lambda.m() == 1) CHECK(same(Ze, principal_lepage(e.lambda)));
  }
  Lagrangian flat(M1, 1, x(1) * u({}));
  CHECK(same(fundamental_first_order(flat), flat.form()));
}

TEST_CASE("fundamental form coefficients") {
  Lagrangian lambda(M2, 2, y(1, {1, 2}) * y(2, {1, 2}) + y(1, {1}) * y(2, {2, 2}));
  auto k = fundamental_coefficients(lambda);
  for (int s = 1; s <= 2; ++s) {
    for (int v = 1; v <= 2; ++v) {
      auto c = default_conventions().coefficients;
      Expr d = sym_partial(sym_partial(lambda.function(), s, {1, 2}, c), v, {1, 2}, c);
      CHECK(is_zero(k.R(1, 2, s, v) + 2 * d));
      CHECK(is_zero(k.R(2, 1, s, v) - 2 * d));
      CHECK(k.R(1, 1, s, v).is_zero());
      CHECK(k.R(2, 2, s, v).is_zero());
    }
  }
  Lagrangian first(M1, 2, u({1}) * pow(u({2}), 2) + u({}) * u({1}));
  auto f = fundamental_coefficients(first);
  CHECK(f.Q1.at({1, 1}).is_zero());
  CHECK(f.Q2.at({1, 1}).is_zero());
  CHECK(f.R12.at({1, 1}).is_zero());
  Lagrangian pair(M2, 2, y(1, {1}) * y(2, {2}));
  auto p = fundamental_coefficients(pair);
  CHECK(is_zero(p.P.at({1, 2}) - half));
  CHECK(is_zero(p.P.at({2, 1}) + half));
}

TEST_CASE("second-order fundamental form") {
  auto ch = camassa_holm();
  try {
    fundamental_second_order_n2(ch);
    FAIL("expected a refusal");
  } catch (const OrderReducibilityViolation& v) {
    CHECK(v.condition().starts_with("order-reducibility[5]"));
    CHECK(v.witness() == "1/(2*y_1)");
  }
  try {
    fundamental_second_order_n2(ch, Conventions{DerivativeConvention::Plain, DerivativeConvention::Plain});
    FAIL("expected a refusal");
  } catch (const OrderReducibilityViolation& v) {
    CHECK(v.witness() == "2/y_1");
  }
  for (const auto& e : trivial_order_reducible_corpus()) {
    INFO(e.name);
    auto Z = fundamental_second_order_n2(e.lambda);
    CHECK(same(horizontalization(Z.Z), e.lambda.form()));
    CHECK(Z.Z.coefficient_order() <= 2);
    CHECK(closure_check(Z.Z));
  }
}

TEST_CASE("order conditions, explicit and general") {
  for (const auto& e : second_order_corpus()) {
    INFO(e.name);
    for (auto c : {DerivativeConvention::Plain, DerivativeConvention::Symmetrized}) {
      bool explicit_zero = true;
      for (const auto& k : order_conditions(e.lambda, c)) explicit_zero = explicit_zero && is_zero(k.value);
      bool general_zero = true;
      for (const auto& k : order_conditions_general(e.lambda, c)) general_zero = general_zero && is_zero(k.value);
      CHECK(explicit_zero == general_zero);
    }
  }
}

TEST_CASE("lagrangian validation") {
  CHECK_THROWS_AS(Lagrangian(M1, 1, u({1, 2})), OrderMismatch);
  CHECK_THROWS_AS(Lagrangian(M1, 1, y(2, {1})), ChartMismatch);
  CHECK(Lagrangian(M1, 2, u({1})).order() == 2);
}
