#include <random>

#include "doctest.h"
#include "lepage/errors.hpp"
#include "lepage/printer.hpp"
#include "lepage/verification.hpp"
#include "support.hpp"

using namespace lepage;
using testsupport::is_zero;

namespace {

const ChartContext M1(2, 1, 2);
const Expr half = Expr::rational(1, 2);

Expr u(std::initializer_list<int> I) { return y(1, I); }

Lagrangian dirichlet() { return Lagrangian(M1, 1, half * (pow(u({1}), 2) + pow(u({2}), 2))); }

}  // namespace

TEST_CASE("lepage form check") {
  for (const auto& e : first_order_corpus()) CHECK(is_lepage_form(principal_lepage(e.lambda)));
  for (const auto& e : second_order_corpus()) CHECK(is_lepage_form(principal_lepage(e.lambda)));
  Lagrangian lambda(M1, 1, half * pow(u({1}), 2));
  auto r = is_lepage_form(lambda.form());
  CHECK_FALSE(r);
  CHECK(r.witness.has_value());
  CHECK(r.basis.find("w1_1") != std::string::npos);
  CHECK(is_lepage_form(ExteriorForm(M1, 2, 1)));
  CHECK_THROWS_AS(is_lepage_form(ExteriorForm::dx(M1, 1)), PreconditionError);
}

TEST_CASE("lepage equivalent check") {
  auto lambda = dirichlet();
  auto theta = principal_lepage(lambda);
  CHECK(is_lepage_equivalent(theta, lambda));
  CHECK(is_lepage_equivalent(caratheodory_first(lambda), lambda));
  Lagrangian twice(M1, 1, 2 * lambda.function());
  auto r = is_lepage_equivalent(theta, twice);
  CHECK_FALSE(r);
  CHECK(is_zero(*r.witness + lambda.function()));
}

TEST_CASE("triviality") {
  CHECK(is_trivial(hessian_determinant()));
  auto r = is_trivial(dirichlet());
  CHECK_FALSE(r);
  CHECK(is_zero(*r.witness + u({1, 1}) + u({2, 2})));
  CHECK(r.witness_point.has_value());
  std::mt19937_64 rng(7);
  std::vector<JetVariable> first{JetVariable::base(1), JetVariable::base(2), JetVariable::fiber(1),
                                 JetVariable::fiber(1, {1}), JetVariable::fiber(1, {2})};
  for (int k = 0; k < 6; ++k) {
    int s = k % 2;
    std::vector<JetVariable> vars(first.begin(), first.begin() + (s == 0 ? 3 : 5));
    DivergenceGenerator g{M1, {testsupport::random_rational(rng, vars, 2), testsupport::random_rational(rng, vars, 2)}, s};
    CHECK(is_trivial(make_divergence_lagrangian(g)));
  }
}

TEST_CASE("divergence generator") {
  auto a = make_divergence_lagrangian({M1, {half * pow(u({}), 2), Expr(0)}, 0});
  CHECK(a.order() == 1);
  CHECK(is_zero(a.function() - u({}) * u({1})));
  auto b = make_divergence_lagrangian({M1, {half * pow(u({2}), 2), Expr(0)}, 1});
  CHECK(b.order() == 2);
  CHECK(is_zero(b.function() - u({2}) * u({1, 2})));
  auto c = make_divergence_lagrangian({M1, {x(2), -x(1)}, 0});
  CHECK(c.function().is_zero());
  CHECK_THROWS_AS(make_divergence_lagrangian({M1, {pow(u({1, 1}), 2), Expr(0)}, 2}), PreconditionError);
  auto ok = make_divergence_lagrangian({M1, {u({2, 2}), -u({1, 2})}, 2});
  CHECK(is_trivial(ok));
}

TEST_CASE("triviality conditions agree with the euler-lagrange test") {
  auto corpus = second_order_corpus();
  CHECK(corpus.size() >= 10);
  int trivial = 0;
  for (const auto& e : corpus) {
    INFO(e.name);
    bool t = is_trivial(e.lambda).pass;
    trivial += t;
    CHECK(trivial_conditions_second_order(e.lambda).pass == t);
  }
  CHECK(trivial > 0);
  CHECK(trivial < static_cast<int>(corpus.size()));
  CHECK(trivial_conditions_second_order(Lagrangian(M1, 2, u({2}) * u({1, 2}))));
  CHECK(trivial_conditions_second_order(Lagrangian(M1, 2, Expr(5))));
  auto ch = trivial_conditions_second_order(camassa_holm());
  CHECK_FALSE(ch);
  CHECK(ch.condition.starts_with("triviality[1]"));
}

TEST_CASE("order reducibility") {
  CHECK(order_reducible(Lagrangian(M1, 2, x(1) * u({1, 1}) + u({}) * u({2, 2}) * u({1}))));
  auto ch = order_reducible(camassa_holm());
  CHECK_FALSE(ch);
  CHECK(ch.condition.starts_with("order-reducibility[5]"));
  CHECK(to_string(*ch.witness) == "1/(2*y_1)");
  auto plain = order_reducible(camassa_holm(), DerivativeConvention::Plain);
  CHECK(to_string(*plain.witness) == "2/y_1");
  CHECK(order_reducible(hessian_determinant()));
  CHECK_FALSE(order_reducible(hessian_determinant(), DerivativeConvention::Plain));
  for (const auto& e : second_order_corpus()) {
    if (order_reducible(e.lambda)) CHECK(principal_lepage(e.lambda).coefficient_order() <= 2);
  }
}

TEST_CASE("combination conditions") {
  int checked = 0;
  for (const auto& e : second_order_corpus()) {
    if (!order_reducible(e.lambda)) continue;
    INFO(e.name);
    ++checked;
    CHECK(combination_conditions(e.lambda).pass == is_trivial(e.lambda).pass);
    for (auto c : {DerivativeConvention::Plain, DerivativeConvention::Symmetrized}) {
      bool explicit_zero = true;
      for (const auto& k : combination_condition_list(e.lambda, c)) explicit_zero = explicit_zero && is_zero(k.value);
      bool general_zero = true;
      for (const auto& k : combination_condition_list_general(e.lambda, c)) {
        general_zero = general_zero && is_zero(k.value);
      }
      CHECK(explicit_zero == general_zero);
    }
  }
  CHECK(checked >= 8);
  auto r = combination_conditions(Lagrangian(M1, 2, u({1}) * u({2})));
  CHECK_FALSE(r);
  CHECK(r.condition.starts_with("combination[1]"));
  CHECK(is_zero(*r.witness + 2 * u({1, 2})));
  CHECK_THROWS_AS(combination_conditions(camassa_holm()), PreconditionError);
}

TEST_CASE("closure") {
  auto r = closure_check(principal_lepage(dirichlet()));
  CHECK_FALSE(r);
  CHECK(r.basis == "dx1^dx2^w1");
  CHECK(is_zero(*r.witness + u({1, 1}) + u({2, 2})));
  for (const auto& e : nontrivial_order_reducible_corpus()) {
    INFO(e.name);
    auto c = closure_check(fundamental_second_order_n2(e.lambda).Z);
    CHECK_FALSE(c);
    CHECK(c.basis.starts_with("dx1^dx2^w"));
    int sigma = std::stoi(c.basis.substr(c.basis.rfind('w') + 1));
    CHECK(is_zero(*c.witness - euler_lagrange_expressions(e.lambda)[static_cast<std::size_t>(sigma - 1)]));
  }
  for (const auto& e : first_order_corpus()) {
    INFO(e.name);
    auto c = closure_check(fundamental_first_order(e.lambda));
    CHECK(c.pass == is_trivial(e.lambda).pass);
    if (!c.pass) {
      int sigma = std::stoi(c.basis.substr(c.basis.rfind('w') + 1));
      CHECK(is_zero(*c.witness - euler_lagrange_expressions(e.lambda)[static_cast<std::size_t>(sigma - 1)]));
    }
  }
}

TEST_CASE("euler-lagrange expansion") {
  for (const auto& e : second_order_corpus()) {
    INFO(e.name);
    CHECK(el_expansion_crosscheck(e.lambda));
  }
  CHECK(el_expansion_crosscheck(dirichlet()));
  std::mt19937_64 rng(3);
  std::vector<JetVariable> vars{JetVariable::base(1),       JetVariable::fiber(1),        JetVariable::fiber(1, {1}),
                                JetVariable::fiber(1, {2}), JetVariable::fiber(1, {1, 1}), JetVariable::fiber(1, {1, 2}),
                                JetVariable::fiber(1, {2, 2})};
  for (int k = 0; k < 5; ++k) CHECK(el_expansion_crosscheck(Lagrangian(M1, 2, testsupport::random_rational(rng, vars, 2))));
}

TEST_CASE("calibration") {
  auto a = calibrate_convention(trivial_order_reducible_corpus());
  REQUIRE(a.selected().has_value());
  CHECK(*a.selected() == default_conventions());
  CHECK(a.combinations.size() == 4);
  auto b = calibrate_convention(trivial_order_reducible_corpus());
  CHECK(a.to_text() == b.to_text());
  CHECK_THROWS_AS(calibrate_convention({}), PreconditionError);
  CHECK_THROWS_AS(calibrate_convention({{"dirichlet", Lagrangian(M1, 2, dirichlet().function())}}), PreconditionError);
  std::vector<NamedLagrangian> linear;
  for (auto& e : trivial_order_reducible_corpus()) {
    if (e.name == "div-yy1" || e.name == "div-m2") linear.push_back(e);
  }
  CHECK(calibrate_convention(linear).ambiguous());
}

TEST_CASE("random section oracle") {
  for (Expr f : {u({1}), Expr(3), pow(u({1, 2}), 2) / u({1}), x(1) * u({}) * u({2})}) {
    INFO(to_string(f));
    CHECK(random_section_oracle(f, M1));
  }
  for (std::uint64_t seed = 1; seed < 6; ++seed) {
    SectionOracleOptions o;
    o.seed = seed;
    CHECK(random_section_oracle(camassa_holm().function(), M1, o));
  }
}
