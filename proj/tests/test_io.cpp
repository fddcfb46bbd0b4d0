#include <random>

#include "doctest.h"
#include "lepage/errors.hpp"
#include "lepage/form_io.hpp"
#include "lepage/parser.hpp"
#include "lepage/printer.hpp"
#include "lepage/verification.hpp"
#include "support.hpp"

using namespace lepage;
using testsupport::is_zero;

namespace {

const ChartContext M1(2, 1, 2);
const ChartContext M2(2, 2, 2);

Expr u(std::initializer_list<int> I) { return y(1, I); }

std::size_t error_position(const std::string& text, const ChartContext& ctx = M1) {
  try {
    parse_expression(text, ctx);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse lagrangians") {
  auto d = parse_lagrangian({2, 1, 1, "1/2*(y_1^2 + y_2^2)"});
  CHECK(d.function() == canonicalize(Expr::rational(1, 2) * (pow(u({1}), 2) + pow(u({2}), 2))));
  auto ch = parse_lagrangian({2, 1, 2, "1/2*(y_1*y_2^2 + y_12^2/y_1)"});
  CHECK(ch.function() == camassa_holm().function());
  auto h = parse_lagrangian({2, 1, 2, "y_11*y_22 - y_12^2"});
  CHECK(h.function() == hessian_determinant().function());
  CHECK_THROWS_AS(parse_lagrangian({2, 1, 1, "y_12"}), OrderMismatch);
}

TEST_CASE("parse grammar") {
  CHECK(parse_expression("0.25*x1", M1) == canonicalize(Expr::rational(1, 4) * x(1)));
  CHECK(parse_expression("3/6", M1) == Expr::rational(1, 2));
  CHECK(parse_expression("-y^2", M1) == canonicalize(-pow(u({}), 2)));
  CHECK(parse_expression("y^-2", M1) == canonicalize(pow(u({}), -2)));
  CHECK(parse_expression("y^(-1)", M1) == canonicalize(1 / u({})));
  CHECK(parse_expression("2^3", M1) == Expr(8));
  CHECK(parse_expression("y_21", M1) == canonicalize(u({1, 2})));
  CHECK(parse_expression("y2_1 + y1", M2) == canonicalize(y(2, {1}) + y(1, {})));
  CHECK(parse_expression("exp(0) + sin(x1)*cos(x2) - ln(1 + y^2)", M1) ==
        canonicalize(1 + sin(x(1)) * cos(x(2)) - ln(1 + pow(u({}), 2))));
  CHECK(parse_expression(" ( x1 ) ", M1) == canonicalize(x(1)));
}

TEST_CASE("parse errors") {
  CHECK(error_position("2y_1") == 1);
  CHECK(error_position("x1 y") == 3);
  CHECK(error_position("(x1)(x2)") == 4);
  CHECK(error_position("x1 +") == 4);
  CHECK(error_position("x1^y") == 3);
  CHECK(error_position("foo(x1)") == 0);
  CHECK(error_position("y_10") == 3);
  CHECK(error_position("y_1", M2) == 0);
  CHECK(error_position("(x1") == 3);
  CHECK(error_position("1.") == 0);
  CHECK_THROWS_AS(parse_expression("x3", M1), ChartMismatch);
  CHECK_THROWS_AS(parse_expression("y3", M2), ChartMismatch);
  CHECK_THROWS_AS(parse_expression("y_13", M1), ChartMismatch);
}

TEST_CASE("print then parse") {
  std::vector<Expr> exprs;
  for (const auto& e : first_order_corpus()) exprs.push_back(e.lambda.function());
  for (const auto& e : second_order_corpus()) exprs.push_back(e.lambda.function());
  for (const auto& e : second_order_corpus()) {
    for (const auto& E : euler_lagrange_expressions(e.lambda)) exprs.push_back(E);
  }
  std::mt19937_64 rng(11);
  std::vector<JetVariable> vars{JetVariable::base(1), JetVariable::fiber(1), JetVariable::fiber(1, {1}),
                                JetVariable::fiber(1, {1, 2})};
  for (int k = 0; k < 40; ++k) exprs.push_back(canonicalize(testsupport::random_rational(rng, vars, 3)));
  exprs.push_back(canonicalize(sin(u({1})) / (2 + exp(-x(1)))));
  for (const auto& e : exprs) {
    ChartContext ctx(2, 2, 4);
    int m = 1;
    for (auto v : variables(e)) m = std::max(m, v.is_fiber() ? v.fiber_index() : 1);
    if (m == 1) ctx = ChartContext(2, 1, 4);
    std::string text = to_string(e, ctx.m);
    INFO(text);
    CHECK(parse_expression(text, ctx) == e);
  }
}

TEST_CASE("form documents round trip") {
  std::vector<ExteriorForm> forms;
  for (const auto& e : first_order_corpus()) {
    forms.push_back(principal_lepage(e.lambda));
    forms.push_back(fundamental_first_order(e.lambda));
  }
  for (const auto& e : trivial_order_reducible_corpus()) forms.push_back(fundamental_second_order_n2(e.lambda).Z);
  forms.push_back(caratheodory_second(camassa_holm()));
  forms.push_back(ExteriorForm(M1, 3, 2));
  for (const auto& f : forms) {
    auto doc = to_form_document(f);
    auto back = from_form_document(doc);
    CHECK(back.degree() == f.degree());
    CHECK(back.order() == f.order());
    CHECK(back.chart() == f.chart());
    CHECK(back.terms() == f.terms());
    CHECK(to_form_document(back) == doc);
  }
}

TEST_CASE("form documents reject malformed input") {
  CHECK_THROWS_AS(from_form_document("{"), ParseError);
  CHECK_THROWS_AS(from_form_document(R"({"schema":"other/1"})"), std::invalid_argument);
  std::string base = R"({"schema":"lepage.form/1","chart":{"n":2,"m":1,"order":1},"degree":2,"terms":[)";
  CHECK_THROWS_AS(from_form_document(base + R"({"coeff":"1","basis":["dx2","dx1"]}]})"), std::invalid_argument);
  CHECK_THROWS_AS(from_form_document(base + R"({"coeff":"1","basis":["dx1","w1_12"]}]})"), OrderMismatch);
  CHECK_THROWS_AS(from_form_document(base + R"({"coeff":"2y","basis":["dx1","dx2"]}]})"), ParseError);
  auto f = from_form_document(base + R"({"coeff":"y_1","basis":["dx1","w1"]}]})");
  CHECK(f.coefficient({CoframeElement::dx(1), CoframeElement::omega(1)}) == canonicalize(u({1})));
}

TEST_CASE("form text and latex") {
  auto theta = principal_lepage(parse_lagrangian({2, 1, 1, "y_1*y_2"}));
  CHECK(format_form_text(theta) == "dx1^dx2: y_1*y_2\ndx1^w1: y_1\ndx2^w1: -y_2");
  CHECK(format_form_latex(theta) == "y_{1} y_{2} dx^{1} \\wedge dx^{2} + y_{1} dx^{1} \\wedge \\omega - y_{2} dx^{2} \\wedge \\omega");
  CHECK(format_form_text(ExteriorForm(M1, 1, 0)) == "0");
  auto z = fundamental_first_order(parse_lagrangian({2, 2, 1, "y1_1*y2_2 - y1_2*y2_1"}));
  CHECK(format_form_latex(z).ends_with("+ \\omega^{1} \\wedge \\omega^{2}"));
}
