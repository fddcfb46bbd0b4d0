#include <random>

#include "doctest.h"
#include "lepage/errors.hpp"
#include "lepage/exterior.hpp"
#include "lepage/jet_calculus.hpp"
#include "support.hpp"

using namespace lepage;
using testsupport::is_zero;

namespace {

ChartContext C2(int order = 1) { return ChartContext(2, 1, order); }

bool form_is_zero(const ExteriorForm& f) {
  for (const auto& [t, c] : f.terms()) {
    if (!is_zero(c)) return false;
  }
  return true;
}

ExteriorForm random_form(std::mt19937_64& rng, const ChartContext& ctx, int degree) {
  std::vector<JetVariable> vars{JetVariable::base(1), JetVariable::base(2), JetVariable::fiber(1),
                                JetVariable::fiber(1, {1}), JetVariable::fiber(1, {2})};
  std::vector<CoframeElement> basis{CoframeElement::dx(1), CoframeElement::dx(2), CoframeElement::omega(1)};
  ExteriorForm out(ctx, degree, 1);
  for (int k = 0; k < 3; ++k) {
    BasisTuple t;
    for (int d = 0; d < degree; ++d) t.push_back(basis[static_cast<std::size_t>(testsupport::pick(rng, 3))]);
    out.add_term(t, testsupport::random_rational(rng, vars, 2));
  }
  return out;
}

}  // namespace

TEST_CASE("wedge examples") {
  auto ctx = C2();
  auto dx1 = ExteriorForm::dx(ctx, 1);
  auto dx2 = ExteriorForm::dx(ctx, 2);
  CHECK(wedge(dx1, dx1).is_zero());
  CHECK(form_is_zero(wedge(dx1, dx2) + wedge(dx2, dx1)));
  auto a = y(1, {1}) * dx1;
  auto b = wedge(ExteriorForm::omega(ctx, 1), dx2);
  auto w = wedge(a, b);
  // dx1 ∧ ω ∧ dx2 = -dx1 ∧ dx2 ∧ ω after sorting.
  BasisTuple t{CoframeElement::dx(1), CoframeElement::dx(2), CoframeElement::omega(1)};
  CHECK(w.terms().size() == 1);
  CHECK(is_zero(w.coefficient(t) + y(1, {1})));
}

TEST_CASE("exterior derivative examples") {
  auto ctx = C2(0);
  auto f = x(1) * ExteriorForm::dx(ctx, 2);
  auto df = exterior_derivative(f);
  CHECK(df.terms().size() == 1);
  CHECK(df.coefficient({CoframeElement::dx(1), CoframeElement::dx(2)}).is_one());
  auto basis = omega_basis(ctx);
  auto d = exterior_derivative(y(1) * basis.omega0);
  CHECK(d.terms().size() == 1);
  CHECK(d.coefficient({CoframeElement::dx(1), CoframeElement::dx(2), CoframeElement::omega(1)}).is_one());
}

TEST_CASE("d of a contact element") {
  auto ctx = C2(1);
  auto d = exterior_derivative(ExteriorForm::omega(ctx, 1));
  CHECK(d.terms().size() == 2);
  CHECK(d.coefficient({CoframeElement::dx(1), CoframeElement::omega(1, {1})}).is_one());
  CHECK(d.coefficient({CoframeElement::dx(2), CoframeElement::omega(1, {2})}).is_one());
}

TEST_CASE("d squares to zero") {
  std::mt19937_64 rng(17);
  for (int degree = 0; degree <= 2; ++degree) {
    for (int k = 0; k < 6; ++k) {
      auto f = random_form(rng, C2(), degree);
      CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
    }
  }
}

TEST_CASE("projections") {
  std::mt19937_64 rng(23);
  auto ctx = C2();
  for (int k = 0; k < 5; ++k) {
    auto a = random_form(rng, ctx, 2);
    auto b = random_form(rng, ctx, 1);
    auto h = horizontalization(a);
    CHECK(form_is_zero(horizontalization(h) - h));
    ExteriorForm sum(ctx, 2, a.order());
    for (int j = 0; j <= 3; ++j) {
      sum = sum + contact_component(a, j);
      for (int l = 0; l <= 3; ++l) {
        if (l != j) CHECK(contact_component(contact_component(a, l), j).is_zero());
      }
    }
    CHECK(form_is_zero(sum - a));
    CHECK(form_is_zero(horizontalization(wedge(a, b)) - wedge(horizontalization(a), horizontalization(b))));
    CHECK(wedge(b, b).is_zero());
  }
  auto w = ExteriorForm::omega(ctx, 1);
  auto dx1 = ExteriorForm::dx(ctx, 1);
  auto dx2 = ExteriorForm::dx(ctx, 2);
  CHECK(horizontalization(wedge(w, dx2)).is_zero());
  auto mixed = wedge(w, dx1) + wedge(w, ExteriorForm::omega(ctx.with_order(2), 1, {2}));
  auto p1 = contact_component(mixed, 1);
  CHECK(form_is_zero(p1 - wedge(w, dx1)));
  CHECK(contact_component(wedge(w, dx1), 3).is_zero());
}

TEST_CASE("horizontal and contact parts of df") {
  ChartContext ctx(2, 1, 2);
  Expr f = y(1, {1}) * y(1, {1, 2}) / (1 + pow(y(1), 2));
  auto df = exterior_derivative(ExteriorForm::scalar(ctx, f, 2));
  auto h = horizontalization(df);
  for (int i = 1; i <= 2; ++i) CHECK(is_zero(h.coefficient({CoframeElement::dx(i)}) - total_derivative(f, i, ctx)));
  auto p1 = contact_component(df, 1);
  for (auto v : ctx.coordinates()) {
    if (!v.is_fiber()) continue;
    CHECK(is_zero(p1.coefficient({CoframeElement::omega(1, v.multi_index())}) - diff(f, v)));
  }
}

TEST_CASE("omega basis") {
  auto b2 = omega_basis(C2());
  CHECK(b2.omega[0].coefficient({CoframeElement::dx(2)}).is_one());
  CHECK(canonicalize(b2.omega[1].coefficient({CoframeElement::dx(1)}) + 1).is_zero());
  auto ctx3 = ChartContext(3, 1, 1);
  auto b3 = omega_basis(ctx3);
  CHECK(canonicalize(b3.omega[1].coefficient({CoframeElement::dx(1), CoframeElement::dx(3)}) + 1).is_zero());
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      auto w = wedge(ExteriorForm::dx(ctx3, i), b3.omega[static_cast<std::size_t>(j - 1)]);
      if (i == j) {
        CHECK(form_is_zero(w - b3.omega0));
      } else {
        CHECK(w.is_zero());
      }
    }
  }
}

TEST_CASE("levi-civita") {
  CHECK(levi_civita({1, 2}) == 1);
  CHECK(levi_civita({2, 1}) == -1);
  CHECK(levi_civita({1, 1}) == 0);
  CHECK(levi_civita({2, 3, 1}) == 1);
}

TEST_CASE("basis labels round trip") {
  for (auto e : {CoframeElement::dx(2), CoframeElement::omega(1), CoframeElement::omega(2, {1, 2})}) {
    CHECK(CoframeElement::from_label(e.label()) == e);
  }
  CHECK(CoframeElement::omega(2, {1, 2}).label() == "w2_12");
  CHECK_THROWS(CoframeElement::from_label("dy1"));
}

TEST_CASE("order bookkeeping") {
  auto ctx = C2(1);
  ExteriorForm f(ctx, 1, 1);
  CHECK_THROWS_AS(f.add_term({CoframeElement::omega(1, {1})}, Expr(1)), OrderMismatch);
  CHECK_THROWS_AS(f.add_term({CoframeElement::dx(1)}, y(1, {1, 1})), OrderMismatch);
  CHECK(exterior_derivative(ExteriorForm::scalar(ctx, y(1, {1}), 1)).order() == 2);
}
