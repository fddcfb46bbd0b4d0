#include "lepage/jet_calculus.hpp"

#include "lepage/errors.hpp"
#include "rational_form.hpp"

namespace lepage {

std::string convention_name(DerivativeConvention c) {
  return c == DerivativeConvention::Plain ? "plain" : "sym";
}

DerivativeConvention parse_convention(const std::string& s) {
  if (s == "plain") return DerivativeConvention::Plain;
  if (s == "sym" || s == "symmetrized") return DerivativeConvention::Symmetrized;
  throw std::invalid_argument("unknown derivative convention: " + s);
}

namespace {

// Formal derivative along x^i; coordinates of order >= cut are treated as
// constants (cut < 0 disables the cut).
Expr formal_derivative(const Expr& f, int i, int cut) {
  auto d = detail::derive(detail::form_of(f), [i, cut](JetVariable v) -> std::optional<detail::Poly> {
    if (v.is_base()) {
      if (v.base_index() == i) return detail::Poly::constant(1);
      return std::nullopt;
    }
    if (cut >= 0 && v.order() >= cut) return std::nullopt;
    return detail::Poly::monomial({{detail::Atom::of(v.prolonged(i)), 1}});
  });
  return detail::to_expr(std::move(d));
}

}  // namespace

Expr total_derivative(const Expr& f, int i, const ChartContext& ctx) {
  ctx.require_base_index(i);
  require_in_chart(f, ctx);
  return formal_derivative(f, i, -1);
}

Expr cut_derivative(const Expr& f, int i, const ChartContext& ctx) {
  ctx.require_base_index(i);
  require_in_chart(f, ctx);
  return formal_derivative(f, i, ctx.max_order);
}

Expr total_derivative(const Expr& f, const std::vector<int>& indices, const ChartContext& ctx) {
  Expr out = f;
  ChartContext c = ctx;
  for (int i : indices) {
    out = total_derivative(out, i, c);
    c = c.with_order(c.max_order + 1);
  }
  return out;
}

Expr sym_partial(const Expr& f, int sigma, const std::vector<int>& I, DerivativeConvention convention) {
  MultiIndex J(std::span<const int>(I.data(), I.size()));
  Expr d = diff(f, JetVariable::fiber(sigma, J));
  if (convention == DerivativeConvention::Plain || J.multiplicity() == 1) return d;
  return canonicalize(Expr::rational(1, J.multiplicity()) * d);
}

Expr sym_partial(const Expr& f, int sigma, const std::vector<int>& I, DerivativeConvention convention,
                 const ChartContext& ctx) {
  ctx.require_fiber_index(sigma);
  if (static_cast<int>(I.size()) > ctx.max_order) {
    throw ChartMismatch("derivative index longer than the jet order of " + ctx.describe());
  }
  for (int i : I) ctx.require_base_index(i);
  require_in_chart(f, ctx);
  return sym_partial(f, sigma, I, convention);
}

}  // namespace lepage
