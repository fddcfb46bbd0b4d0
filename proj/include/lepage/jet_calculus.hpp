#pragma once

#include <string>
#include <vector>

#include "lepage/chart.hpp"
#include "lepage/expr.hpp"

namespace lepage {

/// How a derivative with a free (unsorted) index tuple is read off the
/// sorted coordinates.
enum class DerivativeConvention { Plain, Symmetrized };

std::string convention_name(DerivativeConvention c);
DerivativeConvention parse_convention(const std::string& s);

/// d_i f. The result lives on the chart of order ctx.max_order + 1.
Expr total_derivative(const Expr& f, int i, const ChartContext& ctx);

/// d_i' f: the top layer |J| == ctx.max_order is omitted.
Expr cut_derivative(const Expr& f, int i, const ChartContext& ctx);

/// d_{i1} ... d_{ik} f applied left to right, each step raising the order.
Expr total_derivative(const Expr& f, const std::vector<int>& indices, const ChartContext& ctx);

/// ∂f/∂y^σ_{sorted(I)}, divided by μ(sorted(I)) under the symmetrized
/// convention.
Expr sym_partial(const Expr& f, int sigma, const std::vector<int>& I, DerivativeConvention convention);
Expr sym_partial(const Expr& f, int sigma, const std::vector<int>& I, DerivativeConvention convention,
                 const ChartContext& ctx);

}  // namespace lepage
