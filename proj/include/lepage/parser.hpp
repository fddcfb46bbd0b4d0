#pragma once

#include <string>

#include "lepage/chart.hpp"
#include "lepage/expr.hpp"
#include "lepage/variational.hpp"

namespace lepage {

/// Parses an expression over the chart. Numbers are integers, decimals or
/// quotients p/q; variables follow the coordinate naming (x1, y, y_12,
/// y2_11); operators + - * / ^ with integer exponents; functions sin, cos,
/// exp, ln. Multiplication must be written explicitly.
/// Throws ParseError with the character offset, ChartMismatch for
/// coordinates outside the chart. Jet orders are not bounded here.
Expr parse_expression(const std::string& text, const ChartContext& ctx);

struct LagrangianSpec {
  int n = 2;
  int m = 1;
  int order = 1;
  std::string source;
};

/// Throws ParseError, ChartMismatch or OrderMismatch.
Lagrangian parse_lagrangian(const LagrangianSpec& spec);

}  // namespace lepage
