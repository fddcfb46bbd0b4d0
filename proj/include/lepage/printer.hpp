#pragma once

#include <string>

#include "lepage/expr.hpp"

namespace lepage {

/// LaTeX rendering in the notation y^{σ}_{J}, x^{i}, \frac{..}{..}.
std::string to_latex(const Expr& e, int m = 1);

}  // namespace lepage
