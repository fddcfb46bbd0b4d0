#pragma once

#include <random>
#include <vector>

#include "lepage/expr.hpp"
#include "lepage/zero_test.hpp"

namespace testsupport {

using lepage::Expr;

inline int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

/// Random rational expression over the given variables. Denominators are
/// shifted away from zero on the sampling box.
inline Expr random_rational(std::mt19937_64& rng, const std::vector<lepage::JetVariable>& vars, int depth) {
  if (depth == 0 || pick(rng, 4) == 0) {
    if (pick(rng, 3) == 0) return Expr::rational(pick(rng, 7) - 3, 1 + pick(rng, 3));
    return Expr::variable(vars[static_cast<std::size_t>(pick(rng, static_cast<int>(vars.size())))]);
  }
  Expr a = random_rational(rng, vars, depth - 1);
  Expr b = random_rational(rng, vars, depth - 1);
  switch (pick(rng, 5)) {
    case 0: return a + b;
    case 1: return a - b;
    case 2: return a * b;
    case 3: return lepage::pow(a, 1 + pick(rng, 2));
    default: return a / (b * b + 5);
  }
}

inline bool is_zero(const Expr& e, std::uint64_t seed = 0) {
  lepage::ZeroPolicy p;
  p.seed = seed;
  return lepage::equals_zero(e, p).is_zero();
}

inline lepage::Point random_point(std::mt19937_64& rng, const std::vector<lepage::JetVariable>& vars) {
  lepage::Point p;
  for (auto v : vars) p[v] = 4.0 * lepage::unit_uniform(rng()) - 2.0;
  return p;
}

}  // namespace testsupport
