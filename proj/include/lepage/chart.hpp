#pragma once

#include <string>
#include <vector>

#include "lepage/jet_variable.hpp"

namespace lepage {

/// Fibered chart (x^i, y^σ) on Y over an n-dimensional base, with the
/// induced jet coordinates up to order max_order.
struct ChartContext {
  int n = 1;
  int m = 1;
  int max_order = 0;

  ChartContext() = default;
  ChartContext(int n, int m, int max_order);

  /// Same chart with a different highest jet order.
  ChartContext with_order(int order) const;

  bool contains(JetVariable v) const noexcept;
  /// Throws ChartMismatch unless contains(v).
  void require(JetVariable v) const;
  void require_base_index(int i) const;
  void require_fiber_index(int sigma) const;

  /// x^1..x^n, then y^σ_J for every sorted J with |J| <= max_order.
  std::vector<JetVariable> coordinates() const;
  /// y^σ_J with |J| == order exactly.
  std::vector<JetVariable> fiber_layer(int order) const;

  std::string describe() const;

  friend bool operator==(const ChartContext&, const ChartContext&) = default;
};

}  // namespace lepage
