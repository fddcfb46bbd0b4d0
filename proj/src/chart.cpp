#include "lepage/chart.hpp"

#include "lepage/errors.hpp"

namespace lepage {

ChartContext::ChartContext(int n_, int m_, int max_order_) : n(n_), m(m_), max_order(max_order_) {
  if (n < 1 || n > 9) throw ChartMismatch("base dimension must lie in 1..9, got " + std::to_string(n));
  if (m < 1) throw ChartMismatch("fiber dimension must be positive, got " + std::to_string(m));
  if (max_order < 0 || max_order > MultiIndex::kMaxOrder) {
    throw UnsupportedOrder("jet order out of range: " + std::to_string(max_order));
  }
}

ChartContext ChartContext::with_order(int order) const { return ChartContext(n, m, order); }

bool ChartContext::contains(JetVariable v) const noexcept {
  if (v.is_base()) return v.base_index() >= 1 && v.base_index() <= n;
  if (v.fiber_index() < 1 || v.fiber_index() > m || v.order() > max_order) return false;
  auto J = v.multi_index();
  for (int k = 0; k < J.order(); ++k) {
    if (J[k] > n) return false;
  }
  return true;
}

void ChartContext::require(JetVariable v) const {
  if (!contains(v)) {
    throw ChartMismatch("coordinate " + v.name(m) + " does not belong to chart " + describe());
  }
}

void ChartContext::require_base_index(int i) const {
  if (i < 1 || i > n) throw ChartMismatch("base index " + std::to_string(i) + " out of range for " + describe());
}

void ChartContext::require_fiber_index(int sigma) const {
  if (sigma < 1 || sigma > m) {
    throw ChartMismatch("fiber index " + std::to_string(sigma) + " out of range for " + describe());
  }
}

std::vector<JetVariable> ChartContext::coordinates() const {
  std::vector<JetVariable> out;
  for (int i = 1; i <= n; ++i) out.push_back(JetVariable::base(i));
  for (int k = 0; k <= max_order; ++k) {
    auto layer = fiber_layer(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<JetVariable> ChartContext::fiber_layer(int order) const {
  std::vector<JetVariable> out;
  for (int sigma = 1; sigma <= m; ++sigma) {
    for (const auto& J : sorted_multi_indices(n, order)) out.push_back(JetVariable::fiber(sigma, J));
  }
  return out;
}

std::string ChartContext::describe() const {
  return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", order=" + std::to_string(max_order) + ")";
}

}  // namespace lepage
