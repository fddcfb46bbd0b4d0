#include "lepage/zero_test.hpp"

#include <cmath>
#include <random>

#include "lepage/errors.hpp"
#include "rational_form.hpp"

namespace lepage {

std::string verdict_name(ZeroVerdict v) {
  switch (v) {
    case ZeroVerdict::ProvenZero: return "proven-zero";
    case ZeroVerdict::ProvenNonzero: return "proven-nonzero";
    case ZeroVerdict::NumericZero: return "numeric-zero";
    case ZeroVerdict::NumericNonzero: return "numeric-nonzero";
  }
  return "?";
}

double unit_uniform(std::uint64_t bits) noexcept { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

ZeroResult equals_zero(const Expr& e, const ZeroPolicy& policy) {
  const detail::RationalForm form = detail::form_of(e);
  if (form.is_zero()) return {ZeroVerdict::ProvenZero, std::nullopt, 0.0};
  if (form.is_polynomial() && form.num.is_constant()) {
    Point empty;
    return {ZeroVerdict::ProvenNonzero, empty, form.num.constant_value().get_d()};
  }

  auto vars = variables(canonicalize(e));
  std::mt19937_64 rng(policy.seed);
  int accepted = 0;
  const int max_draws = std::max(1, policy.samples) * 20;
  for (int draw = 0; draw < max_draws && accepted < policy.samples; ++draw) {
    Point p;
    for (auto v : vars) p[v] = policy.box * (2.0 * unit_uniform(rng()) - 1.0);
    auto sample = detail::sample_form(form, p, policy.pole_guard);
    if (sample.rejected || !std::isfinite(sample.value)) continue;
    ++accepted;
    if (std::abs(sample.value) >= policy.abs_tol + policy.rel_tol * sample.scale) {
      return {ZeroVerdict::NumericNonzero, std::move(p), sample.value};
    }
  }
  if (accepted == 0) throw SamplingFailure("every sample point was rejected by the pole guard");
  return {ZeroVerdict::NumericZero, std::nullopt, 0.0};
}

}  // namespace lepage
