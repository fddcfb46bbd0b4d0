#include "lepage/jet_variable.hpp"

#include "lepage/errors.hpp"

namespace lepage {

// Layout: [63:60] tag, [59:48] σ, [47:40] |J|, [39:0] indices, 4 bits each,
// left-aligned so that same-length indices compare lexicographically.

JetVariable JetVariable::base(int i) {
  if (i < 1 || i > 4095) throw ChartMismatch("base index out of range: " + std::to_string(i));
  return JetVariable((kBaseTag << 60) | static_cast<std::uint64_t>(i));
}

JetVariable JetVariable::fiber(int sigma, const MultiIndex& index) {
  if (sigma < 1 || sigma > 4095) {
    throw ChartMismatch("fiber index out of range: " + std::to_string(sigma));
  }
  std::uint64_t key = (kFiberTag << 60) | (static_cast<std::uint64_t>(sigma) << 48) |
                      (static_cast<std::uint64_t>(index.order()) << 40);
  for (int k = 0; k < index.order(); ++k) {
    key |= static_cast<std::uint64_t>(index[k]) << (36 - 4 * k);
  }
  return JetVariable(key);
}

int JetVariable::base_index() const noexcept {
  return is_base() ? static_cast<int>(key_ & 0xFFF) : 0;
}

int JetVariable::fiber_index() const noexcept {
  return is_fiber() ? static_cast<int>((key_ >> 48) & 0xFFF) : 0;
}

int JetVariable::order() const noexcept {
  return is_fiber() ? static_cast<int>((key_ >> 40) & 0xFF) : 0;
}

MultiIndex JetVariable::multi_index() const {
  std::vector<int> e;
  for (int k = 0; k < order(); ++k) e.push_back(static_cast<int>((key_ >> (36 - 4 * k)) & 0xF));
  return MultiIndex(std::span<const int>(e));
}

JetVariable JetVariable::prolonged(int i) const {
  if (!is_fiber()) throw ChartMismatch("cannot prolong a base coordinate");
  return fiber(fiber_index(), multi_index().appended(i));
}

std::string JetVariable::name(int m) const {
  if (is_base()) return "x" + std::to_string(base_index());
  std::string out = "y";
  if (m != 1) out += std::to_string(fiber_index());
  if (order() > 0) out += "_" + multi_index().digits();
  return out;
}

}  // namespace lepage
