#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "lepage/multi_index.hpp"

namespace lepage {

/// A coordinate on a jet prolongation: either a base coordinate x^i or a
/// fiber coordinate y^σ_J with J a sorted multi-index.
///
/// Stored as a packed 64-bit key whose integer order is the coordinate
/// order used everywhere: base coordinates first (by i), then fiber
/// coordinates by (σ, |J|, J).
class JetVariable {
 public:
  /// Placeholder value; not a valid coordinate.
  JetVariable() = default;
  static JetVariable base(int i);
  static JetVariable fiber(int sigma, const MultiIndex& index = {});

  bool is_base() const noexcept { return tag() == kBaseTag; }
  bool is_fiber() const noexcept { return tag() == kFiberTag; }

  /// i for x^i.
  int base_index() const noexcept;
  /// σ for y^σ_J.
  int fiber_index() const noexcept;
  MultiIndex multi_index() const;
  /// |J| for fiber coordinates, 0 for base coordinates.
  int order() const noexcept;

  /// y^σ_{J∪{i}}; base coordinates are rejected.
  JetVariable prolonged(int i) const;

  /// Name in the shared coordinate grammar (x1, y_12, y2_11, ...). The
  /// fiber index is omitted when m == 1.
  std::string name(int m) const;

  std::uint64_t key() const noexcept { return key_; }
  /// Inverse of key(); the key must come from a valid coordinate.
  static JetVariable from_key(std::uint64_t key) noexcept { return JetVariable(key); }

  friend bool operator==(JetVariable a, JetVariable b) noexcept { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(JetVariable a, JetVariable b) noexcept {
    return a.key_ <=> b.key_;
  }

 private:
  static constexpr std::uint64_t kBaseTag = 1;
  static constexpr std::uint64_t kFiberTag = 2;

  explicit JetVariable(std::uint64_t key) : key_(key) {}
  std::uint64_t tag() const noexcept { return key_ >> 60; }

  std::uint64_t key_ = 0;
};

}  // namespace lepage

template <>
struct std::hash<lepage::JetVariable> {
  std::size_t operator()(lepage::JetVariable v) const noexcept {
    return std::hash<std::uint64_t>{}(v.key());
  }
};
