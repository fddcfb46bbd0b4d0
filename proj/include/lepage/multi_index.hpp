#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lepage {

/// Sorted (weakly increasing) tuple of base indices naming a symmetric
/// derivative, e.g. {1,1,2} for the coordinate y_112.
class MultiIndex {
 public:
  static constexpr int kMaxOrder = 10;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> indices);
  explicit MultiIndex(std::span<const int> indices);

  int order() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  int operator[](int k) const noexcept { return entries_[static_cast<std::size_t>(k)]; }

  std::vector<int> entries() const;

  /// Number of times base index i occurs.
  int count(int i) const noexcept;

  /// k! / prod_i (count of i)!: the number of distinct orderings of the tuple.
  std::int64_t multiplicity() const noexcept;

  /// J ∪ {i}, re-sorted.
  MultiIndex appended(int i) const;

  /// J with one occurrence of i removed; requires count(i) > 0.
  MultiIndex removed(int i) const;

  /// Concatenation of the digits, e.g. "112"; empty for the zero-order index.
  std::string digits() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }
  /// Ordered by length, then lexicographically.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept;

 private:
  std::array<std::uint8_t, kMaxOrder> entries_{};
  std::uint8_t size_ = 0;
};

/// All sorted multi-indices of the given length over {1..n}.
std::vector<MultiIndex> sorted_multi_indices(int n, int length);

/// All (unsorted) index tuples of the given length over {1..n}.
std::vector<std::vector<int>> index_tuples(int n, int length);

}  // namespace lepage
