#include "lepage/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "lepage/errors.hpp"

namespace lepage {

MultiIndex::MultiIndex(std::initializer_list<int> indices)
    : MultiIndex(std::span<const int>(indices.begin(), indices.size())) {}

MultiIndex::MultiIndex(std::span<const int> indices) {
  if (indices.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw UnsupportedOrder("multi-index longer than " + std::to_string(kMaxOrder));
  }
  for (int i : indices) {
    if (i < 1 || i > 15) throw ChartMismatch("base index out of range: " + std::to_string(i));
    entries_[size_++] = static_cast<std::uint8_t>(i);
  }
  std::sort(entries_.begin(), entries_.begin() + size_);
}

std::vector<int> MultiIndex::entries() const {
  return {entries_.begin(), entries_.begin() + size_};
}

int MultiIndex::count(int i) const noexcept {
  return static_cast<int>(std::count(entries_.begin(), entries_.begin() + size_, i));
}

std::int64_t MultiIndex::multiplicity() const noexcept {
  std::int64_t result = 1;
  int run = 0;
  for (int k = 0; k < size_; ++k) {
    run = (k > 0 && entries_[k] == entries_[k - 1]) ? run + 1 : 1;
    // k!/prod(c!) accumulated incrementally: multiply by (k+1), divide by run.
    result = result * (k + 1) / run;
  }
  return result;
}

MultiIndex MultiIndex::appended(int i) const {
  auto e = entries();
  e.push_back(i);
  return MultiIndex(std::span<const int>(e));
}

MultiIndex MultiIndex::removed(int i) const {
  auto e = entries();
  auto it = std::find(e.begin(), e.end(), i);
  if (it == e.end()) throw std::invalid_argument("index not present in multi-index");
  e.erase(it);
  return MultiIndex(std::span<const int>(e));
}

std::string MultiIndex::digits() const {
  std::string out;
  for (int k = 0; k < size_; ++k) out += std::to_string(entries_[k]);
  return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (int k = 0; k < a.size_; ++k) {
    if (auto c = a.entries_[k] <=> b.entries_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void sorted_rec(int n, int length, int lo, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.emplace_back(std::span<const int>(prefix));
    return;
  }
  for (int i = lo; i <= n; ++i) {
    prefix.push_back(i);
    sorted_rec(n, length, i, prefix, out);
    prefix.pop_back();
  }
}

void tuples_rec(int n, int length, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  for (int i = 1; i <= n; ++i) {
    prefix.push_back(i);
    tuples_rec(n, length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> sorted_multi_indices(int n, int length) {
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  sorted_rec(n, length, 1, prefix, out);
  return out;
}

std::vector<std::vector<int>> index_tuples(int n, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  tuples_rec(n, length, prefix, out);
  return out;
}

}  // namespace lepage
