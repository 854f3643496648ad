#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace textcover {

/// Segment tree supporting a[q] = max(a[q], x) over index ranges, a bulk
/// push of pending updates, and point reads. Indices are 0-based.
///
/// Each internal node carries one pending-max tag. Because max is commutative
/// and idempotent, tags are never pushed during updates; a point read combines
/// the leaf with every tag on its root path, and push() folds all tags into
/// the leaves so later reads cost O(1).
template <class T, class Less = std::less<T>>
class RangeMaxTree {
 public:
  RangeMaxTree(std::vector<T> initial, T neutral, Less less = Less())
      : size_(initial.size()), neutral_(std::move(neutral)), less_(std::move(less)) {
    if (size_ == 0) throw std::invalid_argument("segment tree over an empty array");
    nodes_.assign(2 * size_, neutral_);
    std::move(initial.begin(), initial.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(size_));
  }

  std::size_t size() const { return size_; }
  bool pushed() const { return pushed_; }
  /// Node visits performed so far, for cost accounting.
  std::uint64_t visits() const { return visits_; }

  /// a[q] = max(a[q], x) for first <= q <= last. O(log l).
  void update(std::size_t first, std::size_t last, const T& x) {
    check_range(first, last);
    pushed_ = false;
    for (auto lo = first + size_, hi = last + size_ + 1; lo < hi; lo >>= 1, hi >>= 1) {
      ++visits_;
      if (lo & 1) absorb(nodes_[lo++], x);
      if (hi & 1) absorb(nodes_[--hi], x);
    }
  }

  /// Folds every pending tag into the leaves. O(l).
  void push() {
    for (std::size_t i = 1; i < size_; ++i) {
      ++visits_;
      absorb(nodes_[2 * i], nodes_[i]);
      absorb(nodes_[2 * i + 1], nodes_[i]);
      nodes_[i] = neutral_;
    }
    pushed_ = true;
  }

  /// Current logical a[i]: O(1) after push() with no later update, O(log l) otherwise.
  T request(std::size_t i) const {
    check_range(i, i);
    auto pos = i + size_;
    T value = nodes_[pos];
    if (pushed_) return value;
    for (pos >>= 1; pos > 0; pos >>= 1) absorb(value, nodes_[pos]);
    return value;
  }

 private:
  void absorb(T& target, const T& x) const {
    if (less_(target, x)) target = x;
  }

  void check_range(std::size_t first, std::size_t last) const {
    if (first > last || last >= size_) {
      throw std::out_of_range("segment tree range [" + std::to_string(first) + ", " + std::to_string(last) +
                              "] outside size " + std::to_string(size_));
    }
  }

  std::size_t size_;
  T neutral_;
  Less less_;
  std::vector<T> nodes_;
  bool pushed_ = false;
  std::uint64_t visits_ = 0;
};

/// Leaf payload: length of the matched dictionary string and its 1-based index.
struct LenIndex {
  std::uint64_t len = 0;
  std::int32_t ind = -1;

  bool operator==(const LenIndex&) const = default;
};

/// Longer strings win; on equal length the smaller index wins. The index -1
/// ranks below every real index so that (0, -1) is the identity.
struct LenIndexLess {
  bool operator()(const LenIndex& a, const LenIndex& b) const {
    if (a.len != b.len) return a.len < b.len;
    return static_cast<std::uint32_t>(a.ind) > static_cast<std::uint32_t>(b.ind);
  }
};

inline constexpr LenIndex kNeutralEntry{0, -1};

using MaxSegmentTree = RangeMaxTree<LenIndex, LenIndexLess>;

inline MaxSegmentTree make_max_segment_tree(std::vector<LenIndex> initial) {
  return MaxSegmentTree(std::move(initial), kNeutralEntry);
}

}  // namespace textcover
