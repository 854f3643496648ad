#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "textcover/cover.hpp"
#include "textcover/instance.hpp"
#include "textcover/ledger.hpp"
#include "textcover/segment_tree.hpp"
#include "textcover/suffix_array.hpp"

namespace textcover {

/// Inclusive 0-based range of suffix-array ranks.
struct SuffixRange {
  std::size_t low = 0;
  std::size_t high = 0;

  bool operator==(const SuffixRange&) const = default;
};

/// Finds the ranks whose suffixes start with the pattern, given
/// `compare_at(rank)` = sign of compare(truncated suffix at rank, pattern).
/// Ranks -1 and n act as -inf and +inf sentinels. Two binary searches,
/// one comparison per step.
template <class CompareAt>
std::optional<SuffixRange> search_segment(std::size_t n, CompareAt&& compare_at) {
  std::size_t lo = 0;
  std::size_t hi = n;
  bool hi_equal = false;
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    const int res = compare_at(mid);
    if (res < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
      hi_equal = res == 0;
    }
  }
  if (lo == n || !hi_equal) return std::nullopt;
  const auto low = lo;

  lo = low + 1;
  hi = n;
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    if (compare_at(mid) <= 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return SuffixRange{low, lo - 1};
}

/// long[suf[i]] = index stored at tree position i. Expects a pushed tree.
LongArray build_long(const MaxSegmentTree& tree, const SuffixArray& suf);

/// Outcome of one engine run.
struct SolveResult {
  std::optional<Cover> cover;
  LongArray long_array;
  QueryLedger ledger;
  /// Pipeline executions (2 when the final check forced a retry).
  unsigned attempts = 0;
  /// Hash modulus of the last attempt (classical engine only).
  std::uint64_t prime = 0;

  bool feasible() const { return cover.has_value(); }
};

namespace detail {

/// Shared tail of both engines: aggregate the per-string ranges in a max
/// segment tree over suffix ranks, extract the long array and build a cover.
/// `find_range(j)` searches dictionary string j (0-based).
template <class FindRange>
void aggregate_and_cover(const Instance& inst, const SuffixArray& suf, FindRange&& find_range, SolveResult& out) {
  auto tree = make_max_segment_tree(std::vector<LenIndex>(inst.n(), kNeutralEntry));
  out.ledger.structureOps += inst.n();
  for (std::size_t j = 0; j < inst.m(); ++j) {
    if (const auto range = find_range(j)) {
      tree.update(range->low, range->high, LenIndex{inst.dictionary[j].size(), static_cast<std::int32_t>(j + 1)});
    }
  }
  tree.push();
  out.ledger.structureOps += tree.visits();
  out.long_array = build_long(tree, suf);
  out.ledger.structureOps += inst.n();
  out.cover = construct_qi(out.long_array, inst);
  out.ledger.structureOps += inst.n();
}

/// Symbol reads of a character-exact cover check.
inline std::uint64_t cover_check_cost(const Instance& inst, const Cover& cover) {
  std::uint64_t cost = 0;
  for (const auto& piece : cover.pieces) {
    cost += piece.dict_index >= 1 && piece.dict_index <= inst.m() ? inst.piece_length(piece.dict_index) : 1;
  }
  return cost;
}

}  // namespace detail
}  // namespace textcover
