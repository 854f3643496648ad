#include "textcover/cover.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace textcover {

std::optional<std::string> check_cover(const Instance& inst, const Cover& cover) {
  const auto n = inst.n();
  const auto m = inst.m();
  if (cover.pieces.empty()) return "cover has no pieces";

  for (std::size_t j = 0; j < cover.size(); ++j) {
    const auto& piece = cover.pieces[j];
    const auto label = "piece " + std::to_string(j + 1);
    if (piece.dict_index < 1 || piece.dict_index > m) {
      return label + ": dictionary index " + std::to_string(piece.dict_index) + " outside [1, " +
             std::to_string(m) + "]";
    }
    const auto& word = inst.dictionary[piece.dict_index - 1];
    if (piece.pos < 1 || piece.pos > n || piece.pos - 1 + word.size() > n) {
      return label + ": position " + std::to_string(piece.pos) + " places the string outside the text";
    }
    if (!std::equal(word.begin(), word.end(), inst.text.begin() + static_cast<std::ptrdiff_t>(piece.pos - 1))) {
      return label + ": string " + std::to_string(piece.dict_index) + " does not match the text at position " +
             std::to_string(piece.pos);
    }
    if (j > 0) {
      const auto& prev = cover.pieces[j - 1];
      const auto limit = prev.pos + inst.piece_length(prev.dict_index);
      if (piece.pos > limit) {
        return label + ": position " + std::to_string(piece.pos) + " exceeds previous position plus length (" +
               std::to_string(limit) + ")";
      }
    }
  }
  if (cover.pieces.front().pos != 1) return "first piece does not start at position 1";
  const auto& last = cover.pieces.back();
  if (last.pos != n - inst.piece_length(last.dict_index) + 1) return "last piece does not end at position n";
  return std::nullopt;
}

std::optional<Cover> construct_qi(const LongArray& long_array, const Instance& inst) {
  const auto n = inst.n();
  assert(long_array.size() == n);
  // 1-based view of the long array.
  auto longest = [&](std::size_t pos) { return long_array[pos - 1]; };
  auto reach = [&](std::size_t pos) { return pos + inst.piece_length(static_cast<std::size_t>(longest(pos))) - 1; };

  if (longest(1) == kNoMatch) return std::nullopt;

  Cover cover;
  cover.pieces.push_back({1, static_cast<std::size_t>(longest(1))});
  std::size_t covered = reach(1);
  std::size_t left = 2;
  std::size_t right = covered + 1;

  while (covered < n) {
    std::size_t best_start = left;
    std::int64_t best_reach = -1;
    if (longest(left) != kNoMatch) best_reach = static_cast<std::int64_t>(reach(left));
    for (std::size_t j = left + 1; j <= std::min(right, n); ++j) {
      if (longest(j) != kNoMatch && static_cast<std::int64_t>(reach(j)) > best_reach) {
        best_start = j;
        best_reach = static_cast<std::int64_t>(reach(j));
      }
    }
    if (best_reach < static_cast<std::int64_t>(right)) return std::nullopt;

    const auto& prev = cover.pieces.back();
    assert(best_start <= prev.pos + inst.piece_length(prev.dict_index));
    (void)prev;
    cover.pieces.push_back({best_start, static_cast<std::size_t>(longest(best_start))});
    covered = static_cast<std::size_t>(best_reach);
    left = right + 1;
    right = covered + 1;
  }
  return cover;
}

}  // namespace textcover
