#pragma once

#include <optional>
#include <string>

#include "textcover/instance.hpp"

namespace textcover {

/// Checks every tiling condition by direct symbol comparison. Returns the
/// first violated condition, or nullopt when `cover` tiles `inst.text`.
std::optional<std::string> check_cover(const Instance& inst, const Cover& cover);

inline bool validate_cover(const Instance& inst, const Cover& cover) {
  return !check_cover(inst, cover).has_value();
}

/// Greedy cover from the longest-match array: in each window of admissible
/// starts, take the start reaching furthest right (first one on ties).
/// Returns nullopt when no cover exists for `long_array`.
std::optional<Cover> construct_qi(const LongArray& long_array, const Instance& inst);

}  // namespace textcover
