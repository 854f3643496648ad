#pragma once

#include <cstdint>
#include <vector>

#include "textcover/instance.hpp"

namespace textcover {

/// 0-based starting offsets of the suffixes in increasing lexicographic order.
using SuffixArray = std::vector<std::uint32_t>;

/// Linear-time construction by induced sorting (SA-IS). Symbols must lie in
/// [0, alphabet_size). Throws std::invalid_argument on an empty string.
SuffixArray construct_suffix_array(SymbolView text, std::uint32_t alphabet_size);

/// Reference builder: sorts suffixes with std::sort and direct comparison.
SuffixArray naive_suffix_array(SymbolView text);

}  // namespace textcover
