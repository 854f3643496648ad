#pragma once

#include <cstdint>
#include <optional>

#include "textcover/hashing.hpp"
#include "textcover/pipeline.hpp"

namespace textcover {

struct ClassicalConfig {
  /// Target error probability of the fingerprinting, in (0, 1).
  double epsilon = 0.01;
  hashing::PrimeOptions primes{};
  std::uint64_t seed = 0;
  /// Re-check a returned cover symbol by symbol; on failure retry once with a fresh prime.
  bool verify_final = true;
};

/// Ranks of the suffixes of the registered text that start with `word`,
/// using hash-based comparison of truncated suffixes against the word.
std::optional<SuffixRange> search_segment_hashed(const hashing::HashContext& ctx, hashing::StringId text,
                                                 hashing::StringId word, const SuffixArray& suf,
                                                 QueryLedger* ledger = nullptr);

/// Suffix array + rolling hash + segment tree pipeline.
SolveResult solve_classical(const Instance& inst, const ClassicalConfig& cfg = {});

}  // namespace textcover
