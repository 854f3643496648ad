#pragma once

#include <cstdint>

namespace textcover {

/// Counted operations of one solve. All counters only grow during a solve.
struct QueryLedger {
  /// Symbol probes made by the comparison layer (quantum oracle calls in the
  /// simulated engine, mismatch-symbol reads in the hashing comparator).
  std::uint64_t characterQueries = 0;
  std::uint64_t hashEvals = 0;
  std::uint64_t compareCalls = 0;
  /// Dictionary symbols read while preprocessing (hash registration).
  std::uint64_t dictionaryReads = 0;
  /// Text symbols read while preprocessing (hashing, suffix array).
  std::uint64_t textReads = 0;
  /// Segment tree node visits, long-array scatter and greedy-cover steps.
  std::uint64_t structureOps = 0;
  std::int64_t elapsed_ns = 0;

  std::uint64_t total() const {
    return characterQueries + hashEvals + compareCalls + dictionaryReads + textReads + structureOps;
  }

  QueryLedger& operator+=(const QueryLedger& o) {
    characterQueries += o.characterQueries;
    hashEvals += o.hashEvals;
    compareCalls += o.compareCalls;
    dictionaryReads += o.dictionaryReads;
    textReads += o.textReads;
    structureOps += o.structureOps;
    elapsed_ns += o.elapsed_ns;
    return *this;
  }

  /// Equality ignores wall time.
  bool same_counts(const QueryLedger& o) const {
    return characterQueries == o.characterQueries && hashEvals == o.hashEvals &&
           compareCalls == o.compareCalls && dictionaryReads == o.dictionaryReads &&
           textReads == o.textReads && structureOps == o.structureOps;
  }
};

}  // namespace textcover
